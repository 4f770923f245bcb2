"""Causal modeling with abductive logic programs.

Stable and supported models, the translation into causal systems and
structural causal models, interventions, and checks for causal irrelevance
and non-interference.
"""

from .causal import (
    CausalRule,
    CausalSystem,
    CausalTheory,
    bochman_transform,
    causal_worlds,
    causally_founded_worlds,
    classify_explanation,
    derivable,
    explanatory_closure,
    inverse_bochman,
)
from .core import (
    AbductiveProgram,
    Alphabet,
    Clause,
    IntegrityConstraint,
    Literal,
    LogicProgram,
    complement,
    literal_completion,
    make_program,
)
from .errors import (
    CausalALPError,
    ContractError,
    CounterfactualUnsupportedError,
    DomainError,
    InvalidWorldError,
    ParseError,
    ResourceLimitError,
)
from .graph import dependence_graph, descendants, is_acyclic, is_stratified, slice_program
from .intervention import (
    Assignment,
    StructuralCausalModel,
    cm_semantics,
    intervene,
    scm_intervene,
    scm_solutions,
)
from .parser import SourceProgram, parse_file, parse_program, render_program
from .principles import check_irrelevance, check_non_interference, check_stratified_irrelevance
from .semantics import (
    abductive_models,
    clark_completion,
    greatest_unfounded_set,
    is_consistent,
    is_unfounded,
    stable_models,
    supported_models,
)

__version__ = "0.1.0"
