"""Transition operators over finite-lattice proposition systems.

A system is a finite set of states, a transition relation, and a family of
propositions valued in a finite complete lattice.  The package builds the
upper and lower operator tables of the relation, induces relations back from
tables, decides recoverability, iterates the induction closure to a fixpoint,
and verifies the underlying order-theoretic laws exhaustively at desk scale.
"""

from .errors import InputError, ParseError
from .fixpoint import IterationTrace, StepRecord, enumerate_fixpoints, iterate, step
from .frame import RelationDelta, TransitionFrame, relation_compare
from .induction import (RecoverabilityReport, TransferReport,
                        UniformWitnessReport, induced_lower, induced_upper,
                        recoverability, recovery_transfer_check,
                        uniform_witness_lower, uniform_witness_upper)
from .operators import (AdjunctionReport, ClosureReport, OperatorTable,
                        Proposition, PropositionPoset, adjunction_holds,
                        codomain_closed, lower_operator, operator_compare,
                        pointwise_leq, upper_operator, vector_name)
from .order import (GaloisReport, Lattice, Poset, PosetMap, chain, chain2,
                    compose_galois, is_galois_pair,
                    is_order_reflecting_embedding, lower_adjoint, upper_adjoint)
from .systemio import (SystemDescription, fixture_path, load_system,
                       parse_system, render_system)

__version__ = "0.1.0"

__all__ = [
    "AdjunctionReport", "ClosureReport", "GaloisReport", "InputError",
    "IterationTrace", "Lattice", "OperatorTable", "ParseError", "Poset",
    "PosetMap", "Proposition", "PropositionPoset", "RecoverabilityReport",
    "RelationDelta", "StepRecord", "SystemDescription", "TransferReport",
    "TransitionFrame", "UniformWitnessReport", "adjunction_holds", "chain",
    "chain2", "codomain_closed", "compose_galois", "enumerate_fixpoints",
    "fixture_path", "induced_lower", "induced_upper", "is_galois_pair",
    "is_order_reflecting_embedding", "iterate", "load_system",
    "lower_adjoint", "lower_operator", "operator_compare", "parse_system",
    "pointwise_leq", "recoverability", "recovery_transfer_check",
    "relation_compare", "render_system", "step", "uniform_witness_lower",
    "uniform_witness_upper", "upper_adjoint", "upper_operator", "vector_name",
]
