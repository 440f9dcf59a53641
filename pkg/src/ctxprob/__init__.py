"""Conditional probabilities across intertwined contexts.

Context logics and their two-valued states, canonical partition logics,
classical / Born-rule / exotic conditional-probability matrices, and convex
decompositions of stochastic matrices.
"""
from .classical import (CondProbMatrix, Measure, Undefined, atom_probability,
                        classical_cond_prob_matrix, exotic_cond_prob_matrix)
from .logic import (Atom, Context, Logic, LogicError, OrthogonalRep, ValidationReport,
                    check_orthogonal_rep, intertwines, parse_logic, parse_rep,
                    serialize_logic, validate_logic)
from .partition import (PartitionLabeling, canonical_partition_labels, match_labels,
                        verify_partition_labels)
from .quantum import (BasisContext, Projector, PureState, born_cond_prob_matrix,
                      projector_trace_prob, random_orthonormal_basis,
                      state_probability_vector)
from .states import (DispersionlessState, StateFamily, TwoValuedState,
                     brute_force_two_valued_states, enumerate_two_valued_states,
                     exotic_half_state, is_separating)
from .stochastic import (Decomposition, StochasticVerdict, birkhoff_decompose,
                         classify_stochastic, row_polytope_decompose)
from .urn import EmpiricalMatrix, UrnSpec, intrinsic_prepare, simulate_cond_prob

__version__ = "0.1.0"
