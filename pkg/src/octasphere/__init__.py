"""Exact ladder-operator algebra for the superintegrable system on the two-sphere.

The engine is built on an exact trigonometric-monomial algebra with a
decidable zero test; every operator identity (intertwining, commutators,
Casimir elements, the Riccati-type potential identity), every eigenvalue and
every representation count in this package is certified over the rationals.
"""

from .diffop import (DiffOp, apply, build_hamiltonian, build_phi1_block,
                     compose, is_zero_op, pv)
from .hierarchy import (IurLattice, JacobiPoly, StateRecord, closed_form_state,
                        energy, ground_state, iso_energy_decomposition, iur_lattice,
                        iur_states, jacobi, ladder_build, make_state)
from .inner import GramReport, adjoint_residual, gram, inner, mono_inner, norm
from .operators import (DiagonalOp, GradedOp, build_first_order, casimir_identity,
                        diagonal, graded, graded_commutator, intertwine_residual,
                        is_exact_intertwiner, reflect_conjugate, solve_multiplier,
                        structure_table)
from .superpotential import (decompose, kinetic_rotation_check, riccati_check,
                             superpot_from_state)
from .trigpoly import (TrigPoly, TrigTerm, differentiate, divide_by_monomial,
                       eval_numeric, is_zero, linear_combine, mul)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
