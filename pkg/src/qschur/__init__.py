"""Exact computations with q-Schur algebras at roots of unity.

Submodules: ``exactnum`` (Laurent polynomials, cyclotomic and prime fields),
``qcoord`` (the quantum matrix bialgebra), ``schuralg`` (U(n, r) and its
generators), ``weightcomb`` (weights and index sets), ``littlealg`` (little
and infinitesimal subalgebras), ``repanalysis`` (radicals, simples, blocks),
``transfermaps`` (psi and rho), ``appendixalg`` (integral k_lambda
certificates), ``verify`` and ``cli``.
"""

from .exactnum import FieldSpec, LaurentPoly, cyclotomic_field, gauss_binom
from .littlealg import little_basis, little_dims
from .schuralg import SchurAlgebra, schur_algebra

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "LaurentPoly", "SchurAlgebra", "cyclotomic_field", "gauss_binom",
    "little_basis", "little_dims", "schur_algebra",
]
