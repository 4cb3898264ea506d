"""Exact qudit kets and projectors built from the Boole equation x^2 = x.

The classical symbol values 0..d-1 are the roots of the Boole polynomial
``x (x-1) ... (x-d+1)``.  Row k of the symbolic ket is the Lagrange
polynomial that is 1 at k and 0 at the other roots, so substituting a
classical value for ``x`` yields the matching quantum basis ket.
"""
from .circuit import (
    BellState,
    Gate,
    bell_closed_form,
    bell_matrix,
    bell_state,
    cnot,
    gate_tensor,
    hadamard,
    identity,
)
from .exactnum import (
    INV_SQRT2,
    AmplitudeQ2,
    Rational,
    amp,
    amp_add,
    amp_conj,
    amp_mul,
    amp_neg,
    amp_norm_sq,
    format_amplitude,
    parse_amplitude,
    rat_add,
    rat_div,
    rat_mul,
    rat_neg,
)
from .matrix import Matrix
from .polyring import (
    X,
    BoolePolynomial,
    Polynomial,
    boole_poly,
    format_polynomial,
    lagrange_component,
    parse_polynomial,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_scale,
    reduce_mod_boole,
)
from .qudit import (
    Bra,
    Ket,
    Projector,
    Superposition,
    SymbolicKet,
    SymbolicProjector,
    basis_ket,
    bra_of,
    completeness_sum,
    inner_product,
    outer_product,
    projector,
    superpose,
    symbolic_ket,
    symbolic_projector,
    tensor_product,
    unit_ket,
)
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"
