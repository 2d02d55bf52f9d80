"""The 7-dimensional representation V = Im(O) (x) C.

Weight labels are ``None`` for the zero weight and a short
:class:`~octog2.roots.RootLabel` otherwise.  The weight vectors are
v_0 = e_0 and v_beta = i e_1 + e_3; every other v_psi is obtained by
Frobenius and complex conjugation.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .linalg import Operator, inverse
from .octonion import FR, Octonion, complex_conjugate, e, galois_apply, is_imaginary
from .roots import (
    BETA,
    SHORT_ROOTS,
    RootLabel,
    RootVector,
    anticlockwise,
    label_of,
    root_coordinates,
)
from .scalar import I, ZERO

__all__ = [
    "WeightLabel",
    "WEIGHT_LABELS",
    "NotAWeightVector",
    "weight_vector",
    "weight_coordinates",
    "weight_of",
    "restrict_to_V",
    "weight_basis_matrix",
    "in_weight_basis",
    "act",
    "action_scalar",
    "expected_sign",
    "expected_sign_geometric",
    "expected_action",
    "action_table",
]

WeightLabel = Optional[RootLabel]
WEIGHT_LABELS: tuple[WeightLabel, ...] = (None,) + SHORT_ROOTS


class NotAWeightVector(ValueError):
    """Raised when a vector is not a simultaneous eigenvector of the coroots."""


def _label_str(w: WeightLabel) -> str:
    return "0" if w is None else str(w)


@lru_cache(maxsize=None)
def weight_vector(w: WeightLabel) -> Octonion:
    if w is None:
        return e(0)
    if not w.is_short:
        raise ValueError(f"{w} is not a weight of V")
    v = I * e(1) + e(3)
    for _ in range(w.twist):
        v = galois_apply(FR, v)
    if w.sign < 0:
        v = complex_conjugate(v)
    return v


def weight_coordinates(w: WeightLabel) -> RootVector:
    return (0, 0) if w is None else root_coordinates(w)


def weight_label(v: RootVector) -> WeightLabel:
    """Inverse of :func:`weight_coordinates`; raises for non-weights."""
    if tuple(v) == (0, 0):
        return None
    lab = label_of(v)
    if lab is None or not lab.is_short:
        raise ValueError(f"{v} is not a weight of V")
    return lab


def weight_of(v: Octonion) -> RootVector:
    from .chevalley import coroots

    if not v or not is_imaginary(v):
        raise NotAWeightVector("need a nonzero imaginary octonion")
    out = []
    for h in coroots():
        hv = v.transform(h.op)
        k = next(j for j, c in enumerate(v.coords) if c)
        lam = hv.coords[k] / v.coords[k]
        if hv != v * lam:
            raise NotAWeightVector(f"{v} is not an eigenvector of every coroot")
        if not lam.is_real() or not lam.is_integral():
            raise NotAWeightVector(f"non-integral eigenvalue {lam}")
        out.append(int(lam.re))
    return tuple(out)


def restrict_to_V(op: Operator) -> Operator:
    """The 7x7 block of an 8x8 operator on the imaginary units e_0..e_6."""
    if any(op.rows[0]) or any(op.rows[r][0] for r in range(8)):
        raise ValueError("operator does not preserve Im(O) and kill the identity")
    return op.submatrix(range(1, 8))


@lru_cache(maxsize=None)
def weight_basis_matrix() -> Operator:
    """Columns are the weight vectors, in ``WEIGHT_LABELS`` order, in e_i coordinates."""
    cols = [weight_vector(w).coords[1:] for w in WEIGHT_LABELS]
    return Operator(list(zip(*cols)))


@lru_cache(maxsize=None)
def _weight_basis_inverse() -> Operator:
    return inverse(weight_basis_matrix())


def in_weight_basis(op: Operator) -> Operator:
    """Matrix of an operator on V (7x7, e_i basis) in the weight basis."""
    return _weight_basis_inverse() @ op @ weight_basis_matrix()


def act(rho: RootLabel, w: WeightLabel) -> Octonion:
    from .chevalley import E_vector

    return weight_vector(w).transform(E_vector(rho).op)


def action_scalar(rho: RootLabel, w: WeightLabel):
    """Scalar c with E_rho v_w = c v_(rho + w); zero when the target is not a weight."""
    result = act(rho, w)
    m, n = root_coordinates(rho)
    a, b = weight_coordinates(w)
    try:
        target = weight_label((m + a, n + b))
    except ValueError:
        if result:
            raise AssertionError(f"E_{rho} v_{_label_str(w)} left the weight spaces")
        return ZERO
    v = weight_vector(target)
    k = next(j for j, c in enumerate(v.coords) if c)
    c = result.coords[k] / v.coords[k]
    if result != v * c:
        raise AssertionError(f"E_{rho} v_{_label_str(w)} is not a multiple of v_{_label_str(target)}")
    return c


def _short_target(rho: RootLabel, psi: RootLabel) -> RootLabel:
    m, n = root_coordinates(rho)
    a, b = root_coordinates(psi)
    lab = label_of((m + a, n + b))
    if lab is None or not lab.is_short:
        raise ValueError(f"{rho} + {psi} is not a short root")
    return lab


def expected_sign(rho: RootLabel, psi: RootLabel) -> int:
    """+1 iff rho + psi is psi' or -psi''."""
    target = _short_target(rho, psi)
    return 1 if target in (psi.prime(1), -psi.prime(2)) else -1


def expected_sign_geometric(rho: RootLabel, psi: RootLabel) -> int:
    """+1 iff moving from psi to rho + psi turns anticlockwise by less than pi."""
    target = _short_target(rho, psi)
    return 1 if anticlockwise(root_coordinates(psi), root_coordinates(target)) else -1


def expected_action(rho: RootLabel, w: WeightLabel) -> int:
    """Predicted scalar for E_rho v_w from the explicit action rules."""
    m, n = root_coordinates(rho)
    a, b = weight_coordinates(w)
    target = (m + a, n + b)
    if w is None:
        return 1 if rho.is_short else 0
    if target == (0, 0):
        return -2
    lab = label_of(target)
    if lab is None or not lab.is_short:
        return 0
    return expected_sign(rho, w)


def action_table(roots=None) -> list[list]:
    """Rows indexed by roots, columns by ``WEIGHT_LABELS``."""
    from .roots import ALL_ROOTS

    roots = ALL_ROOTS if roots is None else roots
    return [[action_scalar(r, w) for w in WEIGHT_LABELS] for r in roots]
