"""Chevalley basis of g built from explicit derivations.

H_beta = -i e13 and H_gamma = (i/3)(e13 - e26) span the Cartan subalgebra.
E_beta and E_gamma come from closed formulas in the weight vectors; the
other ten root vectors are transported by Frobenius (conjugation by Fr) and
complex conjugation (entrywise conjugate), so their signs are outputs of the
construction rather than conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .derivations import (
    PAIRS,
    GElement,
    D_basis,
    D_wedge,
    Wedge2,
    ad_matrix,
    g_element,
)
from .linalg import Operator, Subspace, inverse, simultaneous_eigenspace
from .octonion import FR
from .roots import (
    ALL_ROOTS,
    BETA,
    GAMMA,
    LONG_ROOTS,
    SHORT_ROOTS,
    RootLabel,
    RootVector,
    label_of,
    root_coordinates,
)
from .scalar import I, ONE, ZERO
from .standard_rep import weight_vector

__all__ = [
    "NonIntegralStructureConstant",
    "ChevalleyBasis",
    "coroots",
    "coroot",
    "E_vector",
    "E_formula",
    "chevalley_basis",
    "basis_names",
    "chevalley_coordinates",
    "root_space_decomposition",
    "structure_constants",
    "string_length",
    "so7_matrix",
    "so7_bracket",
    "long_root_decomposition",
    "warning_identity_check",
    "non_homomorphism_witness",
]


class NonIntegralStructureConstant(ArithmeticError):
    """A bracket of Chevalley basis elements had a non-integer coefficient."""


def _transport(x: GElement, twist: int, sign: int) -> GElement:
    op = x.op
    fr, fr_inv = FR.operator(), FR.inverse().operator()
    for _ in range(twist):
        op = fr @ op @ fr_inv
    if sign < 0:
        op = op.conjugate()
    return g_element(op)


@lru_cache(maxsize=None)
def coroots() -> tuple[GElement, GElement]:
    e13, e26 = D_basis(1, 3), D_basis(2, 6)
    h_beta = g_element(e13 * (-I))
    h_gamma = g_element((e13 - e26) * (I / 3))
    return h_beta, h_gamma


@lru_cache(maxsize=None)
def coroot(rho: RootLabel) -> GElement:
    """H_rho, transported from H_beta or H_gamma."""
    h_beta, h_gamma = coroots()
    base = h_beta if rho.is_short else h_gamma
    return _transport(base, rho.twist, rho.sign)


def E_formula(rho: RootLabel) -> GElement:
    """E_rho from the closed formulas, valid for every root.

    Short psi: 1/2 D(v_0 ^ v_psi).  Long nu = psi - psi': 1/6 D(v_psi ^ v'_(-psi)).
    """
    if rho.is_short:
        w = Wedge2.wedge(weight_vector(None), weight_vector(rho))
        return g_element(D_wedge(w) / 2)
    psi = long_root_decomposition(rho)
    w = Wedge2.wedge(weight_vector(psi), weight_vector((-psi).prime()))
    return g_element(D_wedge(w) / 6)


@lru_cache(maxsize=None)
def E_vector(rho: RootLabel) -> GElement:
    base = E_formula(BETA if rho.is_short else GAMMA)
    return _transport(base, rho.twist, rho.sign)


def long_root_decomposition(nu: RootLabel) -> RootLabel:
    """The unique short psi with nu = psi - psi'."""
    if nu.is_short:
        raise ValueError(f"{nu} is a short root")
    m, n = root_coordinates(nu)
    found = []
    for psi in SHORT_ROOTS:
        a, b = root_coordinates(psi)
        c, d = root_coordinates(psi.prime())
        if (a - c, b - d) == (m, n):
            found.append(psi)
    if len(found) != 1:
        raise AssertionError(f"expected a unique short root for {nu}, found {found}")
    return found[0]


# ---------------------------------------------------------------------------
# the basis and its structure constants


def basis_names() -> tuple[str, ...]:
    return ("H_beta", "H_gamma") + tuple(f"E_{r}" for r in ALL_ROOTS)


@dataclass(frozen=True)
class ChevalleyBasis:
    h_beta: GElement
    h_gamma: GElement
    E: dict

    def elements(self) -> tuple[GElement, ...]:
        return (self.h_beta, self.h_gamma) + tuple(self.E[r] for r in ALL_ROOTS)

    def named(self) -> tuple[tuple[str, GElement], ...]:
        return tuple(zip(basis_names(), self.elements()))


@lru_cache(maxsize=None)
def chevalley_basis() -> ChevalleyBasis:
    h_beta, h_gamma = coroots()
    return ChevalleyBasis(h_beta, h_gamma, {r: E_vector(r) for r in ALL_ROOTS})


@lru_cache(maxsize=None)
def _to_chevalley() -> Operator:
    cols = [x.coords for x in chevalley_basis().elements()]
    return inverse(Operator(list(zip(*cols))))


def chevalley_coordinates(x: GElement) -> tuple:
    """Coordinates of x in the order of :func:`basis_names`."""
    return _to_chevalley()(x.coords)


def root_space_decomposition() -> dict[RootVector, Subspace]:
    """Simultaneous eigenspaces of (ad H_beta, ad H_gamma) on g, keyed by weight."""
    hb, hg = (ad_matrix(h) for h in coroots())
    out = {(0, 0): simultaneous_eigenspace([hb, hg], [0, 0])}
    for r in ALL_ROOTS:
        out[root_coordinates(r)] = simultaneous_eigenspace([hb, hg], list(root_coordinates(r)))
    return out


@lru_cache(maxsize=None)
def structure_constants() -> dict[tuple[str, str], tuple[int, ...]]:
    """[X, Y] in Chevalley coordinates for every ordered pair of basis elements."""
    named = chevalley_basis().named()
    out = {}
    for a, x in named:
        for b, y in named:
            coords = chevalley_coordinates(g_element(x.op.commutator(y.op)))
            ints = []
            for k, c in enumerate(coords):
                if not c.is_real() or not c.is_integral():
                    raise NonIntegralStructureConstant(
                        f"[{a}, {b}] has coefficient {c} on {basis_names()[k]}"
                    )
                ints.append(int(c.re))
            out[(a, b)] = tuple(ints)
    return out


def string_length(rho: RootLabel, sigma: RootLabel) -> int:
    """p = max{k : sigma - k*rho is a root}."""
    m, n = root_coordinates(rho)
    a, b = root_coordinates(sigma)
    k = 0
    while label_of((a - (k + 1) * m, b - (k + 1) * n)) is not None:
        k += 1
    return k


# ---------------------------------------------------------------------------
# the so7 comparison


def so7_matrix(w: Wedge2) -> Operator:
    """e_i ^ e_j -> 2(E_ij - E_ji), rows and columns indexed by Z/7."""
    rows = [[ZERO] * 7 for _ in range(7)]
    for (i, j), c in w.coeffs.items():
        rows[i][j] += 2 * c
        rows[j][i] -= 2 * c
    return Operator(rows)


def _so7_wedge(s: Operator) -> Wedge2:
    if any(s.rows[i][j] + s.rows[j][i] for i in range(7) for j in range(7)):
        raise ValueError("matrix is not skew symmetric")
    return Wedge2({(i, j): s.rows[i][j] / 2 for i, j in PAIRS if s.rows[i][j]})


def so7_bracket(w1: Wedge2, w2: Wedge2) -> Wedge2:
    return _so7_wedge(so7_matrix(w1).commutator(so7_matrix(w2)))


def _warning_terms(nu: RootLabel):
    psi = long_root_decomposition(nu)
    u = Wedge2.wedge(weight_vector(None), weight_vector(psi))
    w = Wedge2.wedge(weight_vector(None), weight_vector((-psi).prime()))
    return psi, u, w


def warning_identity_check(nu: RootLabel) -> bool:
    """[D(u), D(w)] = 4[E_psi, E_-psi'] = 12 E_nu = -D([u, w]_so7).

    Here nu = psi - psi', u = v_0 ^ v_psi and w = v_0 ^ v'_(-psi).
    """
    if nu.is_short:
        raise ValueError("the identity concerns long roots")
    psi, u, w = _warning_terms(nu)
    lhs = D_wedge(u).commutator(D_wedge(w))
    via_e = E_vector(psi).op.commutator(E_vector(-(psi.prime())).op) * 4
    twelve = E_vector(nu).op * 12
    via_so7 = -D_wedge(so7_bracket(u, w))
    return lhs == via_e == twelve == via_so7


def non_homomorphism_witness() -> tuple[Wedge2, Wedge2] | None:
    """First basis pair (u, w) with D([u, w]_so7) != -[D u, D w]."""
    for p in PAIRS:
        for q in PAIRS:
            u, w = Wedge2.pair(*p), Wedge2.pair(*q)
            if D_wedge(so7_bracket(u, w)) != -D_wedge(u).commutator(D_wedge(w)):
                return u, w
    return None
