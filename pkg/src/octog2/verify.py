"""Named exhaustive checks, grouped into suites, with reproducible reports."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Callable

from . import chevalley as ch
from . import derivations as dv
from . import gf8
from . import linalg as la
from . import octonion as oc
from . import roots as rt
from . import standard_rep as sr
from . import weyl_modules as wm
from .scalar import I, ONE, ZERO, GaussianRational

__all__ = ["CheckResult", "VerificationReport", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            line = f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}"
            if c.witness:
                line += f"  -- witness: {c.witness}"
            lines.append(line)
        n_ok = sum(c.passed for c in self.checks)
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({n_ok}/{len(self.checks)})")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness} for c in self.checks
            ],
        }


Check = Callable[[], "str | None"]  # returns a failure witness, or None


def _first(items) -> str | None:
    for x in items:
        if x is not None and x is not False:
            return str(x)
    return None


# gf8 -------------------------------------------------------------------------

def _gf8_axioms():
    E = gf8.ELEMENTS
    for x, y, z in product(E, repeat=3):
        if (x * y) * z != x * (y * z) or (x + y) + z != x + (y + z):
            return f"associativity at {(x, y, z)}"
        if x * (y + z) != x * y + x * z:
            return f"distributivity at {(x, y, z)}"
    for x, y in product(E, repeat=2):
        if x * y != y * x or x + y != y + x:
            return f"commutativity at {(x, y)}"
    for x in gf8.NONZERO:
        if x * gf8.inverse(x) != gf8.ONE:
            return f"inverse of {x}"
    return None


def _gf8_trace():
    zeros = {x for x in gf8.ELEMENTS if gf8.trace(x) == 0}
    expected = {gf8.ZERO, gf8.ALPHA, gf8.power(gf8.ALPHA, 2), gf8.power(gf8.ALPHA, 4)}
    if zeros != expected:
        return f"trace kernel {sorted(map(str, zeros))}"
    return _first(
        x for x in gf8.ELEMENTS if gf8.trace(gf8.frobenius(x)) != gf8.trace(x)
    )


def _gf8_phi_invariance():
    for tau in (gf8.frobenius, gf8.mtwist):
        for x, y in product(gf8.ELEMENTS, repeat=2):
            if gf8.phi(tau(x), tau(y)) != gf8.phi(x, y):
                return f"phi not invariant at {(x, y)} under {tau.__name__}"
    return None


def _gf8_group_order():
    gens = [tuple(g(x) for x in gf8.NONZERO) for g in (gf8.frobenius, gf8.mtwist)]
    index = {x: k for k, x in enumerate(gf8.NONZERO)}
    gens = [tuple(index[y] for y in g) for g in gens]
    seen = {tuple(range(7))}
    frontier = list(seen)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(g[p[k]] for k in range(7))
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return None if len(seen) == 21 else f"group order {len(seen)}"


# scalars ---------------------------------------------------------------------

def _random_scalar(rng: random.Random) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
    )


def _scalar_axioms():
    rng = random.Random(20170720)
    for _ in range(200):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            return f"ring axioms at {(a, b, c)}"
        if b and (a / b) * b != a:
            return f"division at {(a, b)}"
        if (a - a) != ZERO or a.conjugate().conjugate() != a:
            return f"subtraction/conjugation at {a}"
    return None if I * I == -ONE else "i^2 != -1"


def _scalar_canonical():
    a = GaussianRational(Fraction(2, 4), Fraction(-6, 3))
    b = GaussianRational(Fraction(1, 2), -2)
    if a != b or (a.re.numerator, a.re.denominator) != (1, 2) or hash(a) != hash(b):
        return f"{a} vs {b}"
    return None


# linalg ----------------------------------------------------------------------

def _random_matrix(rng, rows, cols, density=0.5):
    return [
        [GaussianRational(rng.randint(-3, 3), rng.randint(-1, 1)) if rng.random() < density else ZERO
         for _ in range(cols)]
        for _ in range(rows)
    ]


def _linalg_rank_nullity():
    rng = random.Random(7)
    for trial in range(30):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = _random_matrix(rng, r, c)
        if la.rank(m) + la.kernel(m).dim != c:
            return f"trial {trial}: {m}"
        ker = la.kernel(m)
        for v in ker.dense_basis():
            if any(sum((a * x for a, x in zip(row, v)), ZERO) for row in m):
                return f"trial {trial}: kernel vector not annihilated"
    return None


def _linalg_rref_canonical():
    rng = random.Random(11)
    for trial in range(20):
        vecs = _random_matrix(rng, 4, 6)
        mix = _random_matrix(rng, 4, 4, density=1.0)
        other = [
            [sum((mix[i][k] * vecs[k][j] for k in range(4)), ZERO) for j in range(6)]
            for i in range(4)
        ]
        s, t = la.span(vecs, 6), la.span(other, 6)
        if t.is_subspace_of(s) and s.dim == t.dim and s != t:
            return f"trial {trial}: equal spans with different RREF"
    return None


def _linalg_closure():
    shift = la.Operator([[ONE if r == (c + 1) % 7 else ZERO for c in range(7)] for r in range(7)])
    proj = la.Operator.diagonal([ONE, ONE, ZERO, ZERO, ZERO, ZERO, ZERO])
    s1 = la.closure_under([proj], [{0: ONE}], 7)
    s2 = la.closure_under([proj], [{0: ONE}, {3: ONE}], 7)
    if not s1.is_subspace_of(s2):
        return "closure not monotone"
    if la.closure_under([proj], s2.basis, 7) != s2:
        return "closure not idempotent"
    if la.closure_under([shift], [{0: ONE}], 7).dim != 7:
        return "cyclic shift orbit is not the full space"
    return None


# octonions -------------------------------------------------------------------

_UNITS = [oc.unit(x) for x in oc.BASIS_ORDER]


def _oct_unital():
    one = oc.unit(gf8.ZERO)
    for a in _UNITS:
        if oc.multiply(one, a) != a or oc.multiply(a, one) != a:
            return f"identity fails on {a}"
    for x in gf8.NONZERO:
        u = oc.unit(x)
        if oc.multiply(u, u) != -one:
            return f"(e^{x})^2 != -1"
    return None


def _oct_alternating():
    for a, b, c in product(_UNITS, repeat=3):
        base = oc.associator(a, b, c)
        args = (a, b, c)
        for p in permutations(range(3)):
            sign = wm._perm_sign(p)
            if oc.associator(*(args[k] for k in p)) != base * sign:
                return f"associator not alternating at {args}"
    return None


def _oct_automorphisms():
    for tau in (oc.FR, oc.M):
        for a, b in product(_UNITS, repeat=2):
            if oc.galois_apply(tau, oc.multiply(a, b)) != oc.multiply(
                oc.galois_apply(tau, a), oc.galois_apply(tau, b)
            ):
                return f"{tau} fails on {(a, b)}"
    return None


def _oct_composition():
    rng = random.Random(8)
    for _ in range(100):
        a = oc.Octonion([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)])
        b = oc.Octonion([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)])
        if oc.norm(oc.multiply(a, b)) != oc.norm(a) * oc.norm(b):
            return f"N(ab) != N(a)N(b) for {a}, {b}"
    return None


def _oct_ad_associator():
    for x, y in product(gf8.NONZERO, repeat=2):
        if x == y:
            continue
        plane = {gf8.ZERO, x, y, x + y}
        for z in gf8.ELEMENTS:
            if z in plane:
                continue
            ex, ey, ez = oc.unit(x), oc.unit(y), oc.unit(z)
            lhs = oc.commutator(oc.commutator(ex, ey), ez)
            if lhs != 2 * oc.associator(ex, ey, ez):
                return f"ad_[e^{x},e^{y}] e^{z} != 2[e^{x},e^{y},e^{z}]"
    return None


# derivations -----------------------------------------------------------------

def _der_closed_form():
    for x, y in product(gf8.NONZERO, repeat=2):
        if x == y:
            continue
        op = dv.D_pair(oc.unit(x), oc.unit(y))
        for z in gf8.ELEMENTS:
            if oc.unit(z).transform(op) != dv.closed_form_action(x, y, z):
                return f"x={x}, y={y}, z={z}"
    return None


def _der_leibniz():
    for i, j in dv.PAIRS:
        op = dv.D_basis(i, j)
        for a, b in product(_UNITS, repeat=2):
            if dv.leibniz_defect(op, a, b):
                return f"D(e{i}^e{j}) on {(a, b)}"
    return None


def _der_anticommute():
    for x, y in product(gf8.NONZERO, repeat=2):
        if x == y:
            continue
        op = dv.D_pair(oc.unit(x), oc.unit(y))
        for u, v in dv.anticommuting_pairs(x, y):
            p, q = oc.unit(u).transform(op), oc.unit(v)
            if oc.multiply(p, q) + oc.multiply(q, p):
                return f"x={x}, y={y}, u={u}, v={v}"
    return None


def _der_kernel():
    ker = dv.kernel_of_D()
    orbit = [w.vector() for w in dv.delta_orbit()]
    if ker.dim != 7 or la.span(orbit, 21) != ker:
        return f"ker D has dim {ker.dim}; Delta orbit spans {la.span(orbit, 21).dim}"
    if la.rank(dv.D_matrix()) != 14:
        return "rank D != 14"
    if not dv.D_basis(1, 3).commutator(dv.D_basis(2, 6)).is_zero():
        return "[e13, e26] != 0"
    return None


def _der_simply_transitive():
    start = frozenset({1, 3})
    orbit = {}
    for g in oc.GaloisSymmetry.group():
        img = frozenset(g.map_index(i) for i in start)
        orbit.setdefault(img, []).append(g)
    if len(orbit) != 21 or any(len(v) != 1 for v in orbit.values()):
        return f"orbit size {len(orbit)}"
    parts = dv.b_partition()
    if set().union(*parts) != set(dv.PAIRS) or sum(len(p) for p in parts) != 21:
        return "B_0..B_6 do not partition B"
    return None


def _der_cartans():
    spans = dv.cartan_spans()
    elems = []
    for part in dv.b_partition():
        gs = [dv.g_element(dv.D_basis(i, j)) for i, j in sorted(part)]
        if any(not dv.g_bracket(a, b).op.is_zero() for a in gs for b in gs):
            return f"D({sorted(part)}) not abelian"
        elems.append(gs)
    if any(s.dim != 2 for s in spans):
        return f"Cartan dimensions {[s.dim for s in spans]}"
    for k in range(7):
        for m in range(k + 1, 7):
            for a in elems[k]:
                for b in elems[m]:
                    if dv.killing_form(a, b):
                        return f"B_{k} and B_{m} not Killing-orthogonal"
    total = la.span([v for s in spans for v in s.basis], 14)
    return None if total.dim == 14 else f"Cartans sum to dim {total.dim}"


def _der_lie_algebra():
    basis = dv.g_basis()
    for x in basis:
        if not dv.is_derivation(x.op):
            return "basis element is not a derivation"
        for y in basis:
            dv.g_bracket(x, y)  # raises if the bracket leaves g
    gram = dv.killing_gram(basis)
    return None if la.rank(gram) == 14 else "Killing form degenerate"


def _der_symmetry():
    for tau in (oc.FR, oc.M):
        for i, j in dv.PAIRS:
            w = dv.Wedge2.pair(i, j)
            if dv.symmetry_conjugate(tau, dv.D_wedge(w)) != dv.D_wedge(w.apply_symmetry(tau)):
                return f"{tau} on e{i}^e{j}"
    return None


# chevalley -------------------------------------------------------------------

_NAMES = ch.basis_names()


def _ch_literal_formulas():
    e = dv.D_basis
    eb = (e(1, 0) * (-I) + e(0, 3)) / 2
    eg = (e(1, 2) + e(3, 6) - (e(2, 3) + e(1, 6)) * I) / 6
    if ch.E_vector(rt.BETA).op != eb:
        return "E_beta"
    if ch.E_vector(rt.GAMMA).op != eg:
        return "E_gamma"
    return None


def _ch_structure():
    sc = ch.structure_constants()  # raises on non-integral entries
    for a in _NAMES:
        for b in _NAMES:
            if sc[(a, b)] != tuple(-c for c in sc[(b, a)]):
                return f"antisymmetry at ({a}, {b})"
    for a, b, c in product(_NAMES, repeat=3):
        total = [0] * 14
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = sc[(y, z)]
            for k, coef in enumerate(inner):
                if coef:
                    outer = sc[(x, _NAMES[k])]
                    for m in range(14):
                        total[m] += coef * outer[m]
        if any(total):
            return f"Jacobi fails at ({a}, {b}, {c})"
    return None


def _ch_cartan_action():
    hb, hg = ch.coroots()
    for r in rt.ALL_ROOTS:
        m, n = rt.root_coordinates(r)
        e = ch.E_vector(r).op
        if hb.op.commutator(e) != e * m or hg.op.commutator(e) != e * n:
            return f"[H, E_{r}]"
    return None


def _ch_symmetries():
    for r in rt.ALL_ROOTS:
        if dv.symmetry_conjugate(oc.FR, ch.E_vector(r).op) != ch.E_vector(r.prime()).op:
            return f"Fr E_{r} != E_{r.prime()}"
        if ch.E_vector(r).op.conjugate() != ch.E_vector(-r).op:
            return f"conj E_{r} != E_{-r}"
        if rt.frobenius_coordinates(rt.root_coordinates(r)) != rt.root_coordinates(r.prime()):
            return f"Fr on coordinates of {r}"
    return None


def _ch_opposite_brackets():
    for r in rt.ALL_ROOTS:
        br = ch.E_vector(r).op.commutator(ch.E_vector(-r).op)
        if br != -ch.coroot(r).op:
            return f"[E_{r}, E_{-r}] != -H_{r}"
    return None


def _ch_magnitudes():
    sc = ch.structure_constants()
    for r, s in product(rt.ALL_ROOTS, repeat=2):
        m, n = rt.root_coordinates(r)
        a, b = rt.root_coordinates(s)
        t = rt.label_of((m + a, n + b))
        coords = sc[(f"E_{r}", f"E_{s}")]
        if t is None:
            if (m + a, n + b) != (0, 0) and any(coords):
                return f"[E_{r}, E_{s}] should vanish"
            continue
        k = _NAMES.index(f"E_{t}")
        if abs(coords[k]) != ch.string_length(r, s) + 1 or any(
            c for j, c in enumerate(coords) if j != k
        ):
            return f"[E_{r}, E_{s}] = {coords}"
    return None


def _ch_lengths():
    for r in rt.ALL_ROOTS:
        if rt.squared_length(rt.root_coordinates(r)) != (2 if r.is_short else 6):
            return str(r)
    for nu in rt.LONG_ROOTS:
        ch.long_root_decomposition(nu)
    return None


def _ch_root_spaces():
    spaces = ch.root_space_decomposition()
    if spaces[(0, 0)].dim != 2 or sum(s.dim for s in spaces.values()) != 14:
        return f"dimensions {[s.dim for s in spaces.values()]}"
    for r in rt.ALL_ROOTS:
        s = spaces[rt.root_coordinates(r)]
        if s.dim != 1 or not s.contains(la.sparse(ch.E_vector(r).coords)):
            return f"root space of {r}"
    return None


def _ch_warning():
    bad = [nu for nu in rt.LONG_ROOTS if not ch.warning_identity_check(nu)]
    if bad:
        return f"identity fails for {bad}"
    return None if ch.non_homomorphism_witness() is not None else "no witness found"


# standard representation -------------------------------------------------------

_DIAGRAM = {
    None: {0: 1},
    rt.BETA: {1: I, 3: 1},
    rt.BETA.prime(): {2: I, 6: 1},
    -rt.BETA.prime(2): {4: -I, 5: 1},
    -rt.BETA: {1: -I, 3: 1},
    rt.BETA.prime(2): {4: I, 5: 1},
    -rt.BETA.prime(): {2: -I, 6: 1},  # printed as "-i e6 + e2", which has weight beta'
}


def _sr_diagram_vectors():
    for w, terms in _DIAGRAM.items():
        expected = oc.Octonion.from_dict({gf8.alpha_power(i): c for i, c in terms.items()})
        if sr.weight_vector(w) != expected:
            return f"v_{w}"
    return None


def _sr_preserves_v():
    for x in ch.chevalley_basis().elements():
        sr.restrict_to_V(x.op)
    return None


def _sr_weights():
    vecs = [sr.weight_vector(w) for w in sr.WEIGHT_LABELS]
    if la.span([v.coords for v in vecs], 8).dim != 7:
        return "weight vectors are not a basis of V"
    for w, v in zip(sr.WEIGHT_LABELS, vecs):
        if sr.weight_of(v) != sr.weight_coordinates(w):
            return f"weight of v_{w}"
    return None


def _sr_table():
    for r in rt.ALL_ROOTS:
        for w in sr.WEIGHT_LABELS:
            if sr.action_scalar(r, w) != sr.expected_action(r, w):
                return f"E_{r} v_{w}"
    return None


def _sr_sign_rules_agree():
    for r in rt.ALL_ROOTS:
        for psi in rt.SHORT_ROOTS:
            try:
                alg = sr.expected_sign(r, psi)
            except ValueError:
                continue
            if alg != sr.expected_sign_geometric(r, psi):
                return f"{r} on {psi}"
    return None


def _sr_equivariance():
    for r in rt.ALL_ROOTS:
        for w in sr.WEIGHT_LABELS:
            wp = None if w is None else w.prime()
            if oc.galois_apply(oc.FR, sr.act(r, w)) != sr.act(r.prime(), wp):
                return f"Fr E_{r} v_{w}"
    return None


# weyl modules ----------------------------------------------------------------

_SHAPES_N4 = [(a, b) for b in range(3) for a in range(5) if a + 2 * b <= 4]
_IRREPS = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def _wm_schur_dims():
    for a, b in _SHAPES_N4:
        shape = wm.TwoRowShape(a, b)
        if wm.schur_image(shape).dim != wm.schur_dimension(shape):
            return f"shape {shape.partition}"
    return None


def _wm_naturality():
    ops = wm.chevalley_v_operators("weight")
    for a, b in [(0, 1), (2, 0), (1, 1)]:
        shape = wm.TwoRowShape(a, b)
        image = wm.schur_image(shape)
        for op in ops:
            act = wm._FlatAction(op, shape.n)
            for v in image.basis:
                if not image.contains(act(v)):
                    return f"shape {shape.partition} not preserved"
    return None


def _wm_exchange():
    units = [tuple(ONE if j == k else ZERO for j in range(7)) for k in range(7)]
    v = [sr.weight_vector(w).coords[1:] for w in sr.WEIGHT_LABELS]
    fillings = [
        wm.TableauFilling([units[0]], [units[1]]),
        wm.TableauFilling([units[0], units[2]], [units[1]]),
        wm.TableauFilling([v[1], v[3]], [v[2]]),
        wm.TableauFilling([units[0], units[2]], [units[1], units[3]]),
        wm.TableauFilling([v[6], units[2], v[4]], [v[2]]),
    ]
    return _first(None if wm.exchange_check(f) else f"filling {k}" for k, f in enumerate(fillings))


def _wm_dimensions():
    for a, b in _IRREPS:
        r = wm.generate_irrep(a, b)
        if r.dimension != wm.weyl_dimension(a, b):
            return f"Gamma_{a},{b}: {r.dimension} != {wm.weyl_dimension(a, b)}"
        if not (r.highest_weight_ok and r.in_schur_image):
            return f"Gamma_{a},{b}: highest weight or Schur image check failed"
    return None


def _wm_symmetric_weights():
    for a, b in _IRREPS:
        weights = wm.generate_irrep(a, b).weights
        for mu, mult in weights.items():
            rot = rt.frobenius_coordinates(mu)
            if weights.get(rot) != mult or weights.get((-mu[0], -mu[1])) != mult:
                return f"Gamma_{a},{b} at weight {mu}"
    return None


def _wm_wedge2_split():
    adjoint, copy_of_v = wm.wedge2_split()
    both = la.span(list(adjoint.basis) + list(copy_of_v.basis), 49)
    if (adjoint.dim, copy_of_v.dim, both.dim) != (14, 7, 21):
        return f"dims {(adjoint.dim, copy_of_v.dim, both.dim)}"
    return None


SUITES: dict[str, list[tuple[str, Check]]] = {
    "gf8": [
        ("field axioms (exhaustive)", _gf8_axioms),
        ("trace kernel {0, a, a^2, a^4} and Frobenius invariance", _gf8_trace),
        ("phi invariant under Fr and M", _gf8_phi_invariance),
        ("<Fr, M> has order 21 on F_8^*", _gf8_group_order),
    ],
    "scalar": [
        ("field axioms on random samples", _scalar_axioms),
        ("canonical form", _scalar_canonical),
    ],
    "linalg": [
        ("rank + nullity = columns", _linalg_rank_nullity),
        ("RREF is canonical", _linalg_rref_canonical),
        ("closure monotone and idempotent", _linalg_closure),
    ],
    "octonion": [
        ("unital, (e^x)^2 = -1", _oct_unital),
        ("associator alternating on basis triples", _oct_alternating),
        ("Fr and M are automorphisms", _oct_automorphisms),
        ("N(ab) = N(a)N(b) on 100 rational pairs", _oct_composition),
        ("ad_[e^x,e^y] e^z = 2[e^x,e^y,e^z] off the plane", _oct_ad_associator),
    ],
    "derivations": [
        ("closed formula agrees on 336 triples", _der_closed_form),
        ("Leibniz rule for all 21 D(b) on 64 pairs", _der_leibniz),
        ("D(e^u) and e^v anticommute", _der_anticommute),
        ("ker D = span of Delta orbit, rank 14, [e13, e26] = 0", _der_kernel),
        ("<Fr, M> simply transitive on B; B_k partition", _der_simply_transitive),
        ("seven abelian Killing-orthogonal Cartans sum to g", _der_cartans),
        ("g closed, derivations, Killing nondegenerate", _der_lie_algebra),
        ("tau D(w) tau^-1 = D(w^tau)", _der_symmetry),
    ],
    "chevalley": [
        ("E_beta and E_gamma literal formulas", _ch_literal_formulas),
        ("structure constants integral, antisymmetric, Jacobi", _ch_structure),
        ("[H, E_rho] = rho(H) E_rho", _ch_cartan_action),
        ("Fr and conjugation permute root vectors", _ch_symmetries),
        ("[E_rho, E_-rho] = -H_rho", _ch_opposite_brackets),
        ("|N_rho,sigma| = p + 1", _ch_magnitudes),
        ("root lengths 2 and 6", _ch_lengths),
        ("root space decomposition", _ch_root_spaces),
        ("so7 identity for all long roots; -D not a homomorphism", _ch_warning),
    ],
    "standard_rep": [
        ("weight vectors", _sr_diagram_vectors),
        ("g preserves V", _sr_preserves_v),
        ("weights are 0 and the short roots", _sr_weights),
        ("full 12 x 7 action table", _sr_table),
        ("algebraic and geometric sign rules agree", _sr_sign_rules_agree),
        ("Frobenius equivariance", _sr_equivariance),
    ],
    "weyl_modules": [
        ("Young image dimensions, n <= 4", _wm_schur_dims),
        ("Chevalley generators preserve Young images", _wm_naturality),
        ("exchange conditions", _wm_exchange),
        ("irreducible dimensions and highest weights", _wm_dimensions),
        ("weight multiplicities symmetric", _wm_symmetric_weights),
        ("wedge^2 V = Gamma_0,1 + V", _wm_wedge2_split),
    ],
}


def run_suite(name: str) -> VerificationReport:
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {name!r}; choose from {['all', *SUITES]}")
    report = VerificationReport(name)
    for suite in names:
        for label, check in SUITES[suite]:
            try:
                witness = check()
            except Exception as exc:  # a raised error is a failed check, with its message as witness
                witness = f"{type(exc).__name__}: {exc}"
            report.checks.append(CheckResult(f"{suite}: {label}", witness is None, witness or ""))
    return report
