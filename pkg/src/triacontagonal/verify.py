"""Machine checks of the root-system claims.

Exact (cyclotomic) root lists are checked with zero tolerance; numeric ones
against the named tolerances.  Every loop runs in the fixed root order, so the
first counterexample found is the lexicographically least one.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import networkx as nx
import numpy as np

from ._linalg import solve_rational
from .amplitudes import TAU
from .cyclo import CycNum, hermitian_sum
from .errors import CrystallographyError, ModeError
from .roots import RootVector, coxeter_rotation, real_matrix, to_real8
from .tolerances import DEFAULT, Tolerances

E8_CENSUS = {Fraction(1): 1, Fraction(1, 2): 56, Fraction(0): 126, Fraction(-1, 2): 56, Fraction(-1): 1}


# Reports


@dataclass
class Check:
    name: str
    passed: bool
    tolerance: float | None = None  # None: exact
    detail: str = ""
    counterexample: dict[str, Any] | None = None

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError(f"failing check {self.name!r} needs a counterexample")


@dataclass
class VerificationReport:
    title: str = ""
    checks: list[Check] = field(default_factory=list)
    tolerances: dict[str, float] = field(default_factory=lambda: DEFAULT.as_dict())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "tolerances": self.tolerances,
            "checks": [asdict(c) for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str)

    def to_text(self) -> str:
        lines = [self.title] if self.title else []
        for c in self.checks:
            tol = "exact" if c.tolerance is None else f"tol={c.tolerance:g}"
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name} ({tol}) {c.detail}".rstrip())
            if c.counterexample:
                lines.append(f"       counterexample: {json.dumps(c.counterexample, default=str)}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


# Inner products and reflections


def _require_same_mode(u: RootVector, v: RootVector) -> None:
    if u.exact != v.exact or len(u.coords) != len(v.coords):
        raise ModeError(f"cannot pair {u.label} and {v.label}: mode or dimension differs")


def hermitian_inner(u: RootVector, v: RootVector) -> CycNum | float:
    """Real part of sum u_j * conj(v_j); exact for cyclotomic coordinates."""
    _require_same_mode(u, v)
    if u.exact:
        return hermitian_sum(u.coords, v.coords).real_part()
    return sum((a * b.conjugate() for a, b in zip(u.coords, v.coords)), 0j).real


def rational_ratio(x: CycNum, y: CycNum) -> Fraction | None:
    """q with x == q*y when such a rational exists, else None."""
    if y.is_zero():
        raise ZeroDivisionError("ratio to zero")
    k = next(i for i, c in enumerate(y.numerators) if c)
    q = Fraction(x.numerators[k] * y.denominator, y.numerators[k] * x.denominator)
    return q if x == y.scale(q) else None


def cartan_scalar(inner_va: CycNum | float, norm_a: CycNum | float) -> Fraction | float:
    """2<v,a>/<a,a>; exact rational in exact mode."""
    if isinstance(norm_a, CycNum):
        q = rational_ratio(inner_va, norm_a)
        if q is None:
            raise CrystallographyError(f"2<v,a>/<a,a> is not rational: {inner_va!r} / {norm_a!r}")
        return 2 * q
    return 2 * inner_va / norm_a


def _axpy(q, alpha: Sequence, v: Sequence) -> tuple:
    return tuple(x - z * q for x, z in zip(v, alpha))


def reflect(v: RootVector, alpha: RootVector) -> tuple:
    """Coordinates of v - (2<v,a>/<a,a>) a."""
    q = cartan_scalar(hermitian_inner(v, alpha), hermitian_inner(alpha, alpha))
    if q == 0:
        return v.coords
    return _axpy(q, alpha.coords, v.coords)


def gram_matrix(roots: Sequence[RootVector]):
    """All pairwise inner products: nested lists of CycNum, or a float array."""
    if roots[0].exact:
        n = len(roots)
        G: list[list[Any]] = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                # Re<u,v> is symmetric in u and v.
                G[i][j] = G[j][i] = hermitian_sum(roots[i].coords, roots[j].coords).real_part()
        return G
    Z = np.array([[complex(z) for z in v.coords] for v in roots])
    return (Z @ Z.conj().T).real


class RootIndex:
    """Membership lookup: canonical hashing for exact roots, nearest neighbour otherwise."""

    def __init__(self, roots: Sequence[RootVector], tol: float = DEFAULT.membership):
        self.roots = list(roots)
        self.exact = self.roots[0].exact
        self.tol = tol
        if self.exact:
            self._map = {v.coords: i for i, v in enumerate(self.roots)}
        else:
            self._X = real_matrix(self.roots)

    def find(self, coords: Sequence) -> int | None:
        if self.exact:
            return self._map.get(tuple(coords))
        x = to_real8(coords)
        dist = np.linalg.norm(self._X - x, axis=1)
        i = int(np.argmin(dist))
        return i if dist[i] <= self.tol else None

    def find_many(self, X: np.ndarray) -> list[int | None]:
        """Numeric batch lookup of real-coordinate rows."""
        d = np.linalg.norm(X[:, None, :] - self._X[None, :, :], axis=-1)
        idx = np.argmin(d, axis=1)
        return [int(i) if d[k, i] <= self.tol else None for k, i in enumerate(idx)]

    def __contains__(self, coords) -> bool:
        return self.find(coords) is not None


# Root-system axioms


def _close(x, y, tol) -> bool:
    if isinstance(x, CycNum) or isinstance(y, CycNum) or isinstance(x, Fraction):
        return x == y
    return abs(x - y) <= tol


def _h4_allowed() -> list[float]:
    base = [0.0, 0.5, TAU / 2, 1 / (2 * TAU), 1.0]
    return sorted({s * x for x in base for s in (1, -1)})


def _strkeys(census) -> dict[str, int]:
    return {str(k): v for k, v in census.items()}


def _snap(x: float, allowed: Sequence[float], tol: float) -> float | None:
    best = min(allowed, key=lambda a: abs(a - x))
    return best if abs(best - x) <= tol else None


def check_root_system(
    roots: Sequence[RootVector],
    tol: Tolerances = DEFAULT,
    crystallographic: bool | None = None,
    gram=None,
) -> VerificationReport:
    """Distinctness, negation and reflection closure, equal norms, Cartan integrality, census."""
    if crystallographic is None:
        crystallographic = roots[0].system == "e8"
    exact = roots[0].exact
    t = None if exact else tol.membership
    report = VerificationReport(f"root system ({roots[0].system}, {'exact' if exact else 'numeric'})", tolerances=tol.as_dict())
    n = len(roots)
    index = RootIndex(roots, tol.membership)
    G = gram_matrix(roots) if gram is None else gram

    # (i) distinct
    dupes = []
    if exact:
        dupes = [(roots[index.find(v.coords)].label, v.label) for v in roots if roots[index.find(v.coords)] is not v]
    else:
        X = real_matrix(roots)
        dmat = np.linalg.norm(X[:, None] - X[None, :], axis=-1)
        np.fill_diagonal(dmat, np.inf)
        dupes = [(roots[i].label, roots[j].label) for i, j in zip(*np.nonzero(dmat <= tol.membership)) if i < j]
    report.add(Check("distinct", not dupes, t, f"{n} roots",
                     None if not dupes else {"pair": dupes[0]}))

    # (ii) negation closure
    missing = [v.label for v in roots if (-v).coords not in index]
    report.add(Check("negation_closure", not missing, t, "",
                     None if not missing else {"root": missing[0], "expected": "its negative in the set"}))

    # (iii) equal norms
    norm0 = G[0][0]
    bad = [i for i in range(n) if not _close(G[i][i], norm0, tol.identity)]
    norm_value = complex(norm0).real if exact else float(norm0)
    report.add(Check("equal_norms", not bad, None if exact else tol.identity, f"common norm {norm_value:.15g}",
                     None if not bad else {"root": roots[bad[0]].label, "observed": str(G[bad[0]][bad[0]]), "expected": str(norm0)}))

    # (iv) Cartan scalars, census
    cartan_fail = None
    census_by_root: list[Counter] = []
    allowed_h4 = _h4_allowed()
    for i in range(n):
        census: Counter = Counter()
        for j in range(n):
            try:
                q = cartan_scalar(G[i][j], G[j][j])
            except CrystallographyError:
                q = None
            if crystallographic:
                if exact:
                    ok = q is not None and q.denominator == 1 and -2 <= q <= 2
                    ratio = q / 2 if q is not None else None
                else:
                    k = round(q)
                    ok = abs(q - k) <= tol.census and -2 <= k <= 2
                    ratio = Fraction(k, 2)
                if ok and abs(q) == 2 and j not in (i, index.find((-roots[i]).coords)):
                    ok = False
                if not ok and cartan_fail is None:
                    cartan_fail = {"pair": (roots[i].label, roots[j].label), "observed": str(q),
                                   "expected": "integer in [-2, 2], +-2 only for v = +-a"}
                census[ratio] += 1
            else:
                val = float(G[i][j] / G[j][j])
                snapped = _snap(val, allowed_h4, tol.census)
                if snapped is None and cartan_fail is None:
                    cartan_fail = {"pair": (roots[i].label, roots[j].label), "observed": val,
                                   "expected": "one of 0, +-1/2, +-tau/2, +-1/(2tau), +-1"}
                census[snapped] += 1
        census_by_root.append(census)
    name = "cartan_integers" if crystallographic else "inner_product_spectrum"
    report.add(Check(name, cartan_fail is None, None if exact else tol.census, f"{n * n} ordered pairs", cartan_fail))

    first = census_by_root[0]
    odd = next((i for i, c in enumerate(census_by_root) if c != first), None)
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(first.items(), key=lambda kv: -float(kv[0] or 0)))
    report.add(Check("uniform_census", odd is None, None if exact else tol.census, summary,
                     None if odd is None else {"root": roots[odd].label, "observed": _strkeys(census_by_root[odd]), "expected": _strkeys(first)}))
    if roots[0].system == "e8":
        ok = dict(first) == E8_CENSUS
        report.add(Check("e8_census", ok, None if exact else tol.census, "{1:1, 1/2:56, 0:126, -1/2:56, -1:1}",
                         None if ok else {"observed": _strkeys(first)}))

    # (v) reflection closure
    refl_fail = None
    if exact:
        for i, v in enumerate(roots):
            for j, a in enumerate(roots):
                q = cartan_scalar(G[i][j], G[j][j])
                if q == 0:
                    continue
                img = _axpy(q, a.coords, v.coords)
                if img not in index:
                    refl_fail = {"pair": (v.label, a.label), "observed": "image not a root"}
                    break
            if refl_fail:
                break
    else:
        X = real_matrix(roots)
        Gn = np.asarray(G, dtype=float)
        for j in range(n):
            q = 2 * Gn[:, j] / Gn[j, j]
            images = X - q[:, None] * X[j][None, :]
            hits = index.find_many(images)
            miss = next((i for i, h in enumerate(hits) if h is None), None)
            if miss is not None:
                refl_fail = {"pair": (roots[miss].label, roots[j].label), "observed": "image not a root"}
                break
    report.add(Check("reflection_closure", refl_fail is None, t, f"{n * n} reflections", refl_fail))
    return report


# Simple roots and Dynkin diagrams


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.labels)))
        for i, j in itertools.combinations(range(len(self.labels)), 2):
            if self.entries[i][j] or self.entries[j][i]:
                g.add_edge(i, j, weight=(self.entries[i][j], self.entries[j][i]))
        return g

    def edges(self) -> set[frozenset[str]]:
        return {frozenset((self.labels[i], self.labels[j])) for i, j in self.graph().edges}


def cartan_integers(simple: Sequence[RootVector], tol: float = DEFAULT.census) -> CartanMatrix:
    """Entries 2<a_i,a_j>/<a_j,a_j>; raises CrystallographyError on a non-integer."""
    m = len(simple)
    G = [[hermitian_inner(a, b) for b in simple] for a in simple]
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            q = cartan_scalar(G[i][j], G[j][j])
            k = round(q)
            if (isinstance(q, Fraction) and q.denominator != 1) or abs(q - k) > tol:
                raise CrystallographyError(f"Cartan entry ({simple[i].label}, {simple[j].label}) = {q} is not an integer")
            row.append(int(k))
        rows.append(tuple(row))
    return CartanMatrix(tuple(rows), tuple(v.family for v in simple))


def e8_dynkin_graph() -> nx.Graph:
    """A path on 7 nodes with an eighth node attached to the third."""
    g = nx.path_graph(7)
    g.add_edge(2, 7)
    return g


def check_dynkin_e8(m: CartanMatrix) -> bool:
    n = len(m.entries)
    if n != 8 or any(m.entries[i][i] != 2 for i in range(n)):
        return False
    if any(m.entries[i][j] not in (0, -1) for i in range(n) for j in range(n) if i != j):
        return False
    return nx.is_isomorphic(m.graph(), e8_dynkin_graph())


def diagram_isomorphism(src: CartanMatrix, dst: CartanMatrix) -> dict[int, int] | None:
    """Index map src -> dst preserving Cartan entries, or None."""
    gm = nx.algorithms.isomorphism.GraphMatcher(
        src.graph(), dst.graph(), edge_match=lambda a, b: a["weight"] == b["weight"]
    )
    return next(gm.isomorphisms_iter(), None)


def simple_root_decomposition(v: RootVector, simple: Sequence[RootVector]) -> tuple[int, ...]:
    """Integer k with v = sum k_i a_i, solved exactly against the Gram matrix.

    Raises CrystallographyError when the solution is not integral or does not
    reproduce v.
    """
    m = len(simple)
    if v.exact:
        norm = hermitian_inner(simple[0], simple[0])

        def unit(x):
            q = rational_ratio(x, norm)
            if q is None:
                raise CrystallographyError(f"inner product {x!r} not a rational multiple of the norm")
            return q

        A = [[unit(hermitian_inner(simple[i], simple[j])) for i in range(m)] for j in range(m)]
        b = [unit(hermitian_inner(v, simple[j])) for j in range(m)]
        k = solve_rational(A, b)
    else:
        A = np.array([[hermitian_inner(simple[i], simple[j]) for i in range(m)] for j in range(m)])
        b = np.array([hermitian_inner(v, a) for a in simple])
        k = [Fraction(round(x)) if abs(x - round(x)) < DEFAULT.census else Fraction(x) for x in np.linalg.solve(A, b)]
    if any(q.denominator != 1 for q in k):
        raise CrystallographyError(f"{v.label} has non-integral coefficients {[str(q) for q in k]}")
    ks = tuple(int(q) for q in k)
    recon = [sum((a.coords[c] * q for a, q in zip(simple, ks) if q), 0 * v.coords[c]) for c in range(len(v.coords))]
    if v.exact:
        ok = tuple(recon) == v.coords
    else:
        ok = np.allclose(to_real8(recon), to_real8(v), atol=DEFAULT.membership)
    if not ok:
        raise CrystallographyError(f"{v.label} is not in the span of the simple roots")
    return ks


def simple_system_at(roots: Sequence[RootVector], n: int) -> list[RootVector]:
    """The roots {A_n, ..., H_n} in family order."""
    by_key = {(v.family, v.index): v for v in roots}
    fams = sorted({v.family for v in roots})
    return [by_key[(f, n)] for f in fams]


def check_simple_systems(roots: Sequence[RootVector], tol: Tolerances = DEFAULT) -> VerificationReport:
    """Cartan matrix and E8 shape for every n; decompositions over n = 0."""
    exact = roots[0].exact
    t = None if exact else tol.census
    report = VerificationReport("simple roots", tolerances=tol.as_dict())
    ref = cartan_integers(simple_system_at(roots, 0), tol.census)
    bad_n = None
    for n in range(30):
        m = ref if n == 0 else cartan_integers(simple_system_at(roots, n), tol.census)
        if m != ref or not check_dynkin_e8(m):
            bad_n = n
            break
    edges = sorted("-".join(sorted(e)) for e in ref.edges())
    report.add(Check("dynkin_e8_all_n", bad_n is None, t, f"edges {', '.join(edges)}",
                     None if bad_n is None else {"n": bad_n}))

    simple = simple_system_at(roots, 0)
    fail = None
    heights = []
    for v in roots:
        try:
            k = simple_root_decomposition(v, simple)
        except CrystallographyError as exc:
            fail = {"root": v.label, "observed": str(exc)}
            break
        if not (all(x >= 0 for x in k) or all(x <= 0 for x in k)):
            fail = {"root": v.label, "observed": k, "expected": "coefficients of one sign"}
            break
        heights.append((sum(k), v.label, k))
    report.add(Check("uniform_sign_decomposition", fail is None, t, f"{len(heights)} roots over {{A0..H0}}", fail))
    if heights:
        top = max(heights)
        ok = top[0] == 29
        coeffs = dict(zip((a.family for a in simple), top[2]))
        report.add(Check("max_height_29", ok, t, f"highest root {top[1]} coefficients {coeffs}",
                         None if ok else {"observed": top[0], "expected": 29}))
    return report


# Coxeter rotation


def check_coxeter_symmetry(roots: Sequence[RootVector], tol: Tolerances = DEFAULT) -> VerificationReport:
    """Invariance, order 30, orbit structure and the half-turn being negation."""
    exact = roots[0].exact
    t = None if exact else tol.membership
    rotate = coxeter_rotation("exact" if exact else "numeric", roots[0].system)
    index = RootIndex(roots, tol.membership)
    report = VerificationReport("coxeter rotation", tolerances=tol.as_dict())

    images = [index.find(rotate(v.coords)) for v in roots]
    miss = next((v.label for v, i in zip(roots, images) if i is None), None)
    report.add(Check("rotation_preserves_roots", miss is None, t, "",
                     None if miss is None else {"root": miss}))
    if miss is not None:
        return report

    perm = images
    powers = [list(range(len(roots)))]
    for _ in range(30):
        powers.append([perm[i] for i in powers[-1]])
    identity = powers[0]
    order = next(k for k in range(1, 31) if powers[k] == identity) if powers[30] == identity else None
    report.add(Check("rotation_order_30", order == 30, t, f"order {order}",
                     None if order == 30 else {"observed": order, "expected": 30}))

    seen, orbits = set(), []
    for i in range(len(roots)):
        if i not in seen:
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = perm[j]
            orbits.append(len(orb))
    expected_orbits = len(roots) // 30
    ok = orbits == [30] * expected_orbits
    report.add(Check("orbits", ok, t, f"{len(orbits)} orbits of sizes {sorted(set(orbits))}",
                     None if ok else {"observed": orbits}))

    neg = [index.find((-v).coords) for v in roots]
    ok = powers[15] == neg
    report.add(Check("half_turn_is_negation", ok, t, "",
                     None if ok else {"observed": "15th power differs from v -> -v"}))
    return report


# Standard constructions and isomorphism


def standard_e8() -> list[tuple[Fraction, ...]]:
    """The +-e_i +- e_j and even-sign (+-1/2)^8 roots, squared norm 2."""
    out = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.append(tuple(v))
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(s * half for s in signs))
    return out


def standard_h4() -> np.ndarray:
    """Unit 600-cell vertices: 8 + 16 + 96."""
    out = []
    for i in range(4):
        for s in (1, -1):
            v = [0.0] * 4
            v[i] = s
            out.append(v)
    for signs in itertools.product((0.5, -0.5), repeat=4):
        out.append(list(signs))
    base = (TAU / 2, 0.5, 1 / (2 * TAU), 0.0)
    for perm in itertools.permutations(range(4)):
        if _parity(perm) == 0:
            for signs in itertools.product((1, -1), repeat=3):
                v = [0.0] * 4
                for src, dst in enumerate(perm):
                    v[dst] = base[src] * (signs[src] if src < 3 else 1)
                out.append(v)
    return np.array(out)


def _parity(perm: Sequence[int]) -> int:
    inv = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return inv % 2


def simple_system(vectors: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Indecomposable positive roots for the functional with weights 1, 2, 4, ..."""
    w = [2 ** k for k in range(len(vectors[0]))]
    pos = [tuple(v) for v in vectors if sum(x * y for x, y in zip(v, w)) > 0]
    sums = {tuple(x + y for x, y in zip(u, v)) for u, v in itertools.combinations(pos, 2)}
    return [v for v in pos if v not in sums]


def _frac_cartan(simple: Sequence[Sequence[Fraction]]) -> CartanMatrix:
    dot = lambda u, v: sum(x * y for x, y in zip(u, v))
    entries = tuple(
        tuple(int(2 * dot(a, b) / dot(b, b)) for b in simple) for a in simple
    )
    return CartanMatrix(entries, tuple(str(i) for i in range(len(simple))))


@dataclass
class Isometry:
    matrix: np.ndarray
    scale: float
    orthogonality_error: float


def isometry_from_simple_match(src_simple: np.ndarray, dst_simple: np.ndarray) -> Isometry:
    """Linear map with M @ src_simple[i] = dst_simple[i] (rows are vectors, already matched)."""
    S = np.asarray(src_simple, dtype=float).T
    D = np.asarray(dst_simple, dtype=float).T
    M = D @ np.linalg.inv(S)
    scale2 = float(np.mean(np.sum(D * D, axis=0)) / np.mean(np.sum(S * S, axis=0)))
    err = float(np.max(np.abs(M.T @ M / scale2 - np.eye(M.shape[0]))))
    return Isometry(M, math.sqrt(scale2), err)


def matched_standard_simple(src: CartanMatrix) -> np.ndarray:
    """Standard E8 simple roots reordered to match ``src``'s labelling."""
    std_simple = simple_system(standard_e8())
    dst = _frac_cartan(std_simple)
    mapping = diagram_isomorphism(src, dst)
    if mapping is None:
        raise CrystallographyError("Cartan matrix is not that of the standard E8")
    return np.array([[float(x) for x in std_simple[mapping[i]]] for i in range(len(std_simple))])


def check_isomorphism_e8(roots: Sequence[RootVector], tol: Tolerances = DEFAULT) -> VerificationReport:
    """Explicit isometry onto the standard E8, checked by exhaustive bijection."""
    report = VerificationReport("isomorphism with standard E8", tolerances=tol.as_dict())
    simple = simple_system_at(roots, 0)
    cm = cartan_integers(simple, tol.census)
    dst_simple = matched_standard_simple(cm)
    iso = isometry_from_simple_match(real_matrix(simple), dst_simple)
    ok = iso.orthogonality_error <= tol.membership
    report.add(Check("isometry_orthogonal", ok, tol.membership,
                     f"scale {iso.scale:.15g}, max |M^T M/s^2 - I| = {iso.orthogonality_error:.2e}",
                     None if ok else {"observed": iso.orthogonality_error}))

    std = [RootVector(tuple(complex(float(v[2 * k]), float(v[2 * k + 1])) for k in range(4)), "S", i)
           for i, v in enumerate(standard_e8())]
    index = RootIndex(std, tol.membership)
    images = real_matrix(roots) @ iso.matrix.T
    hits = index.find_many(images)
    unmatched = [roots[i].label for i, h in enumerate(hits) if h is None]
    ok = not unmatched and len(set(hits)) == len(std) == len(roots)
    report.add(Check("bijection_onto_standard", ok, tol.membership, f"{len(set(h for h in hits if h is not None))}/{len(std)} standard roots hit",
                     None if ok else {"unmatched": unmatched[:10]}))

    # Conjugate the rotation across the map and check it permutes the standard roots.
    R = rotation_matrix_real(roots[0].system)
    P = iso.matrix @ R @ np.linalg.inv(iso.matrix)
    X = real_matrix(std)
    perm = index.find_many(X @ P.T)
    order = None
    if None not in perm and len(set(perm)) == len(std):
        cur = list(range(len(std)))
        for k in range(1, 31):
            cur = [perm[i] for i in cur]
            if cur == list(range(len(std))):
                order = k
                break
    report.add(Check("conjugated_rotation_order_30", order == 30, tol.membership, f"order {order}",
                     None if order == 30 else {"observed": order}))
    return report


def rotation_matrix_real(system: str = "e8") -> np.ndarray:
    """Real form of the Coxeter rotation acting on interleaved coordinates."""
    exps = (2, 22, 14, 26) if system == "e8" else (2, 22)
    blocks = []
    for e in exps:
        th = math.pi * e / 30
        blocks.append(np.array([[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]]))
    R = np.zeros((2 * len(exps), 2 * len(exps)))
    for k, b in enumerate(blocks):
        R[2 * k:2 * k + 2, 2 * k:2 * k + 2] = b
    return R


def h4_census(X: np.ndarray, tol: float = DEFAULT.census) -> list[tuple] | None:
    """Sorted per-root snapped inner-product multisets (unit vectors), or None if any fails to snap."""
    G = X @ X.T
    allowed = _h4_allowed()
    out = []
    for row in G:
        snapped = [_snap(x, allowed, tol) for x in row]
        if None in snapped:
            return None
        out.append(tuple(sorted(Counter(snapped).items())))
    return sorted(out)


def check_isomorphism_h4(roots: Sequence[RootVector], tol: Tolerances = DEFAULT) -> VerificationReport:
    report = VerificationReport("census match with the 600-cell", tolerances=tol.as_dict())
    gen = h4_census(real_matrix(roots), tol.census)
    std = h4_census(standard_h4(), tol.census)
    ok = gen is not None and gen == std
    report.add(Check("h4_census_match", ok, tol.census, f"{len(roots)} vs {len(standard_h4())} vectors",
                     None if ok else {"observed": "census differs or inner product off-spectrum"}))
    return report


# Suites


def _guarded(report: VerificationReport, name: str, fn, *args) -> None:
    """Run a sub-suite; structural breakage becomes a failing check."""
    try:
        report.extend(fn(*args))
    except (KeyError, IndexError, ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
        report.add(Check(name, False, None, "could not run", {"observed": f"{type(exc).__name__}: {exc}"}))


def e8_report(roots: Sequence[RootVector], tol: Tolerances = DEFAULT, gram=None) -> VerificationReport:
    exact = roots[0].exact
    report = VerificationReport(f"E8 verification ({'exact' if exact else 'numeric'})", tolerances=tol.as_dict())
    count_ok = len(roots) == 240
    report.add(Check("count_240", count_ok, None, f"{len(roots)} roots", None if count_ok else {"observed": len(roots)}))
    G = gram_matrix(roots) if gram is None else gram
    if not exact:
        bad = [v.label for i, v in enumerate(roots) if abs(G[i][i] - 1) > tol.identity]
        report.add(Check("unit_norms", not bad, tol.identity, "", None if not bad else {"root": bad[0]}))
    report.extend(check_root_system(roots, tol, gram=G))
    _guarded(report, "simple_systems", check_simple_systems, roots, tol)
    _guarded(report, "coxeter_symmetry", check_coxeter_symmetry, roots, tol)
    _guarded(report, "isomorphism", check_isomorphism_e8, roots, tol)
    return report


def h4_report(roots: Sequence[RootVector], tol: Tolerances = DEFAULT) -> VerificationReport:
    report = VerificationReport("H4 verification (numeric)", tolerances=tol.as_dict())
    count_ok = len(roots) == 120
    report.add(Check("count_120", count_ok, None, f"{len(roots)} roots", None if count_ok else {"observed": len(roots)}))
    G = gram_matrix(roots)
    bad = [v.label for i, v in enumerate(roots) if abs(G[i][i] - 1) > tol.identity]
    report.add(Check("unit_norms", not bad, tol.identity, "", None if not bad else {"root": bad[0]}))
    report.extend(check_root_system(roots, tol, crystallographic=False, gram=G))
    _guarded(report, "coxeter_symmetry", check_coxeter_symmetry, roots, tol)
    _guarded(report, "isomorphism", check_isomorphism_h4, roots, tol)
    return report
