"""Exit criteria; each test prints one PASS/FAIL line in the terminal summary."""

import hashlib
import math
import subprocess
import sys
from collections import Counter
from fractions import Fraction

import networkx as nx
import numpy as np

from triacontagonal import amplitudes as amp
from triacontagonal.project import h4_e8_scaling_check, project_first_coordinate, radius_classes
from triacontagonal.render import RenderStyle, render_svg
from triacontagonal.roots import coxeter_rotation, real_matrix
from triacontagonal.verify import (
    RootIndex,
    cartan_integers,
    check_isomorphism_e8,
    check_isomorphism_h4,
    hermitian_inner,
    rational_ratio,
    simple_root_decomposition,
    simple_system_at,
    standard_e8,
)

CANONICAL_SVG_SHA256 = "7e427367052046b1fca27c26fe066a96d35c7c98dbab3c7204e8fd47f4632af4"
E8_RADII = [0.8058, 0.6555, 0.5421, 0.4980, 0.4051, 0.3351, 0.2725, 0.1684]
E8_CENSUS = {Fraction(1): 1, Fraction(1, 2): 56, Fraction(0): 126, Fraction(-1, 2): 56, Fraction(-1): 1}


def test_01_cardinality(criterion, e8_exact, e8_numeric, h4):
    """1 cardinality: 240 distinct E8 roots, 120 distinct H4 roots"""
    assert len(e8_exact) == 240 and len({v.coords for v in e8_exact}) == 240
    assert len(e8_numeric) == 240
    for roots in (e8_numeric, h4):
        X = real_matrix(roots)
        d = np.linalg.norm(X[:, None] - X[None, :], axis=-1)
        np.fill_diagonal(d, np.inf)
        assert d.min() > 0.5
    assert len(h4) == 120
    criterion["ok"] = True


def test_02_norms(criterion, e8_numeric, h4, e8_exact):
    """2 norms: unit within 1e-12 (surd); identical exact norms = (c9/a)^2 (cyclotomic)"""
    for roots in (e8_numeric, h4):
        assert all(abs(hermitian_inner(v, v) - 1) <= 1e-12 for v in roots)
    norms = {hermitian_inner(v, v) for v in e8_exact}
    assert len(norms) == 1
    lam_sq = (amp.cos_value(9) / amp.abcd_numeric()[0]) ** 2
    assert abs(complex(norms.pop()).real - lam_sq) <= 1e-12
    criterion["ok"] = True


def test_03_root_system_axioms(criterion, e8_exact, e8_exact_gram, e8_exact_report):
    """3 E8 axioms (exact): Cartan integers in [-2,2], census {1,56,126,56,1} for every root, reflection closure"""
    norm = e8_exact_gram[0][0]
    for row in e8_exact_gram:
        ratios = [rational_ratio(x, norm) for x in row]
        assert all(q is not None and (2 * q).denominator == 1 and -2 <= 2 * q <= 2 for q in ratios)
        assert dict(Counter(ratios)) == E8_CENSUS
    std = [tuple(int(2 * x) for x in v) for v in standard_e8()]
    std_census = {tuple(sorted(Counter(Fraction(sum(a * b for a, b in zip(u, v)), 8) for v in std).items())) for u in std}
    assert std_census == {tuple(sorted(E8_CENSUS.items()))}
    assert e8_exact_report["reflection_closure"].passed
    assert e8_exact_report["reflection_closure"].tolerance is None
    assert e8_exact_report["cartan_integers"].passed
    criterion["ok"] = True


def _legs(g: nx.Graph) -> list[int]:
    (branch,) = [v for v in g if g.degree(v) == 3]
    legs = []
    for start in g.neighbors(branch):
        prev, cur, n = branch, start, 1
        while g.degree(cur) == 2:
            prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
            n += 1
        legs.append(n)
    return sorted(legs)


def test_04_simple_roots_and_dynkin(criterion, e8_exact):
    """4 simple roots: {A_n..H_n} E8 Dynkin for all n; uniform-sign integer decompositions; max height 29"""
    for n in range(30):
        m = cartan_integers(simple_system_at(e8_exact, n))
        assert all(m.entries[i][i] == 2 for i in range(8))
        assert {m.entries[i][j] for i in range(8) for j in range(8) if i != j} <= {0, -1}
        g = m.graph()
        assert nx.is_tree(g) and g.number_of_nodes() == 8
        # Legs 1, 2, 4: a 7-path with the branch third from one end.
        assert _legs(g) == [1, 2, 4]
    simple = simple_system_at(e8_exact, 0)
    heights = []
    for v in e8_exact:
        k = simple_root_decomposition(v, simple)
        assert all(x >= 0 for x in k) or all(x <= 0 for x in k)
        heights.append(sum(k))
    assert max(heights) == 29 and min(heights) == -29
    criterion["ok"] = True


def test_05_c30_symmetry(criterion, e8_exact):
    """5 C30 symmetry: rotation (2,22,14,26) preserves roots, order 30, 8 orbits of 30, 15th power = -1"""
    rot = coxeter_rotation("exact")
    index = RootIndex(e8_exact)
    perm = [index.find(rot(v.coords)) for v in e8_exact]
    assert None not in perm and sorted(perm) == list(range(240))
    cur = list(range(240))
    identity = list(range(240))
    for k in range(1, 31):
        cur = [perm[i] for i in cur]
        if k == 15:
            assert cur == [index.find((-v).coords) for v in e8_exact]
        assert (cur == identity) == (k == 30)
    seen, sizes = set(), []
    for i in range(240):
        if i in seen:
            continue
        j, size = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            size += 1
        sizes.append(size)
    assert sizes == [30] * 8
    criterion["ok"] = True


def test_06_isomorphism(criterion, e8_exact, e8_numeric, h4):
    """6 isomorphism: explicit isometry onto standard E8 (1e-9); H4 census = 600-cell (1e-10)"""
    for roots in (e8_exact, e8_numeric):
        rep = check_isomorphism_e8(roots)
        assert rep["isometry_orthogonal"].passed and rep["isometry_orthogonal"].tolerance == 1e-9
        assert rep["bijection_onto_standard"].passed
    rep = check_isomorphism_h4(h4)
    assert rep["h4_census_match"].passed and rep["h4_census_match"].tolerance == 1e-10
    criterion["ok"] = True


def test_07_projection_structure(criterion, e8_numeric, h4, surd):
    """7 projection: 8 radii x 30 points matching the 4-digit radii (1e-3); H4 radii a,b,c,d (1e-3)"""
    classes = radius_classes(project_first_coordinate(e8_numeric))
    assert [len(c) for c in classes] == [30] * 8
    assert all(abs(c[0].radius - r) <= 1e-3 for c, r in zip(classes, E8_RADII))
    h4_classes = radius_classes(project_first_coordinate(h4))
    assert [len(c) for c in h4_classes] == [30] * 4
    assert all(abs(c[0].radius - r) <= 1e-3 for c, r in zip(h4_classes, surd.abcd))
    criterion["ok"] = True


def test_08_golden_ratio(criterion, e8_numeric, h4):
    """8 golden ratio: E8 projection = (1/c9)P + (1/c3)P at 1e-9, scale ratio tau at 1e-12"""
    res = h4_e8_scaling_check(project_first_coordinate(e8_numeric), project_first_coordinate(h4), 1e-9, 1e-12)
    assert res.passed and res.matched == 240 and not res.unmatched
    assert abs(res.ratio - (1 + math.sqrt(5)) / 2) <= 1e-12
    criterion["ok"] = True


def test_09_amplitude_equivalence(criterion):
    """9 amplitudes: cyclotomic = (c9/a) * surd, ratios agree to 1e-10; octic residuals < 1e-10"""
    lam = amp.cos_value(9) / amp.abcd_numeric()[0]
    assert all(abs(q - lam) <= 1e-10 * lam for q in amp.ratio_table())
    assert abs(amp.proportionality_ratio() - lam) <= 1e-15
    assert all(abs(amp.octic(x)) < 1e-10 for x in amp.abcd_numeric())
    criterion["ok"] = True


def test_10_render_determinism(criterion, e8_numeric):
    """10 rendering: byte-identical SVG across runs, 240 point elements, frozen digest"""
    svg = render_svg(project_first_coordinate(e8_numeric), RenderStyle())
    runs = [subprocess.run([sys.executable, "-m", "triacontagonal", "render", "--system", "e8"],
                           capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] == svg.encode()
    assert svg.count('<circle class="root"') == 240
    assert hashlib.sha256(svg.encode()).hexdigest() == CANONICAL_SVG_SHA256
    criterion["ok"] = True
