import math

import numpy as np
import pytest

from triacontagonal import amplitudes as amp
from triacontagonal.cyclo import c_n, embed_complex
from triacontagonal.errors import TranscriptionError

# Frozen from a 40-digit mpmath evaluation of the closed forms.
A, B, C, D = 0.9472735804116375, 0.7705817523420471, 0.6373411668466584, 0.3204259100854938
LAMBDA = 1.2410042134544726
LAMBDA_SQ = 1.5400914578117541


def test_abcd_closed_forms():
    a, b, c, d = amp.abcd_numeric()
    assert (a, b, c, d) == pytest.approx((A, B, C, D), abs=1e-14)
    assert a > b > c > d > 0


def test_abcd_are_positive_octic_roots():
    # Independent route: companion-matrix roots of the octic.
    roots = np.roots(amp.OCTIC)
    positive = sorted((r.real for r in roots if abs(r.imag) < 1e-12 and r.real > 0), reverse=True)
    assert positive == pytest.approx(list(amp.abcd_numeric()), abs=1e-12)
    for x in amp.abcd_numeric():
        assert abs(amp.octic(x)) < 1e-10


def test_complementary_squares():
    a, b, c, d = amp.abcd_numeric()
    assert abs(a * a + d * d - 1) < 1e-12
    assert abs(b * b + c * c - 1) < 1e-12


def test_octic_check_rejects_bad_tolerance():
    with pytest.raises(TranscriptionError):
        amp.abcd_numeric(tol=0.0)


def test_primary_amplitudes(surd):
    c9, c3 = 2 * math.cos(3 * math.pi / 10), 2 * math.cos(math.pi / 10)
    assert surd.mode == "surd"
    assert surd.r[0] == pytest.approx(A / c9, abs=1e-15)
    assert surd.r[0] == pytest.approx(0.8057990369076905, abs=1e-14)
    assert surd.r[7] == pytest.approx(0.16845787006103215, abs=1e-14)
    assert surd.r[7] == pytest.approx(D / c3, abs=1e-15)
    r = surd.r
    assert r[0] ** 2 + r[3] ** 2 + r[5] ** 2 + r[6] ** 2 == pytest.approx(1.0, abs=1e-12)


def test_denominator_scaling_is_tau():
    assert abs(amp.cos_value(3) - amp.TAU * amp.cos_value(9)) < 1e-12
    assert embed_complex(c_n(6)).real == pytest.approx(amp.TAU, abs=1e-12)


def test_cyclotomic_amplitudes(cyc):
    r = cyc.r
    assert r[0] == 1
    assert r[4] == c_n(12)
    assert r[4] * r[4] + r[4] == 1
    num = cyc.numeric()
    assert num[4] == pytest.approx(1 / amp.TAU, abs=1e-14)
    assert num[3] == pytest.approx(0.3382612127177164, abs=1e-14)
    assert all(x.is_real() for x in r)
    assert all(x > 0 for x in num)


def test_proportionality_ratio():
    lam = amp.proportionality_ratio()
    assert lam == pytest.approx(LAMBDA, abs=1e-13)
    assert lam == pytest.approx(amp.cos_value(9) / A, abs=1e-14)
    ratios = amp.ratio_table()
    assert max(ratios) - min(ratios) < 1e-10 * lam
    assert lam * lam == pytest.approx(LAMBDA_SQ, abs=1e-12)


def test_cyclotomic_row_norms_exactly_equal(cyc):
    r = cyc.r
    # Amplitude indices appearing in each generator row.
    rows = [(1, 4, 6, 7), (2, 3, 8, 5), (3, 2, 5, 8), (4, 1, 7, 6),
            (5, 8, 2, 3), (6, 7, 4, 1), (7, 6, 1, 4), (8, 5, 3, 2)]
    norms = {sum((r[i - 1] * r[i - 1] for i in row), r[0] * 0) for row in rows}
    assert len(norms) == 1
    assert embed_complex(norms.pop()).real == pytest.approx(LAMBDA_SQ, abs=1e-12)


def test_mode_dispatch():
    assert amp.amplitudes("surd").mode == "surd"
    assert amp.amplitudes("cyclotomic").exact
    with pytest.raises(ValueError):
        amp.amplitudes("other")
