"""Claim-level summary tying every check to the statement it supports."""

from __future__ import annotations

from dataclasses import dataclass

from . import amplitudes as amp
from .cyclo import c_n, embed_complex
from .errors import TranscriptionError
from .project import h4_e8_scaling_check, phase_census, project_first_coordinate, radius_classes, regular_polygon_gaps
from .roots import e8_roots, h4_roots
from .tolerances import DEFAULT, Tolerances
from .verify import Check, VerificationReport, e8_report, h4_report, hermitian_inner


@dataclass
class Claim:
    statement: str
    report: VerificationReport

    @property
    def passed(self) -> bool:
        return self.report.passed


def amplitude_report(tol: Tolerances = DEFAULT) -> VerificationReport:
    rep = VerificationReport("amplitudes", tolerances=tol.as_dict())
    try:
        a, b, c, d = amp.abcd_numeric(tol.residual)
        worst = max(abs(amp.octic(x)) for x in (a, b, c, d))
        rep.add(Check("octic_roots", True, tol.residual, f"max residual {worst:.2e}"))
    except TranscriptionError as exc:
        rep.add(Check("octic_roots", False, tol.residual, str(exc), {"observed": str(exc)}))
        return rep
    ok = a > b > c > d > 0
    rep.add(Check("ordering_a>b>c>d>0", ok, None, f"{a:.10f} > {b:.10f} > {c:.10f} > {d:.10f}",
                  None if ok else {"observed": (a, b, c, d)}))
    e1, e2 = abs(a * a + d * d - 1), abs(b * b + c * c - 1)
    ok = max(e1, e2) <= tol.identity
    rep.add(Check("complementary_squares", ok, tol.identity, f"|a^2+d^2-1|={e1:.1e}, |b^2+c^2-1|={e2:.1e}",
                  None if ok else {"observed": (e1, e2)}))
    c3, c9 = amp.cos_value(3), amp.cos_value(9)
    err = abs(c3 - amp.TAU * c9)
    rep.add(Check("c3_equals_tau_c9", err <= tol.identity, tol.identity, f"error {err:.1e}",
                  None if err <= tol.identity else {"observed": err}))
    c6 = c_n(6)
    ok = c6 * c6 == c6 + 1 and abs(embed_complex(c6).real - amp.TAU) <= tol.identity
    rep.add(Check("c6_is_golden_ratio", ok, None, "c6^2 = c6 + 1 exactly",
                  None if ok else {"observed": str(c6 * c6)}))
    try:
        lam = amp.proportionality_ratio(tol.residual)
        rep.add(Check("cyclotomic_proportional_to_surd", True, tol.residual,
                      f"lambda = c9/a = {lam:.12f}, lambda^2 = {lam * lam:.12f}"))
    except TranscriptionError as exc:
        rep.add(Check("cyclotomic_proportional_to_surd", False, tol.residual, "", {"observed": str(exc)}))
        return rep
    cyc = amp.amplitudes_cyclotomic()
    ok = all(x.is_real() and embed_complex(x).real > 0 for x in cyc.r)
    rep.add(Check("cyclotomic_amplitudes_real_positive", ok, None, "", None if ok else {"observed": [str(x) for x in cyc.r]}))
    roots = e8_roots(cyc)
    norms = [hermitian_inner(roots[30 * k], roots[30 * k]) for k in range(8)]
    ok = len(set(norms)) == 1 and abs(embed_complex(norms[0]).real - lam * lam) <= tol.residual
    rep.add(Check("cyclotomic_row_norms_equal", ok, None, f"common norm {embed_complex(norms[0]).real:.12f}",
                  None if ok else {"observed": [str(n) for n in norms]}))
    return rep


def projection_report(tol: Tolerances = DEFAULT) -> VerificationReport:
    rep = VerificationReport("projection", tolerances=tol.as_dict())
    amps = amp.amplitudes_primary()
    e8 = project_first_coordinate(e8_roots(amps), tol.membership)
    h4 = project_first_coordinate(h4_roots(amps), tol.membership)
    for name, pts, k in (("e8", e8, 8), ("h4", h4, 4)):
        classes = radius_classes(pts, tol.membership)
        sizes = [len(c) for c in classes]
        ok = sizes == [30] * k
        rep.add(Check(f"{name}_cycles", ok, tol.membership,
                      "radii " + ", ".join(f"{c[0].radius:.4f}" for c in classes),
                      None if ok else {"observed": sizes}))
        gap = regular_polygon_gaps(pts, tol.membership)
        rep.add(Check(f"{name}_regular_30gons", gap <= tol.membership, tol.membership, f"max gap error {gap:.1e}",
                      None if gap <= tol.membership else {"observed": gap}))
        census = phase_census(pts, tol.membership)
        parities = "".join(sorted(c["families"] for c in census if c["parity"] == "even"))
        rep.add(Check(f"{name}_phase_parity", all(c["parity"] != "mixed" for c in census), None,
                      f"even-phase families {parities}",
                      None if all(c["parity"] != "mixed" for c in census) else {"observed": census}))
    res = h4_e8_scaling_check(e8, h4, tol.membership, tol.identity)
    rep.add(Check("golden_ratio_scaling", res.passed, tol.membership,
                  f"{res.matched} points matched, c3/c9 = {res.ratio:.15f}",
                  None if res.passed else {"unmatched": res.unmatched[:10], "diagnostic": res.diagnostic}))
    return rep


def full_report(tol: Tolerances = DEFAULT) -> list[Claim]:
    surd = amp.amplitudes_primary()
    return [
        Claim("a > b > c > d are the positive roots of 45x^8 - 90x^6 + 60x^4 - 15x^2 + 1, "
              "and the cyclotomic amplitudes are a constant multiple of the surd ones", amplitude_report(tol)),
        Claim("The four 30-element families A..D in C^2 form the H4 root system (600-cell)",
              h4_report(h4_roots(surd), tol)),
        Claim("The eight 30-element families A..H in C^4 are unit vectors forming a root system isomorphic to E8",
              e8_report(e8_roots(surd), tol)),
        Claim("Exact check in Q(zeta_60): E8 axioms, {A_n..H_n} simple for every n, C30 symmetry, isomorphism",
              e8_report(e8_roots(amp.amplitudes_cyclotomic()), tol)),
        Claim("First-coordinate projection: 8 (E8) and 4 (H4) regular 30-gons; "
              "E8 image is the H4 image at two scales with ratio tau", projection_report(tol)),
    ]


def render_full_report(claims: list[Claim]) -> str:
    out = []
    for k, c in enumerate(claims, 1):
        out.append(f"Claim {k}: {c.statement}")
        out.append(f"  status: {'PASS' if c.passed else 'FAIL'}")
        for line in c.report.to_text().splitlines():
            out.append("    " + line)
        out.append("")
    tols = claims[0].report.tolerances if claims else DEFAULT.as_dict()
    out.append("tolerances: " + ", ".join(f"{k}={v:g}" for k, v in tols.items()))
    out.append(f"ALL CLAIMS: {'PASS' if all(c.passed for c in claims) else 'FAIL'}")
    return "\n".join(out) + "\n"
