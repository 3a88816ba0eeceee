"""Convergence behaviour of periodic continued fractions.

Limits are decided exactly.  For residue ``j`` the decimated limit is
``lim_n M_{N+j} R_j^n (inf)``; since ``R_j`` is ``E`` conjugated by
``M_{N+j}``, this equals ``lim_n E^n C_{N+j}``, so every limit is computed
from the fixed points of the single matrix ``E`` and all values live in one
quadratic tower.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactnum import abs_cmp_one, render
from .interval import ComplexBox, Interval, complex_eval, decimal_str
from .kernels import rotation_mats
from .matrix2 import INF, EigenData, Mat2, ProjPoint, eigen_data, mobius, power_limit
from .pcf import Pcf, e_matrix, prefix_matrix

CONVERGENT = "convergent"
STRICTLY_QUASI = "strictly_quasiconvergent"
STRICTLY_DIVERGENT = "strictly_divergent"

BEHAVIOR = {
    "double_root": CONVERGENT,
    "zero_quad": STRICTLY_DIVERGENT,
    "gap_convergent": CONVERGENT,
    "gap_strictly_quasiconvergent": STRICTLY_QUASI,
    "equal_magnitude_divergent": STRICTLY_DIVERGENT,
}


@dataclass
class ResidueData:
    j: int
    r: object
    s: object
    t: object
    u: object
    heavy: bool
    limit: Optional[ProjPoint] = None
    has_limit: bool = False

    @property
    def matrix(self) -> Mat2:
        return Mat2(self.r, self.s, self.t, self.u)


@dataclass
class ConvergenceReport:
    case_tag: str
    behavior: str
    limit: Optional[ProjPoint]
    residues: list
    eigen: EigenData
    majority: Optional[tuple] = None
    pcf: Optional[Pcf] = field(default=None, repr=False)

    @property
    def k(self) -> int:
        return len(self.residues)

    @property
    def quasiconvergent(self) -> bool:
        return self.behavior in (CONVERGENT, STRICTLY_QUASI)

    def limits(self) -> list:
        return [res.limit for res in self.residues]

    def heavy_indices(self) -> list:
        return [res.j for res in self.residues if res.heavy]


def is_heavy(t, u) -> bool:
    return t == 0 and abs_cmp_one(u) > 0


def residue_matrices(p: Pcf) -> list:
    """R_j = M([a_{j+1}, ..., a_k, a_1, ..., a_j]) for j = 1..k."""
    out = []
    for j, (r, s, t, u) in enumerate(rotation_mats(list(p.repeating)), start=1):
        out.append(ResidueData(j, r, s, t, u, is_heavy(t, u)))
    return out


def decimation_limits(p: Pcf, eigen: Optional[EigenData] = None, e: Optional[Mat2] = None) -> list:
    res = residue_matrices(p)
    if e is None:
        e = e_matrix(p)
    ed = eigen if eigen is not None else eigen_data(e)
    m = prefix_matrix(p, p.N)
    for rd, a in zip(res, p.repeating):
        m = m * Mat2.D(a)
        c = ProjPoint(m.m11, m.m21)
        pl = power_limit(e, c, ed)
        rd.limit = pl.limit
        rd.has_limit = pl.limit is not None
    return res


def decimation_limits_via_residues(p: Pcf) -> list:
    """Independent route: M_{N+j} applied to the limit of R_j^n (inf)."""
    out = []
    m = prefix_matrix(p, p.N)
    for rd, a in zip(residue_matrices(p), p.repeating):
        m = m * Mat2.D(a)
        pl = power_limit(rd.matrix, INF)
        out.append(None if pl.limit is None else mobius(m, pl.limit))
    return out


def _group(values) -> list:
    groups = []
    for v in values:
        for g in groups:
            if g[0] == v:
                g[1] += 1
                break
        else:
            groups.append([v, 1])
    return groups


def majority_analysis(report: ConvergenceReport) -> tuple:
    """(k, agree_count, witness) over the residue limits."""
    if any(not r.has_limit for r in report.residues):
        raise ValueError("some decimated limit does not exist")
    groups = _group([r.limit for r in report.residues])
    best = max(g[1] for g in groups)
    witness = min((g[0] for g in groups if g[1] == best), key=lambda x: x.key())
    k = report.k
    if report.behavior == STRICTLY_QUASI and not (k < 2 * best < 2 * k):
        raise AssertionError("strict quasiconvergence without a strict, non-unanimous majority")
    return k, best, witness


def classify(p: Pcf) -> ConvergenceReport:
    e = e_matrix(p)
    ed = eigen_data(e)
    res = decimation_limits(p, ed, e)
    if ed.kind == "zero_quad":
        tag, limit = "zero_quad", None
    elif ed.kind == "double_root":
        tag, limit = "double_root", ed.plus
    elif ed.kind == "gap":
        if any(r.heavy for r in res):
            tag, limit = "gap_strictly_quasiconvergent", None
        else:
            tag, limit = "gap_convergent", ed.plus
    else:
        tag, limit = "equal_magnitude_divergent", None
    rep = ConvergenceReport(tag, BEHAVIOR[tag], limit, res, ed, pcf=p)
    if all(r.has_limit for r in res):
        rep.majority = majority_analysis(rep)
    return rep


def structural_violations(report: ConvergenceReport) -> list:
    """Consistency conditions every report must satisfy; empty when sound."""
    bad = []
    res = report.residues
    k = len(res)
    p = report.pcf
    for i, r in enumerate(res):
        nxt = res[(i + 1) % k]
        if k > 1 and r.heavy and nxt.heavy:
            bad.append(f"adjacent heavy residues {r.j},{nxt.j}")
        if k > 2 and p is not None and r.heavy and res[(i + 2) % k].heavy:
            if p.repeating[(r.j + 1) % k] != 0:
                bad.append(f"heavy {r.j} and {r.j + 2} with nonzero quotient between")
        if report.case_tag.startswith("gap") and r.heavy != (r.limit == report.eigen.minus):
            bad.append(f"residue {r.j}: heavy flag disagrees with limit")
    if report.case_tag == "gap_strictly_quasiconvergent" and not any(r.heavy for r in res):
        bad.append("strictly quasiconvergent without a heavy residue")
    if report.case_tag == "equal_magnitude_divergent" and all(r.has_limit for r in res):
        bad.append("equal magnitudes but every limit exists")
    if report.case_tag == "equal_magnitude_divergent":
        for r in res:
            if r.has_limit != (r.t == 0):
                bad.append(f"residue {r.j}: limit existence disagrees with t_j")
    strict = False
    if all(r.has_limit for r in res):
        count = max(g[1] for g in _group([r.limit for r in res]))
        strict = k < 2 * count < 2 * k
    if strict != (report.behavior == STRICTLY_QUASI):
        bad.append("majority characterisation fails")
    if report.behavior == CONVERGENT and any(r.limit != report.limit for r in res):
        bad.append("convergent but residue limits differ")
    return bad


# ---------------------------------------------------------------------------
# serialization


def _point_json(pt: Optional[ProjPoint], digits: int):
    if pt is None:
        return None
    if pt.is_inf:
        return {"exact": "inf", "decimal": "inf"}
    return {"exact": render(pt.value), "decimal": decimal_str(pt.value, digits)}


def report_to_dict(report: ConvergenceReport, digits: int = 30) -> dict:
    ed = report.eigen
    out = {
        "pcf": str(report.pcf) if report.pcf is not None else None,
        "case_tag": report.case_tag,
        "behavior": report.behavior,
        "limit": _point_json(report.limit, digits),
        "eigen": {
            "kind": ed.kind,
            "beta_plus": _point_json(ed.plus, digits),
            "beta_minus": _point_json(ed.minus, digits),
            "lambda_plus": None if ed.lam_plus is None else render(ed.lam_plus),
            "lambda_minus": None if ed.lam_minus is None else render(ed.lam_minus),
            "tie": ed.tie,
        },
        "heavy": report.heavy_indices(),
        "residues": [
            {
                "j": r.j,
                "R": [[render(r.r), render(r.s)], [render(r.t), render(r.u)]],
                "heavy": r.heavy,
                "limit": _point_json(r.limit, digits),
            }
            for r in report.residues
        ],
        "majority": None,
    }
    if report.majority is not None:
        k, count, w = report.majority
        out["majority"] = {"total": k, "agree_count": count, "witness": _point_json(w, digits)}
    return out


def report_to_json(report: ConvergenceReport, digits: int = 30) -> str:
    return json.dumps(report_to_dict(report, digits), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# numerical oracle


@dataclass
class OracleResidue:
    j: int
    chart: str  # "value" encloses p/q, "reciprocal" encloses q/p
    box: Optional[ComplexBox]
    change: float  # size of the last per-period step
    periods: int

    @property
    def settled(self) -> bool:
        return self.box is not None and self.change < 1e-12

    def distance_to(self, pt: ProjPoint, bits: int = 256) -> float:
        """Upper bound on the distance from the enclosure to ``pt`` in the
        oracle's chart."""
        if self.box is None:
            return float("inf")
        if self.chart == "value":
            if pt.is_inf:
                return float("inf")
            target = complex_eval(pt.value, bits)
        else:
            if pt.is_inf:
                target = ComplexBox.point(0, bits)
            elif pt.value == 0:
                return float("inf")
            else:
                target = complex_eval(pt.value, bits).inverse()
        d = self.box - target
        return float(d.abs2().hi_q) ** 0.5


def _zero(prec):
    return ComplexBox.point(0, prec)


def float_oracle(p: Pcf, n_periods: int, precision_bits: int = 128, stop_tol=None) -> list:
    """Iterate the convergents C_{N+j+nk} with interval arithmetic.

    Independent of the exact classifier.  With ``stop_tol`` the iteration
    stops once every residue moved less than ``stop_tol`` over three
    consecutive periods.
    """
    prec = precision_bits
    terms = [complex_eval(c, prec) for c in p.repeating]
    one = ComplexBox.point(1, prec)
    a, b, c, d = one, _zero(prec), _zero(prec), one
    for x in p.initial:
        xb = complex_eval(x, prec)
        a, b, c, d = a * xb + b, a, c * xb + d, c
    k = p.k
    last = [None] * k
    change = [float("inf")] * k
    quiet = 0
    n = 0
    for n in range(1, n_periods + 1):
        for j in range(k):
            x = terms[j]
            a, b, c, d = a * x + b, a, c * x + d, c
            cur = _ratio(a, c)
            prev = last[j]
            if cur is None or prev is None or cur[0] != prev[0]:
                change[j] = float("inf")
            else:
                change[j] = float((cur[1] - prev[1]).abs2().hi_q) ** 0.5
            last[j] = cur
        a, b, c, d = _rescale(a, b, c, d)
        if stop_tol is not None:
            quiet = quiet + 1 if max(change) < stop_tol else 0
            if quiet >= 3:
                break
    out = []
    for j in range(k):
        cur = last[j]
        if cur is None:
            out.append(OracleResidue(j + 1, "value", None, float("inf"), n))
        else:
            out.append(OracleResidue(j + 1, cur[0], cur[1], change[j], n))
    return out


def _ratio(pv: ComplexBox, qv: ComplexBox):
    qz = qv.abs2().sign() is None
    pz = pv.abs2().sign() is None
    if not qz and (pz or _mag(qv) >= _mag(pv)):
        return "value", pv / qv
    if not pz:
        return "reciprocal", qv / pv
    return None


def _mag(z: ComplexBox) -> Fraction:
    return z.abs2().lo_q


def _rescale(*boxes):
    """Divide all entries by a common power of two (exact)."""
    exps = [
        m.bit_length() + e
        for bx in boxes
        for iv in (bx.re, bx.im)
        for m, e in (iv.lo, iv.hi)
        if m != 0
    ]
    if not exps:
        return boxes
    shift = max(exps)
    if abs(shift) < 64:
        return boxes
    return tuple(ComplexBox(_shift(bx.re, -shift), _shift(bx.im, -shift)) for bx in boxes)


def _shift(iv: Interval, s: int) -> Interval:
    return Interval((iv.lo[0], iv.lo[1] + s), (iv.hi[0], iv.hi[1] + s), iv.prec)
