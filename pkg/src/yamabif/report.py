"""Serializable analysis report and bifurcation-diagram samples."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .bifurcation import (
    Classification,
    Contributor,
    DegeneracyInstant,
    RigidityInterval,
    enumerate_instants,
    morse_index,
)
from .errors import DegeneratePairError
from .family import BranchKind, ProductFamily, sigma_eval
from .rationals import decimal12, format_rational, parse_rational
from .sphere_case import ObstructionResult, yamabe_obstruction

__all__ = [
    "AnalysisReport",
    "CONVENTIONS",
    "build_report",
    "family_descriptor",
    "report_to_dict",
    "report_from_dict",
    "report_to_json",
    "check_telescoping",
    "diagram_rows",
    "diagram_csv",
]

CONVENTIONS = {
    "morse_index": (
        "Jacobi-operator index: negative eigenvalues sigma_ij(lambda), (i,j) != (0,0), counted with "
        "multiplicity. The count of Laplacian eigenvalues below kappa_lambda/(m-1) exceeds it by 1 "
        "when kappa_lambda > 0; index jumps agree."
    ),
    "catalog_spectra": "unit radius: S^n has kappa = n(n-1) and eigenvalues k(k+n-1)",
    "rationals": "exact, serialized as 'p/q' strings; obstruction values are floating point",
}


@dataclass
class AnalysisReport:
    family: dict
    window: tuple
    instants: list
    rigidity: list
    index_samples: list
    obstruction: list | None = None
    conventions: dict = field(default_factory=lambda: dict(CONVENTIONS))


def family_descriptor(fam: ProductFamily) -> dict:
    factors = []
    for f in (fam.factor0, fam.factor1):
        factors.append(
            {
                "name": f.name,
                "dim": f.dim,
                "scalar_curvature": format_rational(f.scalar_curvature),
                "volume": f.volume,
                "einstein": f.einstein,
                "harmonically_free": f.harmonically_free,
                "truncation_count": f.truncation_count,
            }
        )
    return {
        "factors": factors,
        "m": fam.m,
        "i_star": fam.i_star,
        "j_star": fam.j_star,
        "degenerate_pair": fam.degenerate_pair,
    }


def _sample_points(lo, hi, instants):
    cuts = [lo] + [inst.lam for inst in instants if lo < inst.lam < hi] + [hi]
    points = []
    instant_set = {inst.lam for inst in instants}
    for k, (a, b) in enumerate(zip(cuts, cuts[1:])):
        if k == 0 and a not in instant_set:
            points.append(a)
        points.append((a + b) / 2)
    if hi not in instant_set:
        points.append(hi)
    return points


def build_report(fam: ProductFamily, lo, hi, obstruction: bool = False) -> AnalysisReport:
    lo, hi = Fraction(lo), Fraction(hi)
    instants = enumerate_instants(fam, lo, hi)
    cuts = [lo] + [inst.lam for inst in instants if lo < inst.lam < hi] + [hi]
    rigidity = [RigidityInterval(a, b) for a, b in zip(cuts, cuts[1:])]
    samples = [(lam, morse_index(fam, lam)) for lam in _sample_points(lo, hi, instants)]
    obstructions = None
    if obstruction:
        points = sorted({inst.lam for inst in instants} | {(a + b) / 2 for a, b in zip(cuts, cuts[1:])})
        obstructions = [yamabe_obstruction(fam, lam) for lam in points]
    return AnalysisReport(family_descriptor(fam), (lo, hi), instants, rigidity, samples, obstructions)


def check_telescoping(report: AnalysisReport) -> bool:
    """Index samples differ exactly by the jumps of the instants between them."""
    samples = report.index_samples
    for (la, na), (lb, nb) in zip(samples, samples[1:]):
        jump = sum(inst.delta_n for inst in report.instants if la < inst.lam < lb)
        if nb - na != jump:
            return False
    return True


def _instant_to_dict(inst):
    return {
        "lambda": format_rational(inst.lam),
        "contributors": [
            {"i": c.i, "j": c.j, "multiplicity": c.multiplicity, "kind": c.kind.value} for c in inst.contributors
        ],
        "delta_n": inst.delta_n,
        "classification": inst.classification.value,
    }


def _obstruction_to_dict(ob):
    return {
        "lambda": format_rational(ob.lam),
        "normalized_scalar": ob.normalized_scalar,
        "sphere_yamabe": ob.sphere_yamabe,
        "certified_not_yamabe": ob.certified_not_yamabe,
        "margin": ob.margin,
    }


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "family": report.family,
        "window": [format_rational(x) for x in report.window],
        "instants": [_instant_to_dict(inst) for inst in report.instants],
        "rigidity": [{"lo": format_rational(r.lo), "hi": format_rational(r.hi)} for r in report.rigidity],
        "index_samples": [{"lambda": format_rational(lam), "morse_index": n} for lam, n in report.index_samples],
        "obstruction": None
        if report.obstruction is None
        else [_obstruction_to_dict(ob) for ob in report.obstruction],
        "conventions": report.conventions,
    }


def report_from_dict(data: dict) -> AnalysisReport:
    instants = [
        DegeneracyInstant(
            parse_rational(d["lambda"]),
            tuple(Contributor(c["i"], c["j"], c["multiplicity"], BranchKind(c["kind"])) for c in d["contributors"]),
            d["delta_n"],
            Classification(d["classification"]),
        )
        for d in data["instants"]
    ]
    obstruction = data.get("obstruction")
    if obstruction is not None:
        obstruction = [
            ObstructionResult(
                parse_rational(d["lambda"]),
                d["normalized_scalar"],
                d["sphere_yamabe"],
                d["certified_not_yamabe"],
                d["margin"],
            )
            for d in obstruction
        ]
    return AnalysisReport(
        family=data["family"],
        window=tuple(parse_rational(x) for x in data["window"]),
        instants=instants,
        rigidity=[RigidityInterval(parse_rational(r["lo"]), parse_rational(r["hi"])) for r in data["rigidity"]],
        index_samples=[(parse_rational(s["lambda"]), s["morse_index"]) for s in data["index_samples"]],
        obstruction=obstruction,
        conventions=data.get("conventions", dict(CONVENTIONS)),
    )


def report_to_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def diagram_rows(fam: ProductFamily, lo, hi, samples: int, branch_cap: int | None = None):
    """Yield ``(lambda, i, j, sigma, multiplicity)`` for plotting the branches."""
    if fam.degenerate_pair:
        raise DegeneratePairError(fam.i_star, fam.j_star)
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 < lo < hi:
        raise ValueError(f"window must satisfy 0 < lo < hi, got [{lo}, {hi}]")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if branch_cap is not None and branch_cap < 1:
        raise ValueError("branch cap must be >= 1")
    if samples == 1:
        lams = [lo]
    else:
        step = (hi - lo) / (samples - 1)
        lams = [lo + k * step for k in range(samples)]
    pairs = [
        (i, j) for i, j in fam.pairs() if branch_cap is None or (i < branch_cap and j < branch_cap)
    ]
    for lam in lams:
        for i, j in pairs:
            yield lam, i, j, sigma_eval(fam, i, j, lam), fam.multiplicity(i, j)


def diagram_csv(fam: ProductFamily, lo, hi, samples: int, branch_cap: int | None = None) -> str:
    lines = ["lambda,i,j,sigma,multiplicity"]
    for lam, i, j, sigma, mult in diagram_rows(fam, lo, hi, samples, branch_cap):
        lines.append(f"{decimal12(lam)},{i},{j},{decimal12(sigma)},{mult}")
    return "\n".join(lines) + "\n"
