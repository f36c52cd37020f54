"""Cross-check of the combinatorial formulas against explicit linear algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from ..dimension import Dimension, dim_max
from ..homdim import (
    gldim_via_polygons,
    gldim_via_threads,
    gorenstein_projectives,
    gp_count_via_ag,
    injdim,
    is_gldim_finite_via_ag,
    pd_injective,
    pd_injective_formula,
    pd_simple,
)
from ..presentation import GentlePresentation, full_relation_cycles, opposite
from ..strings import (
    dim_vector,
    simple_string,
    string_of_injective,
    string_of_projective,
    syzygy_sequence,
)
from ..surface import ag_invariant
from ..threads import forbidden_threads, permitted_threads
from .reps import (
    LinearRep,
    linear_resolution,
    nonzero_paths,
    rep_of_injective,
    rep_of_projective,
    rep_of_simple,
    rep_of_string,
)

__all__ = ["Check", "OracleReport", "check_equalities", "linear_pd_from_steps"]


@dataclass(frozen=True)
class Check:
    name: str
    combinatorial: object
    oracle: object

    @property
    def ok(self) -> bool:
        return self.combinatorial == self.oracle

    def __str__(self) -> str:
        flag = "ok  " if self.ok else "FAIL"
        return f"{flag} {self.name}: {self.combinatorial} vs {self.oracle}"


@dataclass
class OracleReport:
    field: int
    cap: int
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, combinatorial, oracle) -> None:
        self.checks.append(Check(name, combinatorial, oracle))

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "cap": self.cap,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "combinatorial": str(c.combinatorial), "oracle": str(c.oracle), "ok": c.ok}
                for c in self.checks
            ],
        }


def linear_pd_from_steps(steps, cap: int) -> Dimension:
    if not steps:
        return Dimension(0)
    if len(steps) == cap and not steps[-1].kernel.is_zero():
        from ..dimension import INFINITY

        return INFINITY
    return Dimension(len(steps) - 1)


def _compare_resolution(report: OracleReport, label: str, A: GentlePresentation,
                        word, rep: LinearRep, cap: int) -> Dimension:
    steps = linear_resolution(rep, cap)
    combinatorial = syzygy_sequence(A, word, cap)
    for k, step in enumerate(steps, start=1):
        expected = dim_vector(A, combinatorial[k]) if k < len(combinatorial) else dim_vector(A, [])
        report.add(f"dim Omega^{k} {label}", expected, step.kernel.dim_vector())
    return linear_pd_from_steps(steps, cap)


def check_equalities(A: GentlePresentation, p: int = 2, cap: Optional[int] = None,
                     syzygies: bool = True) -> OracleReport:
    """Compare every formula with the linear-algebra computation.

    ``cap`` defaults to the self-injective dimension plus one. With
    ``syzygies`` the dimension vectors of the string syzygies are compared
    with the kernels at each step.
    """
    inj = injdim(A)
    cap = int(inj) + 1 if cap is None else cap
    report = OracleReport(p, cap)
    paths = nonzero_paths(A)

    simple_pds = []
    inj_pds = []
    for v in A.vertices:
        Pv = rep_of_projective(A, v, p, paths)
        report.add(f"dim P({v}) as string", dim_vector(A, string_of_projective(A, v)), Pv.dim_vector())
        Iv = rep_of_injective(A, v, p)
        Iw = string_of_injective(A, v)
        report.add(f"dim I({v}) as string", dim_vector(A, Iw), Iv.dim_vector())
        report.add(f"relations on I({v})", True, Iv.satisfies_relations() and rep_of_string(A, Iw, p).satisfies_relations())

        if syzygies:
            lin_s = _compare_resolution(report, f"S({v})", A, simple_string(A, v), rep_of_simple(A, v, p), cap)
            lin_i = _compare_resolution(report, f"I({v})", A, Iw, Iv, cap)
        else:
            lin_s = linear_pd_from_steps(linear_resolution(rep_of_simple(A, v, p), cap), cap)
            lin_i = linear_pd_from_steps(linear_resolution(Iv, cap), cap)
        simple_pds.append(lin_s)
        inj_pds.append(lin_i)
        report.add(f"pd S({v})", pd_simple(A, v), lin_s)
        report.add(f"pd I({v})", pd_injective(A, v, cap), lin_i)
        report.add(f"pd I({v}) closed form", pd_injective_formula(A, v), lin_i)

    gl_poly = gldim_via_polygons(A)
    report.add("gl.dim polygons vs threads", gl_poly, gldim_via_threads(A))
    report.add("gl.dim vs max pd S(v)", gl_poly, dim_max(simple_pds))
    report.add("inj.dim vs max pd I(v)", inj, dim_max(inj_pds))
    report.add("inj.dim vs opposite", inj, injdim(opposite(A)))

    ag = ag_invariant(A)
    cycles = full_relation_cycles(A)
    report.add("gl.dim finite vs AG", gl_poly.is_finite, is_gldim_finite_via_ag(A))
    report.add("gl.dim finite vs no full cycle", gl_poly.is_finite, not cycles)
    gp = gorenstein_projectives(A)
    report.add("GP count vs AG", len(gp.nonprojectives), gp_count_via_ag(A))
    report.add("GP count vs arrows on full cycles", len(gp.nonprojectives), sum(len(c) for c in cycles))
    finite, _ = forbidden_threads(A)
    n_perm = len(permitted_threads(A))
    report.add("permitted vs finite forbidden threads", n_perm, len(finite))
    report.add("permitted threads vs sum of m", n_perm, sum(m for m, _ in ag.pairs))
    return report
