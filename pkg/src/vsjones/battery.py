"""Invariance battery: every invariant must agree across every move."""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, link_components, validate
from .evaluator import r_poly
from .fixtures import BUILTIN, random_diagram
from .laurent import eval_h1
from .moves import MOVE_NAMES, builtin_fixture_pairs, clasp_sites, kink_sites


@dataclass
class MoveReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures


def compare(before: Diagram, after: Diagram) -> list[str]:
    """Names of the invariants that differ between the two diagrams."""
    validate(after)
    r1, r2 = r_poly(before), r_poly(after)
    bad = []
    if eval_h1(r1) != eval_h1(r2):
        bad.append("bracket")
    if r1 != r2:
        bad.append("R")
    if r1.odd != r2.odd:
        bad.append("phi")
    if r1.even != r2.even:
        bad.append("psi")
    if link_components(before) != link_components(after):
        bad.append("k")
    return bad


def local_cases(diagrams: dict[str, Diagram]):
    for label, d in diagrams.items():
        for site, move, d2 in kink_sites(d):
            yield move, f"{label}:{site}", d, d2
        for site, move, d2 in clasp_sites(d):
            yield move, f"{label}:{site}", d, d2


def run_battery(scope: str = "all", seed: int = 0, n_random: int = 5) -> dict[str, MoveReport]:
    if scope != "all" and scope not in MOVE_NAMES:
        raise ValueError(f"unknown move {scope!r}; choose 'all' or one of {', '.join(MOVE_NAMES)}")
    wanted = MOVE_NAMES if scope == "all" else (scope,)
    reports = {m: MoveReport(m) for m in wanted}

    for pair in builtin_fixture_pairs():
        if pair.name in reports:
            rep = reports[pair.name]
            rep.checked += 1
            bad = compare(pair.before, pair.after)
            if bad:
                rep.failures.append(f"{pair.note}: {', '.join(bad)} changed")

    if any(m in reports for m in ("R1", "R2", "V1", "V2")):
        sources = dict(BUILTIN)
        for i in range(n_random):
            sources[f"random[{seed + i}]"] = random_diagram(seed + i, max_cs=4, max_v=3)
        for move, label, d, d2 in local_cases(sources):
            if move in reports:
                rep = reports[move]
                rep.checked += 1
                bad = compare(d, d2)
                if bad:
                    rep.failures.append(f"{label}: {', '.join(bad)} changed")
    return reports
