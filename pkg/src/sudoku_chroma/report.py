"""Per-instance verification records and their JSON/CSV projections."""

from __future__ import annotations

import csv
import enum
import io
import json
import time
from dataclasses import dataclass, field

from .coloring import chromatic_number, is_uniquely_extendable
from .errors import ImproperColoringError, SearchBudgetError
from .families import TheoremInstance
from .search import DEFAULT_MAX_ORDER, forced_sets, sudoku_number

__all__ = ["Match", "TheoremReport", "verify_instance", "reports_to_json", "reports_to_csv"]


class Match(str, enum.Enum):
    EXACT = "ExactMatch"
    UPPER_ONLY = "UpperOnly"
    MISMATCH = "Mismatch"


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    branch: str
    order: int
    chi: int
    formula_sn: int
    clue_size: int
    verified_upper: bool
    forced_lower_bound: int
    exact_sn: int | None
    match: Match
    notes: list[str] = field(default_factory=list)
    subsets_tried: int = 0
    colorings_tested: int = 0
    nodes: int = 0
    wall_time: float = 0.0

    @property
    def lower_bound_tight(self) -> bool:
        return self.verified_upper and self.forced_lower_bound == self.formula_sn

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "branch": self.branch,
            "order": self.order,
            "chi": self.chi,
            "formula_sn": self.formula_sn,
            "clue_size": self.clue_size,
            "verified_upper": self.verified_upper,
            "forced_lower_bound": self.forced_lower_bound,
            "lower_bound_tight": self.lower_bound_tight,
            "exact_sn": self.exact_sn,
            "match": self.match.value,
            "notes": self.notes,
            "subsets_tried": self.subsets_tried,
            "colorings_tested": self.colorings_tested,
            "nodes": self.nodes,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def verify_instance(
    instance: TheoremInstance,
    *,
    exact: bool = True,
    max_order: int = DEFAULT_MAX_ORDER,
    budget: float | None = 300.0,
) -> TheoremReport:
    """Check a family instance: the clue must be a Sudoku coloring of the
    predicted size, and, when the graph is small enough, exact search must
    reproduce the predicted value.

    ``ExactMatch`` is only reported with a completed exhaustive search.
    """
    start = time.monotonic()
    g = instance.graph
    chi = chromatic_number(g)
    notes = []
    try:
        unique = instance.clue.k == chi and is_uniquely_extendable(g, instance.clue)
    except ImproperColoringError as exc:
        unique = False
        notes.append(f"clue is improper: {exc}")
    if instance.clue.k != chi:
        notes.append(f"clue palette {instance.clue.k} differs from chi = {chi}")
    size_ok = len(instance.clue) == instance.formula_sn
    if not size_ok:
        notes.append(f"clue has {len(instance.clue)} vertices, formula predicts {instance.formula_sn}")
    elif not unique:
        notes.append("clue is not uniquely extendable")
    verified_upper = unique and size_ok
    lower = forced_sets(g, chi).lower_bound

    exact_sn = None
    stats = (0, 0, 0)
    if exact and g.order <= max_order:
        try:
            witness = sudoku_number(g, max_order=max_order, budget=budget)
            exact_sn = witness.sn
            cert = witness.certificate
            stats = (cert.subsets_tried, cert.colorings_tested, cert.nodes)
        except SearchBudgetError as exc:
            notes.append(f"exact search abandoned, degraded to UpperOnly: {exc}")
    elif exact:
        notes.append(f"order {g.order} above exact-search cap {max_order}")

    if exact_sn is not None:
        if exact_sn == instance.formula_sn and verified_upper:
            match = Match.EXACT
        else:
            match = Match.MISMATCH
            if exact_sn != instance.formula_sn:
                notes.append(f"exact search gives {exact_sn}, formula gives {instance.formula_sn}")
    elif verified_upper and lower <= instance.formula_sn:
        match = Match.UPPER_ONLY
        if lower == instance.formula_sn:
            notes.append("forced lower bound meets the verified clue size")
    else:
        match = Match.MISMATCH
        if lower > instance.formula_sn:
            notes.append(f"forced lower bound {lower} exceeds formula {instance.formula_sn}")

    return TheoremReport(
        theorem=instance.id.value,
        params=dict(instance.params),
        branch=instance.branch,
        order=g.order,
        chi=chi,
        formula_sn=instance.formula_sn,
        clue_size=len(instance.clue),
        verified_upper=verified_upper,
        forced_lower_bound=lower,
        exact_sn=exact_sn,
        match=match,
        notes=notes,
        subsets_tried=stats[0],
        colorings_tested=stats[1],
        nodes=stats[2],
        wall_time=time.monotonic() - start,
    )


def reports_to_json(reports: list[TheoremReport], timing: bool = True) -> str:
    return json.dumps([r.as_dict(timing) for r in reports], indent=2, sort_keys=True) + "\n"


_CSV_FIELDS = [
    "theorem", "params", "branch", "order", "chi", "formula_sn", "clue_size",
    "verified_upper", "forced_lower_bound", "exact_sn", "match", "notes",
]


def reports_to_csv(reports: list[TheoremReport], timing: bool = True) -> str:
    buf = io.StringIO()
    fields = _CSV_FIELDS + (["wall_time"] if timing else [])
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = r.as_dict(timing)
        row["params"] = ";".join(f"{k}={v}" for k, v in r.params.items())
        row["notes"] = "; ".join(r.notes)
        row["exact_sn"] = "" if r.exact_sn is None else r.exact_sn
        writer.writerow({k: row[k] for k in fields})
    return buf.getvalue()
