"""Combinatorial types of plane curves and blow-up bookkeeping.

Singularity kinds are the ones the degree-<=5 case analysis uses.  Each
kind fixes the local data the validator and the blow-up ledger need: how
many branches each incident component contributes, the pairwise local
intersection numbers, and the delta-invariant charged against the genus
bound (delta(A_p) = ceil(p/2); an ordinary m-fold self-point of a single
component costs m(m-1)/2).

Blow-up scripts are explicit fixtures: each step names a point; the ledger
applies the self-intersection drop m^2 per incident component, counts the
exceptional divisor, and rewrites the point into its successor (cusp ->
tangency with the new exceptional curve, tangency of order k -> order k-1,
order-2 tangency -> ordinary triple point with the exceptional curve,
nodes and ordinary multiple points -> resolved).  Anything outside that
vocabulary is rejected.
"""

from __future__ import annotations

import json
import re
from typing import Dict, List, Sequence, Tuple


# ---------------------------------------------------------------------------
# combinatorial types

# kind -> (number of incident components, per-branch multiplicities)
# (a multiplicity of 2 means the component has a 2-branch node / cusp there)
_KINDS: Dict[str, dict] = {
    # ordinary double point of the union; owners may coincide (self-node)
    "A1": {"owners": 2, "contact": 1},
    # cusp of one component
    "A2": {"owners": 1, "delta": 1},
    # simple tangency of two smooth branches
    "A3": {"owners": 2, "contact": 2},
    # higher cusp (e.g. the quintic with three A4 points)
    "A4": {"owners": 1, "delta": 2},
    # order-3 tangency of two smooth branches (inflectional tangency)
    "A5": {"owners": 2, "contact": 3},
    "A6": {"owners": 1, "delta": 3},
    # order-4 tangency (two conics meeting at a single point)
    "A7": {"owners": 2, "contact": 4},
    "A9": {"owners": 2, "contact": 5},
    # line through a node, transverse to both branches
    "A1T": {"owners": 2, "node_plus_line": True},
    # line through a node, tangent to one branch
    "A1*": {"owners": 2, "node_plus_line": True, "tangent": True},
    # line through a cusp, transverse / tangent
    "A2T": {"owners": 2, "cusp_plus_line": True},
    "A2*": {"owners": 2, "cusp_plus_line": True, "tangent": True},
    # tangency point of two components with a further component through it
    "A3T": {"owners": 3, "tangency_plus_line": True},
    # ordinary multiple points (pairwise transverse smooth branches)
    "O3": {"owners": 3, "ordinary": True},
    "O4": {"owners": 4, "ordinary": True},
    "O5": {"owners": 5, "ordinary": True},
}

_TANGENCY_MARKER = re.compile(r"^x([1-9])$")


class Singularity:
    """kind, a location id, and the owning components (one entry per
    branch, so a self-node lists its component twice)."""

    __slots__ = ("kind", "at", "owners")

    def __init__(self, kind: str, at: str, owners: Sequence[str]):
        marker = _TANGENCY_MARKER.match(kind)
        if marker:
            d = int(marker.group(1))
            kind = "A1" if d == 1 else f"A{2 * d - 1}"
        if kind not in _KINDS:
            raise ValueError(f"unsupported singularity kind {kind!r}")
        self.kind = kind
        self.at = at
        self.owners = tuple(owners)

    def __repr__(self) -> str:
        return f"Singularity({self.kind!r}, {self.at!r}, {self.owners!r})"


class CombinatorialType:
    __slots__ = ("components", "singularities")

    def __init__(
        self,
        components: Sequence[Tuple[str, int]],
        singularities: Sequence[Singularity] = (),
    ):
        comps = []
        seen = set()
        for cid, deg in components:
            if cid in seen:
                raise ValueError(f"duplicate component id {cid!r}")
            seen.add(cid)
            comps.append((cid, int(deg)))
        self.components = tuple(comps)
        self.singularities = tuple(singularities)

    @property
    def degrees(self) -> List[int]:
        return [d for _, d in self.components]

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def degree_of(self, cid: str) -> int:
        for c, d in self.components:
            if c == cid:
                return d
        raise KeyError(cid)

    def to_json(self) -> dict:
        return {
            "components": [{"id": c, "degree": d} for c, d in self.components],
            "singularities": [
                {"kind": s.kind, "at": s.at, "owners": list(s.owners)}
                for s in self.singularities
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CombinatorialType":
        comps = [(c["id"], c["degree"]) for c in data["components"]]
        sings = [
            Singularity(s["kind"], s.get("at", f"p{i}"), s["owners"])
            for i, s in enumerate(data["singularities"])
        ]
        return cls(comps, sings)

    def __repr__(self) -> str:
        return f"CombinatorialType(degrees={self.degrees}, singularities={len(self.singularities)})"


class TypeReport:
    __slots__ = ("violations",)

    def __init__(self, violations: Sequence[Tuple[str, object]]):
        self.violations = tuple(violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self) -> str:
        return f"TypeReport(ok={self.ok}, violations={list(self.violations)})"


def _pairwise_contacts(s: Singularity) -> Dict[Tuple[str, str], int]:
    """Local intersection numbers this singularity contributes to each
    unordered pair of distinct components."""
    info = _KINDS[s.kind]
    out: Dict[Tuple[str, str], int] = {}

    def add(a: str, b: str, m: int):
        if a == b:
            return
        key = (min(a, b), max(a, b))
        out[key] = out.get(key, 0) + m

    owners = s.owners
    if "contact" in info:
        add(owners[0], owners[1], info["contact"])
    elif "node_plus_line" in info:
        # owners = (noded component, line); node has multiplicity 2
        add(owners[0], owners[1], 3 if info.get("tangent") else 2)
    elif "cusp_plus_line" in info:
        add(owners[0], owners[1], 3 if info.get("tangent") else 2)
    elif "tangency_plus_line" in info:
        # owners = (P, Q, L): P and Q tangent, L transverse through the point
        add(owners[0], owners[1], 2)
        add(owners[0], owners[2], 1)
        add(owners[1], owners[2], 1)
    elif info.get("ordinary"):
        for i in range(len(owners)):
            for j in range(i + 1, len(owners)):
                add(owners[i], owners[j], 1)
    return out


def _self_delta(s: Singularity, cid: str) -> int:
    """Delta-invariant this singularity charges against component cid."""
    info = _KINDS[s.kind]
    if "delta" in info:
        return info["delta"] if s.owners[0] == cid else 0
    if "contact" in info:
        if s.owners[0] == cid and s.owners[1] == cid:
            return info["contact"]
        return 0
    if "node_plus_line" in info or "cusp_plus_line" in info:
        return 1 if s.owners[0] == cid else 0
    if info.get("ordinary"):
        k = sum(1 for o in s.owners if o == cid)
        return k * (k - 1) // 2
    return 0


def validate_combinatorial_type(ct: CombinatorialType) -> TypeReport:
    """Checks: degrees positive, total degree flagged above 5, singularity
    arities and owner references, pairwise Bezout sums, and the genus bound
    sum(delta) <= (d-1)(d-2)/2 per component."""
    violations: List[Tuple[str, object]] = []
    ids = {c for c, _ in ct.components}
    for c, d in ct.components:
        if d < 1:
            violations.append(("component degree must be positive", c))
    if ct.total_degree > 5:
        violations.append(("total degree exceeds 5", ct.total_degree))
    for s in ct.singularities:
        info = _KINDS[s.kind]
        if len(s.owners) != info["owners"]:
            violations.append(
                (f"{s.kind} expects {info['owners']} branches", (s.at, len(s.owners)))
            )
            continue
        for o in s.owners:
            if o not in ids:
                violations.append(("unknown component in singularity", (s.at, o)))
        if "delta" in info and len(set(s.owners)) != 1:
            violations.append((f"{s.kind} is a one-component singularity", s.at))
    if violations:
        return TypeReport(violations)
    # Bezout: for each pair of distinct components the listed local
    # intersection numbers must sum to the product of the degrees
    totals: Dict[Tuple[str, str], int] = {}
    for s in ct.singularities:
        for pair, m in _pairwise_contacts(s).items():
            totals[pair] = totals.get(pair, 0) + m
    comps = list(ct.components)
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            a, b = comps[i][0], comps[j][0]
            want = comps[i][1] * comps[j][1]
            got = totals.get((min(a, b), max(a, b)), 0)
            if got != want:
                violations.append(
                    ("pairwise intersection numbers violate Bezout", (a, b, got, want))
                )
    # genus bound per component
    for c, d in ct.components:
        delta = sum(_self_delta(s, c) for s in ct.singularities)
        bound = (d - 1) * (d - 2) // 2
        if delta > bound:
            violations.append(("genus bound violated", (c, delta, bound)))
    return TypeReport(violations)


# ---------------------------------------------------------------------------
# blow-up ledger

_BLOCKING_KINDS = {"cusp", "tangency", "node_tangent_line", "cusp_tangent_line"}
_POINT_KINDS = _BLOCKING_KINDS | {"node", "multiple"}


class Point:
    """A remembered point of the arrangement: parties are
    (component-or-exceptional id, local multiplicity) pairs."""

    __slots__ = ("id", "kind", "parties", "order")

    def __init__(self, pid: str, kind: str, parties: Sequence[Tuple[str, int]], order: int = 0):
        if kind not in _POINT_KINDS:
            raise ValueError(f"unsupported point kind {kind!r}")
        if kind == "tangency" and order < 2:
            raise ValueError("tangency order must be >= 2")
        for _, m in parties:
            if m not in (1, 2):
                raise ValueError("local multiplicities are 1 (smooth) or 2 (node/cusp)")
        mults = [m for _, m in parties]
        if kind in ("cusp", "cusp_tangent_line", "node_tangent_line"):
            if not mults or mults[0] != 2 or any(m != 1 for m in mults[1:]):
                raise ValueError(f"{kind} expects parties (C, 2) then lines (L, 1)")
        elif kind in ("tangency", "multiple"):
            if any(m != 1 for m in mults):
                raise ValueError(f"{kind} branches are smooth (m = 1)")
        elif kind == "node":
            if sum(1 for m in mults if m == 2) > 1:
                raise ValueError("a node has at most one doubled component")
        self.id = pid
        self.kind = kind
        self.parties = tuple((str(c), int(m)) for c, m in parties)
        self.order = order

    def __repr__(self) -> str:
        return f"Point({self.id!r}, {self.kind!r}, parties={self.parties}, order={self.order})"


class BlowUpLedger:
    """Immutable snapshot: per-component self-intersection, remaining
    points, and the exceptional divisor count."""

    __slots__ = ("self_int", "points", "exceptional", "component_ids")

    def __init__(
        self,
        self_int: Dict[str, int],
        points: Sequence[Point],
        exceptional: Sequence[str] = (),
    ):
        self.self_int = dict(self_int)
        self.points = tuple(points)
        self.exceptional = tuple(exceptional)
        self.component_ids = frozenset(self.self_int)

    @classmethod
    def from_type_data(
        cls, components: Sequence[Tuple[str, int]], points: Sequence[Point]
    ) -> "BlowUpLedger":
        return cls({c: d * d for c, d in components}, points)

    def live_ids(self) -> frozenset:
        return self.component_ids | frozenset(self.exceptional)

    def point(self, pid: str) -> Point:
        for pt in self.points:
            if pt.id == pid:
                return pt
        raise KeyError(f"no pending point {pid!r}")

    def node_count(self, cid: str) -> int:
        """Remaining self-nodes on a component (the r of the Nori test)."""
        return sum(
            1
            for pt in self.points
            if pt.kind == "node" and any(c == cid and m == 2 for c, m in pt.parties)
        )

    def is_smooth(self, cid: str) -> bool:
        for pt in self.points:
            if pt.kind in ("cusp", "cusp_tangent_line") and pt.parties[0][0] == cid:
                return False
            if pt.kind in ("node", "node_tangent_line") and any(
                c == cid and m == 2 for c, m in pt.parties
            ):
                return False
        return True

    def blocking_points(self) -> List[Point]:
        return [pt for pt in self.points if pt.kind in _BLOCKING_KINDS]

    def __repr__(self) -> str:
        return (
            f"BlowUpLedger(self_int={self.self_int}, pending={len(self.points)}, "
            f"exceptional={len(self.exceptional)})"
        )


def _successors(pt: Point, new_exceptional: str) -> List[Point]:
    """The local picture after blowing up at the point."""
    if pt.kind in ("node", "multiple"):
        return []
    if pt.kind == "node_tangent_line":
        # the two branches separate; the tangent line, the branch it was
        # tangent to, and the exceptional curve form an ordinary triple point
        comp, line = pt.parties[0][0], pt.parties[1][0]
        return [
            Point(pt.id + ".1", "multiple", [(comp, 1), (line, 1), (new_exceptional, 1)])
        ]
    if pt.kind in ("cusp", "cusp_tangent_line"):
        comp = pt.parties[0][0]
        return [
            Point(pt.id + ".1", "tangency", [(comp, 1), (new_exceptional, 1)], order=2)
        ]
    if pt.kind == "tangency":
        a, b = pt.parties[0][0], pt.parties[1][0]
        if pt.order > 2:
            return [Point(pt.id + ".1", "tangency", [(a, 1), (b, 1)], order=pt.order - 1)]
        return [Point(pt.id + ".1", "multiple", [(a, 1), (b, 1), (new_exceptional, 1)])]
    raise AssertionError(pt.kind)


def blow_up(ledger: BlowUpLedger, at) -> BlowUpLedger:
    """Blow up at a pending point (by id) or at a fresh smooth point given
    as (component, 1) parties.  Returns a new ledger; the input is unchanged."""
    new_e = f"E{len(ledger.exceptional) + 1}"
    if isinstance(at, str):
        pt = ledger.point(at)
        parties = pt.parties
        remaining = [p for p in ledger.points if p.id != at]
        successors = _successors(pt, new_e)
    else:
        parties = tuple((str(c), int(m)) for c, m in at)
        if not parties:
            raise ValueError("blow-up point must lie on at least one component")
        if any(m != 1 for _, m in parties):
            raise ValueError("free-form blow-ups are at smooth points (m = 1)")
        remaining = list(ledger.points)
        successors = []
    live = ledger.live_ids()
    for c, _ in parties:
        if c not in live:
            raise ValueError(f"blow-up point references unknown component {c!r}")
    self_int = dict(ledger.self_int)
    for c, m in parties:
        if c in self_int:  # exceptional curves are not tracked
            self_int[c] -= m * m
    return BlowUpLedger(self_int, remaining + successors, ledger.exceptional + (new_e,))


class NoriReport:
    """Per-component inequality C.C > 2 r(C) plus the hypothesis flags."""

    __slots__ = ("rows", "overall", "d_nodal_only", "d_e_transverse", "notes")

    def __init__(self, rows, overall, d_nodal_only, d_e_transverse, notes):
        self.rows = tuple(rows)
        self.overall = overall
        self.d_nodal_only = d_nodal_only
        self.d_e_transverse = d_e_transverse
        self.notes = tuple(notes)

    def __repr__(self) -> str:
        return f"NoriReport(overall={self.overall}, rows={list(self.rows)})"


def nori_check(ledger: BlowUpLedger, d_components: Sequence[str]) -> NoriReport:
    """Evaluate the criterion exactly.  Rejects unresolved ledgers: any
    remaining cusp or tangency means the crossings are not yet normal."""
    blocking = ledger.blocking_points()
    if blocking:
        raise ValueError(f"ledger not resolved; pending: {[p.id for p in blocking]}")
    rows = []
    overall = True
    for cid in d_components:
        if cid not in ledger.self_int:
            raise KeyError(f"unknown component {cid!r}")
        cc = ledger.self_int[cid]
        r = ledger.node_count(cid)
        ok = cc > 2 * r
        overall = overall and ok
        rows.append((cid, cc, 2 * r, ok))
    d_set = set(d_components)
    d_nodal_only = not any(
        pt.kind in ("cusp", "cusp_tangent_line", "node_tangent_line")
        and any(c in d_set for c, _ in pt.parties)
        for pt in ledger.points
    )
    d_e_transverse = not any(
        pt.kind == "tangency" and any(c in d_set for c, _ in pt.parties)
        for pt in ledger.points
    )
    notes = []
    multiples = [p for p in ledger.points if p.kind == "multiple"]
    if multiples:
        notes.append(
            "pairwise-transverse multiple points remain: "
            + ", ".join(p.id for p in multiples)
        )
    return NoriReport(rows, overall, d_nodal_only, d_e_transverse, notes)


# ---------------------------------------------------------------------------
# scripted replay

def run_script(script: dict) -> Tuple[BlowUpLedger, NoriReport]:
    """Execute a blow-up script (parsed JSON document): build the initial
    ledger, apply the steps, and run the final criterion check."""
    points = [
        Point(p["id"], p["kind"], [tuple(x) for x in p["parties"]], p.get("order", 0))
        for p in script.get("points", [])
    ]
    ledger = BlowUpLedger.from_type_data(
        [(c["id"], c["degree"]) for c in script["components"]], points
    )
    for step in script["steps"]:
        at = step["blow"]
        ledger = blow_up(ledger, at if isinstance(at, str) else [tuple(x) for x in at])
    report = nori_check(ledger, script["d"])
    return ledger, report


def load_script(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
