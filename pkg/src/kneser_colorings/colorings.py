"""Colorings as certificates: representation, verification, condition (C).

A coloring is stored as its color classes (class i holds the vertices of
color i+1).  Verification is exhaustive and reports the first witness of
every violated property, in canonical vertex order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import CoverageError

ALL_CHECKS = frozenset({"proper", "complete", "grundy", "dominating"})


@dataclass(frozen=True)
class Coloring:
    """graph_id identifies the host graph; classes are tuples of vertex labels."""
    graph_id: tuple
    classes: tuple

    @property
    def color_count(self) -> int:
        return len(self.classes)

    def color_of(self) -> dict:
        out = {}
        for ci, cls in enumerate(self.classes):
            for v in cls:
                out[v] = ci + 1
        return out

    def class_histogram(self) -> dict:
        hist = {}
        for cls in self.classes:
            hist[len(cls)] = hist.get(len(cls), 0) + 1
        return hist

    def to_json(self) -> str:
        kind = self.graph_id[0]
        if kind == "kneser":
            doc = {"n": self.graph_id[1], "k": self.graph_id[2],
                   "classes": [[list(v) for v in cls] for cls in self.classes]}
        elif kind == "dv":
            doc = {"points": [list(p) for p in self.graph_id[1]], "k": self.graph_id[2],
                   "classes": [[list(v) for v in cls] for cls in self.classes]}
        elif kind == "matching":
            doc = {"matching_size": self.graph_id[1],
                   "classes": [list(cls) for cls in self.classes]}
        else:
            raise ValueError(f"unknown graph kind {kind}")
        return json.dumps(doc, sort_keys=True)


def coloring_from_json(text: str) -> Coloring:
    doc = json.loads(text)
    if "matching_size" in doc:
        classes = tuple(tuple(int(v) for v in cls) for cls in doc["classes"])
        return Coloring(("matching", int(doc["matching_size"])), classes)
    classes = tuple(tuple(tuple(int(x) for x in v) for v in cls) for cls in doc["classes"])
    if "points" in doc:
        pts = tuple(tuple(int(x) for x in p) for p in doc["points"])
        return Coloring(("dv", pts, int(doc["k"])), classes)
    return Coloring(("kneser", int(doc["n"]), int(doc["k"])), classes)


@dataclass
class VerificationReport:
    color_count: int
    proper: bool | None = None
    complete: bool | None = None
    grundy: bool | None = None
    dominating: bool | None = None
    witnesses: dict = field(default_factory=dict)
    class_histogram: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(v is not False for v in
                   (self.proper, self.complete, self.grundy, self.dominating))

    def as_dict(self):
        return {"color_count": self.color_count, "proper": self.proper,
                "complete": self.complete, "grundy": self.grundy,
                "dominating": self.dominating,
                "witnesses": {k: list(map(_jsonable, w)) if isinstance(w, tuple) else w
                              for k, w in self.witnesses.items()},
                "class_histogram": {str(k): v for k, v in sorted(self.class_histogram.items())}}


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def _class_index_by_vertex(g, coloring: Coloring):
    cls_of = [None] * g.vertex_count
    for ci, cls in enumerate(coloring.classes):
        if not cls:
            raise CoverageError(f"class {ci + 1} is empty")
        for v in cls:
            i = g.index(v)
            if cls_of[i] is not None:
                raise CoverageError(f"vertex {v} appears in two classes")
            cls_of[i] = ci
    missing = [g.vertices[i] for i, c in enumerate(cls_of) if c is None]
    if missing:
        raise CoverageError(f"classes do not cover vertices, first missing {missing[0]}")
    return cls_of


def verify_coloring(g, coloring: Coloring, checks=ALL_CHECKS) -> VerificationReport:
    """Exhaustively verify the requested properties of a coloring on g.

    g is any graph object exposing vertices, vertex_count, index() and
    edges(); completeness runs as one scan over the edge list marking seen
    color pairs (O(E + l^2)), the other checks are per-vertex.
    """
    checks = frozenset(checks)
    unknown = checks - ALL_CHECKS
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    cls_of = _class_index_by_vertex(g, coloring)
    l = coloring.color_count
    rep = VerificationReport(color_count=l, class_histogram=coloring.class_histogram())

    need_edges = checks & {"proper", "complete", "grundy", "dominating"}
    proper_witness = None
    seen = [0] * l  # bitmask per class of classes seen across an edge
    nbr_colors = None
    if "grundy" in checks or "dominating" in checks:
        nbr_colors = [0] * g.vertex_count
    if need_edges:
        for i, j in g.edges():
            ci, cj = cls_of[i], cls_of[j]
            if ci == cj:
                if proper_witness is None:
                    proper_witness = (g.vertices[i], g.vertices[j])
            else:
                seen[ci] |= 1 << cj
                seen[cj] |= 1 << ci
            if nbr_colors is not None:
                nbr_colors[i] |= 1 << cj
                nbr_colors[j] |= 1 << ci

    if "proper" in checks:
        rep.proper = proper_witness is None
        if proper_witness:
            rep.witnesses["proper"] = proper_witness

    if "complete" in checks:
        rep.complete = True
        for ci in range(l):
            for cj in range(ci + 1, l):
                if not (seen[ci] >> cj) & 1:
                    rep.complete = False
                    rep.witnesses["complete"] = (ci + 1, cj + 1)
                    break
            if not rep.complete:
                break

    if "grundy" in checks:
        ok = proper_witness is None
        if not ok:
            rep.witnesses.setdefault("grundy", proper_witness)
        else:
            for i in range(g.vertex_count):
                ci = cls_of[i]
                want = (1 << ci) - 1  # all colors below ci
                if nbr_colors[i] & want != want:
                    missing = next(b for b in range(ci) if not (nbr_colors[i] >> b) & 1)
                    rep.witnesses["grundy"] = (g.vertices[i], missing + 1)
                    ok = False
                    break
        rep.grundy = ok

    if "dominating" in checks:
        rep.dominating = True
        full = (1 << l) - 1
        for ci in range(l):
            want = full & ~(1 << ci)
            if not any(nbr_colors[g.index(v)] & want == want for v in coloring.classes[ci]):
                rep.dominating = False
                rep.witnesses["dominating"] = ci + 1
                break

    return rep


@dataclass
class ConditionCReport:
    """Accounting behind the alpha(K(n,2)) upper bound.

    Singleton classes must form a matching of K_n, size-2 classes must be
    P_3 subgraphs of K_n, and at most one vertex of K_n may be exceptional
    (in no singleton and not the center of any P_3).
    """
    sizes_ok: bool
    p3_ok: bool
    singleton_points: tuple
    centers: tuple
    exceptional: tuple
    problems: list

    @property
    def passes(self) -> bool:
        return self.sizes_ok and self.p3_ok and len(self.exceptional) <= 1

    def as_dict(self):
        return {"sizes_ok": self.sizes_ok, "p3_ok": self.p3_ok,
                "singleton_points": list(self.singleton_points),
                "centers": list(self.centers),
                "exceptional_count": len(self.exceptional),
                "exceptional": list(self.exceptional),
                "problems": self.problems, "passes": self.passes}


def check_condition_C(coloring: Coloring) -> ConditionCReport:
    if coloring.graph_id[0] != "kneser" or coloring.graph_id[2] != 2:
        raise ValueError("condition (C) applies to colorings of K(n,2)")
    n = coloring.graph_id[1]
    problems = []
    sizes_ok = True
    p3_ok = True
    singleton_pts = set()
    centers = []
    for ci, cls in enumerate(coloring.classes):
        if len(cls) > 3:
            sizes_ok = False
            problems.append(f"class {ci + 1} has size {len(cls)}")
        if len(cls) == 1:
            for p in cls[0]:
                if p in singleton_pts:
                    problems.append(f"K_n vertex {p} shared by two singleton classes")
                singleton_pts.add(p)
        elif len(cls) == 2:
            shared = set(cls[0]) & set(cls[1])
            if len(shared) != 1:
                p3_ok = False
                problems.append(f"class {ci + 1} {cls} is not a P_3 of K_n")
            else:
                centers.append(shared.pop())
    involved = singleton_pts | set(centers)
    exceptional = tuple(p for p in range(1, n + 1) if p not in involved)
    return ConditionCReport(sizes_ok=sizes_ok, p3_ok=p3_ok,
                            singleton_points=tuple(sorted(singleton_pts)),
                            centers=tuple(sorted(centers)),
                            exceptional=exceptional, problems=problems)
