"""Induced edge labels and the cordiality verdict.

A labeling is any sequence (or {vertex: label} mapping) giving the label of
each vertex; it must be a bijection onto the structure's label set.
"""

from dataclasses import dataclass
from collections.abc import Mapping
import json
import math

from .errors import NonBijective, SizeMismatch

ZETA_ZERO = "ZetaZero"
ZETA_ONE = "ZetaOne"
NOT_COPRIME = "NotCoprime"


def induced_edge_label(struct, x, y):
    """(label, reason) for an edge whose endpoints carry labels x and y."""
    s = struct.combine(x, y)
    if math.gcd(s, struct.eta) != 1:
        return 0, NOT_COPRIME
    z = struct.zeta_value(s)
    return z, ZETA_ONE if z else ZETA_ZERO


@dataclass(frozen=True)
class EdgeLabel:
    u: int
    v: int
    star: int
    residue: int
    label: int
    reason: str


@dataclass(frozen=True)
class EdgeLabelReport:
    edges: tuple
    e0: int
    e1: int

    @property
    def cordial(self):
        return abs(self.e0 - self.e1) <= 1

    @property
    def labels(self):
        return tuple(e.label for e in self.edges)

    def to_json(self):
        return {
            "e0": self.e0,
            "e1": self.e1,
            "cordial": self.cordial,
            "edges": [
                {
                    "u": e.u,
                    "v": e.v,
                    "star": e.star,
                    "residue": e.residue,
                    "label": e.label,
                    "reason": e.reason,
                }
                for e in self.edges
            ],
        }


def is_cordial(report):
    return abs(report.e0 - report.e1) <= 1


def as_sequence(labeling, order=None):
    """Normalise a labeling to a tuple indexed by vertex."""
    if isinstance(labeling, Mapping):
        n = len(labeling) if order is None else order
        try:
            return tuple(labeling[v] for v in range(n))
        except KeyError as exc:
            raise NonBijective(f"no label for vertex {exc.args[0]}") from None
    return tuple(labeling)


def check_bijective(labels, label_set):
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        dup = sorted({x for x in labels if labels.count(x) > 1})
        raise NonBijective(f"duplicate labels {dup}")
    if set(labels) != set(label_set):
        missing = sorted(set(label_set) - set(labels))
        extra = sorted(set(labels) - set(label_set))
        raise NonBijective(f"labels do not match S (missing {missing}, extra {extra})")


def verify(graph, labeling, struct):
    """Edge-by-edge report for ``labeling`` of ``graph`` under ``struct``.

    If the structure has no label set, the labeling's own image is used.
    Edges are reported in lexicographic (u, v) order.
    """
    f = as_sequence(labeling, graph.order)
    if len(f) != graph.order:
        raise SizeMismatch(f"{len(f)} labels for a graph of order {graph.order}")
    label_set = struct.label_set if struct.label_set is not None else f
    if len(label_set) != graph.order:
        raise SizeMismatch(f"|S| = {len(label_set)} but the graph has order {graph.order}")
    check_bijective(f, label_set)
    rows = []
    e0 = e1 = 0
    for u, v in graph.edges:
        s = struct.combine(f[u], f[v])
        label, reason = induced_edge_label(struct, f[u], f[v])
        rows.append(EdgeLabel(u, v, s, s % struct.eta, label, reason))
        if label:
            e1 += 1
        else:
            e0 += 1
    return EdgeLabelReport(tuple(rows), e0, e1)


def labeling_to_json(labeling):
    f = as_sequence(labeling)
    return {"labels": {str(v): x for v, x in enumerate(f)}}


def labeling_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    raw = data.get("labels", data)
    if isinstance(raw, list):
        return tuple(int(x) for x in raw)
    mapping = {int(k): int(v) for k, v in raw.items()}
    return as_sequence(mapping, len(mapping))
