"""Corner elimination, dismantling certificates and their verification."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph, HypergraphError, Vertex, dot_delete, is_connected


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class DismantlingCertificate:
    """Elimination order plus, for every vertex but the last, the cover used at its step."""

    ordering: tuple[Vertex, ...]
    covers: tuple[Vertex, ...]

    def __post_init__(self):
        if len(self.ordering) != len(self.covers) + 1:
            raise CertificateError("need exactly one cover per vertex except the last")
        if len(set(self.ordering)) != len(self.ordering):
            raise CertificateError("ordering repeats a vertex")
        pos = {v: i for i, v in enumerate(self.ordering)}
        for i, u in enumerate(self.covers):
            if pos.get(u, -1) <= i:
                raise CertificateError(f"cover {u!r} of {self.ordering[i]!r} is not eliminated later")

    def to_json(self) -> list[dict]:
        rows = [{"vertex": v, "cover": u} for v, u in zip(self.ordering, self.covers)]
        rows.append({"vertex": self.ordering[-1], "cover": None})
        return rows

    @classmethod
    def from_json(cls, rows: list[dict]) -> DismantlingCertificate:
        if not rows or rows[-1].get("cover") is not None:
            raise CertificateError("final entry must have a null cover")
        try:
            ordering = tuple(r["vertex"] for r in rows)
            covers = tuple(r["cover"] for r in rows[:-1])
        except (KeyError, TypeError) as exc:
            raise CertificateError(f"malformed certificate row: {exc}") from None
        if any(c is None for c in covers):
            raise CertificateError("only the final entry may have a null cover")
        return cls(ordering, covers)


def find_corner(h: Hypergraph) -> tuple[Vertex, Vertex] | None:
    """Least corner in vertex order together with its least cover."""
    if len(h.vertices) < 2:
        raise HypergraphError("corners need at least two vertices")
    for x in h.vertices:
        nx_ = h.closed(x)
        for u in h.vertices:
            if u != x and nx_ <= h.closed(u):
                return x, u
    return None


def dismantling_order(h: Hypergraph) -> DismantlingCertificate | None:
    """Greedy least-corner elimination; None iff ``h`` is not dismantlable.

    Removing any corner preserves cop-win status, so the greedy loop never
    needs to backtrack.
    """
    if not is_connected(h):
        raise HypergraphError("dismantling_order requires a connected hypergraph")
    order, covers = [], []
    cur = h
    while len(cur.vertices) > 1:
        found = find_corner(cur)
        if found is None:
            return None
        x, u = found
        order.append(x)
        covers.append(u)
        cur = dot_delete(cur, x)
    order.append(cur.vertices[0])
    return DismantlingCertificate(tuple(order), tuple(covers))


def verify_certificate(h: Hypergraph, cert: DismantlingCertificate) -> bool:
    if len(cert.ordering) != len(h.vertices) or set(cert.ordering) != set(h.vertices):
        raise CertificateError("ordering is not a permutation of the vertex set")
    cur = h
    for x, u in zip(cert.ordering, cert.covers):
        if not cur.closed(x) <= cur.closed(u):
            return False
        cur = dot_delete(cur, x)
    return True


def is_dismantlable(h: Hypergraph) -> bool:
    return dismantling_order(h) is not None
