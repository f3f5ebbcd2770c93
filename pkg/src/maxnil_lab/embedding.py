"""Combinatorial plane embeddings and a two-pole separation test.

A rotation system records, for every vertex of an embedded planar
graph, the clockwise cyclic order of its neighbors. Faces are orbits
of directed edges under "arrive at v, leave along the neighbor that
follows the arrival vertex clockwise", so each directed edge lies on
exactly one face and bridges show up twice on the same walk. Euler's
relation, checked per connected component, validates the structure.

Sides of a cycle are computed without coordinates. Two faces lie in
the same region of a cycle C exactly when they share an edge off C;
flooding from the designated outer face yields the outside region, the
rest is the inside, and a vertex inherits the region of the faces
around it. Vertices of other components count as outside.

The separation test takes a graph with two distinguished nonadjacent
poles u and v, an embedding of everything else, and asks that every
cycle C own a side X with X together with C meeting every u-v path.
A graph passing the test embeds linklessly: u goes above the plane, v
below, straight edges down to their neighbors, and every two-component
link is then split by panels. The test is sufficient, not necessary,
so a False is silence rather than a linking certificate.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import GraphError, UndecidedError
from .graph import Edge, Graph, delete_vertices, deletion_mapping

__all__ = [
    "RotationSystem", "CycleSide", "is_planar", "planar_embedding",
    "enumerate_cycles", "cycle_sides", "lemma21_condition",
    "certify_nil_via_lemma21", "rotation_to_text", "rotation_from_text",
]

# simple-cycle enumeration cap; overflow raises UndecidedError
CYCLE_CAP = 10 ** 6


class RotationSystem:
    """Clockwise neighbor orders plus the face structure they induce.

    ``rotation`` maps every vertex to a tuple holding each neighbor
    exactly once; ``faces`` are tuples of directed edges; ``outer_face``
    indexes the face drawn unbounded. Components other than the outer
    face's get their own outer face, chosen as the face at their
    smallest directed edge.
    """

    def __init__(self, host: Graph, rotation: Dict[int, Sequence[int]],
                 outer_face: Optional[int] = None):
        self.host = host
        rot = {}
        for v in range(host.n):
            order = tuple(rotation.get(v, ()))
            if sorted(order) != sorted(host.neighbors(v)):
                raise GraphError(
                    f"rotation at vertex {v} is not a permutation of its neighbors")
            rot[v] = order
        self.rotation = rot
        self._succ = {}
        for v, order in rot.items():
            deg = len(order)
            for i, u in enumerate(order):
                self._succ[(v, u)] = order[(i + 1) % deg]
        self.faces = self._trace_faces()
        self._face_of_dart = {}
        for fi, face in enumerate(self.faces):
            for dart in face:
                self._face_of_dart[dart] = fi
        self._check_euler()
        if outer_face is None:
            outer_face = self._face_of_dart[min(self._face_of_dart)] if self.faces else 0
        if self.faces and not 0 <= outer_face < len(self.faces):
            raise GraphError(f"outer face {outer_face} out of range")
        self.outer_face = outer_face

    def _trace_faces(self) -> Tuple[Tuple[Edge, ...], ...]:
        darts = [(u, v) for (u, v) in self.host.edges] + \
                [(v, u) for (u, v) in self.host.edges]
        left = set(darts)
        faces = []
        for start in sorted(darts):
            if start not in left:
                continue
            walk = []
            cur = start
            while cur in left:
                left.remove(cur)
                walk.append(cur)
                u, v = cur
                cur = (v, self._succ[(v, u)])
            if cur != start:
                raise GraphError("face walk does not close; rotation is inconsistent")
            faces.append(tuple(walk))
        return tuple(faces)

    def _check_euler(self) -> None:
        comp_of = {}
        for v in range(self.host.n):
            if v in comp_of:
                continue
            comp_of[v] = v
            stack = [v]
            while stack:
                w = stack.pop()
                for x in self.host.neighbors(w):
                    if x not in comp_of:
                        comp_of[x] = v
                        stack.append(x)
        counts: Dict[int, List[int]] = {}
        for v in range(self.host.n):
            counts.setdefault(comp_of[v], [0, 0, 0])[0] += 1
        for (u, v) in self.host.edges:
            counts[comp_of[u]][1] += 1
        for face in self.faces:
            counts[comp_of[face[0][0]]][2] += 1
        for root, (nv, ne, nf) in counts.items():
            if ne == 0:
                continue
            if nv - ne + nf != 2:
                raise GraphError(
                    f"component of vertex {root} fails the Euler check: "
                    f"{nv} - {ne} + {nf} != 2")
        self._comp_of = comp_of

    def component_outer_face(self, v: int) -> int:
        """The outer face used for vertex v's component."""
        root = self._comp_of[v]
        if self.faces and self._comp_of[self.faces[self.outer_face][0][0]] == root:
            return self.outer_face
        best = None
        for dart, fi in self._face_of_dart.items():
            if self._comp_of[dart[0]] == root and (best is None or dart < best[0]):
                best = (dart, fi)
        if best is None:
            raise GraphError(f"vertex {v} lies in a component with no faces")
        return best[1]


class CycleSide:
    """The two vertex regions a cycle cuts out of an embedding."""

    def __init__(self, cycle: Tuple[int, ...], inside: frozenset, outside: frozenset):
        self.cycle = cycle
        self.inside = inside
        self.outside = outside

    def __repr__(self) -> str:
        return (f"CycleSide(cycle={self.cycle}, inside={sorted(self.inside)}, "
                f"outside={sorted(self.outside)})")


def _nx_graph(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(_nx_graph(g), counterexample=False)[0]


def planar_embedding(g: Graph) -> Optional[RotationSystem]:
    """A rotation system for g from the planarity algorithm, or None."""
    ok, emb = nx.check_planarity(_nx_graph(g), counterexample=False)
    if not ok:
        return None
    rotation = {v: tuple(emb.neighbors_cw_order(v)) for v in range(g.n)}
    return RotationSystem(g, rotation)


def enumerate_cycles(g: Graph, cap: int = CYCLE_CAP) -> Tuple[Tuple[int, ...], ...]:
    """Every simple cycle, once up to rotation and reflection.

    Cycles come out with their smallest vertex first and the smaller of
    the two possible direction-defining neighbors second, in ascending
    DFS order. More than ``cap`` cycles raises UndecidedError.
    """
    out = []
    path: List[int] = []
    on_path = set()

    def grow(root: int, last: int) -> None:
        for w in sorted(g.neighbors(last)):
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
                if len(out) > cap:
                    raise UndecidedError(
                        f"more than {cap} cycles; raise the cap to enumerate")
            elif w > root and w not in on_path:
                path.append(w)
                on_path.add(w)
                grow(root, w)
                on_path.remove(w)
                path.pop()

    for root in range(g.n):
        path = [root]
        on_path = {root}
        grow(root, root)
    return tuple(out)


def _require_cycle(g: Graph, cycle: Sequence[int]) -> Tuple[int, ...]:
    cyc = tuple(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise GraphError(f"{cyc} is not a simple cycle")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not g.has_edge(a, b):
            raise GraphError(f"{cyc} is not a cycle: missing edge ({a}, {b})")
    return cyc


def cycle_sides(emb: RotationSystem, cycle: Sequence[int]) -> CycleSide:
    """Split the embedded vertices into the two regions of a cycle.

    The outside is the region holding the component's outer face, and
    vertices of other components always land outside.
    """
    g = emb.host
    cyc = _require_cycle(g, cycle)
    cedges = set()
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        cedges.add((a, b) if a < b else (b, a))
    root = emb._comp_of[cyc[0]]
    comp_faces = [fi for fi, face in enumerate(emb.faces)
                  if emb._comp_of[face[0][0]] == root]
    # regions: faces of the cycle's component, fused across non-cycle edges
    region = {fi: None for fi in comp_faces}
    outer = emb.component_outer_face(cyc[0])
    for seed, tag in ((outer, "out"), (None, "in")):
        if seed is None:
            rest = [fi for fi in comp_faces if region[fi] is None]
            if not rest:
                break
            seed = rest[0]
        stack = [seed]
        region[seed] = tag
        while stack:
            fi = stack.pop()
            for (u, v) in emb.faces[fi]:
                e = (u, v) if u < v else (v, u)
                if e in cedges:
                    continue
                twin = emb._face_of_dart[(v, u)]
                if region[twin] is None:
                    region[twin] = tag
                    stack.append(twin)
    if any(tag is None for tag in region.values()):
        raise GraphError(f"{cyc} does not cut its component into two regions")
    inside, outside = set(), set()
    cset = set(cyc)
    for v in range(g.n):
        if v in cset:
            continue
        if emb._comp_of[v] != root or g.degree(v) == 0:
            outside.add(v)
            continue
        w = min(g.neighbors(v))
        tag = region[emb._face_of_dart[(v, w)]]
        (outside if tag == "out" else inside).add(v)
    return CycleSide(cyc, frozenset(inside), frozenset(outside))


def _separates(g: Graph, u: int, v: int, removed: set) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        for x in g.neighbors(w):
            if x == v:
                return False
            if x not in removed and x not in seen:
                seen.add(x)
                stack.append(x)
    return True


def lemma21_condition(g: Graph, u: int, v: int, emb: RotationSystem) -> bool:
    """Every cycle owns a side whose closure meets every u-v path.

    ``emb`` embeds g minus the poles, in deleted labels. True means
    placing u above the drawing and v below yields a linkless
    embedding; False only means this drawing gives no certificate.
    """
    if g.has_edge(u, v):
        raise GraphError("the poles must be nonadjacent")
    rest = delete_vertices(g, [u, v])
    if emb.host != rest:
        raise GraphError("embedding host is not the graph minus the poles")
    mapping = deletion_mapping(g.n, [u, v])
    inv = {new: old for old, new in mapping.items()}
    for cyc in enumerate_cycles(rest):
        sides = cycle_sides(emb, cyc)
        closure = {inv[w] for w in cyc}
        ok = False
        for x in (sides.inside, sides.outside):
            removed = closure | {inv[w] for w in x}
            if _separates(g, u, v, removed):
                ok = True
                break
        if not ok:
            return False
    return True


def certify_nil_via_lemma21(g: Graph, u: int, v: int,
                            emb: Optional[RotationSystem] = None) -> bool:
    """Try to certify linkless embeddability from a planar drawing.

    Uses the supplied rotation system, else the canonical embedding of
    g minus the poles. False when that graph is not planar or when the
    drawing at hand fails the cycle condition.
    """
    if g.has_edge(u, v):
        raise GraphError("the poles must be nonadjacent")
    if emb is None:
        emb = planar_embedding(delete_vertices(g, [u, v]))
        if emb is None:
            return False
    return lemma21_condition(g, u, v, emb)


def rotation_to_text(emb: RotationSystem) -> str:
    """One line per vertex: ``v: clockwise neighbors``."""
    lines = []
    for v in range(emb.host.n):
        nbrs = " ".join(str(w) for w in emb.rotation[v])
        lines.append(f"{v}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"


def rotation_from_text(host: Graph, text: str) -> RotationSystem:
    rotation: Dict[int, Tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, tail = line.partition(":")
        try:
            v = int(head)
            order = tuple(int(tok) for tok in tail.split())
        except ValueError as exc:
            raise GraphError(f"rotation line {lineno} is malformed: {raw!r}") from exc
        if v in rotation:
            raise GraphError(f"vertex {v} appears twice (line {lineno})")
        rotation[v] = order
    return RotationSystem(host, rotation)
