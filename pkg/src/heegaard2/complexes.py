"""Finite labeled simplicial 1-/2-complexes and the tree models built on
them: the bipartite black/white disk-and-sphere tree, the sphere-complex
model obtained by grafting odd Farey trees, and the cone model for the
case with a reducing disk.

A complex stores vertices (id, kind, label), an edge set and an optional
triangle layer.  Complexes are immutable after construction and every
operation here is pure.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable

KIND_BLACK = "black"  # disk vertices of the subdivided tree
KIND_WHITE = "white"  # sphere vertices (valence 2 inside, 1 on the boundary)
KIND_APEX = "apex"  # the reducing disk in cone models
KIND_SLOPE = "slope"  # slope vertices of Farey-derived complexes

KINDS = (KIND_BLACK, KIND_WHITE, KIND_APEX, KIND_SLOPE)


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str
    label: str


@dataclass(frozen=True)
class Complex:
    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[int, int]]
    triangles: frozenset[tuple[int, int, int]] = frozenset()

    def __post_init__(self):
        ids = [v.id for v in self.vertices]
        idset = set(ids)
        if len(ids) != len(idset):
            raise ValueError("duplicate vertex ids")
        for v in self.vertices:
            if v.kind not in KINDS:
                raise ValueError(f"unknown vertex kind {v.kind!r}")
        for a, b in self.edges:
            if not (a < b) or a not in idset or b not in idset:
                raise ValueError(f"bad edge ({a}, {b})")
        for a, b, c in self.triangles:
            if not (a < b < c):
                raise ValueError(f"bad triangle ({a}, {b}, {c})")
            for e in ((a, b), (a, c), (b, c)):
                if e not in self.edges:
                    raise ValueError(f"triangle {(a, b, c)} is missing edge {e}")


def make_complex(
    vertices: Iterable[Vertex],
    edges: Iterable[tuple[int, int]] = (),
    triangles: Iterable[tuple[int, int, int]] = (),
) -> Complex:
    """Normalize (sort ids inside simplices) and validate."""
    vs = tuple(sorted(vertices, key=lambda v: v.id))
    es = frozenset(tuple(sorted(e)) for e in edges)
    ts = frozenset(tuple(sorted(t)) for t in triangles)
    return Complex(vs, es, ts)


def neighbors(c: Complex) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v.id: [] for v in c.vertices}
    for a, b in c.edges:
        adj[a].append(b)
        adj[b].append(a)
    for lst in adj.values():
        lst.sort()
    return adj


def component(c: Complex, start: int) -> list[int]:
    """Vertex ids of the connected component of ``start``, in BFS order
    (neighbors visited in increasing id order)."""
    adj = neighbors(c)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def is_forest(c: Complex) -> bool:
    """True when the 1-skeleton has no cycle."""
    parent = {v.id: v.id for v in c.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in sorted(c.edges):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_tree(c: Complex) -> bool:
    """True when the 1-skeleton is a nonempty connected acyclic graph."""
    if not c.vertices:
        return False
    return is_forest(c) and len(c.edges) == len(c.vertices) - 1


def dimension(c: Complex) -> int | None:
    """Largest simplex dimension present; None for the empty complex."""
    if not c.vertices:
        return None
    if c.triangles:
        return 2
    if c.edges:
        return 1
    return 0


def induced(c: Complex, keep: Iterable[int]) -> Complex:
    """Full subcomplex on the given vertex ids."""
    keep = set(keep)
    vs = tuple(v for v in c.vertices if v.id in keep)
    es = frozenset(e for e in c.edges if e[0] in keep and e[1] in keep)
    ts = frozenset(t for t in c.triangles if all(i in keep for i in t))
    return Complex(vs, es, ts)


def to_json(c: Complex) -> dict:
    return {
        "vertices": [
            {"id": v.id, "kind": v.kind, "label": v.label} for v in c.vertices
        ],
        "edges": [list(e) for e in sorted(c.edges)],
        "triangles": [list(t) for t in sorted(c.triangles)],
    }


def from_json(data: dict) -> Complex:
    return make_complex(
        (Vertex(v["id"], v["kind"], v["label"]) for v in data["vertices"]),
        (tuple(e) for e in data["edges"]),
        (tuple(t) for t in data.get("triangles", [])),
    )


_DOT_ATTRS = {
    KIND_BLACK: "shape=circle, style=filled, fillcolor=black, fontcolor=white",
    KIND_WHITE: "shape=circle",
    KIND_APEX: "shape=doublecircle",
    KIND_SLOPE: "shape=box",
}


def to_dot(c: Complex, name: str = "complex") -> str:
    lines = [f"graph {name} {{"]
    for v in c.vertices:
        lines.append(f'  v{v.id} [label="{v.label}", {_DOT_ATTRS[v.kind]}];')
    for a, b in sorted(c.edges):
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines)


def sp_tree_model(black_count: int, whites_per_black: int) -> Complex:
    """Bipartite tree of black (disk) and white (sphere) vertices, grown
    breadth-first from one black root until ``black_count`` blacks exist.

    Every black has valence ``whites_per_black``; every white joins at
    most two blacks (the boundary whites of the truncation keep valence
    one), encoding that a disjoint disk pair determines a unique sphere.
    """
    if black_count < 1 or whites_per_black < 1:
        raise ValueError("black_count and whites_per_black must be positive")
    vertices: list[Vertex] = []
    edges: set[tuple[int, int]] = set()
    free_whites: deque[int] = deque()
    black_total = 0
    white_total = 0

    def new_black() -> int:
        nonlocal black_total
        vid = len(vertices)
        vertices.append(Vertex(vid, KIND_BLACK, f"disk{black_total}"))
        black_total += 1
        return vid

    def new_white() -> int:
        nonlocal white_total
        vid = len(vertices)
        vertices.append(Vertex(vid, KIND_WHITE, f"sphere{white_total}"))
        white_total += 1
        return vid

    root = new_black()
    for _ in range(whites_per_black):
        w = new_white()
        edges.add((root, w))
        free_whites.append(w)
    while black_total < black_count:
        if not free_whites:
            raise ValueError(
                "cannot grow the tree: no valence-one white left "
                "(whites_per_black too small for black_count)"
            )
        w = free_whites.popleft()
        b = new_black()
        edges.add(tuple(sorted((w, b))))
        for _ in range(whites_per_black - 1):
            w2 = new_white()
            edges.add((b, w2))
            free_whites.append(w2)
    return make_complex(vertices, edges)


def _odd_graft_tree(farey_depth: int):
    """BFS-ordered slope labels and local edges of the odd subtree used
    for grafting: the connected component of 1/0 in the odd subcomplex of
    the depth-truncated Farey ball."""
    from . import farey  # deferred: farey builds on this module

    ball = farey.stern_brocot_ball(farey_depth)
    fodd = farey.f_odd_subcomplex(ball)
    inf_id = next(v.id for v in fodd.vertices if v.label == "1/0")
    order = component(fodd, inf_id)
    pos = {vid: j for j, vid in enumerate(order)}
    labels = {v.id: v.label for v in fodd.vertices}
    slots = [labels[vid] for vid in order]
    local_edges = sorted(
        tuple(sorted((pos[a], pos[b])))
        for a, b in fodd.edges
        if a in pos and b in pos
    )
    return slots, local_edges


def _haken_build(black_count: int, whites_per_black: int, farey_depth: int):
    sp = sp_tree_model(black_count, whites_per_black)
    slots, local_edges = _odd_graft_tree(farey_depth)
    if whites_per_black > len(slots):
        raise ValueError(
            f"whites_per_black={whites_per_black} exceeds the "
            f"{len(slots)} slots of the depth-{farey_depth} odd subtree"
        )
    vertices: list[Vertex] = []
    edges: set[tuple[int, int]] = set()
    white_ids: dict[int, int] = {}
    for v in sp.vertices:
        if v.kind == KIND_WHITE:
            nid = len(vertices)
            white_ids[v.id] = nid
            vertices.append(Vertex(nid, KIND_WHITE, v.label))
    adj = neighbors(sp)
    graft: dict[str, list[int]] = {}
    for v in sp.vertices:
        if v.kind != KIND_BLACK:
            continue
        copy = [white_ids[w] for w in adj[v.id]]  # id order = creation order
        for j in range(len(copy), len(slots)):
            nid = len(vertices)
            vertices.append(Vertex(nid, KIND_SLOPE, f"{v.label}:{slots[j]}"))
            copy.append(nid)
        for ja, jb in local_edges:
            edges.add(tuple(sorted((copy[ja], copy[jb]))))
        graft[v.label] = copy
    return make_complex(vertices, edges), graft


def haken_complex_model(
    black_count: int, whites_per_black: int, farey_depth: int
) -> Complex:
    """Model of the sphere complex: delete the blacks of the bipartite
    tree and graft, for each black, a copy of the truncated odd Farey
    tree whose first BFS vertices are identified with that black's
    adjacent whites.  Shared whites glue neighboring copies; the result
    is a tree.
    """
    model, _ = _haken_build(black_count, whites_per_black, farey_depth)
    return model


def haken_graft_map(
    black_count: int, whites_per_black: int, farey_depth: int
) -> dict[str, list[int]]:
    """For each black label of the underlying bipartite tree, the vertex
    ids of its grafted copy in BFS slot order (whites first)."""
    _, graft = _haken_build(black_count, whites_per_black, farey_depth)
    return graft


def sp_cone_model(base_size: int) -> Complex:
    """Cone over a path tree of ``base_size`` disk vertices: the apex is
    the unique reducing disk, joined to every base vertex; every base
    edge spans a triangle with the apex."""
    if base_size < 1:
        raise ValueError("base_size must be positive")
    vertices = [Vertex(0, KIND_APEX, "reducing-disk")]
    vertices += [
        Vertex(i, KIND_BLACK, f"disk{i - 1}") for i in range(1, base_size + 1)
    ]
    edges = {(0, i) for i in range(1, base_size + 1)}
    edges |= {(i, i + 1) for i in range(1, base_size)}
    triangles = {(0, i, i + 1) for i in range(1, base_size)}
    return make_complex(vertices, edges, triangles)


def cone_check(c: Complex) -> bool:
    """Contractibility witness for cone models: a unique apex adjacent to
    every other vertex, whose deletion leaves a tree."""
    apexes = [v.id for v in c.vertices if v.kind == KIND_APEX]
    if len(apexes) != 1:
        return False
    apex = apexes[0]
    others = {v.id for v in c.vertices if v.id != apex}
    if not others:
        return False
    adj = neighbors(c)
    if set(adj[apex]) != others:
        return False
    return is_tree(induced(c, others))
