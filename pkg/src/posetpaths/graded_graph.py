"""The graded graph of finite ideals of a poset window.

Level k holds the downward-closed sets with k non-root elements (the
root is always present and not counted); an up-edge adds exactly one
element. Path counts from the root ("dimensions") are exact big
integers; counting never touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import PathNumbering, PosetWindow, ROOT, addable_elements, validate_numbering


@dataclass(frozen=True)
class LevelVertex:
    level: int
    index: int
    ideal: tuple[int, ...]  # sorted ids, root included

    def describe(self) -> str:
        return "{" + " ".join(str(i) for i in self.ideal) + "}"


class GradedGraph:
    """Levels of ideal vertices with up-edges and exact path counts.

    Vertices are sorted per level lexicographically by their id lists, so
    (level, index) coordinates are deterministic across runs.
    """

    def __init__(self, window: PosetWindow, depth: int):
        poset = window.poset
        if not (0 <= depth <= poset.n - 1):
            raise ValueError(
                f"depth must be in 0..{poset.n - 1} for {window.describe()}, got {depth}"
            )
        self.window = window
        self.depth = depth
        self.levels: list[list[LevelVertex]] = []
        self.up_edges: list[list[list[tuple[int, int]]]] = []
        self.dims: list[list[int]] = []
        self._locate: dict[tuple[int, ...], tuple[int, int]] = {}

        current = [(ROOT,)]
        for level in range(depth + 1):
            verts = [LevelVertex(level, i, ideal) for i, ideal in enumerate(current)]
            self.levels.append(verts)
            for v in verts:
                self._locate[v.ideal] = (level, v.index)
            if level == depth:
                self.up_edges.append([[] for _ in verts])
                break
            nxt: set[tuple[int, ...]] = set()
            for ideal in current:
                for x in addable_elements(poset, ideal):
                    nxt.add(tuple(sorted(ideal + (x,))))
            nxt_sorted = sorted(nxt)
            nxt_index = {ideal: i for i, ideal in enumerate(nxt_sorted)}
            edges = []
            for ideal in current:
                row = []
                for x in addable_elements(poset, ideal):
                    bigger = tuple(sorted(ideal + (x,)))
                    row.append((x, nxt_index[bigger]))
                edges.append(sorted(row))
            self.up_edges.append(edges)
            current = nxt_sorted

        self.dims = [[0] * len(lvl) for lvl in self.levels]
        self.dims[0][0] = 1
        for level in range(self.depth):
            for i, row in enumerate(self.up_edges[level]):
                for _, j in row:
                    self.dims[level + 1][j] += self.dims[level][i]

    def vertex(self, level: int, index: int) -> LevelVertex:
        return self.levels[level][index]

    def vertex_of(self, ideal) -> LevelVertex:
        key = tuple(sorted(set(ideal) | {ROOT}))
        loc = self._locate.get(key)
        if loc is None:
            raise KeyError(f"ideal {key} not in graph (depth {self.depth})")
        return self.levels[loc[0]][loc[1]]

    def vertices(self):
        for lvl in self.levels:
            yield from lvl

    def csv(self) -> str:
        """Per-level dump: level,index,ideal,dim (ideal ids space-joined)."""
        lines = ["level,index,ideal,dim"]
        for lvl in self.levels:
            for v in lvl:
                ideal = " ".join(str(i) for i in v.ideal)
                lines.append(f"{v.level},{v.index},{ideal},{self.dims[v.level][v.index]}")
        return "\n".join(lines) + "\n"


def build_graph(window: PosetWindow, depth: int) -> GradedGraph:
    return GradedGraph(window, depth)


def dimension(g: GradedGraph, v: LevelVertex) -> int:
    """Exact number of root-to-v monotone paths."""
    return g.dims[v.level][v.index]


def up_dimension_table(g: GradedGraph, v: LevelVertex) -> dict[tuple[int, int], int]:
    """Path counts u -> v for every vertex u at levels <= level(v).

    Descending dynamic program seeded at v; vertices not below v get 0.
    """
    counts: dict[tuple[int, int], int] = {(v.level, v.index): 1}
    for level in range(v.level - 1, -1, -1):
        for i, row in enumerate(g.up_edges[level]):
            total = 0
            for _, j in row:
                total += counts.get((level + 1, j), 0)
            counts[(level, i)] = total
    return counts


def up_dimension(g: GradedGraph, u: LevelVertex, v: LevelVertex) -> int:
    """Number of monotone paths u -> v; 0 when u is not contained in v."""
    if u.level > v.level:
        return 0
    return up_dimension_table(g, v).get((u.level, u.index), 0)


def path_of(numbering: PathNumbering, g: GradedGraph) -> list[LevelVertex]:
    """The vertex chain visited by a numbering (prefix ideals, in order)."""
    numbering = validate_numbering(g.window.poset, numbering.elements)
    if numbering.length - 1 > g.depth:
        raise ValueError(
            f"numbering of length {numbering.length} exceeds graph depth {g.depth}"
        )
    out = []
    seen: list[int] = []
    for x in numbering.elements:
        seen.append(x)
        out.append(g.vertex_of(seen))
    return out


def numbering_of(vertices: list[LevelVertex], g: GradedGraph) -> PathNumbering:
    """Inverse of path_of: recover the numbering from a root-based vertex chain."""
    if not vertices or vertices[0].ideal != (ROOT,):
        raise ValueError("vertex path must start at the root vertex")
    elems = [ROOT]
    for a, b in zip(vertices, vertices[1:]):
        if b.level != a.level + 1:
            raise ValueError("vertex path must climb one level per step")
        added = set(b.ideal) - set(a.ideal)
        if len(added) != 1 or not set(a.ideal) <= set(b.ideal):
            raise ValueError(f"{b.describe()} does not cover {a.describe()}")
        elems.append(added.pop())
    return validate_numbering(g.window.poset, elems)
