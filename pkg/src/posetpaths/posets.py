"""Finite posets, order ideals, and monotone numberings.

Elements are dense integer ids with id 0 reserved for the unique minimal
element (the root). Windows of the canonical infinite families (Young
diagrams in Z+^2, boxes in Z+^d, chains, antichains) attach integer
coordinates to elements so that ideals of the ambient family can be
evaluated on elements directly.

A monotone numbering of length N is an injective sequence
phi(0), ..., phi(N-1) of element ids with phi(0) = root and every prefix
image downward closed; equivalently a path from the root in the lattice
of finite ideals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

ROOT = 0


class PosetFormatError(ValueError):
    """Malformed poset text or a violated poset axiom."""


class CapExceeded(RuntimeError):
    """An enumeration or closure grew past its configured cap."""


@dataclass(frozen=True)
class Element:
    id: int
    coords: tuple[int, ...] | None = None


class Poset:
    """Immutable finite poset given by its cover relations.

    `leq` is the reflexive-transitive closure of the covers, stored as a
    dense boolean matrix; adequate at desk scale (hundreds of elements).
    Raises PosetFormatError if the covers contain a cycle or if id 0 is
    not the unique minimal element.
    """

    def __init__(self, n: int, covers, coords=None):
        if n < 1:
            raise PosetFormatError("poset needs at least the root element")
        cover_set = set()
        for lo, hi in covers:
            if not (0 <= lo < n and 0 <= hi < n):
                raise PosetFormatError(f"dangling id in cover ({lo}, {hi})")
            if lo == hi:
                raise PosetFormatError(f"self-cover on id {lo}")
            cover_set.add((int(lo), int(hi)))
        self.n = n
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(cover_set))
        if coords is None:
            self.coords: tuple[tuple[int, ...] | None, ...] = (None,) * n
        else:
            if len(coords) != n:
                raise PosetFormatError("coords length does not match n")
            self.coords = tuple(
                None if c is None else tuple(int(x) for x in c) for c in coords
            )
        seen = {}
        for c in self.coords:
            if c is not None:
                if c in seen:
                    raise PosetFormatError(f"duplicate coordinates {c}")
                seen[c] = True

        adj = np.zeros((n, n), dtype=bool)
        for lo, hi in self.covers:
            adj[lo, hi] = True
        reach = adj | np.eye(n, dtype=bool)
        while True:
            nxt = reach | (reach @ reach)
            if np.array_equal(nxt, reach):
                break
            reach = nxt
        sym = reach & reach.T & ~np.eye(n, dtype=bool)
        if sym.any():
            x, y = map(int, np.argwhere(sym)[0])
            raise PosetFormatError(f"cycle detected through ids {x} and {y}")
        self._leq = reach
        self._leq.setflags(write=False)

        self._lower = tuple(
            tuple(int(lo) for lo, hi in self.covers if hi == x) for x in range(n)
        )
        self._upper = tuple(
            tuple(int(hi) for lo, hi in self.covers if lo == x) for x in range(n)
        )
        minimal = [x for x in range(n) if not self._lower[x]]
        if minimal != [ROOT]:
            raise PosetFormatError(
                f"id 0 must be the unique minimal element, found minimal ids {minimal}"
            )

    def leq(self, x: int, y: int) -> bool:
        return bool(self._leq[x, y])

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return self._lower[x]

    def upper_covers(self, x: int) -> tuple[int, ...]:
        return self._upper[x]

    def element(self, x: int) -> Element:
        return Element(x, self.coords[x])

    def elements(self):
        return (self.element(x) for x in range(self.n))

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        """All pairs x < y (as ids) with neither leq(x,y) nor leq(y,x)."""
        out = []
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if not self._leq[x, y] and not self._leq[y, x]:
                    out.append((x, y))
        return out

    def is_ideal(self, ids) -> bool:
        """True if `ids` is downward closed (every lower cover of a member is a member)."""
        s = set(ids)
        return all(lo in s for x in s for lo in self._lower[x])

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and self.covers == other.covers
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.n, self.covers, self.coords))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={len(self.covers)})"


@dataclass(frozen=True)
class PosetWindow:
    """A finite, downward-closed window of a (possibly infinite) poset family."""

    family: str
    params: tuple
    poset: Poset
    growable: bool

    @property
    def n(self) -> int:
        return self.poset.n

    def describe(self) -> str:
        if self.params:
            inner = ",".join(str(p) for p in self.params)
            return f"{self.family}[{inner}]"
        return self.family


def build_young_poset(partition) -> PosetWindow:
    """Cells of one Young diagram under componentwise order, root adjoined.

    Cells are (row, col), 1-based, with id order row-major; the root sits
    below cell (1,1) only (and below everything else by transitivity).
    """
    parts = [int(p) for p in partition]
    if not parts:
        raise ValueError("partition must be nonempty")
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be >= 1, got {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition must be weakly decreasing, got {parts}")
    cells = [(r, c) for r in range(1, len(parts) + 1) for c in range(1, parts[r - 1] + 1)]
    ids = {cell: k + 1 for k, cell in enumerate(cells)}
    coords: list[tuple[int, ...] | None] = [None] + cells
    covers = [(ROOT, ids[(1, 1)])]
    for (r, c), k in ids.items():
        if (r, c + 1) in ids:
            covers.append((k, ids[(r, c + 1)]))
        if (r + 1, c) in ids:
            covers.append((k, ids[(r + 1, c)]))
    poset = Poset(len(cells) + 1, covers, coords)
    return PosetWindow("young", tuple(parts), poset, growable=True)


def build_box_poset(d: int, bounds) -> PosetWindow:
    """Lattice points of a d-dimensional box under componentwise order.

    The all-ones point is the minimal element and carries id 0; remaining
    points are id-ordered lexicographically by coordinates.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    bnds = tuple(int(b) for b in bounds)
    if len(bnds) != d:
        raise ValueError(f"expected {d} bounds, got {len(bnds)}")
    if any(b < 1 for b in bnds):
        raise ValueError(f"bounds must be >= 1, got {bnds}")
    points = sorted(itertools.product(*(range(1, b + 1) for b in bnds)))
    origin = (1,) * d
    ordered = [origin] + [p for p in points if p != origin]
    ids = {p: k for k, p in enumerate(ordered)}
    covers = []
    for p in ordered:
        for axis in range(d):
            q = p[:axis] + (p[axis] + 1,) + p[axis + 1 :]
            if q in ids:
                covers.append((ids[p], ids[q]))
    poset = Poset(len(ordered), covers, ordered)
    return PosetWindow("box", bnds, poset, growable=True)


def build_chain_poset(n: int) -> PosetWindow:
    """Total order on n elements (the root included); same poset as a 1-d box."""
    if n < 1:
        raise ValueError("chain length must be >= 1")
    covers = [(k, k + 1) for k in range(n - 1)]
    coords = [(k + 1,) for k in range(n)]
    return PosetWindow("chain", (n,), Poset(n, covers, coords), growable=True)


def build_antichain_poset(n: int) -> PosetWindow:
    """Root plus n pairwise incomparable elements (n+1 elements in total)."""
    if n < 1:
        raise ValueError("antichain size must be >= 1")
    covers = [(ROOT, k) for k in range(1, n + 1)]
    return PosetWindow("antichain", (n,), Poset(n + 1, covers), growable=True)


def parse_poset(text: str) -> PosetWindow:
    """Parse the line-based poset format.

    Lines are `el <id> [<c1> ... <cd>]` or `cov <lower> <upper>`; `#`
    starts a comment. Ids must be dense from 0 and id 0 must be the
    unique minimal element.
    """
    elems: dict[int, tuple[int, ...] | None] = {}
    covers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            if tokens[0] == "el":
                eid = int(tokens[1])
                if eid in elems:
                    raise PosetFormatError(f"line {lineno}: duplicate element id {eid}")
                coords = tuple(int(t) for t in tokens[2:]) if len(tokens) > 2 else None
                elems[eid] = coords
            elif tokens[0] == "cov":
                if len(tokens) != 3:
                    raise PosetFormatError(f"line {lineno}: cov takes two ids")
                covers.append((int(tokens[1]), int(tokens[2])))
            else:
                raise PosetFormatError(f"line {lineno}: unknown directive {tokens[0]!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, PosetFormatError):
                raise
            raise PosetFormatError(f"line {lineno}: cannot parse {raw!r}") from exc
    for lo, hi in covers:
        for eid in (lo, hi):
            if eid not in elems:
                raise PosetFormatError(f"cover references undeclared id {eid}")
    n = len(elems)
    if sorted(elems) != list(range(n)):
        raise PosetFormatError(f"element ids must be dense from 0, got {sorted(elems)}")
    coords_list = [elems[i] for i in range(n)]
    if all(c is None for c in coords_list):
        coords_list = None
    poset = Poset(n, covers, coords_list)
    return PosetWindow("file", (), poset, growable=False)


def serialize_poset(window: PosetWindow) -> str:
    """Canonical text form; parse(serialize(w)) reproduces the poset exactly."""
    poset = window.poset
    lines = []
    for x in range(poset.n):
        c = poset.coords[x]
        if c is None:
            lines.append(f"el {x}")
        else:
            lines.append("el " + " ".join(str(v) for v in (x, *c)))
    for lo, hi in poset.covers:
        lines.append(f"cov {lo} {hi}")
    return "\n".join(lines) + "\n"


def addable_elements(poset: Poset, ideal) -> list[int]:
    """Ids outside the ideal whose lower covers all lie inside it.

    Adding any returned id keeps the set downward closed. The input must
    itself be downward closed.
    """
    s = set(ideal)
    if not poset.is_ideal(s):
        raise ValueError("input set is not downward closed")
    return [
        x
        for x in range(poset.n)
        if x not in s and all(lo in s for lo in poset.lower_covers(x))
    ]


@dataclass(frozen=True)
class PathNumbering:
    """A monotone numbering prefix: element ids, position 0 is the root."""

    elements: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.elements)

    def prefix_ideals(self):
        """The increasing chain of prefix images, as frozensets."""
        out = []
        seen = set()
        for x in self.elements:
            seen.add(x)
            out.append(frozenset(seen))
        return out

    @property
    def endpoint(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __iter__(self):
        return iter(self.elements)


def validate_numbering(poset: Poset, seq) -> PathNumbering:
    """Check the numbering axioms for `seq` and wrap it, or raise ValueError."""
    elems = tuple(int(x) for x in seq)
    if not elems:
        raise ValueError("numbering must contain at least the root")
    if elems[0] != ROOT:
        raise ValueError(f"position 0 must be the root, got {elems[0]}")
    if len(set(elems)) != len(elems):
        raise ValueError("numbering must be injective")
    seen = set()
    for pos, x in enumerate(elems):
        if not (0 <= x < poset.n):
            raise ValueError(f"id {x} outside poset")
        missing = [lo for lo in poset.lower_covers(x) if lo not in seen]
        if missing:
            raise ValueError(
                f"prefix through position {pos} is not an ideal: "
                f"{x} needs {missing} first"
            )
        seen.add(x)
    return PathNumbering(elems)


def enumerate_numberings(
    window: PosetWindow, length: int, limit: int | None = None
) -> list[PathNumbering]:
    """All monotone numberings of the given length, in lexicographic id order.

    `limit` caps the number of numberings produced; exceeding it raises
    CapExceeded.
    """
    poset = window.poset
    if not (1 <= length <= poset.n):
        raise ValueError(f"length must be in 1..{poset.n}, got {length}")
    out: list[PathNumbering] = []
    prefix = [ROOT]
    in_prefix = {ROOT}

    # scanning ids in increasing order makes the output lexicographic
    def extend():
        if len(prefix) == length:
            out.append(PathNumbering(tuple(prefix)))
            if limit is not None and len(out) > limit:
                raise CapExceeded(f"more than {limit} numberings")
            return
        for x in range(poset.n):
            if x in in_prefix:
                continue
            if all(lo in in_prefix for lo in poset.lower_covers(x)):
                prefix.append(x)
                in_prefix.add(x)
                extend()
                prefix.pop()
                in_prefix.discard(x)

    extend()
    return out
