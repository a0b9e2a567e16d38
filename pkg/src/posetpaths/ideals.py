"""Finitely parametrized ideals of the ambient poset families.

Hook and axis-ray specs describe one-dimensional ideals: unions of
finitely many full rows/columns (rays along coordinate axes), which have
boundedly many pairwise incomparable elements no matter how large the
window. `full` is the nonproper ideal, `set:` an explicit finite ideal
of one window.

Membership convention: the root belongs to every ideal (it lies below
everything), so specs never reject id 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import Element, PosetWindow, ROOT


@dataclass(frozen=True)
class FullIdeal:
    def name(self) -> str:
        return "full"


@dataclass(frozen=True)
class FiniteSetIdeal:
    ids: frozenset[int]

    def name(self) -> str:
        return "set:" + ",".join(str(i) for i in sorted(self.ids - {ROOT}))


@dataclass(frozen=True)
class HookIdeal:
    """First `rows` rows union first `cols` columns of Z+^2."""

    rows: int
    cols: int

    def name(self) -> str:
        return f"hook:{self.rows},{self.cols}"


@dataclass(frozen=True)
class AxisRaysIdeal:
    """Per-axis generalization of the hook: x is in the ideal when some
    coordinate x_k is at most rays[k]."""

    rays: tuple[int, ...]

    def name(self) -> str:
        return "rays:" + ",".join(str(r) for r in self.rays)


IdealSpec = FullIdeal | FiniteSetIdeal | HookIdeal | AxisRaysIdeal


def finite_set_ideal(ids) -> FiniteSetIdeal:
    return FiniteSetIdeal(frozenset(int(i) for i in ids) | {ROOT})


def parse_ideal(text: str) -> IdealSpec:
    """Parse the command syntax: full | set:1,5,9 | hook:k,l | rays:a1,...,ad."""
    t = text.strip()
    if t == "full":
        return FullIdeal()
    kind, _, args = t.partition(":")
    if kind == "set":
        try:
            return finite_set_ideal(int(x) for x in args.split(",") if x != "")
        except ValueError as exc:
            raise ValueError(f"bad set ideal {text!r}") from exc
    if kind == "hook":
        try:
            k, l = (int(x) for x in args.split(","))
        except ValueError as exc:
            raise ValueError(f"bad hook ideal {text!r}") from exc
        if k < 0 or l < 0:
            raise ValueError("hook parameters must be >= 0")
        return HookIdeal(k, l)
    if kind == "rays":
        try:
            rays = tuple(int(x) for x in args.split(","))
        except ValueError as exc:
            raise ValueError(f"bad rays ideal {text!r}") from exc
        if not rays or any(r < 0 for r in rays):
            raise ValueError("rays need one count >= 0 per axis")
        return AxisRaysIdeal(rays)
    raise ValueError(f"unknown ideal spec {text!r}")


def member_coords(spec: IdealSpec, coords: tuple[int, ...]) -> bool:
    """Membership for a coordinate point of the ambient family."""
    if isinstance(spec, FullIdeal):
        return True
    if isinstance(spec, HookIdeal):
        if len(coords) != 2:
            raise ValueError(f"hook ideal needs 2 coordinates, got {coords}")
        r, c = coords
        return r <= spec.rows or c <= spec.cols
    if isinstance(spec, AxisRaysIdeal):
        if len(coords) != len(spec.rays):
            raise ValueError(
                f"rays ideal over {len(spec.rays)} axes queried with {coords}"
            )
        return any(x <= a for x, a in zip(coords, spec.rays))
    raise ValueError(f"{spec.name()} has no coordinate membership")


def ideal_member(spec: IdealSpec, element: Element) -> bool:
    """Membership of one poset element; the root is in every ideal."""
    if element.id == ROOT:
        return True
    if isinstance(spec, FullIdeal):
        return True
    if isinstance(spec, FiniteSetIdeal):
        return element.id in spec.ids
    if element.coords is None:
        raise ValueError(
            f"coordinate-free element id {element.id} queried against {spec.name()}"
        )
    return member_coords(spec, element.coords)


def check_downward_closed(spec: IdealSpec, window: PosetWindow) -> None:
    """Raise if some window element is in the spec while a lower cover is not."""
    poset = window.poset
    inside = [ideal_member(spec, poset.element(x)) for x in range(poset.n)]
    for x in range(poset.n):
        if not inside[x]:
            continue
        for lo in poset.lower_covers(x):
            if not inside[lo]:
                raise ValueError(
                    f"{spec.name()} is not downward closed on {window.describe()}: "
                    f"{x} in, lower cover {lo} out"
                )
