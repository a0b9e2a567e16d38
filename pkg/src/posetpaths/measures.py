"""Central measures on numbering spaces: exact kernels and samplers.

A measure on fixed-length numberings is central when every adjacent-swap
involution preserves it; equivalently, when it is conditionally uniform
on every endpoint fiber. Exact rational arithmetic is used for all
finite-truncation kernels (centrality is an exact symmetry; tolerances
would mask bugs); floating point enters only inside Monte Carlo
sampling.

Replica k of a Monte Carlo run is seeded with seed + k; sampler s of a
comparison run gets base seed seed + s * 1_000_003. Identical seeds give
bit-identical paths and reports.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graded_graph import GradedGraph, LevelVertex, dimension, up_dimension_table
from .ideals import (
    FiniteSetIdeal,
    FullIdeal,
    IdealSpec,
    ideal_member,
    member_coords,
)
from .posets import PathNumbering, PosetWindow, ROOT, build_young_poset, enumerate_numberings, validate_numbering
from .symmetry import apply_sigma
from .young import (
    GrowthPath,
    additions,
    check_partition,
    corner_probabilities,
    growth_probabilities_float,
    growth_step_arrays,
    row_insert,
    tableau_count,
)


@dataclass(frozen=True)
class PlancherelYoung:
    """Dimension-proportional growth on Young diagrams."""

    def name(self) -> str:
        return "plancherel"

    exact = False


@dataclass(frozen=True)
class RSKThoma:
    """Shape growth of row insertion applied to i.i.d. letters.

    `alpha` are the letter probabilities: strictly positive, summing to
    one. Tied entries are legal but flagged, since row frequencies only
    identify the parameters when they are distinct.
    """

    alpha: tuple[float, ...]

    def __post_init__(self):
        if not self.alpha:
            raise ValueError("alpha must be nonempty")
        if any(a <= 0 for a in self.alpha):
            raise ValueError(f"alpha entries must be positive, got {self.alpha}")
        if abs(sum(self.alpha) - 1.0) > 1e-9:
            raise ValueError(f"alpha must sum to 1, got {sum(self.alpha)}")

    @property
    def has_ties(self) -> bool:
        return len(set(self.alpha)) < len(self.alpha)

    def name(self) -> str:
        return "rsk:" + ",".join(repr(a) for a in self.alpha)

    exact = False


class ExplicitMarkov:
    """Per-vertex transition rows over the up-edges of a graded graph.

    Rows map (level, index) to tuples (added element, target index,
    probability). Probabilities may be exact Fractions or floats; each
    row must sum to one (exactly when rational, else within 1e-12).
    """

    def __init__(self, graph: GradedGraph, rows, name: str, depth: int | None = None):
        self.graph = graph
        self.rows = dict(rows)
        self._name = name
        self.depth = depth if depth is not None else graph.depth
        self.exact = True
        for key, row in self.rows.items():
            total = sum(p for _, _, p in row)
            if any(isinstance(p, float) for _, _, p in row):
                self.exact = False
                if abs(total - 1.0) > 1e-12:
                    raise ValueError(f"row {key} sums to {total}, not 1")
            elif total != 1:
                raise ValueError(f"row {key} sums to {total}, not 1")
            if any(p < 0 for _, _, p in row):
                raise ValueError(f"row {key} has a negative probability")

    def name(self) -> str:
        return self._name


CentralMeasureSpec = PlancherelYoung | RSKThoma | ExplicitMarkov


def parse_markov_kernel(graph: GradedGraph, text: str, name: str = "markov:file") -> ExplicitMarkov:
    """Kernel file: lines `row <level>:<index> <elem>:<prob> ...`, `#` comments.

    Probabilities are exact rationals (`1/3`) or decimal literals, taken
    at face value as fractions (0.2 means exactly 1/5); rows may only use
    edges of the graph.
    """
    rows = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != "row":
            raise ValueError(f"line {lineno}: expected 'row', got {tokens[0]!r}")
        try:
            level, index = (int(x) for x in tokens[1].split(":"))
            edge_targets = {elem: j for elem, j in graph.up_edges[level][index]}
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: bad vertex {tokens[1]!r}") from exc
        row = []
        for tok in tokens[2:]:
            elem_text, _, prob_text = tok.partition(":")
            try:
                elem = int(elem_text)
                prob = Fraction(prob_text)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"line {lineno}: bad entry {tok!r}") from exc
            if elem not in edge_targets:
                raise ValueError(
                    f"line {lineno}: element {elem} is not addable at {level}:{index}"
                )
            row.append((elem, edge_targets[elem], prob))
        rows[(level, index)] = tuple(row)
    if not rows:
        raise ValueError("kernel file declares no rows")
    depth = 1 + max(level for level, _ in rows)
    return ExplicitMarkov(graph, rows, name=name, depth=depth)


def endpoint_measure(g: GradedGraph, v: LevelVertex) -> ExplicitMarkov:
    """The exact kernel whose path law is uniform on root-to-v paths.

    Transition u -> w gets probability (paths w->v) / (paths u->v); the
    products along any root-to-v path telescope to 1/dimension(v).
    """
    if dimension(g, v) < 1:
        raise ValueError(f"vertex {v.describe()} is unreachable")
    table = up_dimension_table(g, v)
    rows = {}
    for level in range(v.level):
        for i, edge_row in enumerate(g.up_edges[level]):
            below = table.get((level, i), 0)
            if below == 0:
                continue
            row = []
            for elem, j in edge_row:
                above = table.get((level + 1, j), 0)
                if above:
                    row.append((elem, j, Fraction(above, below)))
            rows[(level, i)] = tuple(row)
    return ExplicitMarkov(g, rows, name=f"endpoint:{v.level}:{v.index}", depth=v.level)


def path_measure(m: ExplicitMarkov) -> dict[tuple[int, ...], Fraction]:
    """Exact law on root-based paths of the kernel's depth."""
    out: dict[tuple[int, ...], Fraction] = {}

    def walk(level, index, prefix, prob):
        if level == m.depth:
            out[prefix] = prob
            return
        for elem, j, p in m.rows.get((level, index), ()):
            if p:
                walk(level + 1, j, prefix + (elem,), prob * p)

    walk(0, 0, (ROOT,), Fraction(1) if m.exact else 1.0)
    return out


def uniform_path_measure(window: PosetWindow, length: int) -> dict[tuple[int, ...], Fraction]:
    """The uniform law on all numberings of the given length."""
    paths = enumerate_numberings(window, length)
    w = Fraction(1, len(paths))
    return {p.elements: w for p in paths}


def perturb_fiber(measure, eps=Fraction(1, 10)):
    """Move mass eps between the two lexicographically first paths of the
    first endpoint fiber holding at least two paths; breaks centrality by
    construction."""
    by_fiber: dict[frozenset, list[tuple[int, ...]]] = {}
    for key in sorted(measure):
        by_fiber.setdefault(frozenset(key), []).append(key)
    for fiber_key in sorted(by_fiber, key=lambda f: tuple(sorted(f))):
        paths = by_fiber[fiber_key]
        if len(paths) >= 2:
            out = dict(measure)
            out[paths[0]] = out[paths[0]] + eps
            out[paths[1]] = out[paths[1]] - eps
            return out
    raise ValueError("no fiber with two or more paths")


@dataclass
class CentralityReport:
    """Both routes to centrality: generator invariance (the definition)
    and conditional uniformity on endpoint fibers (the characterization,
    given fiber transitivity)."""

    n_paths: int
    length: int
    exact: bool
    invariance_ok: bool
    invariance_witnesses: list[tuple[int, tuple[int, ...]]]
    fiber_ok: bool
    fiber_witnesses: list[tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def central(self) -> bool:
        return self.invariance_ok and self.fiber_ok


def is_central(g: GradedGraph, measure, tol: float = 0.0) -> CentralityReport:
    """Check a path measure for invariance under every involution and for
    fiber-conditional uniformity.

    `measure` maps numberings (tuples of ids, or PathNumbering) of one
    common length to probabilities. Rational values are compared
    exactly; floats within `tol`.
    """
    probs: dict[tuple[int, ...], object] = {}
    for key, p in measure.items():
        elems = key.elements if isinstance(key, PathNumbering) else tuple(key)
        probs[elems] = p
    if not probs:
        raise ValueError("empty measure")
    lengths = {len(k) for k in probs}
    if len(lengths) != 1:
        raise ValueError(f"paths of mixed lengths {sorted(lengths)}")
    length = lengths.pop()
    exact = all(not isinstance(p, float) for p in probs.values())
    if any(p < 0 for p in probs.values()):
        raise ValueError("negative probability")
    total = sum(probs.values())
    if exact:
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")
    elif abs(total - 1.0) > max(tol, 1e-12):
        raise ValueError(f"probabilities sum to {total}, not 1")

    poset = g.window.poset
    all_paths = enumerate_numberings(g.window, length)
    valid = {p.elements for p in all_paths}
    for key in probs:
        if key not in valid:
            raise ValueError(f"{key} is not a valid numbering of this window")

    def weight(key):
        return probs.get(key, Fraction(0) if exact else 0.0)

    def differs(a, b):
        return a != b if exact else abs(a - b) > tol

    inv_witnesses = []
    for i in range(1, length - 1):
        for p in all_paths:
            q = apply_sigma(poset, i, p)
            if differs(weight(p.elements), weight(q.elements)):
                inv_witnesses.append((i, p.elements))
                if len(inv_witnesses) >= 5:
                    break
        if inv_witnesses:
            break

    fiber_witnesses = []
    fibers: dict[frozenset, list[tuple[int, ...]]] = {}
    for p in all_paths:
        fibers.setdefault(p.endpoint, []).append(p.elements)
    for fiber_key in sorted(fibers, key=lambda f: tuple(sorted(f))):
        group = fibers[fiber_key]
        lo = min(group, key=weight)
        hi = max(group, key=weight)
        if differs(weight(lo), weight(hi)):
            fiber_witnesses.append((lo, hi))
    return CentralityReport(
        n_paths=len(all_paths),
        length=length,
        exact=exact,
        invariance_ok=not inv_witnesses,
        invariance_witnesses=inv_witnesses,
        fiber_ok=not fiber_witnesses,
        fiber_witnesses=fiber_witnesses,
    )


def plancherel_transition(shape, arithmetic: str = "exact"):
    """Growth step of the dimension-proportional central measure.

    Returns the diagrams one cell larger with their probabilities,
    row-ascending. Exact mode divides tableau counts (big integers, sums
    to 1 exactly); float mode multiplies paired corner-content ratios and
    agrees with exact mode to machine precision.
    """
    parts = check_partition(shape)
    adds = additions(parts)
    if arithmetic == "exact":
        n = sum(parts)
        d = tableau_count(parts)
        return [
            (mu, Fraction(tableau_count(mu), (n + 1) * d)) for mu, _ in adds
        ]
    if arithmetic == "float":
        _, probs = growth_probabilities_float(parts)
        return [(mu, float(p)) for (mu, _), p in zip(adds, probs)]
    raise ValueError(f"arithmetic must be 'exact' or 'float', got {arithmetic!r}")


def sample_plancherel(n_steps: int, seed: int) -> GrowthPath:
    """One trajectory of the dimension-proportional growth process.

    Each step draws from the float-mode transition law; deterministic
    given the seed.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    rng = random.Random(seed)
    rows = np.zeros(n_steps + 1, dtype=np.int64)
    k = 0  # number of nonempty rows
    cells = []
    for _ in range(n_steps):
        add_idx, xs, ys = growth_step_arrays(rows, k)
        probs = corner_probabilities(xs, ys)
        u = rng.random()
        j = int(np.searchsorted(np.cumsum(probs), u, side="right"))
        if j >= len(probs):
            j = len(probs) - 1
        if j < len(add_idx):
            r = int(add_idx[j])
        else:
            r = k
            k += 1
        rows[r] += 1
        cells.append((r + 1, int(rows[r])))
    return GrowthPath(tuple(cells))


def sample_rsk_thoma(alpha, n_steps: int, seed: int) -> GrowthPath:
    """Insert n i.i.d. letters drawn from alpha and record the shape growth.

    The shape never exceeds len(alpha) rows; deterministic given the seed.
    """
    spec = alpha if isinstance(alpha, RSKThoma) else RSKThoma(tuple(alpha))
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    rng = random.Random(seed)
    cum = []
    acc = 0.0
    for a in spec.alpha:
        acc += a
        cum.append(acc)
    rows: list[list[int]] = []
    cells = []
    letters = []
    for _ in range(n_steps):
        u = rng.random()
        letter = bisect.bisect_right(cum, u)
        if letter >= len(spec.alpha):
            letter = len(spec.alpha) - 1
        letters.append(letter + 1)
        cells.append(row_insert(rows, letter))
    return GrowthPath(tuple(cells), letters=tuple(letters))


def sample_markov(m: ExplicitMarkov, n_steps: int, seed: int) -> PathNumbering:
    """Walk an explicit kernel for n_steps edges from the root."""
    if not (1 <= n_steps <= m.depth):
        raise ValueError(f"kernel supports 1..{m.depth} steps, asked for {n_steps}")
    rng = random.Random(seed)
    level, index = 0, 0
    elems = [ROOT]
    for _ in range(n_steps):
        row = m.rows.get((level, index))
        if not row:
            raise ValueError(f"kernel has no row at level {level} index {index}")
        u = rng.random()
        acc = 0.0
        choice = None
        for elem, j, p in row:
            acc += float(p)
            if u < acc:
                choice = (elem, j)
                break
        if choice is None:
            choice = (row[-1][0], row[-1][1])
        elems.append(choice[0])
        level, index = level + 1, choice[1]
    return validate_numbering(m.graph.window.poset, elems)


def growth_to_numbering(path: GrowthPath) -> tuple[PosetWindow, PathNumbering]:
    """Materialize the smallest Young window containing a growth path and
    re-express the path as a numbering of it."""
    path.validate()
    window = build_young_poset(path.shape())
    ids = {window.poset.coords[x]: x for x in range(1, window.poset.n)}
    elems = [ROOT] + [ids[cell] for cell in path.cells]
    return window, validate_numbering(window.poset, elems)


@dataclass
class FrequencyReport:
    """Monte Carlo estimate of the fraction of a numbering's first n
    elements landing in an ideal (the root excluded from numerator and
    denominator)."""

    sampler: str
    ideal: str
    n_steps: int
    replicas: int
    estimate: float
    stderr: float
    seed: int
    values: tuple[float, ...]

    def csv_row(self) -> str:
        return ",".join(
            csv_field(v)
            for v in (
                self.sampler,
                self.ideal,
                self.n_steps,
                self.replicas,
                repr(self.estimate),
                repr(self.stderr),
                self.seed,
            )
        )


FREQUENCY_CSV_HEADER = "sampler,ideal,n,replicas,estimate,stderr,seed"


def csv_field(value) -> str:
    """Quote a CSV field when it contains a comma or quote (sampler and
    ideal names legitimately do, e.g. hook:1,0)."""
    text = str(value)
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text


def _growth_member(spec: IdealSpec, cell: tuple[int, int]) -> bool:
    if isinstance(spec, FullIdeal):
        return True
    if isinstance(spec, FiniteSetIdeal):
        raise ValueError("finite-set ideals are window-bound; growth samplers have no ids")
    return member_coords(spec, cell)


def _replica_fraction(spec: CentralMeasureSpec, ideal: IdealSpec, n_steps: int, seed: int) -> float:
    if isinstance(spec, PlancherelYoung):
        cells = sample_plancherel(n_steps, seed).cells
        hits = sum(1 for cell in cells if _growth_member(ideal, cell))
    elif isinstance(spec, RSKThoma):
        cells = sample_rsk_thoma(spec, n_steps, seed).cells
        hits = sum(1 for cell in cells if _growth_member(ideal, cell))
    else:
        numbering = sample_markov(spec, n_steps, seed)
        poset = spec.graph.window.poset
        hits = sum(
            1 for x in numbering.elements[1:] if ideal_member(ideal, poset.element(x))
        )
    return hits / n_steps


def estimate_frequency(
    spec: CentralMeasureSpec,
    ideal: IdealSpec,
    n_steps: int,
    replicas: int,
    seed: int,
) -> FrequencyReport:
    """Mean and standard error of the ideal-occupation fraction over
    independent replicas (replica k seeded with seed + k)."""
    if replicas < 1:
        raise ValueError("replicas must be >= 1")
    values = tuple(
        _replica_fraction(spec, ideal, n_steps, seed + k) for k in range(replicas)
    )
    mean = sum(values) / replicas
    if replicas > 1:
        var = sum((v - mean) ** 2 for v in values) / (replicas - 1)
        stderr = math.sqrt(var / replicas)
    else:
        stderr = 0.0
    return FrequencyReport(
        sampler=spec.name(),
        ideal=ideal.name(),
        n_steps=n_steps,
        replicas=replicas,
        estimate=mean,
        stderr=stderr,
        seed=seed,
        values=values,
    )


def _family_tag(spec: CentralMeasureSpec) -> str:
    if isinstance(spec, (PlancherelYoung, RSKThoma)):
        return "young-growth"
    return f"window:{spec.graph.window.describe()}"


@dataclass
class PairVerdict:
    sampler_a: str
    sampler_b: str
    distinguished: bool
    separations: tuple[tuple[str, float], ...]  # (ideal, separation in stderr units)


@dataclass
class ComparisonTable:
    reports: list[FrequencyReport]
    pairs: list[PairVerdict]
    threshold: float


def compare_frequency_profiles(
    specs,
    ideals,
    n_steps: int,
    replicas: int,
    seed: int,
    threshold: float = 3.0,
) -> ComparisonTable:
    """Estimate every sampler on every ideal and flag sampler pairs whose
    estimates stay within `threshold` combined standard errors on all of
    the supplied ideals (empirical indistinguishability, not proof)."""
    specs = list(specs)
    ideals = list(ideals)
    if len(specs) < 2:
        raise ValueError("need at least two samplers to compare")
    families = {_family_tag(s) for s in specs}
    if len(families) != 1:
        raise ValueError(f"samplers over mixed poset families: {sorted(families)}")
    grid: list[list[FrequencyReport]] = []
    for s, spec in enumerate(specs):
        base = seed + s * 1_000_003
        grid.append([estimate_frequency(spec, ideal, n_steps, replicas, base) for ideal in ideals])
    pairs = []
    for s in range(len(specs)):
        for t in range(s + 1, len(specs)):
            seps = []
            distinguished = False
            for j, ideal in enumerate(ideals):
                ra, rb = grid[s][j], grid[t][j]
                gap = abs(ra.estimate - rb.estimate)
                combined = math.sqrt(ra.stderr**2 + rb.stderr**2)
                units = gap / combined if combined > 0 else (math.inf if gap > 0 else 0.0)
                seps.append((ideal.name(), units))
                if units > threshold:
                    distinguished = True
            pairs.append(
                PairVerdict(
                    sampler_a=specs[s].name(),
                    sampler_b=specs[t].name(),
                    distinguished=distinguished,
                    separations=tuple(seps),
                )
            )
    return ComparisonTable(
        reports=[r for row in grid for r in row], pairs=pairs, threshold=threshold
    )
