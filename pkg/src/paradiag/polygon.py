"""Brute-force enumeration of convex polygon triangulations.

Vertices of the n-gon are labelled ``0 .. n-1`` in cyclic order.  In a
regular n-gon the segments ``ab`` and ``cd`` are parallel exactly when
``a + b == c + d (mod n)``, so a direction is just a residue mod n.

Triangulations are produced in lexicographic order of their sorted
diagonal lists.  The generator splits on the set of diagonals at the lowest
vertex (its "fan"): those diagonals come first in the sorted list, and the
rest of the list is the concatenation of the sorted lists of the
sub-polygons between consecutive fan endpoints.  Walking fans in the right
order and taking the lexicographic product of the pieces gives global
lexicographic order without sorting.

Everything that counts (histograms, marked triangulations, fan statistics)
walks that same stream, so these counts are independent of any formula.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple

from .catalan import catalan

__all__ = [
    "Segment",
    "Triangulation",
    "DirectionClass",
    "KHistogram",
    "segment",
    "crosses",
    "is_parallel",
    "direction_class",
    "enumerate_triangulations",
    "count_parallel_diagonals",
    "histogram",
    "all_class_histograms",
    "histogram_dp",
    "count_marked_triangulations",
    "fan_histogram",
    "MAX_N",
]

# Size the acceptance suite is held to; larger n still works, just slowly.
MAX_N = 16

Diag = tuple[int, int]


class Segment(NamedTuple):
    a: int
    b: int


def segment(x: int, y: int) -> Segment:
    """Canonical segment between distinct vertices ``x`` and ``y``."""
    if x == y:
        raise ValueError(f"segment endpoints must differ, got {x} twice")
    return Segment(x, y) if x < y else Segment(y, x)


def is_side(n: int, s: Diag) -> bool:
    return (s[1] - s[0]) % n in (1, n - 1)


def crosses(d1: Diag, d2: Diag) -> bool:
    """True if two chords of a convex polygon cross in their interiors."""
    a, c = sorted(d1)
    b, d = d2
    if len({a, b, c, d}) < 4:
        return False
    return (a < b < c) != (a < d < c)


def is_parallel(n: int, e1: Diag, e2: Diag) -> bool:
    return (e1[0] + e1[1]) % n == (e2[0] + e2[1]) % n


@dataclass(frozen=True)
class DirectionClass:
    n: int
    s: int

    def __post_init__(self) -> None:
        if not 0 <= self.s < self.n:
            raise ValueError(f"residue {self.s} out of range for n={self.n}")

    def contains(self, seg: Diag) -> bool:
        return (seg[0] + seg[1]) % self.n == self.s


def direction_class(n: int, x: int, y: int) -> DirectionClass:
    """The direction class of segment ``xy``; vertex ``n`` is accepted as 0."""
    x, y = x % n, y % n
    if x == y:
        raise ValueError("x and y must be distinct vertices")
    return DirectionClass(n, (x + y) % n)


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: tuple[Diag, ...]

    def validate(self) -> None:
        """Raise ValueError unless this is a triangulation of the n-gon."""
        n, diags = self.n, self.diagonals
        if len(diags) != n - 3:
            raise ValueError(f"expected {n - 3} diagonals, got {len(diags)}")
        if list(diags) != sorted(set(diags)):
            raise ValueError("diagonals must be distinct and sorted")
        for a, b in diags:
            if not 0 <= a < b < n or is_side(n, (a, b)):
                raise ValueError(f"{a}{b} is not a diagonal of the {n}-gon")
        for i, d1 in enumerate(diags):
            for d2 in diags[i + 1:]:
                if crosses(d1, d2):
                    raise ValueError(f"diagonals {d1} and {d2} cross")


@dataclass
class KHistogram:
    """Triangulation counts of an n-gon keyed by number of diagonals in ``cls``."""

    n: int
    cls: DirectionClass
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.counts = {k: v for k, v in sorted(self.counts.items()) if v}

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


# -- enumeration -------------------------------------------------------------

def _fans(lo: int, hi: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    # Increasing sequences over [lo, hi] in the order their diagonal lists sort:
    # extensions of a prefix come before the prefix itself.
    for b in range(lo, hi + 1):
        yield from _fans(b + 1, hi, prefix + (b,))
    yield prefix


def _pieces(cuts: tuple[int, ...], t: int = 0) -> Iterator[tuple[Diag, ...]]:
    if t == len(cuts) - 1:
        yield ()
        return
    lo, hi = cuts[t], cuts[t + 1]
    for first in _lex(lo, hi, hi - lo >= 2):
        for rest in _pieces(cuts, t + 1):
            yield first + rest


def _lex(lo: int, hi: int, chord: bool) -> Iterator[tuple[Diag, ...]]:
    """Sorted diagonal tuples for polygon ``lo..hi``, with chord ``(lo, hi)`` if asked."""
    size = hi - lo + 1
    if size <= 3:
        yield ((lo, hi),) if chord and size == 3 else ()
        return
    for fan in _fans(lo + 2, hi - 1):
        head = tuple((lo, b) for b in fan)
        if chord:
            head += ((lo, hi),)
        for rest in _pieces((lo + 1,) + fan + (hi,)):
            yield head + rest


def _top_groups(n: int) -> list[int | None]:
    """Work units for the n-gon: the smallest fan endpoint at vertex 0, or None."""
    return [*range(2, n - 1), None]


def _iter_group(n: int, first: int | None) -> Iterator[tuple[Diag, ...]]:
    fans: Iterable[tuple[int, ...]]
    if first is None:
        fans = [()]
    else:
        fans = _fans(first + 1, n - 2, (first,))
    for fan in fans:
        head = tuple((0, b) for b in fan)
        for rest in _pieces((1,) + fan + (n - 1,)):
            yield head + rest


def _iter_diagonals(n: int) -> Iterator[tuple[Diag, ...]]:
    if n == 3:
        yield ()
        return
    for first in _top_groups(n):
        yield from _iter_group(n, first)


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got {n}")


def enumerate_triangulations(n: int) -> Iterator[Triangulation]:
    """Yield every triangulation of the n-gon once, in lexicographic order."""
    _check_n(n)
    for diags in _iter_diagonals(n):
        yield Triangulation(n, diags)


def count_parallel_diagonals(t: Triangulation, cls: DirectionClass) -> int:
    if cls.n != t.n:
        raise ValueError("direction class and triangulation disagree on n")
    return sum(1 for d in t.diagonals if cls.contains(d))


# -- counting ----------------------------------------------------------------

def _class_tally(n: int, first: int | None) -> tuple[int, dict[tuple[int, int], int]]:
    """(triangulation count, {(class, k): count for k >= 1}) over one work unit."""
    tally: Counter[tuple[int, int]] = Counter()
    total = 0
    if n == 3:
        return 1, {}
    for diags in _iter_group(n, first):
        total += 1
        per = Counter((a + b) % n for a, b in diags)
        tally.update(per.items())
    return total, dict(tally)


def _run_groups(n: int, worker: Callable, jobs: int) -> list:
    groups = _top_groups(n) if n > 3 else [None]
    if jobs <= 1 or len(groups) == 1:
        return [worker(n, g) for g in groups]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, [n] * len(groups), groups))


def _default_jobs(jobs: int | None) -> int:
    if jobs is None:
        return 1
    if jobs == 0:
        return os.cpu_count() or 1
    return jobs


def all_class_histograms(n: int, jobs: int | None = None) -> dict[int, KHistogram]:
    """One enumeration pass giving the k-histogram of every direction class.

    Work is split by the first fan diagonal at vertex 0; partial tallies are
    summed, so the result does not depend on ``jobs``.
    """
    _check_n(n)
    parts = _run_groups(n, _class_tally, _default_jobs(jobs))
    total = 0
    tally: Counter[tuple[int, int]] = Counter()
    for t, part in parts:
        total += t
        tally.update(part)
    out = {}
    for s in range(n):
        counts = {k: c for (cls, k), c in tally.items() if cls == s}
        counts[0] = total - sum(counts.values())
        out[s] = KHistogram(n, DirectionClass(n, s), counts)
    return out


def histogram(n: int, x: int, y: int, jobs: int | None = None) -> KHistogram:
    """Brute-force counts of triangulations by diagonals parallel to ``xy``."""
    _check_n(n)
    cls = direction_class(n, x, y)
    return all_class_histograms(n, jobs)[cls.s]


def histogram_dp(n: int, x: int, y: int) -> KHistogram:
    """Same counts as :func:`histogram` via an interval recursion.

    ``poly[i][j]`` is the k-distribution for polygon ``i..j`` built on the
    chord ``ij``; choosing the apex ``m`` of the triangle on ``ij`` splits it
    into ``i..m`` and ``m..j``.  Used to push checks past brute-force sizes.
    """
    _check_n(n)
    cls = direction_class(n, x, y)

    def mark(a: int, b: int) -> int:
        return int(b - a >= 2 and not (a == 0 and b == n - 1) and cls.contains((a, b)))

    poly: dict[tuple[int, int], dict[int, int]] = {}
    for i in range(n - 1):
        poly[i, i + 1] = {0: 1}
    for span in range(2, n):
        for i in range(n - span):
            j = i + span
            acc: Counter[int] = Counter()
            for m in range(i + 1, j):
                shift = mark(i, m) + mark(m, j)
                for k1, c1 in poly[i, m].items():
                    for k2, c2 in poly[m, j].items():
                        acc[k1 + k2 + shift] += c1 * c2
            poly[i, j] = dict(acc)
    return KHistogram(n, cls, poly[0, n - 1])


def _marked_count(n: int, first: int | None) -> int:
    half = n // 2
    # the two marked sides contribute 2 per triangulation
    acc = 0
    for diags in (_iter_group(n, first) if n > 3 else iter([()])):
        acc += 2
        for a, b in diags:
            if a + b == n + 1 and 2 <= a <= half - 1:
                acc += 1
    return acc


def count_marked_triangulations(n_half: int, jobs: int | None = None) -> int:
    """Number of marked triangulations of the ``2 * n_half``-gon.

    A mark sits on side ``01``, on side ``h(h+1)`` with ``h = n_half``, or on
    a diagonal ``k(2h+1-k)`` with ``2 <= k <= h-1`` present in the
    triangulation.
    """
    if n_half < 2:
        raise ValueError(f"n_half must be at least 2, got {n_half}")
    return sum(_run_groups(2 * n_half, _marked_count, _default_jobs(jobs)))


def fan_histogram(n: int, parity: str) -> KHistogram:
    """Counts by number of diagonals ``0b`` at vertex 0 with ``b`` of given parity.

    ``parity`` is ``"even"`` (diagonals ``0(2k)``) or ``"odd"`` (``0(2k+1)``).
    The returned class is that of edge ``01``, a placeholder: fan diagonals
    are not a direction class.
    """
    _check_n(n)
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = 0 if parity == "even" else 1
    counts: Counter[int] = Counter()
    for diags in _iter_diagonals(n):
        counts[sum(1 for a, b in diags if a == 0 and b % 2 == want)] += 1
    return KHistogram(n, direction_class(n, 0, 1), dict(counts))


def expected_total(n: int) -> int:
    """C_{n-2}, the number of triangulations of an n-gon."""
    return catalan(n - 2)
