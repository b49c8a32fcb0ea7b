"""Dyck paths with forbidden returns to the axis.

Paths are indexed by semilength ``s``: ``s`` up-steps and ``s`` down-steps
from (0, 0) to (2s, 0).  A forbidden residue ``r`` rules out every interior
return ``(x, 0)``, ``0 < x < 2s``, with ``x % 4 == r``.

Also provides a bijection between triangulations of the (s+2)-gon and
Dyck paths of semilength s through the dual binary tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .polygon import Triangulation

__all__ = [
    "DyckSpec",
    "count_dyck",
    "count_avoiding",
    "is_dyck",
    "dyck_paths",
    "triangulation_to_path",
    "path_to_triangulation",
]

UP, DOWN = "U", "D"


@dataclass(frozen=True)
class DyckSpec:
    semilength: int
    forbidden_residue: Optional[int] = None

    def __post_init__(self) -> None:
        if self.semilength < 0:
            raise ValueError("semilength must be nonnegative")
        if self.forbidden_residue not in (None, 0, 2):
            raise ValueError("forbidden residue must be None, 0 or 2")

    def forbids(self, x: int) -> bool:
        r = self.forbidden_residue
        return r is not None and 0 < x < 2 * self.semilength and x % 4 == r


def count_avoiding(spec: DyckSpec) -> int:
    """Number of Dyck paths of the given semilength avoiding the forbidden returns."""
    s = spec.semilength
    heights = [1] + [0] * s
    for x in range(1, 2 * s + 1):
        nxt = [0] * (s + 1)
        for h, c in enumerate(heights):
            if not c:
                continue
            if h + 1 <= s:
                nxt[h + 1] += c
            if h:
                nxt[h - 1] += c
        if spec.forbids(x):
            nxt[0] = 0
        heights = nxt
    return heights[0]


def count_dyck(s: int) -> int:
    return count_avoiding(DyckSpec(s))


def is_dyck(path: str) -> bool:
    h = 0
    for step in path:
        h += 1 if step == UP else -1
        if h < 0:
            return False
    return h == 0


def dyck_paths(s: int) -> Iterator[str]:
    """All Dyck paths of semilength ``s`` as ``"U"``/``"D"`` strings."""
    def rec(prefix: str, ups: int, h: int) -> Iterator[str]:
        if len(prefix) == 2 * s:
            yield prefix
            return
        if ups < s:
            yield from rec(prefix + UP, ups + 1, h + 1)
        if h:
            yield from rec(prefix + DOWN, ups, h - 1)

    return rec("", 0, 0)


def _edges(t: Triangulation) -> set[tuple[int, int]]:
    n = t.n
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    edges.update(t.diagonals)
    return edges


def triangulation_to_path(t: Triangulation) -> str:
    """Encode ``t`` as a Dyck path of semilength ``t.n - 2``.

    The polygon ``i..j`` on base ``ij`` with apex ``m`` becomes
    ``U <path of i..m> D <path of m..j>``; a bare edge is empty.  The root
    base is the side ``0(n-1)``.
    """
    edges = _edges(t)
    out: list[str] = []
    stack = [(0, t.n - 1)]
    # iterative preorder; the right sub-polygon is pushed before the marker
    while stack:
        item = stack.pop()
        if item == "D":
            out.append(DOWN)
            continue
        i, j = item
        if j - i < 2:
            continue
        m = next(v for v in range(i + 1, j) if (i, v) in edges and (v, j) in edges)
        out.append(UP)
        stack.append((m, j))
        stack.append("D")
        stack.append((i, m))
    return "".join(out)


def path_to_triangulation(path: str) -> Triangulation:
    """Inverse of :func:`triangulation_to_path`."""
    if not path or not is_dyck(path):
        raise ValueError(f"not a nonempty Dyck path: {path!r}")
    n = len(path) // 2 + 2
    diags: list[tuple[int, int]] = []

    def build(lo: int, pos: int) -> tuple[int, int]:
        # parse the polygon starting at vertex lo from path[pos:]; returns (hi, pos)
        if pos >= len(path) or path[pos] == DOWN:
            return lo + 1, pos
        mid, pos = build(lo, pos + 1)
        assert path[pos] == DOWN
        hi, pos = build(mid, pos + 1)
        for a, b in ((lo, mid), (mid, hi)):
            if b - a >= 2:
                diags.append((a, b))
        return hi, pos

    hi, pos = build(0, 0)
    assert pos == len(path) and hi == n - 1
    return Triangulation(n, tuple(sorted(diags)))
