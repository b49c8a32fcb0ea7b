"""Dyck paths that avoid returns at x = 0 or 2 (mod 4), and the triangulation bijection.

Run with:  python demos/03_dyck_paths.py
"""
from paradiag import DyckSpec, count_avoiding, enumerate_triangulations, triangulation_to_path
from paradiag.catalan import catalan
from paradiag.closed_forms import CountQuery, f
from paradiag.polygon import fan_histogram

print(" s  avoid 4k  f01(s+2)  avoid 4k+2  f02(s+2)")
for s in range(1, 13):
    a0 = count_avoiding(DyckSpec(s, 0))
    a2 = count_avoiding(DyckSpec(s, 2))
    print(f"{s:2d} {a0:9d} {f(CountQuery(s + 2, 0, 1)):9d} {a2:11d} {f(CountQuery(s + 2, 0, 2)):9d}")

print()
print("semilength 2m, avoiding (4k, 0): twice C_(2m-1)")
for m in range(1, 8):
    print(m, count_avoiding(DyckSpec(2 * m, 0)), 2 * catalan(2 * m - 1))

print()
print("hexagon triangulations as Dyck paths")
for t in enumerate_triangulations(6):
    print(triangulation_to_path(t), t.diagonals)

print()
# Diagonals at vertex 0 with odd / even far endpoint follow the same
# distributions as diagonals parallel to 01 / 02.
for n in (8, 10):
    print(n, "odd fan:", fan_histogram(n, "odd").counts)
    print(n, "even fan:", fan_histogram(n, "even").counts)
