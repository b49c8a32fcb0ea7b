"""Counting hexagon triangulations by diagonals parallel to a side.

Run with:  python demos/01_hexagon.py
"""
from paradiag import enumerate_triangulations, histogram
from paradiag.closed_forms import histogram as formula_histogram
from paradiag.polygon import DirectionClass, count_parallel_diagonals

spacer = "-" * 60

# A regular hexagon has 14 triangulations. Segments ab and cd are parallel
# when a+b and c+d agree mod 6, so side 01 shares a direction with 25 and 34.
cls = DirectionClass(6, 1)
for t in enumerate_triangulations(6):
    k = count_parallel_diagonals(t, cls)
    print(t.diagonals, "parallel to 01:" if k else "", k if k else "")

print(spacer)
print("brute force, edge 01:   ", histogram(6, 0, 1).counts)
print("closed forms, edge 01:  ", formula_histogram(6, 0, 1))

print(spacer)
# 02 points in another direction: even sums, which for even n behave differently.
print("brute force, segment 02:", histogram(6, 0, 2).counts)
print("closed forms, 02:       ", formula_histogram(6, 0, 2))

print(spacer)
print("Larger polygons, closed forms vs brute force")
for n in range(7, 13):
    for y in (1, 2):
        brute = histogram(n, 0, y).counts
        formula = formula_histogram(n, 0, y)
        print(f"n={n:2d} 0{y}: {formula}  {'ok' if brute == formula else 'MISMATCH'}")
