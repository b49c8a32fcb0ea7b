"""Printed versus corrected k >= 1 formulas, checked against brute force.

Run with:  python demos/02_errata.py
"""
from paradiag.closed_forms import (
    f01_odd_k,
    f01_odd_k_printed,
    f02_even_k,
    f02_even_k_printed,
)
from paradiag.polygon import histogram

print("f02(2m, k): even polygon, segment 02")
print(f"{'n':>3} {'k':>2} {'oracle':>8} {'corrected':>10} {'printed':>8} {'bound only':>11} {'exp only':>9}")
for m in range(2, 6):
    h = histogram(2 * m, 0, 2)
    for k in range(1, m):
        print(f"{2 * m:>3} {k:>2} {h[k]:>8} {f02_even_k(m, k):>10} "
              f"{f02_even_k_printed(m, k):>8} "
              f"{f02_even_k_printed(m, k, exponent='corrected'):>11} "
              f"{f02_even_k_printed(m, k, bound='corrected'):>9}")

print()
print("f01(2m+1, k): odd polygon")
print(f"{'n':>3} {'k':>2} {'oracle':>8} {'corrected':>10} {'printed':>8} {'exp fixed':>10}")
for m in range(2, 6):
    h = histogram(2 * m + 1, 0, 1)
    for k in range(1, m):
        print(f"{2 * m + 1:>3} {k:>2} {h[k]:>8} {f01_odd_k(m, k):>10} "
              f"{f01_odd_k_printed(m, k):>8} {f01_odd_k_printed(m, k, exponent='corrected'):>10}")

# With the exponent fixed the odd-polygon sum is still short by 2^k: each of
# the k even regions contributes 2 C_{2i-1}, not C_{2i-1}.
