"""Running the identity suite, including the deliberately wrong convolution.

Run with:  python demos/04_identities.py
"""
from paradiag.identities import REGISTRY, verify, verify_all

for r in verify_all(30):
    ident = REGISTRY[r.identity]
    status = "pass" if r.passed else f"FAIL at n={r.failures[0].n}"
    print(f"{r.identity:24s} n={r.n_lo}..{r.n_hi:<3d} {status:16s} {ident.description}")

print()
# the off-by-one convolution next to the corrected one
for name in ("callan_conv_printed", "callan_conv_corrected"):
    rows = verify(name, 2, 6).rows
    print(name, [(row.n, row.lhs, row.rhs) for row in rows])
