"""d-invariants: lens spaces, circle bundles, large surgeries.

The lens-space values come from a closed form; the same numbers fall out of
the degree-shift evaluation of a large surgery on the unknot, which is the
cross-check that pins the labeling convention.  Circle bundles add a genus
correction; large surgeries on a link combine the quadratic degree shift with
twice the H-function.
"""

from hfgenus import HTable, catalog, circle_bundle_d, large_surgery_d, lens_d

print("=== lens spaces of order m = 2..7 ===")
for m in range(2, 8):
    row = ", ".join(f"E({m},{k}) = {lens_d(m, k)}"
                    for k in range(0, m // 2 + 1))
    print(row)
print()

print("=== closed form vs the surgery route (unknot, order 9) ===")
unknot = HTable(catalog("unknot"))
for k in range(-4, 5):
    closed = lens_d(9, k)
    surgery = -large_surgery_d(unknot, (9,), (k,), force=True)
    print(f"k = {k:>2}:  closed {closed}   surgery {surgery}   equal: "
          f"{closed == surgery}")
print()

print("=== circle bundles over a genus-2 surface, order 12 ===")
for k in range(0, 7):
    print(f"k = {k}:  d = {circle_bundle_d(12, 2, k)}")
print()

print("=== a large surgery on the Whitehead link ===")
wh = HTable(catalog("whitehead"))
print("framing (50, 50), label (0, 0):",
      large_surgery_d(wh, (50, 50), (0, 0)))
print("the -2 at the end is twice H(0,0) = 1, the link's contribution.")
