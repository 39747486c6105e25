"""The two-bridge family: staircase regions and sharp 4-genus bounds.

The family's k-th member is a two-component link of unknots whose h-function
vanishes exactly on the staircase with corners (0,k), (1,k-1), ..., (k,0).
Its 4-genus is k, and every split of k into two genera is realized, so the
h-region describes all genus pairs of disjoint surfaces exactly.
"""

from hfgenus import HTable, best_lower_bound, catalog, maximal_lattice_points, region_from_h
from hfgenus.render import ascii_h_grid

for k in (1, 2, 3):
    link = catalog("two_bridge", k)
    table = HTable(link)
    print(f"=== {link.name} (k = {k}) ===")
    print(ascii_h_grid(table, min(table.M, k + 2)))
    region = region_from_h(table)
    print("region generators:", region.generators)
    print("maximal lattice points:", maximal_lattice_points(table))
    report = best_lower_bound(table)
    print(f"4-genus lower bound: {report['best']} (via {report['via']})")
    print()

print("k = 1 is the Whitehead link: both components are unknots, yet no")
print("pair of disjoint surfaces can have total genus 0; one of them must")
print("carry genus 1, exactly as the two generators (1,0) and (0,1) say.")
