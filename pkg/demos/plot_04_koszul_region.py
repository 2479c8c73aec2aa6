"""
Which charges give Koszul modules
=================================

Koszulity is decided by three inequalities in s_1, s_0, s_-1 (plus l = 0),
which carve a wedge out of the (p, q) plane between the line q = n p and a
line of irrational slope. We print the verdicts and write the region as SVG.
"""
import os
import tempfile

from ellmcm import ModuleDescriptor, is_koszul, koszul_region, ulrich_data
from ellmcm.render import koszul_boundary_slopes, region_svg

for z in [(1, 4), (1, 5), (1, 0), (4, 5)]:
    v = is_koszul(ModuleDescriptor(5, z))
    print(z, "KOSZUL" if v else "NOT KOSZUL")
    for c in v.certificate:
        print("    ", c.line())

upper, lower = koszul_boundary_slopes(5)
print("wedge between slopes", float(lower), "and", float(upper))

pts = koszul_region(5, 40, 200)
print(len(pts), "Koszul charges with p <= 40")

u = ulrich_data(ModuleDescriptor(5, (1, 5)))
print("(1,5): multiplicity", u.multiplicity, "generators", u.generators)

path = os.path.join(tempfile.gettempdir(), "koszul_n5.svg")
with open(path, "w") as fh:
    fh.write(region_svg(5, koszul_region(5, 40, 40), 40, 40))
print("wrote", path)
