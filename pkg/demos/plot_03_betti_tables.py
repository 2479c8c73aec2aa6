"""
Stable Betti tables from cohomology
===================================

For n >= 4 the Betti numbers of the module attached to F[l] are cohomology
dimensions of F twisted by the K_j. Everything reduces to the integer
sequence s_j = p d_j - q r_j, and the table lives on three neighbouring
diagonals.
"""
from ellmcm import ModuleDescriptor, betti_table, shape_report
from ellmcm.kbundle import s_window

desc = ModuleDescriptor(5, (1, 4))
print("s_-3..s_2:", s_window(desc.sseq, -3, 2))
print(betti_table(desc, (-3, 6)).render_text())
for line in shape_report(desc).summary_lines():
    print("  ", line)

# s_1 = 0 and F special there: two cohomology groups at once, a double point
special = ModuleDescriptor(5, (1, 5), 0, [1])
print()
print(betti_table(special, (-3, 4)).render_text())
for line in shape_report(special).summary_lines():
    print("  ", line)

# a sign change on the nonpositive side moves the table to another diagonal
print()
jump = ModuleDescriptor(6, (4, 5))
print("s_-4..s_1:", s_window(jump.sseq, -4, 1))
print(betti_table(jump, (-4, 6)).render_text())
for line in shape_report(jump).summary_lines():
    print("  ", line)
