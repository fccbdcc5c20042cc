"""
Exact b-spectra of small named graphs
=====================================

The cube and the crown graphs skip values between chi and b; the Petersen
graph has b = chi even though m = 4.
"""

from bcontinuity import b_spectrum, validate
from bcontinuity.generators import crown, hypercube, petersen

# the 3-cube has b-colorings with 2 and 4 colors but none with 3
cube = hypercube(3)
report = b_spectrum(cube)
print("cube:", report.spectrum, "gaps", report.gaps)

# each witness is an ordinary Coloring and re-validates
four = report.witnesses[4]
print("4-coloring", four.to_text(), "b-vertices", sorted(validate(cube, four).b_vertices))

for n in (3, 4, 5):
    print(f"crown({n}):", b_spectrum(crown(n)).spectrum)

r = b_spectrum(petersen())
print(f"petersen: chi={r.chi} b={r.b} m={r.m}")
