"""
Twisted (Morse-Novikov) cohomology
==================================

Replacing the Chevalley-Eilenberg differential d by d_theta = d - theta^
gives a complex whose Betti numbers measure the twisted cohomology.
For a nonzero closed theta the twisted Euler characteristic still
vanishes, but the individual numbers can differ sharply from the
untwisted ones -- they can even vanish entirely.
"""

from lcslie.corpus import default_corpus_path, load_corpus
from lcslie.exterior import one_form
from lcslie.novikov import cohomology, is_exact_class

entries = {e.name: e for e in load_corpus(default_corpus_path())}

# Dimension 4: a solvable algebra where the twist kills the ends.
entry = entries["rr3-1"]
g = entry.algebra()
report = cohomology(g, entry.theta_form())
print(entry.name)
print("  betti:        ", report.betti)
print("  twisted betti:", report.twisted_betti)

# The nilpotent example has twisted cohomology zero in every degree.
heis = entries["heis4"]
report = cohomology(heis.algebra(), heis.theta_form())
print(heis.name)
print("  betti:        ", report.betti)
print("  twisted betti:", report.twisted_betti)

# Dimension 8.
big = entries["gprime"]
report = cohomology(big.algebra(), big.theta_form())
print(big.name)
print("  betti:        ", report.betti)
print("  twisted betti:", report.twisted_betti)
euler = sum((-1) ** k * b for k, b in enumerate(report.twisted_betti))
print("  twisted Euler characteristic:", euler)

# Exactness of a class is a rank question in the twisted complex: the
# Lee form itself is always d_theta-exact (it is d_theta of -1).
theta = heis.theta_form()
print("theta is d_theta-exact:", is_exact_class(heis.algebra(), theta, theta))

# With the zero twist the same machinery computes ordinary cohomology.
plain = cohomology(g, one_form(g.dim, [0] * g.dim))
print("zero twist reproduces the untwisted numbers:",
      plain.twisted_betti == plain.betti)
