"""
Verifying and classifying twisted symplectic pairs
==================================================

A locally conformal symplectic (LCS) structure on a Lie algebra is a
nondegenerate two-form omega together with a closed one-form theta (the
Lee form) satisfying d(omega) = theta ^ omega.  The pair is "of the
first kind" when theta is nonzero on the infinitesimal automorphisms of
omega, "of the second kind" otherwise, and plain symplectic when theta
vanishes.
"""

from lcslie.corpus import default_corpus_path, load_corpus
from lcslie.lcs import check_lcs, classify_kind, is_exact, recover_lee_form

entries = {e.name: e for e in load_corpus(default_corpus_path())}

# A solvable example of the second kind.
entry = entries["rr3-1"]
g = entry.algebra()
omega, theta = entry.omega_form(), entry.theta_form()

result = check_lcs(g, omega, theta)
print("is LCS:", bool(result))

verdict = classify_kind(g, omega, theta)
print("kind:", verdict.kind)
print("automorphism algebra dimension:", len(verdict.automorphism_basis))

# The Lee form is determined by omega: solving d(omega) = theta ^ omega
# recovers it without being told.
print("recovered Lee form equals the recorded one:",
      recover_lee_form(g, omega) == theta)

# A nilpotent example is of the first kind, and its structure is exact:
# omega = d(eta) - theta ^ eta for an explicit one-form eta.
heis = entries["heis4"]
gh = heis.algebra()
eta = is_exact(gh, heis.omega_form(), heis.theta_form())
print("nilpotent example kind:", classify_kind(gh, heis.omega_form(), heis.theta_form()).kind)
print("primitive eta coefficients:", dict(eta.coeffs))

# Verification failures come with a reason and a witness.
bad = check_lcs(g, omega, heis.theta_form())
print("deliberately wrong Lee form:", bad.failure)
