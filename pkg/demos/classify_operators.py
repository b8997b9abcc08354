"""Walk through classifying a few finite-difference operators.

Builds one genuine hyperbolicity preserver, then breaks it in two different
ways and shows the analyzer rejecting each one, including a concrete witness
polynomial whose image leaves the real axis.
"""

import numpy as np

from fdzeros import analyze, apply_op, from_roots, make_operator, roots, witness_search

# A symmetric two-term operator: P(x - i) + P(x + i), written with shift
# lambda = i and support {-1, 1}.  Generating function t^2 + 1, roots +-i.
good = make_operator(1j, {-1: 1.0, 1: 1.0})
v = analyze(good)
print("operator 1: P(x-i) + P(x+i)")
print("  preserver:", v.hyperbolicity_preserver)
print("  conditions:", v.cond1_pure_imag_shift, v.cond2_symmetric_support,
      v.cond3_unimodular_roots, v.cond4_positive_product)

p = from_roots([-2.0, 0.5, 3.0])
image = apply_op(good, p)
print("  sample image roots:", np.round(sorted(r.real for r in roots(image).roots), 6))

# Break condition 1: give the shift a real part.  Same coefficients.
bad_shift = make_operator(1.0 + 1j, {-1: 1.0, 1: 1.0})
v = analyze(bad_shift)
print("\noperator 2: same terms, shift 1 + i")
print("  preserver:", v.hyperbolicity_preserver)
w = witness_search(bad_shift)
if w is not None:
    print("  witness:", w.label, " max |Im root| =", round(w.offense, 6))

# Break condition 3: move one generating root off the unit circle.
# Generating function (t - 1.1)(t + 1): roots 1.1 and -1.
bad_root = make_operator(1j, {-1: -1.1, 0: -0.1, 1: 1.0})
v = analyze(bad_root)
print("\noperator 3: generating roots {1.1, -1}")
print("  preserver:", v.hyperbolicity_preserver)
print("  root-modulus defect:", round(v.max_modulus_defect, 3))
w = witness_search(bad_root)
if w is not None:
    print("  witness:", w.label, " max |Im root| =", round(w.offense, 6))
