"""Root systems of symmetric penalty functions.

A symmetric pseudo-Boolean function depends only on the Hamming weight
of its input, so substituting X = x_1 + ... + x_n turns it into a
univariate polynomial whose roots classify the kernel: a bit string is
annihilated exactly when its weight hits a root.  This script walks the
three worked families: the all-equal indicator (delta), parity (XOR),
and the symmetric Ising model.
"""

from fractions import Fraction

from pbkernel import (
    WeightProfile,
    canonical_coefficients,
    canonical_to_power,
    delta_product_form,
    detect_symmetric,
    factorize,
    parse,
    profile_to_pbf,
    stirling_matrix,
    symmetric_ising,
)

print("=== delta on three variables ===\n")
delta = parse("1 - x1 - x2 - x3 + x2*x3 + x1*x3 + x1*x2")
profile = detect_symmetric(delta).profile
print(f"weight profile: {[str(v) for v in profile.values]}  (1 on 000 and 111)")

a = canonical_coefficients(delta)
print(f"canonical coefficients a_j: {[str(v) for v in a]}")
form = canonical_to_power(a)
print(f"power coefficients c_l:     {[str(v) for v in form.power_coeffs]}")
print("change of basis a = B c with the Stirling matrix")
for row in stirling_matrix(3):
    print("   ", [str(v) for v in row])

rf = factorize(form)
print(f"\nfactored: {rf.scale} * (X - {rf.roots[0]}) * (X - {rf.roots[1]})")
print(f"kernel weights are the integer roots: {sorted({sum(x) for x in delta.kernel()})}")

print("\n=== parity (XOR) ===\n")
xor3 = profile_to_pbf(WeightProfile(3, [0, 1, 0, 1]))
a3 = canonical_coefficients(xor3)
print(f"3-variable canonical coefficients: {[str(v) for v in a3]}  (pattern (-2)^(j-1))")
rf3 = factorize(canonical_to_power(a3))
print(f"roots: {[str(r) for r in rf3.roots]} with K = {rf3.scale}")
print("the fractional root 5/2 lies outside the Boolean weights, so only")
print("weights 0 and 2 are annihilated:",
      sorted({sum(x) for x in xor3.kernel()}))

print("\n=== the k-variable delta product form ===\n")
print("((-1)^(k-1)/(k-1)!) prod_{j=1..k-1} (X - j), evaluated at each weight:")
for k in range(2, 7):
    values = delta_product_form(k).profile().values
    note = "" if values[-1] == 1 else "   <- sign flip at full weight (even k)"
    print(f"   k = {k}: {[str(v) for v in values]}{note}")
print("the kernel (weights 1..k-1) is right for every k, but for even k the")
print("expansion is -1 rather than +1 on the all-ones string, so it is not")
print("a non-negative penalty there; the degree-k indicator itself is fine.")

print("\n=== symmetric Ising model ===\n")
J, h = Fraction(2), Fraction(-1, 2)
model = symmetric_ising(J, h, 4)
print(f"J = {J}, h = {h}, n = 4:  f = {model.to_text()}")
rfi = factorize(canonical_to_power(canonical_coefficients(model)))
print(f"roots: {[str(r) for r in rfi.roots]}  (0 and 1 - 4h/J)")
print("kernel lies on those weight hyperplanes:",
      sorted({sum(x) for x in model.kernel()}))
table = model.to_disjoint_form()
print(f"note the model dips below zero between the hyperplanes: min = {min(table)}")
