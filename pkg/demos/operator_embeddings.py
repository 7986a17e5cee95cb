"""From penalty polynomials to operators and states, and back.

A pseudo-Boolean function f lifts two ways: to the diagonal operator
with f(x) on the diagonal, and to the state with amplitude f(x) on |x>.
The two lifts are tied together by the uniform superposition, kernels
map to kernels, and the Z-basis expansion of the diagonal operator is an
exact change of representation.  Everything below is exact rational
arithmetic end to end.
"""

from fractions import Fraction

from pbkernel import (
    StateVector,
    boolean_to_spin,
    embed_diagonal,
    embed_state,
    ising_form,
    parse,
    pauli_to_pbf,
    pbf_to_pauli,
    spin_to_boolean,
    support,
)

f = parse("1 - x1 - x2 - x3 + x2*x3 + x1*x3 + x1*x2")
print(f"penalty: f = {f.to_text()}")
print(f"kernel:  {sorted(''.join(map(str, x)) for x in f.kernel())}\n")

print("=== diagonal operator and state embeddings ===\n")
H = embed_diagonal(f)
psi = embed_state(f)
print(f"diag(H_f)      = {[str(v) for v in H.diag]}")
print(f"amplitudes of |psi_f> are the same numbers: {psi.amps == H.diag}")

plus = StateVector.plus_state(3)  # unnormalized: all amplitudes 1
print(f"H_f |+++> (unnormalized) equals |psi_f> exactly: {H.apply(plus) == psi}")

sup = support(psi)
print(f"support of |psi_f| = complement of ker f: "
      f"{sorted(''.join(map(str, x)) for x in sup.members)}\n")

print("=== Z-basis expansion ===\n")
ps = pbf_to_pauli(f)
for word, coeff in ps.terms():
    print(f"   {coeff} {word}")
print(f"round trip back to the polynomial is exact: {pauli_to_pbf(ps) == f}")

form = ising_form(f)
print(f"fields h = {[str(v) for v in form.fields]}, couplings "
      f"{{(l,k): J}} = { {k: str(v) for k, v in sorted(form.couplings.items())} }\n")

print("=== spin variables ===\n")
g = boolean_to_spin(f)
print(f"f with x = (1 - z)/2 substituted: {g.to_text(var='z')}")
print(f"inverse substitution recovers f exactly: {spin_to_boolean(g) == f}")

quad = parse("x1*x2")
print(f"\nsingle pair x1*x2 -> {boolean_to_spin(quad).to_text(var='z')}")
print("(the familiar (1 - z1 - z2 + z1 z2)/4)")

print("\n=== exactness matters ===\n")
third = Fraction(1, 3) * parse("x1", arity=1)
print(f"f = x1/3 at x1=1: {third.eval((1,))} (a float pipeline would give 0.3333...)")
print(f"kernel membership is an exact zero test: kernel = {third.kernel()}")
