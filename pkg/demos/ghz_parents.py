"""Three parent operators for the GHZ state, compared.

A parent of a state is a non-negative Hermitian operator annihilating
it.  This walk-through builds three different parents of
|0..0> + |1..1> and contrasts their Pauli-term counts, locality, and
kernel degeneracy:

1. the rank-one projector complement (trivially correct, exponentially
   many Pauli terms),
2. the conjugated-projector sum driven by the preparation circuit
   (n + 1 terms, unique kernel, but one n-body term),
3. the quadratic product-of-linear-forms penalty (2-body only, all-to-all
   couplings, twofold-degenerate kernel).
"""

from fractions import Fraction

from pbkernel import (
    StateVector,
    apply_circuit,
    conjugated_generators,
    dense_pauli_coefficients,
    ghz_circuit,
    ghz_quadratic,
    ising_form,
    kernel_dimension,
    pauli_cardinality,
    pbf_to_pauli,
    projector_parent,
    trivial_parent,
)

N = 3
ghz = StateVector.ghz_state(N)

print(f"=== GHZ parent constructions on n = {N} qubits ===\n")

# 1. rank-one complement: I - |psi><psi|
gamma = trivial_parent(StateVector.ghz_state(N, normalized=True))
coeffs = dense_pauli_coefficients(gamma)
print("1) projector complement I - |GHZ><GHZ|")
print(f"   Pauli cardinality: {len(coeffs)} (out of {4 ** N} possible strings)")
print("   every string:", " ".join(sorted(coeffs)))
print("   -> correct but the term count grows exponentially with n\n")

# 2. conjugated projectors: sum_l U |1><1|_l U+
circuit = ghz_circuit(N)
parent = projector_parent(circuit)
print("2) conjugated one-spin projectors along the preparation circuit")
for word, coeff in parent.terms():
    print(f"   {coeff} {word}")
print(f"   Pauli cardinality: {pauli_cardinality(parent)} = n + 1")
print(f"   annihilates GHZ exactly: {parent.apply(ghz).is_zero()}")
dim = kernel_dimension(conjugated_generators(circuit))
print(f"   kernel dimension from the symplectic rank: {dim} (unique ground state)")
print("   -> n + 1 terms, but the X...X term touches every qubit\n")

# 3. quadratic penalty (sum_k x_k)(sum_k (1 - x_k))
penalty = ghz_quadratic([1] * N, [1] * N)
print("3) product of one-body forms, lifted to a diagonal operator")
print(f"   f(x) = {penalty.to_text()}")
print(f"   kernel: {sorted(penalty.kernel())}")
form = ising_form(penalty)
couplings = ", ".join(f"J{l + 1}{k + 1}={v}" for (l, k), v in sorted(form.couplings.items()))
print(f"   Ising data: c0={form.constant}, h={[str(v) for v in form.fields]}, {couplings}")
print(f"   Pauli cardinality: {pauli_cardinality(pbf_to_pauli(penalty))}")
zero = pbf_to_pauli(penalty).apply(ghz)
print(f"   annihilates GHZ exactly: {zero.is_zero()}")
print("   -> 2-body with all-to-all couplings; kernel also contains |0..0> and |1..1>")
print("      separately, so this parent is degenerate")

# The scaling story behind construction 2:
print("\nterm counts of the conjugated-projector parent:")
for n in range(2, 11):
    print(f"   n = {n:2d}: {pauli_cardinality(projector_parent(ghz_circuit(n)))} terms")

# And the eigenvalue structure: U|x> has energy |x|_1.
print("\neigenvalue check on a few computational inputs (n = 3):")
for bits in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]:
    state = apply_circuit(circuit, StateVector.basis_state(N, bits))
    out = parent.apply(state)
    print(f"   H U|{''.join(map(str, bits))}> = {sum(bits)} * U|...>:",
          out == state.scaled(Fraction(sum(bits))))
