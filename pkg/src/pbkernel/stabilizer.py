"""Clifford circuits, symplectic Pauli conjugation, projector parents.

A Pauli string is carried through a Clifford circuit in the binary
symplectic representation: an x bit-vector, a z bit-vector (bit i acts
on qubit i) and a tracked sign.  Conjugating the Hermitian string U P U+
gate by gate uses the standard tableau update rules, so circuits of any
width are handled without dense objects.

The projector-parent construction sums the conjugated one-spin
projectors U |1><1|_l U+ = (I - U Z_l U+)/2; the resulting operator is a
commuting Pauli sum annihilating U|0...0>, and the dimension of its
kernel is certified from the symplectic rank of the conjugated
generators (with sign consistency).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionError, EnumerationCapError, ParseError
from .pauli import PauliSum, StateVector, _mul_i_power

GATE_KINDS = ("h", "s", "x", "z", "cnot")

#: symbolic circuit width limit (monomial masks elsewhere are 64-bit)
MAX_QUBITS = 64

# exponent of i in the single-qubit product P(x1,z1) * P(x2,z2),
# with P(0,0)=I, P(1,0)=X, P(0,1)=Z, P(1,1)=Y
_PROD_PHASE = {
    (0, 0, 0, 0): 0, (0, 0, 1, 0): 0, (0, 0, 0, 1): 0, (0, 0, 1, 1): 0,
    (1, 0, 0, 0): 0, (0, 1, 0, 0): 0, (1, 1, 0, 0): 0,
    (1, 0, 1, 0): 0, (0, 1, 0, 1): 0, (1, 1, 1, 1): 0,
    (1, 0, 0, 1): 3, (0, 1, 1, 0): 1,
    (1, 0, 1, 1): 1, (1, 1, 1, 0): 3,
    (1, 1, 0, 1): 1, (0, 1, 1, 1): 3,
}


@dataclass(frozen=True)
class CliffordGate:
    kind: str
    target: int
    control: int | None = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if (self.kind == "cnot") != (self.control is not None):
            raise ValueError("cnot takes a control; single-qubit gates do not")
        if self.control is not None and self.control == self.target:
            raise ValueError("control and target must differ")


def h(q: int) -> CliffordGate:
    return CliffordGate("h", q)


def s(q: int) -> CliffordGate:
    return CliffordGate("s", q)


def x(q: int) -> CliffordGate:
    return CliffordGate("x", q)


def z(q: int) -> CliffordGate:
    return CliffordGate("z", q)


def cnot(control: int, target: int) -> CliffordGate:
    return CliffordGate("cnot", target, control)


@dataclass(frozen=True)
class CliffordCircuit:
    """Gate list applied left to right: the circuit unitary is g_m ... g_1."""

    n: int
    gates: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"circuit width must be 1..{MAX_QUBITS}, got {self.n}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            indices = (g.target,) if g.control is None else (g.target, g.control)
            for q in indices:
                if not 0 <= q < self.n:
                    raise ValueError(f"gate {g} out of range for {self.n} qubits")

    def followed_by(self, other: "CliffordCircuit") -> "CliffordCircuit":
        """Run self, then other (unitary U_other * U_self)."""
        if self.n != other.n:
            raise DimensionError(f"width mismatch: {self.n} vs {other.n}")
        return CliffordCircuit(self.n, self.gates + other.gates)

    def to_text(self) -> str:
        lines = [f"qubits {self.n}"]
        for g in self.gates:
            if g.kind == "cnot":
                lines.append(f"cnot {g.control + 1} {g.target + 1}")
            else:
                lines.append(f"{g.kind} {g.target + 1}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "CliffordCircuit":
        """Parse the 1-based text format ('qubits n' header, one gate per line)."""
        n = None
        gates = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip().lower()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "qubits":
                if n is not None or len(parts) != 2:
                    raise ParseError(f"line {lineno}: bad or repeated 'qubits' header")
                n = int(parts[1])
                continue
            if n is None:
                raise ParseError(f"line {lineno}: 'qubits n' header must come first")
            if parts[0] == "cnot":
                if len(parts) != 3:
                    raise ParseError(f"line {lineno}: cnot takes two indices")
                gates.append(cnot(int(parts[1]) - 1, int(parts[2]) - 1))
            elif parts[0] in GATE_KINDS:
                if len(parts) != 2:
                    raise ParseError(f"line {lineno}: {parts[0]} takes one index")
                gates.append(CliffordGate(parts[0], int(parts[1]) - 1))
            else:
                raise ParseError(f"line {lineno}: unknown gate {parts[0]!r}")
        if n is None:
            raise ParseError("missing 'qubits n' header")
        return cls(n, tuple(gates))


@dataclass(frozen=True)
class SymplecticPauli:
    """Hermitian Pauli string as (x bits, z bits, sign); bit i = qubit i."""

    n: int
    x: int = 0
    z: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +-1, got {self.sign}")
        if self.x >> self.n or self.z >> self.n or self.x < 0 or self.z < 0:
            raise ValueError("x/z bits exceed the qubit count")

    @classmethod
    def from_letters(cls, letters: str, sign: int = 1) -> "SymplecticPauli":
        xbits = zbits = 0
        for i, ch in enumerate(letters):
            if ch in "XY":
                xbits |= 1 << i
            if ch in "ZY":
                zbits |= 1 << i
            if ch not in "IXYZ":
                raise ValueError(f"bad Pauli letter {ch!r}")
        return cls(len(letters), xbits, zbits, sign)

    def letters(self) -> str:
        out = []
        for i in range(self.n):
            xb, zb = (self.x >> i) & 1, (self.z >> i) & 1
            out.append("IXZY"[xb + 2 * zb])
        return "".join(out)

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def commutes(self, other: "SymplecticPauli") -> bool:
        if self.n != other.n:
            raise DimensionError(f"arity mismatch: {self.n} vs {other.n}")
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    def __mul__(self, other: "SymplecticPauli") -> "SymplecticPauli":
        """Exact product; defined for commuting pairs (real sign)."""
        if self.n != other.n:
            raise DimensionError(f"arity mismatch: {self.n} vs {other.n}")
        phase = 0
        for i in range(self.n):
            key = ((self.x >> i) & 1, (self.z >> i) & 1, (other.x >> i) & 1, (other.z >> i) & 1)
            phase += _PROD_PHASE[key]
        phase &= 3
        if phase & 1:
            raise ValueError("product of anticommuting strings has imaginary phase")
        sign = self.sign * other.sign * (1 if phase == 0 else -1)
        return SymplecticPauli(self.n, self.x ^ other.x, self.z ^ other.z, sign)


def _conjugate_gate(gate: CliffordGate, xbits: int, zbits: int, sign: int):
    t = 1 << gate.target
    if gate.kind == "h":
        if xbits & zbits & t:
            sign = -sign
        xt, zt = xbits & t, zbits & t
        xbits = (xbits & ~t) | zt
        zbits = (zbits & ~t) | xt
    elif gate.kind == "s":
        if xbits & zbits & t:
            sign = -sign
        zbits ^= xbits & t
    elif gate.kind == "x":
        if zbits & t:
            sign = -sign
    elif gate.kind == "z":
        if xbits & t:
            sign = -sign
    else:  # cnot
        c = 1 << gate.control
        xc, zc = bool(xbits & c), bool(zbits & c)
        xt, zt = bool(xbits & t), bool(zbits & t)
        if xc and zt and (xt == zc):
            sign = -sign
        if xc:
            xbits ^= t
        if zt:
            zbits ^= c
    return xbits, zbits, sign


def conjugate(circuit: CliffordCircuit, p: SymplecticPauli) -> SymplecticPauli:
    """U p U+ for the circuit unitary U, with exact sign tracking."""
    if circuit.n != p.n:
        raise DimensionError(f"arity mismatch: circuit {circuit.n} vs Pauli {p.n}")
    xbits, zbits, sign = p.x, p.z, p.sign
    for gate in circuit.gates:
        xbits, zbits, sign = _conjugate_gate(gate, xbits, zbits, sign)
    return SymplecticPauli(p.n, xbits, zbits, sign)


def conjugate_sum(circuit: CliffordCircuit, hsum: PauliSum) -> PauliSum:
    """Termwise conjugation of a Pauli sum, signs folded into coefficients."""
    if circuit.n != hsum.n:
        raise DimensionError(f"arity mismatch: circuit {circuit.n} vs sum {hsum.n}")
    terms: dict = {}
    for word, coeff in hsum.terms():
        q = conjugate(circuit, SymplecticPauli.from_letters(word))
        w = q.letters()
        c = terms.get(w, Fraction(0)) + q.sign * coeff
        if c:
            terms[w] = c
        else:
            terms.pop(w, None)
    return PauliSum(circuit.n, terms)


def conjugated_generators(circuit: CliffordCircuit) -> list:
    """The images U Z_l U+ of the single-qubit Z generators."""
    return [
        conjugate(circuit, SymplecticPauli(circuit.n, 0, 1 << l))
        for l in range(circuit.n)
    ]


def projector_parent(circuit: CliffordCircuit) -> PauliSum:
    """Sum of conjugated projectors: sum_l (I - U Z_l U+) / 2.

    The n conjugated generators commute pairwise, the spectrum is
    {0, 1, .., n}, and U|0..0> spans the kernel when the generators are
    independent.
    """
    n = circuit.n
    half = Fraction(1, 2)
    total = PauliSum.identity(n, Fraction(n, 2))
    for p in conjugated_generators(circuit):
        total = total + PauliSum(n, {p.letters(): -half * p.sign})
    return total


def ghz_circuit(n: int) -> CliffordCircuit:
    """Hadamard on qubit 0 followed by the CNOT ladder 0->1->...->n-1."""
    if n < 2:
        raise ValueError(f"GHZ circuit needs n > 1, got {n}")
    gates = [h(0)] + [cnot(j, j + 1) for j in range(n - 1)]
    return CliffordCircuit(n, tuple(gates))


def kernel_dimension(generators: Sequence[SymplecticPauli]) -> int:
    """Dimension of the joint +1 eigenspace of commuting signed Paulis.

    Gaussian elimination over GF(2) with exact sign bookkeeping: a
    dependency that multiplies to -identity forces an empty kernel; each
    independent generator halves the space.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise DimensionError("generators act on different qubit counts")
    for i, g1 in enumerate(gens):
        for g2 in gens[i + 1:]:
            if not g1.commutes(g2):
                raise ValueError(f"generators {g1.letters()} and {g2.letters()} anticommute")
    pivots: dict = {}
    for g in gens:
        p = g
        while True:
            v = (p.x << n) | p.z
            if v == 0:
                if p.sign == -1:
                    return 0  # group contains -identity
                break
            lead = v.bit_length() - 1
            if lead in pivots:
                p = p * pivots[lead]
            else:
                pivots[lead] = p
                break
    return 1 << (n - len(pivots))


def apply_circuit(circuit: CliffordCircuit, v: StateVector) -> StateVector:
    """Exact gate-by-gate statevector application.

    Hadamards are applied unnormalized (|0> -> |0> + |1>), so the result
    equals 2^(k/2) U|v> with k the number of H gates; kernel membership
    and eigenvalue checks are scale-invariant, and amplitudes stay
    rational.  S gates introduce exact factors of i.
    """
    if circuit.n != v.n:
        raise DimensionError(f"arity mismatch: circuit {circuit.n} vs state {v.n}")
    n = circuit.n
    amps = list(v.amps)
    size = 1 << n
    for gate in circuit.gates:
        t = 1 << (n - 1 - gate.target)
        if gate.kind == "h":
            for idx in range(size):
                if not idx & t:
                    a, b = amps[idx], amps[idx | t]
                    amps[idx], amps[idx | t] = a + b, a - b
        elif gate.kind == "s":
            for idx in range(size):
                if idx & t:
                    amps[idx] = _mul_i_power(amps[idx], 1)
        elif gate.kind == "x":
            for idx in range(size):
                if not idx & t:
                    amps[idx], amps[idx | t] = amps[idx | t], amps[idx]
        elif gate.kind == "z":
            for idx in range(size):
                if idx & t:
                    amps[idx] = -amps[idx]
        else:  # cnot
            c = 1 << (n - 1 - gate.control)
            for idx in range(size):
                if idx & c and not idx & t:
                    amps[idx], amps[idx | t] = amps[idx | t], amps[idx]
    return StateVector(n, amps)


def trivial_parent(v: StateVector, tol: float = 1e-9) -> np.ndarray:
    """The rank-one complement I - |v><v| as a dense Hermitian matrix.

    Requires a normalized input; the result G satisfies G v = 0 and
    G^2 = G, but its Pauli expansion generally has exponentially many
    terms, which is the point of measuring it.
    """
    if v.n > 10:
        raise EnumerationCapError(f"dense projector at arity {v.n} is over cap 10")
    vec = v.to_numpy()
    if abs(np.linalg.norm(vec) - 1.0) > tol:
        raise ValueError(f"state norm {np.linalg.norm(vec):.6f} is not 1")
    return np.eye(len(vec), dtype=complex) - np.outer(vec, vec.conj())
