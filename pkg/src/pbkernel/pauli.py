"""Pauli-string sums, diagonal/state embeddings, and exact statevectors.

Operators are real-weighted sums of n-qubit Pauli strings.  A string is
a length-n text of letters I/X/Y/Z; letter position i acts on qubit i,
and qubit 0 occupies the MOST significant bit of a basis-state index
(matching the assignment convention of :mod:`pbkernel.pbf`).  Signs are
canonicalized into the rational coefficients, which keeps every sum
Hermitian by construction.

Statevector amplitudes stay exact whenever the inputs are exact: real
amplitudes are Fractions and the factors of i introduced by Y letters
(or S gates) are handled by :class:`ExactComplex`, a complex number with
Fraction components.  Float and complex amplitudes are also accepted and
simply propagate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, EnumerationCapError, NotDiagonalError, ParseError
from .pbf import PseudoBoolean, _coerce, index_of

#: dense objects (statevectors, diagonals) are capped at 2^16 entries
STATE_CAP = 16

PAULI_LETTERS = "IXYZ"

_PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class ExactComplex:
    """Complex number with exact rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        if isinstance(other, ExactComplex):
            return ExactComplex(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return ExactComplex(self.re + other, self.im)
        return complex(self) + other

    __radd__ = __add__

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ExactComplex):
            return ExactComplex(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return ExactComplex(self.re * other, self.im * other)
        return complex(self) * other

    __rmul__ = __mul__

    def conjugate(self):
        return ExactComplex(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, ExactComplex):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return complex(self) == other

    def __hash__(self):
        return hash(complex(self)) if self.im else hash(self.re)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        return f"ExactComplex({self.re}, {self.im})"


def _mul_i_power(value, k: int):
    """value * i**k, staying exact for Fraction / ExactComplex inputs."""
    k &= 3
    if k == 0:
        return value
    if isinstance(value, (complex, float)):
        return value * (1j**k)
    if k == 2:
        return -value
    if isinstance(value, ExactComplex):
        re, im = value.re, value.im
    else:
        re, im = value, Fraction(0)
    if k == 1:
        return ExactComplex(-im, re)
    return ExactComplex(im, -re)


def _amp_is_zero(value, tol: float = 0.0) -> bool:
    if isinstance(value, (int, Fraction)):
        return value == 0
    if isinstance(value, ExactComplex):
        return value.re == 0 and value.im == 0
    return abs(value) <= tol


class StateVector:
    """Dense 2^n amplitude vector; exact scalars whenever inputs are exact."""

    __slots__ = ("n", "amps")

    def __init__(self, arity: int, amps: Sequence):
        if arity < 0 or arity > STATE_CAP:
            raise EnumerationCapError(f"statevector arity {arity} outside 0..{STATE_CAP}")
        if len(amps) != 1 << arity:
            raise DimensionError(f"need {1 << arity} amplitudes, got {len(amps)}")
        self.n = arity
        self.amps = list(amps)

    @classmethod
    def zeros(cls, arity: int) -> "StateVector":
        return cls(arity, [Fraction(0)] * (1 << arity))

    @classmethod
    def basis_state(cls, arity: int, x) -> "StateVector":
        idx = x if isinstance(x, int) else index_of(x)
        amps = [Fraction(0)] * (1 << arity)
        amps[idx] = Fraction(1)
        return cls(arity, amps)

    @classmethod
    def plus_state(cls, arity: int, normalized: bool = False) -> "StateVector":
        """Uniform superposition; integer amplitudes 1 unless normalized.

        The unnormalized version is 2^(n/2) times the unit-norm plus
        state, which keeps the amplitudes exact.
        """
        if normalized:
            a = 2.0 ** (-arity / 2)
            return cls(arity, [a] * (1 << arity))
        return cls(arity, [Fraction(1)] * (1 << arity))

    @classmethod
    def ghz_state(cls, arity: int, normalized: bool = False) -> "StateVector":
        """|0..0> + |1..1>, rational amplitudes unless normalized."""
        if arity < 1:
            raise ValueError("GHZ state needs at least one qubit")
        end = 2.0 ** (-1 / 2) if normalized else Fraction(1)
        amps = [end] + [Fraction(0)] * ((1 << arity) - 2) + [end]
        return cls(arity, amps)

    def amplitude(self, x) -> object:
        idx = x if isinstance(x, int) else index_of(x)
        return self.amps[idx]

    def norm(self) -> float:
        return float(np.linalg.norm(self.to_numpy()))

    def to_numpy(self) -> np.ndarray:
        return np.array([complex(a) for a in self.amps])

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(_amp_is_zero(a, tol) for a in self.amps)

    def scaled(self, c) -> "StateVector":
        return StateVector(self.n, [c * a for a in self.amps])

    def __add__(self, other: "StateVector") -> "StateVector":
        if self.n != other.n:
            raise DimensionError(f"arity mismatch: {self.n} vs {other.n}")
        return StateVector(self.n, [a + b for a, b in zip(self.amps, other.amps)])

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + other.scaled(-1)

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n == other.n and all(
            a == b for a, b in zip(self.amps, other.amps)
        )

    def approx_equal(self, other: "StateVector", tol: float = 1e-9) -> bool:
        return self.n == other.n and bool(
            np.allclose(self.to_numpy(), other.to_numpy(), atol=tol)
        )

    def __repr__(self):
        return f"StateVector(n={self.n})"


class DiagonalOperator:
    """Diagonal operator with exact rational entries, state-indexed."""

    __slots__ = ("n", "diag")

    def __init__(self, arity: int, diag: Sequence):
        if arity < 0 or arity > STATE_CAP:
            raise EnumerationCapError(f"diagonal arity {arity} outside 0..{STATE_CAP}")
        if len(diag) != 1 << arity:
            raise DimensionError(f"need {1 << arity} entries, got {len(diag)}")
        self.n = arity
        self.diag = [_coerce(v) for v in diag]

    def apply(self, v: StateVector) -> StateVector:
        if v.n != self.n:
            raise DimensionError(f"arity mismatch: {self.n} vs {v.n}")
        return StateVector(self.n, [d * a for d, a in zip(self.diag, v.amps)])

    def kernel_indices(self) -> list:
        return [i for i, d in enumerate(self.diag) if d == 0]

    def __eq__(self, other):
        if not isinstance(other, DiagonalOperator):
            return NotImplemented
        return self.n == other.n and self.diag == other.diag

    def __repr__(self):
        return f"DiagonalOperator(n={self.n})"


def embed_diagonal(f: PseudoBoolean, cap: int = STATE_CAP) -> DiagonalOperator:
    """H_f with <x|H_f|x> = f(x)."""
    if f.n > cap:
        raise EnumerationCapError(f"diagonal embedding at arity {f.n} exceeds cap {cap}")
    return DiagonalOperator(f.n, f.to_disjoint_form(cap=cap))


def embed_state(f: PseudoBoolean, cap: int = STATE_CAP) -> StateVector:
    """The unnormalized state with amplitude f(x) on |x>."""
    if f.n > cap:
        raise EnumerationCapError(f"state embedding at arity {f.n} exceeds cap {cap}")
    return StateVector(f.n, f.to_disjoint_form(cap=cap))


class PauliSum:
    """Hermitian sum of Pauli strings with exact rational coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, arity: int, terms: Mapping[str, object] | None = None):
        self.n = int(arity)
        data = {}
        if terms:
            for letters, coeff in terms.items():
                word = "".join(letters)
                if len(word) != self.n or any(ch not in PAULI_LETTERS for ch in word):
                    raise ValueError(f"bad Pauli word {word!r} for {self.n} qubits")
                c = _coerce(coeff)
                if c:
                    data[word] = c
        self._terms = data

    @classmethod
    def zero(cls, arity: int) -> "PauliSum":
        return cls(arity, {})

    @classmethod
    def identity(cls, arity: int, coeff=1) -> "PauliSum":
        return cls(arity, {"I" * arity: coeff})

    def terms(self) -> list:
        """Sorted list of (letters, coefficient) pairs."""
        return sorted(self._terms.items())

    def coefficient(self, letters: str) -> Fraction:
        return self._terms.get("".join(letters), Fraction(0))

    def is_diagonal(self) -> bool:
        return all(set(w) <= {"I", "Z"} for w in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if not isinstance(other, PauliSum):
            return NotImplemented
        if self.n != other.n:
            raise DimensionError(f"arity mismatch: {self.n} vs {other.n}")
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w, Fraction(0)) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        out = PauliSum(self.n)
        out._terms = terms
        return out

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + (-1) * other

    def __mul__(self, scalar) -> "PauliSum":
        c = _coerce(scalar)
        out = PauliSum(self.n)
        if c:
            out._terms = {w: c * v for w, v in self._terms.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self):
        return f"PauliSum(n={self.n}, terms={len(self._terms)})"

    def apply(self, v: StateVector) -> StateVector:
        """Matrix-free action: each string is a bit-flip permutation with
        a +-1 / +-i phase per basis state."""
        if v.n != self.n:
            raise DimensionError(f"arity mismatch: {self.n} vs {v.n}")
        n = self.n
        size = 1 << n
        out = [Fraction(0)] * size
        for word, coeff in self._terms.items():
            flip = 0
            zmask = 0
            y_count = 0
            for i, ch in enumerate(word):
                bit = 1 << (n - 1 - i)
                if ch in "XY":
                    flip |= bit
                if ch in "ZY":
                    zmask |= bit
                if ch == "Y":
                    y_count += 1
            for idx, amp in enumerate(v.amps):
                if _amp_is_zero(amp):
                    continue
                k = (y_count + 2 * (idx & zmask).bit_count()) & 3
                out[idx ^ flip] = out[idx ^ flip] + _mul_i_power(coeff * amp, k)
        return StateVector(n, out)

    def to_dense(self) -> np.ndarray:
        """Dense complex matrix; desk-scale only."""
        if self.n > 12:
            raise EnumerationCapError(f"dense matrix at arity {self.n} is over cap")
        size = 1 << self.n
        out = np.zeros((size, size), dtype=complex)
        for word, coeff in self._terms.items():
            m = np.array([[1.0]], dtype=complex)
            for ch in word:
                m = np.kron(m, _PAULI_MATRICES[ch])
            out += float(coeff) * m
        return out

    def to_text(self) -> str:
        """One term per line, '<coeff> <letters>', sorted by letters."""
        return "\n".join(f"{c} {w}" for w, c in self.terms())

    @classmethod
    def from_text(cls, text: str, arity: int | None = None) -> "PauliSum":
        terms: dict = {}
        n = arity
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected '<coeff> <letters>'")
            coeff, word = Fraction(parts[0]), parts[1]
            if n is None:
                n = len(word)
            if len(word) != n or any(ch not in PAULI_LETTERS for ch in word):
                raise ParseError(f"line {lineno}: bad Pauli word {word!r}")
            terms[word] = terms.get(word, Fraction(0)) + coeff
        if n is None:
            raise ParseError("no terms found")
        return cls(n, terms)


def pauli_cardinality(h: PauliSum) -> int:
    """Number of nonzero terms in the Pauli-basis expansion (identity counts)."""
    return len(h)


def pbf_to_pauli(f: PseudoBoolean) -> PauliSum:
    """Diagonal Z-basis expansion via x_i -> (I - Z_i)/2 per monomial."""
    n = f.n
    acc: dict = {}
    for mask, coeff in f.masked_terms().items():
        scale = coeff / (1 << mask.bit_count())
        sub = mask
        while True:
            sign = -1 if sub.bit_count() & 1 else 1
            acc[sub] = acc.get(sub, Fraction(0)) + sign * scale
            if sub == 0:
                break
            sub = (sub - 1) & mask
    terms = {}
    for zmask, c in acc.items():
        if c:
            word = "".join("Z" if zmask & (1 << i) else "I" for i in range(n))
            terms[word] = c
    out = PauliSum(n)
    out._terms = terms
    return out


def pauli_to_pbf(h: PauliSum) -> PseudoBoolean:
    """Exact inverse of :func:`pbf_to_pauli`; rejects X/Y letters."""
    if not h.is_diagonal():
        raise NotDiagonalError("operator has X or Y letters; not diagonal")
    n = h.n
    acc: dict = {}
    for word, coeff in h._terms.items():
        zmask = 0
        for i, ch in enumerate(word):
            if ch == "Z":
                zmask |= 1 << i
        # Z_T = prod (1 - 2 x_i): expand over subsets of T
        sub = zmask
        while True:
            c = coeff * Fraction((-2) ** sub.bit_count())
            acc[sub] = acc.get(sub, Fraction(0)) + c
            if sub == 0:
                break
            sub = (sub - 1) & zmask
    return PseudoBoolean(n, acc)


class IsingForm(NamedTuple):
    """Coefficients of a quadratic Z-basis expansion."""

    constant: Fraction
    fields: tuple  # h_l per qubit
    couplings: dict  # (l, k) with l < k -> J_lk


def ising_form(f: PseudoBoolean) -> IsingForm:
    """Fields and couplings of a degree-<=2 function's Z expansion."""
    if f.degree > 2:
        raise ValueError(f"degree {f.degree} > 2; not an Ising-form function")
    ps = pbf_to_pauli(f)
    n = f.n
    constant = ps.coefficient("I" * n)
    fields = []
    for l in range(n):
        word = "".join("Z" if i == l else "I" for i in range(n))
        fields.append(ps.coefficient(word))
    couplings = {}
    for l in range(n):
        for k in range(l + 1, n):
            word = "".join("Z" if i in (l, k) else "I" for i in range(n))
            c = ps.coefficient(word)
            if c:
                couplings[(l, k)] = c
    return IsingForm(constant, tuple(fields), couplings)


def dense_pauli_coefficients(mat: np.ndarray, tol: float = 1e-12) -> dict:
    """Pauli-basis coefficients of a dense Hermitian matrix.

    Brute-force trace inner products over all 4^n strings; intended for
    small n (the trivial-construction cardinality measurements).
    """
    size = mat.shape[0]
    n = size.bit_length() - 1
    if 1 << n != size or mat.shape != (size, size):
        raise DimensionError(f"matrix shape {mat.shape} is not square 2^n")
    if n > 6:
        raise EnumerationCapError(f"4^{n} trace inner products is over cap")
    coeffs = {}
    words = [""]
    for _ in range(n):
        words = [w + ch for w in words for ch in PAULI_LETTERS]
    for word in words:
        m = np.array([[1.0]], dtype=complex)
        for ch in word:
            m = np.kron(m, _PAULI_MATRICES[ch])
        c = np.trace(m @ mat) / size
        if abs(c) > tol:
            coeffs[word] = complex(c)
    return coeffs
