"""Exact-arithmetic pseudo-Boolean polynomials.

A pseudo-Boolean function f : {0,1}^n -> Q is stored as its unique
multilinear polynomial: a sparse map from variable subsets to nonzero
rational coefficients.  Subsets are encoded as bitmasks with bit i
standing for variable i, so idempotence (x*x = x) is subset union and
multilinearity is structural.

Conventions used throughout the package:

* variables carry 0-based indices in the Python API; the text and JSON
  formats are 1-based (``x1`` is variable 0),
* an assignment is a tuple of 0/1 ints, entry i = value of variable i,
* tables indexed by computational-basis state (disjoint-form tables,
  operator diagonals, amplitude vectors) put variable 0 in the MOST
  significant bit of the index: ``index_of((1,0,0)) == 4``.

All coefficients are `fractions.Fraction`; every mutation prunes zero
coefficients so structural equality coincides with semantic equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import DimensionError, EnumerationCapError

#: Hard limit on the number of variables (bitmask keys stay word-sized).
MAX_ARITY = 64

#: Default cap for brute-force enumeration oracles (kernel, non-negativity,
#: disjoint tables).  2^20 exact evaluations is still desk scale.
DEFAULT_ENUMERATION_CAP = 20


def index_of(bits: Sequence[int]) -> int:
    """Basis-state index of an assignment (variable 0 = most significant bit)."""
    idx = 0
    for b in bits:
        idx = (idx << 1) | (b & 1)
    return idx


def bits_of(index: int, n: int) -> tuple:
    """Inverse of :func:`index_of` for arity ``n``."""
    return tuple((index >> (n - 1 - i)) & 1 for i in range(n))


def _bits_of_varmask(mask: int, n: int) -> tuple:
    return tuple((mask >> i) & 1 for i in range(n))


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise EnumerationCapError(f"{what} would enumerate 2^{n} points (cap 2^{cap})")


class NonNegativity(NamedTuple):
    """Result of an exhaustive non-negativity scan."""

    ok: bool
    witness: tuple | None  # an assignment with f(x) < 0, if any


class PseudoBoolean:
    """Sparse multilinear polynomial over exact rationals."""

    __slots__ = ("n", "_terms")

    def __init__(self, arity: int, masked_terms: Mapping[int, Fraction] | None = None):
        if arity < 0 or arity > MAX_ARITY:
            raise ValueError(f"arity must be in 0..{MAX_ARITY}, got {arity}")
        self.n = int(arity)
        terms = {}
        if masked_terms:
            for mask, coeff in masked_terms.items():
                c = _coerce(coeff)
                if c == 0:
                    continue
                if mask < 0 or mask >> self.n:
                    raise ValueError(f"monomial mask {mask:#x} uses variables >= arity {self.n}")
                terms[mask] = c
        self._terms = terms

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "PseudoBoolean":
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, value) -> "PseudoBoolean":
        return cls(arity, {0: _coerce(value)})

    @classmethod
    def variable(cls, arity: int, i: int) -> "PseudoBoolean":
        if not 0 <= i < arity:
            raise ValueError(f"variable index {i} out of range for arity {arity}")
        return cls(arity, {1 << i: Fraction(1)})

    @classmethod
    def from_terms(cls, arity: int, terms: Mapping[Iterable[int], object]) -> "PseudoBoolean":
        """Build from a map {iterable of variable indices: coefficient}."""
        masked = {}
        for vars_, coeff in terms.items():
            mask = 0
            for i in vars_:
                if not 0 <= i < arity:
                    raise ValueError(f"variable index {i} out of range for arity {arity}")
                mask |= 1 << i
            masked[mask] = masked.get(mask, Fraction(0)) + _coerce(coeff)
        return cls(arity, masked)

    @classmethod
    def from_disjoint_form(cls, table: Sequence) -> "PseudoBoolean":
        """Unique multilinear polynomial with the given value table.

        ``table[index_of(x)] == f(x)`` for every assignment x; the length
        must be a power of two.  This is Moebius inversion over the subset
        lattice.
        """
        size = len(table)
        if size == 0 or size & (size - 1):
            raise ValueError(f"table length {size} is not a power of two")
        n = size.bit_length() - 1
        # reindex: position in varmask packing (bit i <-> variable i)
        vals = [Fraction(0)] * size
        for idx in range(size):
            mask = 0
            for i in range(n):
                if (idx >> (n - 1 - i)) & 1:
                    mask |= 1 << i
            vals[mask] = _coerce(table[idx])
        for i in range(n):
            bit = 1 << i
            for mask in range(size):
                if mask & bit:
                    vals[mask] -= vals[mask ^ bit]
        return cls(n, {mask: c for mask, c in enumerate(vals) if c != 0})

    # -- inspection ----------------------------------------------------

    def terms(self):
        """Sorted list of (variable-index tuple, coefficient) pairs."""
        out = []
        for mask in sorted(self._terms, key=lambda m: (m.bit_count(), m)):
            vars_ = tuple(i for i in range(self.n) if mask & (1 << i))
            out.append((vars_, self._terms[mask]))
        return out

    def masked_terms(self) -> dict:
        """Copy of the internal {mask: coefficient} map."""
        return dict(self._terms)

    def coefficient(self, vars_: Iterable[int]) -> Fraction:
        mask = 0
        for i in vars_:
            mask |= 1 << i
        return self._terms.get(mask, Fraction(0))

    @property
    def degree(self) -> int:
        """Largest monomial size (0 for constants and the zero polynomial)."""
        return max((m.bit_count() for m in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, PseudoBoolean):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        return f"PseudoBoolean({self.n}, {self.to_text()!r})"

    def to_text(self, var: str = "x") -> str:
        """Render in the text-expression grammar (1-based variables).

        ``var`` only changes the display prefix (e.g. "z" for spin
        polynomials); the grammar itself always parses x-variables.
        """
        if not self._terms:
            return "0"
        parts = []
        for vars_, coeff in self.terms():
            mono = "*".join(f"{var}{i + 1}" for i in vars_)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # -- algebra -------------------------------------------------------

    def _require_same_arity(self, other: "PseudoBoolean") -> None:
        if self.n != other.n:
            raise DimensionError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, PseudoBoolean):
            self._require_same_arity(other)
            terms = dict(self._terms)
            for mask, c in other._terms.items():
                s = terms.get(mask, Fraction(0)) + c
                if s:
                    terms[mask] = s
                else:
                    terms.pop(mask, None)
            out = PseudoBoolean(self.n)
            out._terms = terms
            return out
        return self + PseudoBoolean.constant(self.n, other)

    __radd__ = __add__

    def __neg__(self):
        out = PseudoBoolean(self.n)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, PseudoBoolean):
            return self + (-other)
        return self + PseudoBoolean.constant(self.n, -_coerce(other))

    def __rsub__(self, other):
        return (-self) + PseudoBoolean.constant(self.n, other)

    def __mul__(self, other):
        if isinstance(other, PseudoBoolean):
            self._require_same_arity(other)
            terms: dict = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    mask = m1 | m2  # x*x = x: union of variable subsets
                    s = terms.get(mask, Fraction(0)) + c1 * c2
                    if s:
                        terms[mask] = s
                    else:
                        terms.pop(mask, None)
            out = PseudoBoolean(self.n)
            out._terms = terms
            return out
        c = _coerce(other)
        if c == 0:
            return PseudoBoolean.zero(self.n)
        out = PseudoBoolean(self.n)
        out._terms = {m: c * v for m, v in self._terms.items()}
        return out

    __rmul__ = __mul__

    def embed(self, arity: int, mapping: Sequence[int] | None = None) -> "PseudoBoolean":
        """Re-seat the polynomial on ``arity`` variables.

        ``mapping[i]`` is the new index of old variable i; by default
        variables keep their indices (pure arity padding).  Mapping two
        old variables to one target identifies them (the substitution is
        exact on the Boolean cube thanks to idempotence), which is how
        netlist wires are contracted.
        """
        if mapping is None:
            mapping = list(range(self.n))
        if len(mapping) != self.n:
            raise DimensionError(f"mapping length {len(mapping)} != arity {self.n}")
        terms: dict = {}
        for mask, c in self._terms.items():
            new_mask = 0
            for i in range(self.n):
                if mask & (1 << i):
                    j = mapping[i]
                    if not 0 <= j < arity:
                        raise ValueError(f"mapped index {j} out of range for arity {arity}")
                    new_mask |= 1 << j
            s = terms.get(new_mask, Fraction(0)) + c
            if s:
                terms[new_mask] = s
            else:
                terms.pop(new_mask, None)
        return PseudoBoolean(arity, terms)

    # -- evaluation ----------------------------------------------------

    def eval(self, x: Sequence[int]) -> Fraction:
        """Exact value at a Boolean assignment."""
        if len(x) != self.n:
            raise DimensionError(f"assignment length {len(x)} != arity {self.n}")
        xmask = 0
        for i, b in enumerate(x):
            if b not in (0, 1):
                raise ValueError(f"assignment entry {b!r} is not a bit")
            if b:
                xmask |= 1 << i
        total = Fraction(0)
        for mask, c in self._terms.items():
            if mask & xmask == mask:
                total += c
        return total

    def eval_real(self, r: Sequence) -> Fraction:
        """Multilinear extension evaluated at a point of [0,1]^n."""
        if len(r) != self.n:
            raise DimensionError(f"point length {len(r)} != arity {self.n}")
        coords = [_coerce(v) for v in r]
        for v in coords:
            if v < 0 or v > 1:
                raise ValueError(f"coordinate {v} outside [0,1]")
        total = Fraction(0)
        for mask, c in self._terms.items():
            p = c
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                p *= coords[i]
                m &= m - 1
            total += p
        return total

    def _value_table(self) -> list:
        """Values over all assignments, indexed by varmask (bit i = var i).

        Zeta transform over the subset lattice: n * 2^n Fraction additions.
        """
        size = 1 << self.n
        vals = [Fraction(0)] * size
        for mask, c in self._terms.items():
            vals[mask] = c
        for i in range(self.n):
            bit = 1 << i
            for mask in range(size):
                if mask & bit:
                    vals[mask] += vals[mask ^ bit]
        return vals

    def to_disjoint_form(self, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
        """Value table a with a[index_of(x)] = f(x) for all 2^n assignments."""
        _check_cap(self.n, cap, "disjoint-form table")
        vals = self._value_table()
        out = [Fraction(0)] * (1 << self.n)
        for mask, v in enumerate(vals):
            idx = 0
            for i in range(self.n):
                if mask & (1 << i):
                    idx |= 1 << (self.n - 1 - i)
            out[idx] = v
        return out

    def kernel(self, cap: int = DEFAULT_ENUMERATION_CAP) -> set:
        """The set of assignments where f vanishes (exact zero test)."""
        _check_cap(self.n, cap, "kernel")
        vals = self._value_table()
        return {
            _bits_of_varmask(mask, self.n)
            for mask, v in enumerate(vals)
            if v == 0
        }

    def is_nonnegative(self, cap: int = DEFAULT_ENUMERATION_CAP) -> NonNegativity:
        """Exhaustive check f(x) >= 0; on failure returns a witness point."""
        _check_cap(self.n, cap, "non-negativity scan")
        vals = self._value_table()
        for mask, v in enumerate(vals):
            if v < 0:
                return NonNegativity(False, _bits_of_varmask(mask, self.n))
        return NonNegativity(True, None)

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        """JSON form: 1-based sorted variable lists, rational strings."""
        terms = [
            {"vars": [i + 1 for i in vars_], "coeff": str(coeff)}
            for vars_, coeff in self.terms()
        ]
        return {"arity": self.n, "terms": terms}

    @classmethod
    def from_dict(cls, data: Mapping) -> "PseudoBoolean":
        arity = int(data["arity"])
        terms = {}
        for entry in data["terms"]:
            vars_ = tuple(int(v) - 1 for v in entry["vars"])
            if any(v < 0 for v in vars_):
                raise ValueError("JSON variable indices are 1-based")
            terms[vars_] = Fraction(entry["coeff"])
        return cls.from_terms(arity, terms)


def boolean_to_spin(f: PseudoBoolean) -> PseudoBoolean:
    """Substitute x_i = (1 - z_i)/2; result is a polynomial in spin variables.

    The returned object reuses the multilinear representation, with
    variable i read as z_i in {-1, +1}.
    """
    return _substitute_affine(f, Fraction(1, 2), Fraction(-1, 2))


def spin_to_boolean(g: PseudoBoolean) -> PseudoBoolean:
    """Substitute z_i = 1 - 2 x_i; exact inverse of :func:`boolean_to_spin`."""
    return _substitute_affine(g, Fraction(1), Fraction(-2))


def _substitute_affine(f: PseudoBoolean, alpha: Fraction, beta: Fraction) -> PseudoBoolean:
    # replaces every variable v by (alpha + beta * v'); no squares arise
    # because each variable occurs at most once per monomial
    terms: dict = {}
    for mask, c in f._terms.items():
        expansion = {0: c}
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            nxt: dict = {}
            for sub, coeff in expansion.items():
                a = coeff * alpha
                if a:
                    nxt[sub] = nxt.get(sub, Fraction(0)) + a
                b = coeff * beta
                if b:
                    nxt[sub | (1 << i)] = nxt.get(sub | (1 << i), Fraction(0)) + b
            expansion = nxt
        for sub, coeff in expansion.items():
            s = terms.get(sub, Fraction(0)) + coeff
            if s:
                terms[sub] = s
            else:
                terms.pop(sub, None)
    return PseudoBoolean(f.n, terms)
