"""Exact sparse polynomials in z_1, ..., z_k and q over arbitrary-precision ints.

This is the value type for every weighted count in the package: a polynomial
is a finite sum of monomials c * z1^e1 * ... * zk^ek * q^eq with nonzero
integer coefficients, kept in canonical merged form (no two stored terms share
an exponent vector, no zero coefficients).  Equality is exact.

Internally each exponent vector lives in a single packed integer key (see
_kernels_py for the layout), so monomial multiplication is one integer
addition.  The packing caps exponents at 2**16 - 1 per z variable and
2**32 - 1 for q; a CapacityError is raised before any arithmetic could
overflow a field.  Term order for printing and JSON is graded lexicographic
on (e1, ..., ek, eq), highest first.

Text grammar (produced by format, accepted by parse):

    poly   := "0" | ["-"] term ((" + " | " - ") term)*
    term   := coeff | [coeff "*"] factor ("*" factor)*
    factor := ("z" index | "q") ["^" exponent]

with coefficient 1 and exponent 1 left implicit and exponent-0 factors
omitted.
"""

from typing import Iterable, Iterator, NamedTuple

from ._backend import kernels as _k
from ._kernels_py import Q_BITS, Q_MASK, Z_BITS, Z_MASK
from .errors import (
    CapacityError,
    InvalidShiftError,
    PolyParseError,
    RingMismatchError,
)


class Monomial(NamedTuple):
    """One term: coeff * z1^z_exps[0] * ... * zk^z_exps[k-1] * q^q_exp."""

    coeff: int
    z_exps: tuple[int, ...]
    q_exp: int


def _zoffsets(k: int) -> tuple[int, ...]:
    # Bit offset of each z_i field; z_1 is the most significant.
    return tuple(Q_BITS + (k - i) * Z_BITS for i in range(1, k + 1))


def _pack(k: int, z_exps, q_exp: int) -> int:
    key = q_exp
    off = Q_BITS + (k - 1) * Z_BITS
    for e in z_exps:
        key += e << off
        off -= Z_BITS
    return key


def _unpack(k: int, key: int) -> tuple[tuple[int, ...], int]:
    zs = []
    off = Q_BITS + (k - 1) * Z_BITS
    for _ in range(k):
        zs.append((key >> off) & Z_MASK)
        off -= Z_BITS
    return tuple(zs), key & Q_MASK


class Poly:
    """Immutable sparse polynomial over Z in z_1..z_k and q.

    All operations return new instances; values can be shared freely across
    threads.  _zb and _qb are conservative upper bounds on any single z
    exponent and on the q exponent, carried along to keep packed-field
    overflow checks O(1).
    """

    __slots__ = ("k", "_terms", "_zb", "_qb")

    def __init__(self, k: int, terms=None):
        if not isinstance(k, int) or k < 1:
            raise RingMismatchError(f"ring needs a positive variable count, got {k!r}")
        object.__setattr__(self, "k", k)
        terms = {} if terms is None else terms
        zb = qb = 0
        offs = _zoffsets(k)
        for key in terms:
            q = key & Q_MASK
            if q > qb:
                qb = q
            for off in offs:
                e = (key >> off) & Z_MASK
                if e > zb:
                    zb = e
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_zb", zb)
        object.__setattr__(self, "_qb", qb)

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def _wrap(cls, k: int, terms: dict, zb: int, qb: int) -> "Poly":
        self = object.__new__(cls)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_zb", zb)
        object.__setattr__(self, "_qb", qb)
        return self

    @classmethod
    def zero(cls, k: int) -> "Poly":
        return cls(k)

    @classmethod
    def one(cls, k: int) -> "Poly":
        return cls.constant(k, 1)

    @classmethod
    def constant(cls, k: int, c: int) -> "Poly":
        return cls(k, {0: c} if c else {})

    @classmethod
    def monomial(cls, k: int, coeff: int, z_exps, q_exp: int = 0) -> "Poly":
        z_exps = tuple(z_exps)
        if len(z_exps) != k:
            raise RingMismatchError(
                f"expected {k} z exponents, got {len(z_exps)}"
            )
        for e in z_exps:
            if not isinstance(e, int) or e < 0:
                raise InvalidShiftError(f"z exponents must be nonnegative ints, got {e!r}")
            if e > Z_MASK:
                raise CapacityError(f"z exponent {e} exceeds field capacity {Z_MASK}")
        if not isinstance(q_exp, int) or q_exp < 0:
            raise InvalidShiftError(f"q exponent must be a nonnegative int, got {q_exp!r}")
        if q_exp > Q_MASK:
            raise CapacityError(f"q exponent {q_exp} exceeds field capacity {Q_MASK}")
        if coeff == 0:
            return cls.zero(k)
        return cls._wrap(k, {_pack(k, z_exps, q_exp): coeff}, max(z_exps), q_exp)

    @classmethod
    def z(cls, k: int, i: int) -> "Poly":
        """The variable z_i (1-based index)."""
        if not 1 <= i <= k:
            raise RingMismatchError(f"variable index {i} outside 1..{k}")
        return cls.monomial(k, 1, tuple(1 if j == i else 0 for j in range(1, k + 1)))

    @classmethod
    def q(cls, k: int) -> "Poly":
        return cls.monomial(k, 1, (0,) * k, 1)

    @classmethod
    def from_monomials(cls, k: int, monomials: Iterable) -> "Poly":
        total = cls.zero(k)
        for coeff, z_exps, q_exp in monomials:
            total = total + cls.monomial(k, coeff, z_exps, q_exp)
        return total

    # ------------------------------------------------------------------
    # ring operations

    def _check_ring(self, other: "Poly"):
        if self.k != other.k:
            raise RingMismatchError(
                f"mixed rings: k={self.k} vs k={other.k}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.k, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        return Poly._wrap(
            self.k,
            _k.add_terms(self._terms, other._terms),
            max(self._zb, other._zb),
            max(self._qb, other._qb),
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.k, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        return Poly._wrap(
            self.k,
            _k.sub_terms(self._terms, other._terms),
            max(self._zb, other._zb),
            max(self._qb, other._qb),
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly._wrap(
            self.k, _k.scalar_mul_terms(self._terms, -1), self._zb, self._qb
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly._wrap(
                self.k, _k.scalar_mul_terms(self._terms, other), self._zb, self._qb
            )
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        zb = self._zb + other._zb
        qb = self._qb + other._qb
        if zb > Z_MASK or qb > Q_MASK:
            raise CapacityError(
                f"product degree bounds (z<= {zb}, q<= {qb}) exceed packed-key capacity"
            )
        return Poly._wrap(self.k, _k.mul_terms(self._terms, other._terms), zb, qb)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InvalidShiftError(f"polynomial power must be a nonnegative int, got {n!r}")
        result = Poly.one(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    # ------------------------------------------------------------------
    # specialization

    def substitute_z_scale(self, exps) -> "Poly":
        """Substitute z_i -> z_i * q^(exps[i-1]); exponents must be >= 0."""
        exps = tuple(exps)
        if len(exps) != self.k:
            raise RingMismatchError(
                f"expected {self.k} shift exponents, got {len(exps)}"
            )
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise InvalidShiftError(f"shift exponents must be nonnegative ints, got {e!r}")
        if not any(exps) or not self._terms:
            return self
        qb = self._qb + self._zb * sum(exps)
        if qb > Q_MASK:
            raise CapacityError(f"q degree bound {qb} exceeds packed-key capacity")
        offs = _zoffsets(self.k)
        shifts = tuple((offs[i], e) for i, e in enumerate(exps) if e)
        return Poly._wrap(self.k, _k.shift_q_terms(self._terms, shifts), self._zb, qb)

    def times_q(self, e: int) -> "Poly":
        """Multiply by the monomial q^e."""
        if not isinstance(e, int) or e < 0:
            raise InvalidShiftError(f"q power must be a nonnegative int, got {e!r}")
        if e == 0 or not self._terms:
            return self
        if self._qb + e > Q_MASK:
            raise CapacityError(f"q degree bound {self._qb + e} exceeds packed-key capacity")
        return Poly._wrap(self.k, _k.times_q_terms(self._terms, e), self._zb, self._qb + e)

    def evaluate(self, z_vals, q_val: int) -> int:
        z_vals = tuple(z_vals)
        if len(z_vals) != self.k:
            raise RingMismatchError(f"expected {self.k} z values, got {len(z_vals)}")
        return _k.eval_terms(self._terms, _zoffsets(self.k), z_vals, q_val)

    # ------------------------------------------------------------------
    # inspection and serialization

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _canonical_keys(self) -> list:
        offs = _zoffsets(self.k)

        def total(key):
            t = key & Q_MASK
            for off in offs:
                t += (key >> off) & Z_MASK
            return t

        return sorted(self._terms, key=lambda key: (total(key), key), reverse=True)

    def monomials(self) -> Iterator[Monomial]:
        """Terms in canonical order (graded lex, highest first)."""
        for key in self._canonical_keys():
            zs, q = _unpack(self.k, key)
            yield Monomial(self._terms[key], zs, q)

    def format(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for mono in self.monomials():
            mag = abs(mono.coeff)
            factors = []
            for i, e in enumerate(mono.z_exps, start=1):
                if e:
                    factors.append(f"z{i}" if e == 1 else f"z{i}^{e}")
            if mono.q_exp:
                factors.append("q" if mono.q_exp == 1 else f"q^{mono.q_exp}")
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not out:
                out.append(f"-{body}" if mono.coeff < 0 else body)
            else:
                out.append(f" - {body}" if mono.coeff < 0 else f" + {body}")
        return "".join(out)

    __str__ = format

    def __repr__(self):
        return f"Poly.parse({self.format()!r}, k={self.k})"

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "terms": [
                {"coeff": str(m.coeff), "z": list(m.z_exps), "q": m.q_exp}
                for m in self.monomials()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Poly":
        k = data["k"]
        total = cls.zero(k)
        for term in data["terms"]:
            total = total + cls.monomial(
                k, int(term["coeff"]), tuple(term["z"]), int(term["q"])
            )
        return total

    # ------------------------------------------------------------------
    # parsing

    @classmethod
    def parse(cls, text: str, k: int) -> "Poly":
        return _parse_poly(text, k)


def _parse_poly(text: str, k: int) -> Poly:
    s = text
    n = len(s)
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < n and s[pos] == " ":
            pos += 1

    def parse_int() -> int:
        nonlocal pos
        start = pos
        while pos < n and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolyParseError("expected a number", start)
        return int(s[start:pos])

    def parse_factor(zs, q_exp):
        nonlocal pos
        ch = s[pos]
        if ch == "z":
            pos += 1
            idx = parse_int()
            if not 1 <= idx <= k:
                raise PolyParseError(f"variable z{idx} outside ring with k={k}", pos)
        elif ch == "q":
            pos += 1
            idx = 0
        else:
            raise PolyParseError(f"expected a factor, found {ch!r}", pos)
        exp = 1
        if pos < n and s[pos] == "^":
            pos += 1
            exp = parse_int()
        if idx == 0:
            return zs, q_exp + exp
        zs = list(zs)
        zs[idx - 1] += exp
        return tuple(zs), q_exp

    def parse_term():
        nonlocal pos
        coeff = 1
        zs: tuple[int, ...] = (0,) * k
        q_exp = 0
        skip_ws()
        if pos >= n:
            raise PolyParseError("expected a term", pos)
        if s[pos].isdigit():
            coeff = parse_int()
            skip_ws()
            if pos < n and s[pos] == "*":
                pos += 1
            else:
                return coeff, zs, q_exp
        while True:
            skip_ws()
            if pos >= n:
                raise PolyParseError("expected a factor", pos)
            zs, q_exp = parse_factor(zs, q_exp)
            skip_ws()
            if pos < n and s[pos] == "*":
                pos += 1
            else:
                return coeff, zs, q_exp

    total = Poly.zero(k)
    skip_ws()
    if pos >= n:
        raise PolyParseError("empty input", pos)
    sign = 1
    if s[pos] == "-":
        sign = -1
        pos += 1
    while True:
        coeff, zs, q_exp = parse_term()
        total = total + Poly.monomial(k, sign * coeff, zs, q_exp)
        skip_ws()
        if pos >= n:
            return total
        if s[pos] == "+":
            sign = 1
        elif s[pos] == "-":
            sign = -1
        else:
            raise PolyParseError(f"expected '+' or '-', found {s[pos]!r}", pos)
        pos += 1


def diff_witness(a: Poly, b: Poly) -> str | None:
    """First differing term of two polynomials, or None when they are equal.

    The witness names the monomial (in canonical order over the union of
    supports) together with both coefficients.
    """
    if a.k != b.k:
        raise RingMismatchError(f"mixed rings: k={a.k} vs k={b.k}")
    if a == b:
        return None
    union = Poly._wrap(a.k, {**b._terms, **a._terms}, 0, 0)
    for key in union._canonical_keys():
        ca = a._terms.get(key, 0)
        cb = b._terms.get(key, 0)
        if ca != cb:
            zs, q = _unpack(a.k, key)
            name = Poly.monomial(a.k, 1, zs, q).format()
            return f"coefficient of {name}: {ca} != {cb}"
    return None
