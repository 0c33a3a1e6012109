"""Boards, tilings, k-Fibonacci numbers, and weighted tiling sums.

A tiling of an n x 1 board by tiles of length at most k is an ordered
composition of n into parts <= k.  With F_0 = 1 and F_n = 0 for n < 0, the
number of such tilings satisfies the k-Fibonacci recursion
F_n = F_{n-1} + ... + F_{n-k}.

A weight scheme assigns a tile of length i starting at position sigma with
tau cells after it the monomial weight z_i * q^f(i, sigma, tau).  The schemes
used throughout are separable, f = A(i) + B(i)(sigma-1) + C(i)tau, which is
exactly the shape for which appending an untiled m-board in front (behind)
multiplies each tile weight by the shift factor q^(B(i)m) (q^(C(i)m)).  The
weight of a tiling is the product of its tile weights, and the weighted count

    F_n(z; q) = sum over tilings of an n-board of the tiling weight

is computed here by two independent routes: literal enumeration of every
tiling, and the first-tile recursion with memoization on board position.
"""

import itertools
import random
from typing import Callable, Iterator, NamedTuple

from ._backend import kernels as _k
from ._kernels_py import Q_BITS, Z_BITS
from .errors import DomainError
from .polyring import Poly

__all__ = [
    "AppendSpec",
    "SchemeValidation",
    "Tiling",
    "WeightScheme",
    "corrupted_scheme",
    "enumerate_tilings",
    "fibonacci_k",
    "random_scheme",
    "tiling_weight",
    "validate_weight_scheme",
    "weighted_sum_enumerative",
    "weighted_sum_recursive",
]


class AppendSpec(NamedTuple):
    """Lengths of untiled boards appended before and after the tiled board."""

    before: int = 0
    after: int = 0


class Tiling:
    """An ordered sequence of tile lengths covering an n x 1 board."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise DomainError(f"tile lengths must be positive ints, got {p!r}")
        self.parts = parts

    @property
    def n(self) -> int:
        return sum(self.parts)

    def tiles(self) -> Iterator[tuple[int, int, int]]:
        """Yield (length, start, trailing) per tile; start is 1-based and
        trailing counts the board cells after the tile, so
        start - 1 + length + trailing = n."""
        n = self.n
        sigma = 1
        for i in self.parts:
            yield i, sigma, n - sigma - i + 1
            sigma += i

    def __eq__(self, other):
        return isinstance(other, Tiling) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Tiling({self.parts!r})"


class WeightScheme:
    """Tile-local weights z_i * q^f(i, sigma, tau) plus declared shift rules.

    a, b, c are callables on tile lengths 1..k giving the separable exponent
    f = A(i) + B(i)(sigma-1) + C(i)tau; their values are frozen at
    construction.  An explicit `exponent` callable may override f itself
    (used to build deliberately incoherent schemes for falsifiability tests);
    the shift factors always come from the declared B and C, so
    validate_weight_scheme can detect the mismatch.
    """

    __slots__ = ("k", "name", "_a", "_b", "_c", "_exponent")

    def __init__(
        self,
        k: int,
        a: Callable[[int], int],
        b: Callable[[int], int],
        c: Callable[[int], int],
        name: str = "scheme",
        exponent: Callable[[int, int, int], int] | None = None,
    ):
        if not isinstance(k, int) or k < 1:
            raise DomainError(f"scheme needs a positive max tile length, got {k!r}")
        self.k = k
        self.name = name
        self._a = self._freeze(a, "A")
        self._b = self._freeze(b, "B")
        self._c = self._freeze(c, "C")
        self._exponent = exponent

    def _freeze(self, fn, label):
        vals = []
        for i in range(1, self.k + 1):
            v = fn(i)
            if not isinstance(v, int) or v < 0:
                raise DomainError(
                    f"{label}({i}) must be a nonnegative int, got {v!r}"
                )
            vals.append(v)
        return tuple(vals)

    @classmethod
    def from_tables(cls, k, a_vals, b_vals, c_vals, name="scheme", exponent=None):
        a_vals, b_vals, c_vals = tuple(a_vals), tuple(b_vals), tuple(c_vals)
        if not (len(a_vals) == len(b_vals) == len(c_vals) == k):
            raise DomainError(f"expected {k} values per exponent table")
        return cls(
            k,
            lambda i: a_vals[i - 1],
            lambda i: b_vals[i - 1],
            lambda i: c_vals[i - 1],
            name=name,
            exponent=exponent,
        )

    def a(self, i: int) -> int:
        return self._a[i - 1]

    def b(self, i: int) -> int:
        return self._b[i - 1]

    def c(self, i: int) -> int:
        return self._c[i - 1]

    def qexp(self, i: int, sigma: int, tau: int) -> int:
        """Exponent of q in the weight of a tile (length i, start sigma,
        trailing tau)."""
        if self._exponent is not None:
            return self._exponent(i, sigma, tau)
        return self._a[i - 1] + self._b[i - 1] * (sigma - 1) + self._c[i - 1] * tau

    def front_shift_exps(self, m: int) -> tuple[int, ...]:
        """Per-variable q exponents realizing the front shift s^-_m."""
        return tuple(bi * m for bi in self._b)

    def back_shift_exps(self, m: int) -> tuple[int, ...]:
        """Per-variable q exponents realizing the back shift s^+_m."""
        return tuple(ci * m for ci in self._c)

    def __repr__(self):
        return f"WeightScheme(k={self.k}, name={self.name!r})"


def fibonacci_k(n: int, k: int) -> int:
    """F_n with F_0 = 1, F_{n<0} = 0 and F_n = F_{n-1} + ... + F_{n-k}."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive int, got {k!r}")
    if n < 0:
        return 0
    window = [0] * k  # F_{n-k}, ..., F_{n-1}
    value = 1  # F_0
    for _ in range(n):
        window = window[1:] + [value]
        value = sum(window)
    return value


def enumerate_tilings(n: int, k: int) -> Iterator[Tiling]:
    """All tilings of an n-board with parts <= k, lexicographic by parts.

    Yields nothing for n < 0 and exactly the empty tiling for n = 0.
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive int, got {k!r}")

    def rec(rem):
        if rem == 0:
            yield ()
            return
        for first in range(1, min(k, rem) + 1):
            for rest in rec(rem - first):
                yield (first,) + rest

    if n < 0:
        return
    for parts in rec(n):
        yield Tiling(parts)


def _normalize_append(app) -> AppendSpec:
    app = AppendSpec(*app)
    if app.before < 0 or app.after < 0:
        raise DomainError(f"append lengths must be nonnegative, got {app}")
    return app


def tiling_weight(t: Tiling, w: WeightScheme, app=AppendSpec()) -> Poly:
    """Product of tile weights, with the declared shift factors accounting
    for any appended untiled boards."""
    app = _normalize_append(app)
    counts = [0] * w.k
    q_exp = 0
    for i, sigma, tau in t.tiles():
        if i > w.k:
            raise DomainError(f"tile of length {i} exceeds scheme maximum {w.k}")
        counts[i - 1] += 1
        q_exp += w.qexp(i, sigma, tau) + w.b(i) * app.before + w.c(i) * app.after
    return Poly.monomial(w.k, 1, counts, q_exp)


def _tile_deltas(n: int, maxpart: int, w: WeightScheme, app: AppendSpec):
    """Packed key contribution of each (tile length, start) pair; see the
    sum_tilings_terms kernel."""
    deltas = []
    for i in range(1, maxpart + 1):
        off = Q_BITS + (w.k - i) * Z_BITS
        base = 1 << off
        row = [
            base
            + w.qexp(i, sigma, n - sigma - i + 1)
            + w.b(i) * app.before
            + w.c(i) * app.after
            for sigma in range(1, n - i + 2)
        ]
        deltas.append(row)
    return deltas


def _check_cap(n, k, w):
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive int, got {k!r}")
    if k > w.k:
        raise DomainError(
            f"tile length cap {k} exceeds the scheme's declared maximum {w.k}"
        )


def weighted_sum_enumerative(n: int, k: int, w: WeightScheme, app=AppendSpec()) -> Poly:
    """F_n(z; q) by literal enumeration of every tiling.

    This is the oracle route: it visits each of the F_n tilings once and adds
    its weight.  Returns 1 for n = 0 and 0 for n < 0.
    """
    _check_cap(n, k, w)
    app = _normalize_append(app)
    if n < 0:
        return Poly.zero(w.k)
    terms = _k.sum_tilings_terms(n, k, _tile_deltas(n, k, w, app))
    return Poly(w.k, terms)


def weighted_sum_recursive(n: int, k: int, w: WeightScheme, app=AppendSpec()) -> Poly:
    """F_n(z; q) by the first-tile recursion, memoized on board position.

    The suffix sum G(pos) over tilings of cells pos..n satisfies
    G(pos) = sum over first-tile lengths i of weight(i, pos) * G(pos + i),
    which is the weighted first-tile recursion with the front shift folded
    into the tile exponent.  Agrees with weighted_sum_enumerative on every
    input; the recursion reaches board lengths far beyond what enumeration
    can.
    """
    _check_cap(n, k, w)
    app = _normalize_append(app)
    if n < 0:
        return Poly.zero(w.k)
    one = Poly.one(w.k)
    memo: dict[int, Poly] = {n + 1: one}

    def suffix(pos: int) -> Poly:
        cached = memo.get(pos)
        if cached is not None:
            return cached
        total = Poly.zero(w.k)
        for i in range(1, min(k, n - pos + 1) + 1):
            q_exp = (
                w.qexp(i, pos, n - pos - i + 1)
                + w.b(i) * app.before
                + w.c(i) * app.after
            )
            counts = tuple(1 if j == i else 0 for j in range(1, w.k + 1))
            tile = Poly.monomial(w.k, 1, counts, q_exp)
            total = total + tile * suffix(pos + i)
        memo[pos] = total
        return total

    # Fill bottom-up to keep recursion depth flat for large boards.
    for pos in range(n, 0, -1):
        suffix(pos)
    return memo[1]


class SchemeValidation(NamedTuple):
    ok: bool
    checked: int
    failures: tuple[str, ...]

    def __str__(self):
        if self.ok:
            return f"coherent ({self.checked} shift identities checked)"
        head = "; ".join(self.failures[:3])
        return f"incoherent ({len(self.failures)} violations, first: {head})"


def validate_weight_scheme(w: WeightScheme, n_max: int) -> SchemeValidation:
    """Check the shift coherence f(i, sigma+m, tau) = f(i, sigma, tau) + B(i)m
    and f(i, sigma, tau+m) = f(i, sigma, tau) + C(i)m on a grid.

    Separable schemes satisfy both by construction; a scheme whose exponent
    function secretly depends on sigma and tau jointly fails with a witness.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    failures = []
    checked = 0
    rng = range(1, n_max + 1)
    for i in range(1, w.k + 1):
        for sigma, tau, m in itertools.product(rng, rng, rng):
            base = w.qexp(i, sigma, tau)
            checked += 2
            front = w.qexp(i, sigma + m, tau)
            if front != base + w.b(i) * m:
                failures.append(
                    f"front shift: f({i},{sigma}+{m},{tau})={front} but "
                    f"f({i},{sigma},{tau})+B({i})*{m}={base + w.b(i) * m}"
                )
            back = w.qexp(i, sigma, tau + m)
            if back != base + w.c(i) * m:
                failures.append(
                    f"back shift: f({i},{sigma},{tau}+{m})={back} but "
                    f"f({i},{sigma},{tau})+C({i})*{m}={base + w.c(i) * m}"
                )
    return SchemeValidation(not failures, checked, tuple(failures))


def random_scheme(k: int, seed: int, name: str | None = None) -> WeightScheme:
    """A coherent scheme with A(i), B(i), C(i) drawn uniformly from 0..3."""
    rng = random.Random(seed)
    tables = [tuple(rng.randint(0, 3) for _ in range(k)) for _ in range(3)]
    return WeightScheme.from_tables(
        k, *tables, name=name or f"random-{seed}"
    )


def corrupted_scheme(k: int, seed: int = 0, name: str | None = None) -> WeightScheme:
    """A scheme whose actual exponent mixes sigma and tau jointly, violating
    the coherence its declared B and C promise.  Every identity verifier and
    validate_weight_scheme must flag it."""
    base = random_scheme(k, seed)

    def warped(i, sigma, tau):
        return base.qexp(i, sigma, tau) + (sigma - 1) * tau

    return WeightScheme(
        k,
        base.a,
        base.b,
        base.c,
        name=name or f"corrupt-{seed}",
        exponent=warped,
    )
