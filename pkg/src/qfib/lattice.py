"""Lattice paths, the shifted weighted minor, and its determinant.

Walks on the digraph with vertices 0, 1, 2, ... and arcs v -> v+d for
1 <= d <= k model tilings: a path from a to b is a tiling of the board
occupying cells a+1..b, so the weighted path count from a to b is the
weighted sum F_{b-a} with an a-board appended in front.  The k x k minor
with row vertices u = 0..k-1 and column vertices v = n+k-1..n+2k-2 therefore
has entries

    M[i][j] = F_{v_j - u_i}(z s^-_{u_i}; q),

and at z = q = 1 it is the classical k-Fibonacci Toeplitz minor whose
determinant is 1 for odd k and (-1)^(n-1) for even k.

Because the row vertices are adjacent and the column vertices are adjacent,
the only vertex-disjoint k-tuple of paths from u to v uses length-k arcs
exclusively; its signed weight is the closed form

    +/- z_k^(n+k-1) * prod over arcs of q^f(k, start, trailing)

with sign +1 for odd k and (-1)^(n-1) for even k.  Writing
n+k-1 = p*k + r with 0 <= r < k, the first r arcs are followed by paths of
length p*k and each later group of k arcs drops the trailing length by k.

The determinant itself is computed by exact cofactor expansion (no
division), expanding along the highest column so the memoized minors span
the small low-column entries.  The closed form equals that determinant
exactly when the tile weight ignores the trailing length (C = 0, so arc
weights are per-edge quantities and crossing path tuples cancel in signed
pairs); for trailing-length weights the cancellation fails and the two
genuinely differ, which the identity checks report as counterexamples.
"""

from dataclasses import dataclass

from .errors import SizeLimitError
from .polyring import Poly
from .report import IdentityReport
from .tiling import AppendSpec, WeightScheme, weighted_sum_enumerative

__all__ = [
    "MinorSpec",
    "PathTuple",
    "PolyMatrix",
    "build_minor",
    "closed_form_det",
    "determinant",
    "enumerate_noncrossing_tuples",
    "miles_sign_check",
]

_MAX_DET_DIM = 6
_MAX_PATH_VERTEX = 24


@dataclass(frozen=True)
class MinorSpec:
    """The k x k minor with rows u = 0..k-1, columns v = n+k-1..n+2k-2."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise SizeLimitError(f"minor needs n >= 1 and k >= 1, got {self}")

    @property
    def u(self) -> tuple[int, ...]:
        return tuple(range(self.k))

    @property
    def v(self) -> tuple[int, ...]:
        return tuple(range(self.n + self.k - 1, self.n + 2 * self.k - 1))

    @property
    def pr(self) -> tuple[int, int]:
        """Euclidean pair with n + k - 1 = p*k + r and 0 <= r < k."""
        return divmod(self.n + self.k - 1, self.k)


@dataclass(frozen=True)
class PolyMatrix:
    dim: int
    entries: tuple[tuple[Poly, ...], ...]

    def to_json_dict(self) -> dict:
        flat = [e.to_json_dict() for row in self.entries for e in row]
        return {"dim": self.dim, "entries": flat}


def build_minor(spec: MinorSpec, w: WeightScheme) -> PolyMatrix:
    """Entry (i, j) is the weighted path count from u_i to v_j."""
    rows = []
    for ui in spec.u:
        row = tuple(
            weighted_sum_enumerative(vj - ui, spec.k, w, AppendSpec(ui, 0))
            if vj >= ui
            else Poly.zero(w.k)
            for vj in spec.v
        )
        rows.append(row)
    return PolyMatrix(spec.k, tuple(rows))


def determinant(mat: PolyMatrix) -> Poly:
    """Exact determinant by cofactor expansion with row-subset memoization.

    Expansion runs along the last remaining column at every level, so the
    shared subproblems are minors over the leading columns (the entries of
    smallest degree in the shifted Fibonacci minor).  Guarded to dim <= 6:
    the memo has 2^dim entries.
    """
    d = mat.dim
    if d > _MAX_DET_DIM:
        raise SizeLimitError(f"determinant limited to dim <= {_MAX_DET_DIM}, got {d}")
    if d == 0:
        raise SizeLimitError("determinant of an empty matrix")
    k = mat.entries[0][0].k
    entries = mat.entries
    memo: dict[tuple[int, ...], Poly] = {}

    def minor_det(rows: tuple[int, ...]) -> Poly:
        col = len(rows) - 1
        if col == 0:
            return entries[rows[0]][0]
        cached = memo.get(rows)
        if cached is not None:
            return cached
        acc = Poly.zero(k)
        for idx, r in enumerate(rows):
            entry = entries[r][col]
            if entry.is_zero:
                continue
            cofactor = entry * minor_det(rows[:idx] + rows[idx + 1 :])
            acc = acc + cofactor if (idx + col) % 2 == 0 else acc - cofactor
        memo[rows] = acc
        return acc

    return minor_det(tuple(range(d)))


def closed_form_det(spec: MinorSpec, w: WeightScheme) -> Poly:
    """Signed weight of the unique noncrossing path tuple (all arcs length
    k).  Equals determinant(build_minor(spec, w)) for schemes with C = 0;
    see the module docstring for why trailing-length weights break that."""
    k, n = spec.k, spec.n
    p, r = spec.pr
    q_exp = sum(w.qexp(k, i, p * k) for i in range(1, r + 1))
    for j in range(p):
        for a in range(1, k + 1):
            q_exp += w.qexp(k, r + j * k + a, (p - j - 1) * k)
    sign = 1 if (k % 2 == 1 or (n - 1) % 2 == 0) else -1
    counts = tuple(0 if i < k else n + k - 1 for i in range(1, k + 1))
    return Poly.monomial(w.k, sign, counts, q_exp)


@dataclass(frozen=True)
class PathTuple:
    """A tuple of vertex-disjoint paths u_i -> v_alpha(i); each path is its
    full vertex sequence and alpha is 1-based."""

    paths: tuple[tuple[int, ...], ...]
    alpha: tuple[int, ...]

    def sign(self) -> int:
        inversions = sum(
            1
            for i in range(len(self.alpha))
            for j in range(i + 1, len(self.alpha))
            if self.alpha[i] > self.alpha[j]
        )
        return -1 if inversions % 2 else 1

    def weight(self, w: WeightScheme) -> Poly:
        """Product of arc weights; an arc v0 -> v1 on a path ending at b is a
        tile of length v1 - v0 starting at cell v0 + 1 with b - v1 cells of
        the path's board after it."""
        counts = [0] * w.k
        q_exp = 0
        for path in self.paths:
            b = path[-1]
            for v0, v1 in zip(path, path[1:]):
                i = v1 - v0
                counts[i - 1] += 1
                q_exp += w.qexp(i, v0 + 1, b - v1)
        return Poly.monomial(w.k, 1, counts, q_exp)


def enumerate_noncrossing_tuples(spec: MinorSpec) -> list[PathTuple]:
    """All vertex-disjoint path tuples from u to v, by depth-first search
    with shared-vertex pruning.  For this minor the result is a single tuple
    built from length-k arcs."""
    if spec.n + 2 * spec.k - 2 > _MAX_PATH_VERTEX:
        raise SizeLimitError(
            f"path enumeration limited to vertices <= {_MAX_PATH_VERTEX}"
        )
    k = spec.k
    u, v = spec.u, spec.v
    targets = {vertex: j for j, vertex in enumerate(v)}
    vmax = v[-1]
    results: list[PathTuple] = []

    def walk(vertex, visited, used, taken, paths, assignment):
        j = targets.get(vertex)
        if j is not None and j not in taken:
            extend(len(paths) + 1, used | set(visited), paths + [tuple(visited)],
                   assignment + [j + 1], taken | {j})
        for d in range(1, k + 1):
            nxt = vertex + d
            if nxt > vmax or nxt in used or nxt in visited:
                continue
            visited.append(nxt)
            walk(nxt, visited, used, taken, paths, assignment)
            visited.pop()

    def extend(i, used, paths, assignment, taken):
        if i == k:
            results.append(PathTuple(tuple(paths), tuple(assignment)))
            return
        start = u[i]
        if start in used:
            return
        walk(start, [start], used, taken, paths, assignment)

    extend(0, frozenset(), [], [], frozenset())
    return results


def miles_sign_check(n: int, k: int) -> IdentityReport:
    """The unweighted minor determinant: 1 for odd k, (-1)^(n-1) for even k,
    checked by evaluating the exact cofactor determinant at z = q = 1."""
    if n < 1 or k < 1 or k > 5:
        raise SizeLimitError(f"sign check needs n >= 1 and 1 <= k <= 5, got n={n}, k={k}")
    counting = WeightScheme(k, lambda i: 0, lambda i: 0, lambda i: 0, name="counting")
    spec = MinorSpec(n, k)
    det_value = determinant(build_minor(spec, counting)).evaluate((1,) * k, 1)
    expected = 1 if (k % 2 == 1 or (n - 1) % 2 == 0) else -1
    return IdentityReport.compare(
        "det-sign",
        {"n": n, "k": k, "scheme": "counting"},
        Poly.constant(k, det_value),
        Poly.constant(k, expected),
    )
