"""Exponent supports and their lattice invariants.

A support is an ordered tuple of N distinct vectors in NN^n.  The
quantities that drive every decision downstream live here: the
componentwise minimum (monomial content), the normalized support, the
scale gcd d (gcd of all coordinates after normalization, equivalently
of all pairwise differences), the affine dimension, and a coordinate
reduction onto the difference lattice via Smith normal form.
"""

import math
from dataclasses import dataclass

from gvand.errors import DegenerateSupportError, InputError
from gvand.linalg import identity, integer_rank, vec_mat


@dataclass(frozen=True)
class Support:
    """Ordered exponent set: N distinct vectors in NN^n."""

    n: int
    vectors: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be >= 1")
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if not vecs:
            raise ValueError("a support needs at least one exponent vector")
        for v in vecs:
            if len(v) != self.n:
                raise ValueError(f"vector {v} does not have length {self.n}")
            if any(x < 0 for x in v):
                raise ValueError(f"vector {v} has a negative entry")
        if len(set(vecs)) != len(vecs):
            raise ValueError("exponent vectors must be distinct")

    @property
    def N(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {"n": self.n, "exponents": [list(v) for v in self.vectors]}

    @classmethod
    def from_json(cls, data) -> "Support":
        if not isinstance(data, dict):
            raise InputError("support: expected an object")
        if "n" not in data:
            raise InputError("support.n: missing")
        if "exponents" not in data:
            raise InputError("support.exponents: missing")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InputError("support.n: must be a positive integer")
        exps = data["exponents"]
        if not isinstance(exps, list) or not exps:
            raise InputError("support.exponents: must be a nonempty list")
        vectors = []
        for i, row in enumerate(exps):
            if not isinstance(row, list) or len(row) != n:
                raise InputError(f"support.exponents[{i}]: must be a list of length {n}")
            for j, x in enumerate(row):
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise InputError(
                        f"support.exponents[{i}][{j}]: must be a non-negative integer"
                    )
            vectors.append(tuple(row))
        if len(set(vectors)) != len(vectors):
            raise InputError("support.exponents: vectors must be distinct")
        return cls(n, tuple(vectors))


def componentwise_min(support: Support) -> tuple:
    mins = list(support.vectors[0])
    for v in support.vectors[1:]:
        for k, x in enumerate(v):
            if x < mins[k]:
                mins[k] = x
    return tuple(mins)


def normalize(support: Support):
    """Translate so the componentwise minimum is zero.

    Returns (normalized support, the subtracted vector).
    """
    mins = componentwise_min(support)
    if not any(mins):
        return support, mins
    shifted = tuple(tuple(x - m for x, m in zip(v, mins)) for v in support.vectors)
    return Support(support.n, shifted), mins


def d_gamma(support: Support) -> int:
    """gcd of all coordinates of the normalized support.

    Equals the gcd of all pairwise difference coordinates.  Needs at
    least two vectors; with N = 1 the normalized support is {0} and no
    positive gcd exists.
    """
    if support.N < 2:
        raise DegenerateSupportError("d_gamma needs at least two exponent vectors")
    norm, _ = normalize(support)
    g = 0
    for v in norm.vectors:
        for x in v:
            g = math.gcd(g, x)
    assert g > 0, "distinct vectors leave a nonzero normalized coordinate"
    return g


def affine_dimension(support: Support) -> int:
    """Dimension of the affine span of the support."""
    base = support.vectors[0]
    diffs = [[x - b for x, b in zip(v, base)] for v in support.vectors[1:]]
    if not diffs:
        return 0
    return integer_rank(diffs)


#### Smith normal form ####


@dataclass(frozen=True)
class SNFResult:
    """Invertible U, V and diagonal D with U . M . V = D.

    Diagonal entries are non-negative and each divides the next; rank
    is the count of nonzero diagonal entries.
    """

    U: tuple
    D: tuple
    V: tuple
    rank: int


def _pick_pivot(a, t):
    """Smallest nonzero |entry| in the block from (t, t); row-major ties."""
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            x = abs(a[i][j])
            if x and (best is None or x < best[0]):
                best = (x, i, j)
    if best is None:
        return None
    return best[1], best[2]


def smith_normal_form(matrix) -> SNFResult:
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        raise ValueError("smith_normal_form needs a nonempty matrix")
    nrows, ncols = len(a), len(a[0])
    if any(len(r) != ncols for r in a):
        raise ValueError("matrix rows must have equal length")
    u = identity(nrows)
    v = identity(ncols)

    def row_axpy(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def col_axpy(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    for t in range(min(nrows, ncols)):
        if _pick_pivot(a, t) is None:
            break
        while True:
            i0, j0 = _pick_pivot(a, t)
            if i0 != t:
                a[t], a[i0] = a[i0], a[t]
                u[t], u[i0] = u[i0], u[t]
            if j0 != t:
                for row in a:
                    row[t], row[j0] = row[j0], row[t]
                for row in v:
                    row[t], row[j0] = row[j0], row[t]
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    row_axpy(i, t, -(a[i][t] // pivot))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    col_axpy(j, t, -(a[t][j] // pivot))
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot row and column are clear; enforce divisibility of the rest
            bad = next(
                (
                    i
                    for i in range(t + 1, nrows)
                    if any(a[i][j] % pivot for j in range(t + 1, ncols))
                ),
                None,
            )
            if bad is None:
                break
            row_axpy(t, bad, 1)

    rank = sum(1 for k in range(min(nrows, ncols)) if a[k][k] != 0)
    freeze = lambda m: tuple(tuple(r) for r in m)
    return SNFResult(U=freeze(u), D=freeze(a), V=freeze(v), rank=rank)


#### span reduction ####


@dataclass(frozen=True)
class SpanReduction:
    """Affine change of exponent coordinates onto the difference lattice.

    Maps v to ((v - base_point) . transform)[:dims] + offset.  The
    transform is unimodular, so gcds of difference vectors (lattice
    lengths) are preserved.
    """

    base_point: tuple
    transform: tuple
    dims: int
    offset: tuple

    def apply(self, vector) -> tuple:
        shifted = tuple(x - b for x, b in zip(vector, self.base_point))
        img = vec_mat(shifted, self.transform)
        if any(img[self.dims :]):
            raise DegenerateSupportError(
                f"vector {tuple(vector)} lies outside the support's affine span"
            )
        return tuple(x + o for x, o in zip(img[: self.dims], self.offset))


def reduce_to_span_coordinates(support: Support):
    """Rewrite the support in coordinates of its own affine span.

    Returns (reduced support in NN^m with m the affine dimension, the
    SpanReduction that produced it).  Differences map through a
    unimodular matrix, so all pairwise-difference gcds survive.
    """
    if support.N < 2:
        raise DegenerateSupportError("span reduction needs at least two vectors")
    base = support.vectors[0]
    diffs = [[x - b for x, b in zip(v, base)] for v in support.vectors[1:]]
    snf = smith_normal_form(diffs)
    m = snf.rank
    assert m >= 1, "distinct vectors give a nonzero difference"
    images = [(0,) * m]
    for d in diffs:
        img = vec_mat(d, snf.V)
        assert not any(img[m:]), "difference escapes the span columns"
        images.append(img[:m])
    offset = tuple(-min(img[k] for img in images) for k in range(m))
    reduced = tuple(tuple(x + o for x, o in zip(img, offset)) for img in images)
    reduction = SpanReduction(base_point=base, transform=snf.V, dims=m, offset=offset)
    return Support(m, reduced), reduction
