"""Exact dense linear algebra over the Gaussian rationals Q(xi), xi**2 = -1.

Two types live here:

* :class:`Scalar` -- a single element ``re + im*xi`` with rational parts.
* :class:`Matrix` -- an immutable dense matrix.  Internally the entries are
  stored as two integer numpy arrays (real and imaginary numerators) over one
  shared positive denominator, so Gaussian-integer matrices (every braiding in
  this project) run through int64 kernels.  Arrays are promoted to Python-int
  ``object`` dtype whenever a result could leave the int64 range; nothing is
  ever rounded.

Ranks use fraction-free (Bareiss) elimination over Z[xi] after splitting the
matrix into independent blocks.  Kernels use exact Gauss-Jordan elimination.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

__all__ = [
    "Scalar",
    "Matrix",
    "ShapeError",
    "ZERO",
    "ONE",
    "XI",
    "as_scalar",
    "mat_mul",
    "mat_kron",
    "mat_rank",
    "mat_kernel_basis",
    "mat_inverse",
]

_INT64_SAFE = 2**62


class ShapeError(ValueError):
    """Raised when matrix dimensions do not conform."""


def _frac(x):
    """Exact rational; integral values stay plain ``int`` for speed."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, str):
        return _frac(Fraction(x))
    if isinstance(x, float):
        if not x.is_integer():
            raise TypeError(f"refusing inexact float {x!r}; pass a Fraction or str")
        return int(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Scalar:
    """Gaussian rational ``re + im*xi``.  Treat instances as immutable.

    ``re`` and ``im`` are ``int`` or :class:`~fractions.Fraction`.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im != 0:
                raise TypeError("Scalar(Scalar, im) is ambiguous")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, complex):
            re, im = re.real, re.imag
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _make(cls, re, im) -> "Scalar":
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = as_scalar(other)
        return Scalar._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_scalar(other)
        return Scalar._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return NotImplemented
        o = as_scalar(other)
        return Scalar._make(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def norm(self):
        return self.re * self.re + self.im * self.im

    def conj(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    def inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar._make(_frac(Fraction(self.re) / n), _frac(Fraction(-self.im) / n))

    def __truediv__(self, other):
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        try:
            o = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_gaussian_integer(self) -> bool:
        return Fraction(self.re).denominator == 1 and Fraction(self.im).denominator == 1

    # display / serialization -------------------------------------------
    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"

    def to_json(self) -> dict:
        re, im = Fraction(self.re), Fraction(self.im)
        return {"re": [re.numerator, re.denominator], "im": [im.numerator, im.denominator]}

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        if isinstance(obj, (int, str)):
            return cls(obj)
        return cls._make(_frac(Fraction(*obj["re"])), _frac(Fraction(*obj["im"])))


ZERO = Scalar._make(0, 0)
ONE = Scalar._make(1, 0)
XI = Scalar._make(0, 1)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, complex):
        return Scalar(x)
    return Scalar._make(_frac(x), 0)


# --------------------------------------------------------------------------
# integer array helpers


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _fit(a: np.ndarray) -> np.ndarray:
    """Return ``a`` as int64 when every entry is safely representable."""
    if a.dtype == np.int64:
        return a
    if _maxabs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def _widen(a: np.ndarray, bound: int) -> np.ndarray:
    """Promote to Python ints if an operation can reach ``bound``."""
    if a.dtype == object or bound < _INT64_SAFE:
        return a
    return a.astype(object)


def _array_gcd(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == np.int64:
        return int(np.gcd.reduce(a, axis=None))
    return reduce(math.gcd, (int(v) for v in a.flat), 0)


class Matrix:
    """Immutable dense matrix over Q(xi).

    ``Matrix([[1, XI], [0, 1]])`` builds from nested rows of anything
    :func:`as_scalar` accepts.  Entry ``(i, j)`` equals
    ``(re[i, j] + im[i, j]*xi) / den``.
    """

    __slots__ = ("rows", "cols", "re", "im", "den")

    def __init__(self, rows_data: Sequence[Sequence] = (), shape: tuple[int, int] | None = None):
        data = [[as_scalar(x) for x in row] for row in rows_data]
        if shape is None:
            nr = len(data)
            nc = len(data[0]) if nr else 0
        else:
            nr, nc = shape
        if len(data) != nr or any(len(r) != nc for r in data):
            raise ShapeError("ragged or mis-shaped matrix data")
        den = 1
        for row in data:
            for s in row:
                den = math.lcm(den, Fraction(s.re).denominator, Fraction(s.im).denominator)
        re = np.empty((nr, nc), dtype=object)
        im = np.empty((nr, nc), dtype=object)
        for i, row in enumerate(data):
            for j, s in enumerate(row):
                re[i, j] = int(s.re * den)
                im[i, j] = int(s.im * den)
        self._set(_fit(re), _fit(im), den)

    def _set(self, re: np.ndarray, im: np.ndarray, den: int) -> None:
        re.flags.writeable = False
        im.flags.writeable = False
        self.rows, self.cols = re.shape
        self.re, self.im, self.den = re, im, den

    @classmethod
    def from_parts(cls, re: np.ndarray, im: np.ndarray | None = None, den: int = 1) -> "Matrix":
        re = np.asarray(re)
        if re.ndim != 2:
            raise ShapeError("from_parts expects 2-d arrays")
        if re.dtype != object:
            re = re.astype(np.int64)
        im = np.zeros_like(re) if im is None else np.asarray(im)
        if im.dtype != object:
            im = im.astype(np.int64)
        if re.shape != im.shape:
            raise ShapeError("real and imaginary parts differ in shape")
        if den <= 0:
            raise ValueError("denominator must be positive")
        re, im, den = _normalize(re, im, int(den))
        m = object.__new__(cls)
        m._set(_fit(re), _fit(im), den)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_parts(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls.from_parts(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def diag(cls, values: Iterable) -> "Matrix":
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    # access -------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        if self.den == 1:
            return Scalar._make(int(self.re[i, j]), int(self.im[i, j]))
        return Scalar._make(
            _frac(Fraction(int(self.re[i, j]), self.den)),
            _frac(Fraction(int(self.im[i, j]), self.den)),
        )

    @property
    def entries(self) -> tuple[Scalar, ...]:
        return tuple(self[i, j] for i in range(self.rows) for j in range(self.cols))

    def tolist(self) -> list[list[Scalar]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def is_gaussian_integer(self) -> bool:
        return self.den == 1

    def nonzero_entries(self):
        """Yield ``(i, j, Scalar)`` for every nonzero entry, row-major."""
        rows, cols = np.nonzero((self.re != 0) | (self.im != 0))
        for i, j in zip(rows.tolist(), cols.tolist()):
            yield i, j, self[i, j]

    # arithmetic ---------------------------------------------------------
    def _binary_parts(self, other: "Matrix"):
        d = math.lcm(self.den, other.den)
        a, b = d // self.den, d // other.den
        bound = max(_maxabs(self.re), _maxabs(self.im)) * a + max(
            _maxabs(other.re), _maxabs(other.im)
        ) * b
        ar, ai = _widen(self.re, bound), _widen(self.im, bound)
        br, bi = _widen(other.re, bound), _widen(other.im, bound)
        return ar * a, ai * a, br * b, bi * b, d

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        ar, ai, br, bi, d = self._binary_parts(other)
        return Matrix.from_parts(ar + br, ai + bi, d)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        ar, ai, br, bi, d = self._binary_parts(other)
        return Matrix.from_parts(ar - br, ai - bi, d)

    def __neg__(self) -> "Matrix":
        return Matrix.from_parts(-self.re.astype(object), -self.im.astype(object), self.den)

    def scale(self, s) -> "Matrix":
        s = as_scalar(s)
        d = math.lcm(Fraction(s.re).denominator, Fraction(s.im).denominator)
        sr, si = int(s.re * d), int(s.im * d)
        re, im = self.re.astype(object), self.im.astype(object)
        return Matrix.from_parts(re * sr - im * si, re * si + im * sr, self.den * d)

    def __mul__(self, s):
        if isinstance(s, Matrix):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        bound = (
            2
            * max(self.cols, 1)
            * max(_maxabs(self.re), _maxabs(self.im))
            * max(_maxabs(other.re), _maxabs(other.im))
        )
        ar, ai = _widen(self.re, bound), _widen(self.im, bound)
        br, bi = _widen(other.re, bound), _widen(other.im, bound)
        re = ar @ br - ai @ bi
        im = ar @ bi + ai @ br
        return Matrix.from_parts(re, im, self.den * other.den)

    def kron(self, other: "Matrix") -> "Matrix":
        bound = 2 * max(_maxabs(self.re), _maxabs(self.im)) * max(
            _maxabs(other.re), _maxabs(other.im)
        )
        ar, ai = _widen(self.re, bound), _widen(self.im, bound)
        br, bi = _widen(other.re, bound), _widen(other.im, bound)
        re = np.kron(ar, br) - np.kron(ai, bi)
        im = np.kron(ar, bi) + np.kron(ai, br)
        return Matrix.from_parts(re, im, self.den * other.den)

    @property
    def T(self) -> "Matrix":
        return Matrix.from_parts(self.re.T.copy(), self.im.T.copy(), self.den)

    def apply(self, vec: Sequence) -> tuple[Scalar, ...]:
        """Matrix-vector product for a sequence of scalars."""
        col = Matrix([[v] for v in vec]) if len(vec) else Matrix.zeros(0, 1)
        out = self @ col
        return tuple(out[i, 0] for i in range(out.rows))

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (
            self.den == other.den
            and np.array_equal(self.re, other.re)
            and np.array_equal(self.im, other.im)
        )

    def __hash__(self):
        return hash((self.shape, self.den, tuple(self.re.flat), tuple(self.im.flat)))

    def __repr__(self):
        body = "; ".join(", ".join(str(s) for s in row) for row in self.tolist())
        return f"Matrix([{body}])"

    def to_json(self) -> list[list[dict]]:
        return [[s.to_json() for s in row] for row in self.tolist()]

    @classmethod
    def from_json(cls, rows) -> "Matrix":
        return cls([[Scalar.from_json(s) for s in row] for row in rows])


def _normalize(re: np.ndarray, im: np.ndarray, den: int):
    if den == 1:
        return re, im, 1
    g = math.gcd(den, _array_gcd(re), _array_gcd(im))
    if g > 1:
        re, im, den = re // g, im // g, den // g
    return re, im, den


# --------------------------------------------------------------------------
# functional interface


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row ``(i1, i2)`` maps to ``i1*b.rows + i2``."""
    return a.kron(b)


def _blocks(re: np.ndarray, im: np.ndarray):
    """Split rows/cols into independent blocks of the nonzero pattern."""
    nz_r, nz_c = np.nonzero((re != 0) | (im != 0))
    nr, nc = re.shape
    if nz_r.size == 0:
        return []
    graph = coo_matrix(
        (np.ones(nz_r.size, dtype=np.int8), (nz_r, nr + nz_c)),
        shape=(nr + nc, nr + nc),
    )
    _, labels = connected_components(graph, directed=False)
    row_lab, col_lab = labels[:nr], labels[nr:]
    out = []
    for lab in np.unique(labels[nz_r]):
        rs = np.flatnonzero(row_lab == lab)
        cs = np.flatnonzero(col_lab == lab)
        out.append((rs, cs))
    return out


def _bareiss_rank(re: np.ndarray, im: np.ndarray) -> int:
    """Rank over Q(xi) of a Gaussian-integer matrix by Bareiss elimination.

    Pivot rule: columns left to right, first nonzero row at or below the
    current pivot row.  Every division is exact in Z[xi].
    """
    a_re = np.array(re, dtype=object)
    a_im = np.array(im, dtype=object)
    nrows, ncols = a_re.shape
    k = 0
    prev_re, prev_im = 1, 0
    for c in range(ncols):
        if k == nrows:
            break
        col = np.flatnonzero((a_re[k:, c] != 0) | (a_im[k:, c] != 0))
        if col.size == 0:
            continue
        r = k + int(col[0])
        if r != k:
            a_re[[k, r]] = a_re[[r, k]]
            a_im[[k, r]] = a_im[[r, k]]
        if k + 1 < nrows:
            pr, pi = a_re[k, c], a_im[k, c]
            row_re, row_im = a_re[k, c:], a_im[k, c:]
            sub_re, sub_im = a_re[k + 1 :, c:], a_im[k + 1 :, c:]
            fr, fi = sub_re[:, :1], sub_im[:, :1]
            # p*sub - f*row
            n_re = pr * sub_re - pi * sub_im - (fr * row_re - fi * row_im)
            n_im = pr * sub_im + pi * sub_re - (fr * row_im + fi * row_re)
            if prev_re != 1 or prev_im != 0:
                q = prev_re * prev_re + prev_im * prev_im
                t_re = n_re * prev_re + n_im * prev_im
                t_im = n_im * prev_re - n_re * prev_im
                n_re, n_im = t_re // q, t_im // q
            a_re[k + 1 :, c:] = n_re
            a_im[k + 1 :, c:] = n_im
            prev_re, prev_im = pr, pi
        k += 1
    return k


def mat_rank(m: Matrix) -> int:
    """Exact rank via block splitting plus fraction-free elimination."""
    total = 0
    for rs, cs in _blocks(m.re, m.im):
        sub_re = m.re[np.ix_(rs, cs)]
        sub_im = m.im[np.ix_(rs, cs)]
        if rs.size == 1 or cs.size == 1:
            total += 1
            continue
        if rs.size > cs.size:
            sub_re, sub_im = sub_re.T, sub_im.T
        total += _bareiss_rank(sub_re, sub_im)
    return total


def _rref(m: Matrix):
    """Reduced row echelon form over Q(xi) as Scalar rows plus pivot columns."""
    rows = m.tolist()
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    k = 0
    for c in range(nc):
        if k == nr:
            break
        r = next((r for r in range(k, nr) if rows[r][c]), None)
        if r is None:
            continue
        rows[k], rows[r] = rows[r], rows[k]
        inv = rows[k][c].inverse()
        rows[k] = [x * inv for x in rows[k]]
        for i in range(nr):
            if i != k and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
        pivots.append(c)
        k += 1
    return rows, pivots


def mat_kernel_basis(m: Matrix) -> list[tuple[Scalar, ...]]:
    """Basis of the right kernel, one vector per free column (ascending)."""
    rows, pivots = _rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises ``ZeroDivisionError`` for singular input."""
    if m.rows != m.cols:
        raise ShapeError(f"cannot invert non-square {m.shape}")
    n = m.rows
    aug = Matrix(
        [row + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m.tolist())]
    )
    rows, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix([row[n:] for row in rows])
