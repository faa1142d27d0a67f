"""Quantum symmetrizers and graded dimensions of Nichols algebras.

With ``c_i`` acting on tensor slots ``(i, i+1)`` (1-based):

    Omega_{0,1} = id_V,     Omega_{k,1} = id + c_k (Omega_{k-1,1} (x) id)   on V^(k+1)
    Omega_1 = id,           Omega_n = (Omega_{n-1} (x) id) Omega_{n-1,1}

and ``dim B^n(V) = rank Omega_n``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .exactlinalg import ONE, ZERO, Matrix, Scalar, ShapeError, as_scalar, mat_rank
from .ydbraid import Braiding

DEFAULT_NMAX = 8
DEFAULT_MAX_MATRIX = 1024
CUTOFF = "cutoff-exceeded"
TERMINATED = "terminated"


class ResourceLimitError(RuntimeError):
    pass


def max_matrix_size() -> int:
    """Largest ``d**n`` the symmetrizer will build; ``NICHOLS_MAX_MATRIX`` overrides."""
    raw = os.environ.get("NICHOLS_MAX_MATRIX")
    return int(raw) if raw else DEFAULT_MAX_MATRIX


def _check_size(d: int, n: int) -> None:
    ceiling = max_matrix_size()
    if d**n > ceiling:
        raise ResourceLimitError(
            f"Omega_{n} would be {d**n}x{d**n}, above NICHOLS_MAX_MATRIX={ceiling}"
        )


def c_slot(c: Braiding, i: int, k: int) -> Matrix:
    """``c_i`` on ``V^(k)``: identity except on slots i, i+1."""
    d = c.dim
    left = Matrix.identity(d ** (i - 1))
    right = Matrix.identity(d ** (k - i - 1))
    return left.kron(c.c).kron(right)


class _Cache:
    def __init__(self, c: Braiding):
        d = c.dim
        self.omega = {1: Matrix.identity(d)}
        self.omega_1 = {0: Matrix.identity(d)}


_CACHES: dict = {}


def _cache(c: Braiding) -> _Cache:
    key = id(c)
    entry = _CACHES.get(key)
    if entry is None or entry[0] is not c:
        entry = (c, _Cache(c))
        _CACHES[key] = entry
    return entry[1]


def omega_1(c: Braiding, k: int) -> Matrix:
    """``Omega_{k,1}`` on ``V^(k+1)`` by the recursion, memoized."""
    cache = _cache(c)
    if k in cache.omega_1:
        return cache.omega_1[k]
    _check_size(c.dim, k + 1)
    d = c.dim
    prev = omega_1(c, k - 1).kron(Matrix.identity(d))
    out = Matrix.identity(d ** (k + 1)) + c_slot(c, k, k + 1) @ prev
    cache.omega_1[k] = out
    return out


def omega_1_explicit(c: Braiding, k: int) -> Matrix:
    """``id + c_k + c_k c_{k-1} + ... + c_k ... c_1``, summed term by term."""
    _check_size(c.dim, k + 1)
    size = c.dim ** (k + 1)
    total = Matrix.identity(size)
    term = Matrix.identity(size)
    for i in range(k, 0, -1):
        term = term @ c_slot(c, i, k + 1)
        total = total + term
    return total


def quantum_symmetrizer(c: Braiding, n: int) -> Matrix:
    if n < 1:
        raise ValueError("n must be at least 1")
    cache = _cache(c)
    if n in cache.omega:
        return cache.omega[n]
    _check_size(c.dim, n)
    out = quantum_symmetrizer(c, n - 1).kron(Matrix.identity(c.dim)) @ omega_1(c, n - 1)
    cache.omega[n] = out
    return out


def quantum_symmetrizer_explicit(c: Braiding, n: int) -> Matrix:
    """The same product built from :func:`omega_1_explicit`, with no memoization."""
    out = Matrix.identity(c.dim)
    for k in range(2, n + 1):
        out = out.kron(Matrix.identity(c.dim)) @ omega_1_explicit(c, k - 1)
    return out


def clear_cache() -> None:
    _CACHES.clear()


@dataclass
class GradedDimReport:
    label: str
    dim: int
    n_max: int
    ranks: list = field(default_factory=list)
    status: str = CUTOFF

    @property
    def total(self) -> int | None:
        if self.status != TERMINATED:
            return None
        return 1 + sum(r for n, r in self.ranks if n >= 1)

    @property
    def profile(self) -> list[int]:
        """Graded dimensions from degree 0 up to the last nonzero degree computed."""
        return [1] + [r for n, r in self.ranks if r]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "dim": self.dim,
            "n_max": self.n_max,
            "ranks": [{"n": n, "rank": r} for n, r in self.ranks],
            "status": self.status,
            "total": self.total,
        }

    def csv_rows(self) -> list[tuple[int, int, int]]:
        rows, cum = [], 1
        for n, r in self.ranks:
            cum += r
            rows.append((n, r, cum))
        return rows


def graded_dims(c: Braiding, n_max: int = DEFAULT_NMAX, label: str | None = None) -> GradedDimReport:
    """Ranks of Omega_n for n = 1.. until the first zero or ``n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rep = GradedDimReport(label if label is not None else c.label, c.dim, n_max)
    for n in range(1, n_max + 1):
        r = mat_rank(quantum_symmetrizer(c, n))
        rep.ranks.append((n, r))
        if r == 0:
            rep.status = TERMINATED
            break
    return rep


def total_dim(report: GradedDimReport) -> int | str:
    """``1 + sum of ranks`` when the sequence reached zero, otherwise :data:`CUTOFF`."""
    return report.total if report.status == TERMINATED else CUTOFF


# --------------------------------------------------------------------------
# tensor elements and kernels

ALPHABET = "vw"


def word_index(word, d: int) -> int:
    """Position of a word in the lexicographic basis of V^n (v < w < ...)."""
    idx = 0
    for ch in word:
        letter = ALPHABET.find(ch) if isinstance(ch, str) else int(ch)
        if not 0 <= letter < d:
            raise ShapeError(f"letter {ch!r} outside a {d}-dimensional space")
        idx = idx * d + letter
    return idx


def tensor_element(terms: dict, d: int) -> tuple[int, list[Scalar]]:
    """``{"vw": 1, "wv": -XI}`` -> (degree, coordinate vector)."""
    degrees = {len(w) for w in terms}
    if len(degrees) != 1:
        raise ShapeError(f"mixed-degree element: degrees {sorted(degrees)}")
    n = degrees.pop()
    vec = [ZERO] * (d**n)
    for w, coeff in terms.items():
        i = word_index(w, d)
        vec[i] = vec[i] + as_scalar(coeff)
    return n, vec


def relation_in_kernel(c: Braiding, element: dict, n: int | None = None) -> bool:
    """Is the element (a dict word -> coefficient) annihilated by Omega_n?"""
    deg, vec = tensor_element(element, c.dim)
    if n is not None and n != deg:
        raise ShapeError(f"element has degree {deg}, asked for {n}")
    image = quantum_symmetrizer(c, deg).apply(vec)
    return all(not x for x in image)


def alternating_word(n: int) -> str:
    return "".join(ALPHABET[i % 2] for i in range(n))


def eigen_witness(c: Braiding, n: int) -> Scalar | None:
    """k with Omega_n(a_n) = k a_n, a_n = v w v w ... of length n; None otherwise."""
    if c.dim != 2 or n < 1:
        return None
    _, vec = tensor_element({alternating_word(n): ONE}, 2)
    image = quantum_symmetrizer(c, n).apply(vec)
    pos = word_index(alternating_word(n), 2)
    k = image[pos]
    if not k:
        return None
    if any(x for i, x in enumerate(image) if i != pos):
        return None
    return k


__all__ = [
    "DEFAULT_NMAX",
    "CUTOFF",
    "TERMINATED",
    "ResourceLimitError",
    "max_matrix_size",
    "c_slot",
    "omega_1",
    "omega_1_explicit",
    "quantum_symmetrizer",
    "quantum_symmetrizer_explicit",
    "clear_cache",
    "GradedDimReport",
    "graded_dims",
    "total_dim",
    "word_index",
    "tensor_element",
    "relation_in_kernel",
    "alternating_word",
    "eigen_witness",
]
