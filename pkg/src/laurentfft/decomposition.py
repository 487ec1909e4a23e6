"""Residue-class decomposition of the DFT exponent grid.

For a blocklength N divisible by 4, the exponents kn mod N split into N/4
classes: class m holds the four values x with 4x = 4m (mod N), i.e. with
x = m (mod N/4). Each class m gets a Gaussian-integer matrix M_m collecting
every DFT entry whose exponent falls in the class, weighted by one of the
four unit factors 1, -j, -1, j. Summing M_m * W^m over all classes, with
W = exp(-2j*pi/N), rebuilds the DFT matrix exactly; the per-class matrices
are what the plan compiler rank-factors.

Class indices run m = -(N/4-1)/2 .. +(N/4-1)/2 when N = 4 (mod 8). When
8 | N that range is not integral; the indices become -(N/8-1) .. +N/8, and
the extra class C_{N/8} is the single one whose negative counterpart is
itself shifted (the asymmetric class, handled specially downstream).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class UnsupportedBlocklengthError(ValueError):
    """Raised for blocklengths outside the supported set (N >= 4, 4 | N)."""


def _check_blocklength(n: int) -> None:
    if n < 4 or n % 4 != 0:
        raise UnsupportedBlocklengthError(
            f"blocklength {n} unsupported: need N >= 4 with N divisible by 4")


def exponent_matrix(n: int) -> np.ndarray:
    """N x N grid of DFT exponents, entry (k, i) = k*i mod N."""
    _check_blocklength(n)
    idx = np.arange(n)
    return np.outer(idx, idx) % n


def class_indices(n: int) -> tuple[int, ...]:
    """Ordered class indices for blocklength n, always n/4 of them.

    Symmetric layout -(n/4-1)/2 .. +(n/4-1)/2 when n = 4 (mod 8); shifted
    layout -(n/8-1) .. +n/8 when 8 | n, the top index being the asymmetric
    class.
    """
    _check_blocklength(n)
    if n % 8 == 4:
        h = (n // 4 - 1) // 2
        return tuple(range(-h, h + 1))
    return tuple(range(-(n // 8 - 1), n // 8 + 1))


@dataclass(frozen=True)
class ResidueClass:
    """The four exponents x with 4x = 4m (mod n).

    ``members[k] = (m + k*n/4) mod n``, stored in that k order (not sorted)
    so position k pairs with the unit coefficient (-j)^k.
    """

    n: int
    m: int
    members: tuple[int, int, int, int]


def residue_class(n: int, m: int) -> ResidueClass:
    if m not in class_indices(n):
        raise ValueError(f"{m} is not a class index for blocklength {n}")
    q = n // 4
    members = tuple((m + k * q) % n for k in range(4))
    return ResidueClass(n=n, m=m, members=members)  # type: ignore[arg-type]


def indicator(exp: np.ndarray, l: int) -> np.ndarray:
    """0/1 matrix marking the grid positions where ``exp`` equals ``l``."""
    return (exp == l).astype(np.int64)


@dataclass(frozen=True, eq=False)
class ClassMatrix:
    """Real and imaginary integer parts of one class matrix M_m.

    At every grid position at most one of (re, im) is nonzero, with value
    in {-1, +1}; the union of nonzero positions is exactly where the
    exponent grid lies in class m.
    """

    m: int
    re: np.ndarray
    im: np.ndarray


# position k in a class carries coefficient (-j)^k: 1, -j, -1, j
_COEFF_SPLIT = ((1, 0), (0, -1), (-1, 0), (0, 1))


def class_matrix(exp: np.ndarray, m: int) -> ClassMatrix:
    """Build M_m from the exponent grid: sum over the class members l of
    the indicator of l times the unit coefficient for l's position."""
    n = exp.shape[0]
    cls = residue_class(n, m)
    re = np.zeros((n, n), dtype=np.int64)
    im = np.zeros((n, n), dtype=np.int64)
    for member, (cr, ci) in zip(cls.members, _COEFF_SPLIT):
        chi = indicator(exp, member)
        if cr:
            re += cr * chi
        if ci:
            im += ci * chi
    return ClassMatrix(m=m, re=re, im=im)


@dataclass(frozen=True)
class ClassDecomposition:
    """All class matrices of one blocklength, in class_indices order."""

    n: int
    indices: tuple[int, ...]
    matrices: tuple[ClassMatrix, ...]

    @property
    def genus(self) -> int:
        """Number of classes, n/4."""
        return self.n // 4

    def matrix(self, m: int) -> ClassMatrix:
        for cm in self.matrices:
            if cm.m == m:
                return cm
        raise ValueError(f"{m} is not a class index for blocklength {self.n}")

    def residue_class(self, m: int) -> ResidueClass:
        return residue_class(self.n, m)


def decompose(n: int) -> ClassDecomposition:
    """Decompose blocklength n into its residue classes and class matrices."""
    exp = exponent_matrix(n)
    indices = class_indices(n)
    matrices = tuple(class_matrix(exp, m) for m in indices)
    return ClassDecomposition(n=n, indices=indices, matrices=matrices)


@dataclass(frozen=True)
class PartitionReport:
    """Outcome of checking that the classes tile [0, n) exactly once."""

    n: int
    holds: bool
    class_count: int
    cardinalities: tuple[int, ...]
    missing: tuple[int, ...]
    duplicated: tuple[int, ...]


def verify_partition(n: int) -> PartitionReport:
    """Check the classes are pairwise disjoint, size 4, and cover [0, n)."""
    indices = class_indices(n)
    classes = [residue_class(n, m) for m in indices]
    seen: dict[int, int] = {}
    for cls in classes:
        for x in cls.members:
            seen[x] = seen.get(x, 0) + 1
    missing = tuple(x for x in range(n) if x not in seen)
    duplicated = tuple(sorted(x for x, c in seen.items() if c > 1))
    cardinalities = tuple(len(set(cls.members)) for cls in classes)
    holds = (not missing and not duplicated
             and all(c == 4 for c in cardinalities))
    return PartitionReport(n=n, holds=holds, class_count=len(classes),
                           cardinalities=cardinalities, missing=missing,
                           duplicated=duplicated)


def reconstruct_dft(dec: ClassDecomposition) -> np.ndarray:
    """Rebuild the DFT matrix as the sum of M_m * W^m, W = exp(-2j*pi/n).

    Verification oracle only; the result is complex floating point.
    """
    w = np.exp(-2j * np.pi / dec.n)
    out = np.zeros((dec.n, dec.n), dtype=complex)
    for cm in dec.matrices:
        out += (cm.re + 1j * cm.im) * w ** cm.m
    return out


def dft_matrix(n: int) -> np.ndarray:
    """Direct DFT matrix, entry (k, i) = exp(-2j*pi*k*i/n)."""
    idx = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(idx, idx) / n)
