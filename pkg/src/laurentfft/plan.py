"""Compile the class decomposition into an executable fast-transform plan.

For each paired class index m > 0 the four combination matrices
Re(M_m) +- Re(M_-m) and Im(M_m) +- Im(M_-m) each get rank-factored into
postadd * preadd, so applying one of them costs rank-many multiplications
by a single real constant (cos or sin of 2*pi*m/N). When 8 | N the top
class has no negative partner; its two combinations (Re+Im) and (Im-Re)
share the one constant sqrt(2)/2. Class 0 needs no multiplications at all
and becomes the additive stage.

The multiplication count of a compiled plan is the sum of branch ranks.
The module also reports that count three ways (per-branch ranks, stacked
ranks, and the doubled sum over real-part ranks) so their agreement can be
checked rather than assumed, and can serialize plans to JSON and back.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import numpy as np

from .decomposition import ClassDecomposition, decompose
from .rational import RationalMatrix, ZeroMatrixError, rank, rank_factor, vstack

SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"


@dataclass(frozen=True, eq=False)
class BranchMatrices:
    """The multiplicative combination matrices for one positive class index.

    Symmetric kind: re_sum = Re(M_m)+Re(M_-m), re_diff = Re(M_m)-Re(M_-m),
    and likewise im_sum/im_diff. Asymmetric kind (m = N/8, only when 8 | N):
    re_sum = Re(M_m)+Im(M_m) and im_diff = Im(M_m)-Re(M_m); the other two
    slots are None because the class has no negative partner.
    """

    m: int
    kind: str
    re_sum: np.ndarray
    re_diff: np.ndarray | None
    im_sum: np.ndarray | None
    im_diff: np.ndarray


def branch_matrices(dec: ClassDecomposition, m: int) -> BranchMatrices:
    if m < 1 or m not in dec.indices:
        raise ValueError(f"{m} is not a positive class index for n={dec.n}")
    pos = dec.matrix(m)
    if dec.n % 8 == 0 and m == dec.n // 8:
        return BranchMatrices(m=m, kind=ASYMMETRIC,
                              re_sum=pos.re + pos.im, re_diff=None,
                              im_sum=None, im_diff=pos.im - pos.re)
    neg = dec.matrix(-m)
    return BranchMatrices(m=m, kind=SYMMETRIC,
                          re_sum=pos.re + neg.re, re_diff=pos.re - neg.re,
                          im_sum=pos.im + neg.im, im_diff=pos.im - neg.im)


def _positive_indices(dec: ClassDecomposition) -> tuple[int, ...]:
    return tuple(m for m in dec.indices if m >= 1)


COSINE = "cosine"
SINE = "sine"
HALF_SQRT2 = "half_sqrt2"

REAL_OUT = "real_out"
IMAG_OUT = "imag_out"


def constant_value(kind: str, m: int, n: int) -> float:
    if kind == COSINE:
        return math.cos(2.0 * math.pi * m / n)
    if kind == SINE:
        return math.sin(2.0 * math.pi * m / n)
    if kind == HALF_SQRT2:
        return math.sqrt(2.0) / 2.0
    raise ValueError(f"unknown constant kind {kind!r}")


@dataclass(frozen=True, eq=False)
class MultiplicativeBranch:
    """One rank-factored combination matrix with its scaling constant.

    Applying the branch to an input vector v means
    ``sign * constant_value * (postadd @ (preadd @ v))`` accumulated onto
    the chosen output part. preadd has rank-many rows; postadd rebuilds the
    source matrix exactly: postadd * preadd = source.
    """

    m: int
    constant_kind: str
    constant_value: float
    preadd: RationalMatrix
    postadd: RationalMatrix
    destination: str
    sign: int

    @property
    def rank(self) -> int:
        return self.preadd.rows


@dataclass(frozen=True, eq=False)
class AdditiveStage:
    """Multiplication-free class-0 contribution: Re and Im of M_0."""

    re_m0: np.ndarray
    im_m0: np.ndarray


@dataclass(frozen=True, eq=False)
class FftPlan:
    """Straight-line recipe: additive stage plus scaled branches.

    mult_count counts one real multiplication per preadded value per branch
    (the branch constant scalings); add_count counts every two-operand real
    addition in the preadd, postadd, and additive stages under the fixed
    convention of :mod:`laurentfft.execute`; extra_mult_count counts matrix
    entries outside {-1, 0, 1}, which would each cost one further real
    multiplication (zero for every supported blocklength).
    """

    n: int
    additive: AdditiveStage
    branches: tuple[MultiplicativeBranch, ...]
    mult_count: int
    add_count: int
    extra_mult_count: int


def _int_row_adds(mat: np.ndarray) -> int:
    nnz_per_row = (mat != 0).sum(axis=1)
    return int(np.maximum(nnz_per_row - 1, 0).sum())


def _rational_nnz(mat: RationalMatrix) -> int:
    return sum(1 for row in mat.entries for x in row if x != 0)


def _rational_row_adds(mat: RationalMatrix) -> int:
    total = 0
    for row in mat.entries:
        nnz = sum(1 for x in row if x != 0)
        if nnz > 1:
            total += nnz - 1
    return total


def _nonunit_entries(mat: RationalMatrix) -> int:
    return sum(1 for row in mat.entries for x in row
               if x != 0 and abs(x) != 1)


_BRANCH_LAYOUT = (
    # (matrix slot, constant kind, destination, sign)
    ("re_sum", COSINE, REAL_OUT, +1),
    ("im_diff", SINE, REAL_OUT, +1),
    ("im_sum", COSINE, IMAG_OUT, +1),
    ("re_diff", SINE, IMAG_OUT, -1),
)

_ASYM_LAYOUT = (
    ("re_sum", HALF_SQRT2, REAL_OUT, +1),
    ("im_diff", HALF_SQRT2, IMAG_OUT, +1),
)


def compile_plan(dec: ClassDecomposition) -> FftPlan:
    """Build the executable plan for one decomposition.

    Real-input orientation: the plan produces Re(DFT v) and Im(DFT v) for a
    real vector v. Branch layout per symmetric class m: the re_sum matrix
    scaled by cos goes to the real part, im_diff scaled by sin to the real
    part, im_sum scaled by cos to the imaginary part, and re_diff scaled by
    sin is subtracted from the imaginary part. The asymmetric class routes
    (Re+Im) to the real part and (Im-Re) to the imaginary part, both scaled
    by sqrt(2)/2. All-zero combination matrices compile to no branch.
    """
    m0 = dec.matrix(0)
    branches: list[MultiplicativeBranch] = []
    extra = 0
    for m in _positive_indices(dec):
        bm = branch_matrices(dec, m)
        layout = _ASYM_LAYOUT if bm.kind == ASYMMETRIC else _BRANCH_LAYOUT
        for slot, kind, destination, sign in layout:
            source = getattr(bm, slot)
            rat = RationalMatrix.from_int_matrix(source)
            try:
                post, pre = rank_factor(rat)
            except ZeroMatrixError:
                continue
            value = constant_value(kind, m, dec.n)
            assert 0.0 < value < 1.0
            extra += _nonunit_entries(pre) + _nonunit_entries(post)
            branches.append(MultiplicativeBranch(
                m=m, constant_kind=kind, constant_value=value,
                preadd=pre, postadd=post, destination=destination, sign=sign))
    mult_count = sum(b.rank for b in branches)
    add_count = _int_row_adds(m0.re) + _int_row_adds(m0.im)
    for b in branches:
        add_count += _rational_row_adds(b.preadd) + _rational_nnz(b.postadd)
    return FftPlan(n=dec.n,
                   additive=AdditiveStage(re_m0=m0.re, im_m0=m0.im),
                   branches=tuple(branches), mult_count=mult_count,
                   add_count=add_count, extra_mult_count=extra)


def compile_plan_for(n: int) -> FftPlan:
    return compile_plan(decompose(n))


@dataclass(frozen=True)
class ClassRankRow:
    """Exact ranks of the four combination matrices for one class index.

    The asymmetric class leaves re_diff and im_sum as None (those slots do
    not exist for it).
    """

    m: int
    kind: str
    rank_re_sum: int
    rank_re_diff: int | None
    rank_im_sum: int | None
    rank_im_diff: int


@dataclass(frozen=True)
class ComplexityReport:
    """Multiplication counts for one blocklength, three ways.

    realized_total sums the four individual ranks per class (what a
    compiled plan actually spends and equals plan.mult_count).
    stacked_total instead ranks the row-stacked pairs
    [re_sum; im_sum] and [re_diff; im_diff] per symmetric class, which
    collapses any rank shared between the real and imaginary families.
    simplified_total doubles the (re_sum, im_sum) ranks per symmetric
    class, valid whenever sum and difference ranks agree. All three
    coincide on every supported blocklength up to 64; they are computed
    independently so that claim is checked, not assumed.
    """

    n: int
    per_class: tuple[ClassRankRow, ...]
    realized_total: int
    stacked_total: int
    simplified_total: int
    nlog2n: int


def complexity(dec: ClassDecomposition) -> ComplexityReport:
    rows: list[ClassRankRow] = []
    realized = 0
    stacked = 0
    simplified = 0
    for m in _positive_indices(dec):
        bm = branch_matrices(dec, m)
        re_sum = RationalMatrix.from_int_matrix(bm.re_sum)
        im_diff = RationalMatrix.from_int_matrix(bm.im_diff)
        r_rs = rank(re_sum)
        r_id = rank(im_diff)
        if bm.kind == ASYMMETRIC:
            rows.append(ClassRankRow(m=m, kind=ASYMMETRIC, rank_re_sum=r_rs,
                                     rank_re_diff=None, rank_im_sum=None,
                                     rank_im_diff=r_id))
            realized += r_rs + r_id
            stacked += r_rs + r_id
            simplified += r_rs + r_id
            continue
        re_diff = RationalMatrix.from_int_matrix(bm.re_diff)
        im_sum = RationalMatrix.from_int_matrix(bm.im_sum)
        r_rd = rank(re_diff)
        r_is = rank(im_sum)
        rows.append(ClassRankRow(m=m, kind=SYMMETRIC, rank_re_sum=r_rs,
                                 rank_re_diff=r_rd, rank_im_sum=r_is,
                                 rank_im_diff=r_id))
        realized += r_rs + r_rd + r_is + r_id
        stacked += rank(vstack(re_sum, im_sum)) + rank(vstack(re_diff, im_diff))
        simplified += 2 * (r_rs + r_is)
    nlog2n = 0 if dec.n < 1 else int(math.floor(dec.n * math.log2(dec.n) + 0.5))
    return ComplexityReport(n=dec.n, per_class=tuple(rows),
                            realized_total=realized, stacked_total=stacked,
                            simplified_total=simplified, nlog2n=nlog2n)


def complexity_for(n: int) -> ComplexityReport:
    return complexity(decompose(n))


@dataclass(frozen=True)
class CoupledPair:
    """Two input indices entering one preadd row together.

    relative_sign is +1 when both enter with the same sign, -1 otherwise.
    A row with an odd number of nonzeros leaves its last index unpaired
    (second and relative_sign are None).
    """

    first: int
    second: int | None
    relative_sign: int | None


def coupled_samples(plan: FftPlan) -> list[CoupledPair]:
    """Read the preadd rows as signed input pairings.

    Walks each branch's preadd rows in order and pairs consecutive nonzero
    columns; a pattern like +v1 -v5 -v7 +v11 reports (1, 5, -1) and
    (7, 11, -1). Purely diagnostic: it shows which input samples each
    multiplicative branch couples, in the order the plan adds them.
    """
    pairs: list[CoupledPair] = []
    for branch in plan.branches:
        for row in branch.preadd.entries:
            support = [(c, x) for c, x in enumerate(row) if x != 0]
            for i in range(0, len(support) - 1, 2):
                (c1, x1), (c2, x2) = support[i], support[i + 1]
                sign = 1 if (x1 > 0) == (x2 > 0) else -1
                pairs.append(CoupledPair(first=c1, second=c2,
                                         relative_sign=sign))
            if len(support) % 2:
                pairs.append(CoupledPair(first=support[-1][0], second=None,
                                         relative_sign=None))
    return pairs


PLAN_FORMAT = "laurentfft-plan"
PLAN_VERSION = 1


def _int_triplets(mat: np.ndarray) -> list[list[int]]:
    rows, cols = np.nonzero(mat)
    return [[int(r), int(c), int(mat[r, c])] for r, c in zip(rows, cols)]


def _int_matrix_doc(mat: np.ndarray) -> dict:
    return {"rows": int(mat.shape[0]), "cols": int(mat.shape[1]),
            "triplets": _int_triplets(mat)}


def _rational_matrix_doc(mat: RationalMatrix) -> dict:
    triplets = [[i, j, str(x)]
                for i, row in enumerate(mat.entries)
                for j, x in enumerate(row) if x != 0]
    return {"rows": mat.rows, "cols": mat.cols, "triplets": triplets}


def _int_matrix_from_doc(doc: dict) -> np.ndarray:
    mat = np.zeros((doc["rows"], doc["cols"]), dtype=np.int64)
    for r, c, v in doc["triplets"]:
        mat[r, c] = int(v)
    return mat


def _rational_matrix_from_doc(doc: dict) -> RationalMatrix:
    entries = [[Fraction(0)] * doc["cols"] for _ in range(doc["rows"])]
    for r, c, v in doc["triplets"]:
        entries[r][c] = Fraction(v)
    return RationalMatrix(entries, cols=doc["cols"])


def plan_to_dict(plan: FftPlan) -> dict:
    """JSON-ready document for a plan.

    Matrices are sparse {rows, cols, triplets} objects with triplets listed
    row-major; integer-matrix values are JSON integers, rational values are
    strings in lowest terms ("3", "-1/2"). Constants are stored as floats
    (JSON round-trips them exactly), so a reloaded plan executes
    bit-for-bit like the original.
    """
    return {
        "format": PLAN_FORMAT,
        "version": PLAN_VERSION,
        "N": plan.n,
        "mult_count": plan.mult_count,
        "add_count": plan.add_count,
        "extra_mult_count": plan.extra_mult_count,
        "additive": {"re": _int_matrix_doc(plan.additive.re_m0),
                     "im": _int_matrix_doc(plan.additive.im_m0)},
        "branches": [{
            "m": b.m,
            "constant_kind": b.constant_kind,
            "constant_value": b.constant_value,
            "destination": b.destination,
            "sign": b.sign,
            "preadd": _rational_matrix_doc(b.preadd),
            "postadd": _rational_matrix_doc(b.postadd),
        } for b in plan.branches],
    }


def plan_from_dict(doc: dict) -> FftPlan:
    if doc.get("format") != PLAN_FORMAT:
        raise ValueError(f"not a plan document: format={doc.get('format')!r}")
    if doc.get("version") != PLAN_VERSION:
        raise ValueError(f"unsupported plan version {doc.get('version')!r}")
    n = doc["N"]
    branches = []
    for b in doc["branches"]:
        expected = constant_value(b["constant_kind"], b["m"], n)
        if abs(b["constant_value"] - expected) > 1e-12:
            raise ValueError(
                f"branch constant {b['constant_value']!r} does not match "
                f"{b['constant_kind']} for m={b['m']}, N={n}")
        branches.append(MultiplicativeBranch(
            m=b["m"], constant_kind=b["constant_kind"],
            constant_value=b["constant_value"],
            preadd=_rational_matrix_from_doc(b["preadd"]),
            postadd=_rational_matrix_from_doc(b["postadd"]),
            destination=b["destination"], sign=b["sign"]))
    return FftPlan(
        n=n,
        additive=AdditiveStage(re_m0=_int_matrix_from_doc(doc["additive"]["re"]),
                               im_m0=_int_matrix_from_doc(doc["additive"]["im"])),
        branches=tuple(branches),
        mult_count=doc["mult_count"],
        add_count=doc["add_count"],
        extra_mult_count=doc["extra_mult_count"])


def save_plan(plan: FftPlan, path: str | Path) -> None:
    Path(path).write_text(json.dumps(plan_to_dict(plan), indent=2) + "\n",
                          encoding="utf-8")


def load_plan(path: str | Path) -> FftPlan:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return plan_from_dict(doc)
