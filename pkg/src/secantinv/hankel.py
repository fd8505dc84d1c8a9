"""Generic Hankel matrices and the block-reduction coordinate change.

The (n+1) x (n+1) generic Hankel matrix H_n has entry (i, j) = x_{i+j} in
the 2n+1 variables x_0 .. x_{2n}.  On the locus Y_k where x_0 = ... =
x_{k-1} = 0 and x_k != 0, a triangular change of basis P (built from the
recurrence p_0 x_k = 1, p_0 x_{k+l} + p_1 x_{k+l-1} + ... + p_l x_k = 0)
transforms H_n into N = P^T H P, a block diagonal matrix:

* top-left (k+1) x (k+1) block: Hankel, zero above the main antidiagonal,
  entry p_{i+j-k} on and below it;
* off-diagonal blocks identically zero;
* bottom-right (n-k) x (n-k) block: Hankel with entries -p_{i+j-k}.

Writing y_0 = p_0^(-1), y_i = p_0^(-2) p_i for i <= k and y_i = -p_0^(-2)
p_i for i > k, the determinant factors exactly in the localization as

    det H_n = (-1)^(k(k+1)/2) * y_0^(k+1) * det H_{n-k-1}(y_{k+2}, ..., y_{2n-k}).

The sign is the parity of the order-reversing permutation on k+1 letters:
the determinant of the top-left block picks up exactly that sign from its
antidiagonal.  It cannot be scaled away over the rationals (for k = 1 mod 4
with n - k even, no rational rescaling of the y's removes it), so it is
carried explicitly as ``BlockReduction.factorization_sign``.

Every identity here is verified symbolically (exact polynomial algebra) by
`verify_block_reduction`, and numerically at random rational points by
`factorization_identity_at_point`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exactalg import (
    LocalizedPoly,
    MultiPoly,
    PolyMatrix,
    poly_det,
)


@dataclass(frozen=True)
class HankelSpec:
    """Size parameter: the matrix is (n+1) x (n+1) in x_0 .. x_{2n}."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Hankel size parameter must be nonnegative")


def hankel_matrix(spec: HankelSpec | int) -> PolyMatrix:
    """The generic Hankel matrix with entry (i, j) = x_{i+j}."""
    n = spec.n if isinstance(spec, HankelSpec) else HankelSpec(spec).n
    nvars = 2 * n + 1
    entries = [
        LocalizedPoly(MultiPoly.variable(nvars, i + j), 0, 0)
        for i in range(n + 1)
        for j in range(n + 1)
    ]
    return PolyMatrix(n + 1, n + 1, entries)


def restricted_hankel(n: int, k: int) -> PolyMatrix:
    """H_n with x_j = 0 substituted for j < k, localized at x_k."""
    nvars = 2 * n + 1
    entries = []
    for i in range(n + 1):
        for j in range(n + 1):
            if i + j < k:
                entries.append(LocalizedPoly(MultiPoly.zero(nvars), k, 0))
            else:
                entries.append(LocalizedPoly(MultiPoly.variable(nvars, i + j), k, 0))
    return PolyMatrix(n + 1, n + 1, entries)


@dataclass(frozen=True)
class BlockReduction:
    """Result of the triangular reduction of H_n on the locus Y_k.

    ``p_seq`` holds p_0 .. p_{2n-k} from the localization recurrence;
    ``P_matrix`` is the upper triangular change of basis with (i, j) entry
    p_{j-i}; ``N_matrix`` is the exact product P^T H P; ``y_coords`` are the
    new coordinates y_0 .. y_{2n-k}.
    """

    n: int
    k: int
    p_seq: Tuple[LocalizedPoly, ...]
    P_matrix: PolyMatrix
    N_matrix: PolyMatrix
    y_coords: Tuple[LocalizedPoly, ...]

    @property
    def factorization_sign(self) -> int:
        """Sign of det H_n relative to y_0^(k+1) * det H_{n-k-1}(y..):
        the parity of the order reversal on k+1 letters."""
        return -1 if self.k % 4 in (1, 2) else 1

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "p": [p.to_str() for p in self.p_seq],
            "P": self.P_matrix.to_obj(),
            "N": self.N_matrix.to_obj(),
            "y": [y.to_str() for y in self.y_coords],
            "factorization_sign": self.factorization_sign,
        }

    @staticmethod
    def from_obj(obj: dict) -> "BlockReduction":
        n, k = obj["n"], obj["k"]
        nvars = 2 * n + 1

        def parse(s: str) -> LocalizedPoly:
            return LocalizedPoly.from_str(nvars, s, var=k)

        def parse_matrix(rows: List[List[str]]) -> PolyMatrix:
            return PolyMatrix(
                len(rows), len(rows[0]), [parse(s) for row in rows for s in row]
            )

        return BlockReduction(
            n=n,
            k=k,
            p_seq=tuple(parse(s) for s in obj["p"]),
            P_matrix=parse_matrix(obj["P"]),
            N_matrix=parse_matrix(obj["N"]),
            y_coords=tuple(parse(s) for s in obj["y"]),
        )


def block_reduce(n: int, k: int) -> BlockReduction:
    """Run the reduction of H_n on the locus {x_j = 0 for j < k, x_k != 0}.

    The p-sequence is computed by the forward recurrence in the localization
    at x_k, never by matrix inversion, so every entry stays exact.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must satisfy 0 <= k <= n-1 = {n - 1}, got {k}")
    nvars = 2 * n + 1
    xk_inv = LocalizedPoly(MultiPoly.const(nvars, 1), k, 1)
    xvar = [LocalizedPoly(MultiPoly.variable(nvars, i), k, 0) for i in range(nvars)]

    p: List[LocalizedPoly] = [xk_inv]
    for ell in range(1, 2 * n - k + 1):
        acc = p[0] * xvar[k + ell]
        for j in range(1, ell):
            acc = acc + p[j] * xvar[k + ell - j]
        p.append(-(acc * xk_inv))

    zero = LocalizedPoly(MultiPoly.zero(nvars), k, 0)
    pm_entries = [
        p[j - i] if j >= i else zero for i in range(n + 1) for j in range(n + 1)
    ]
    p_matrix = PolyMatrix(n + 1, n + 1, pm_entries)
    h_restricted = restricted_hankel(n, k)
    n_matrix = p_matrix.transpose().mul(h_restricted.mul(p_matrix))

    xk2 = LocalizedPoly(MultiPoly.variable(nvars, k) ** 2, k, 0)
    y: List[LocalizedPoly] = [xvar[k]]
    for i in range(1, 2 * n - k + 1):
        yi = xk2 * p[i]
        y.append(yi if i <= k else -yi)

    return BlockReduction(
        n=n,
        k=k,
        p_seq=tuple(p),
        P_matrix=p_matrix,
        N_matrix=n_matrix,
        y_coords=tuple(y),
    )


@dataclass(frozen=True)
class CheckResult:
    """Pass/fail of one verification case, with the offending entry if any."""

    case: str
    ok: bool
    offending_entry: Optional[Tuple[int, int]] = None
    detail: str = ""

    def to_obj(self) -> dict:
        obj: dict = {"case": self.case, "ok": self.ok}
        if self.offending_entry is not None:
            obj["offending_entry"] = list(self.offending_entry)
        if self.detail:
            obj["detail"] = self.detail
        return obj

    @staticmethod
    def from_obj(obj: dict) -> "CheckResult":
        entry = obj.get("offending_entry")
        return CheckResult(
            case=obj["case"],
            ok=obj["ok"],
            offending_entry=tuple(entry) if entry is not None else None,
            detail=obj.get("detail", ""),
        )


@dataclass(frozen=True)
class VerificationReport:
    n: int
    k: int
    checks: Tuple[CheckResult, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failing_cases(self) -> List[str]:
        return [c.case for c in self.checks if not c.ok]

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "all_ok": self.all_ok,
            "checks": [c.to_obj() for c in self.checks],
        }

    @staticmethod
    def from_obj(obj: dict) -> "VerificationReport":
        return VerificationReport(
            n=obj["n"],
            k=obj["k"],
            checks=tuple(CheckResult.from_obj(rec) for rec in obj["checks"]),
        )


def verify_block_reduction(r: BlockReduction) -> VerificationReport:
    """Check the four block-structure identities as exact symbolic algebra.

    (a) top-left block: N_ij = 0 for i+j < k and N_ij = p_{i+j-k} for
        k <= i+j <= 2k;
    (b) both off-diagonal blocks vanish;
    (c) bottom-right block is Hankel with entries -p_{i+j-k};
    (d) det N' = det H_n on the locus, where N' = p_0^(-2) N.
    """
    n, k = r.n, r.k
    nvars = 2 * n + 1
    zero = LocalizedPoly(MultiPoly.zero(nvars), k, 0)

    def first_mismatch(pairs) -> Optional[Tuple[int, int]]:
        for i, j, expected in pairs:
            if r.N_matrix.at(i, j) != expected:
                return (i, j)
        return None

    top = first_mismatch(
        (i, j, zero if i + j < k else r.p_seq[i + j - k])
        for i in range(k + 1)
        for j in range(k + 1)
    )
    off = first_mismatch(
        (i, j, zero)
        for i in range(n + 1)
        for j in range(n + 1)
        if (i <= k) != (j <= k)
    )
    bottom = first_mismatch(
        (i, j, -r.p_seq[i + j - k])
        for i in range(k + 1, n + 1)
        for j in range(k + 1, n + 1)
    )

    det_n = poly_det(r.N_matrix)
    det_nprime = det_n.mul_var_power(2 * (n + 1))  # p_0^(-2) per column = x_k^2
    det_h = poly_det(restricted_hankel(n, k))
    det_ok = det_nprime == det_h

    checks = (
        CheckResult("top_left", top is None, top),
        CheckResult("off_diagonal", off is None, off),
        CheckResult("bottom_right", bottom is None, bottom),
        CheckResult(
            "determinant",
            det_ok,
            None,
            "" if det_ok else "det(p_0^-2 N) != det H_n on the locus",
        ),
    )
    return VerificationReport(n, k, checks)


def residual_hankel(r: BlockReduction) -> PolyMatrix:
    """The (n-k) x (n-k) Hankel matrix in the coordinates y_{k+2} .. y_{2n-k}."""
    size = r.n - r.k
    entries = [
        r.y_coords[r.k + 2 + i + j] for i in range(size) for j in range(size)
    ]
    return PolyMatrix(size, size, entries)


def factorization_identity(r: BlockReduction) -> bool:
    """Exact symbolic check of the factorization

    det H_n = sign * y_0^(k+1) * det H_{n-k-1}(y_{k+2}..),

    with sign = r.factorization_sign."""
    lhs = poly_det(restricted_hankel(r.n, r.k))
    rhs = r.y_coords[0] ** (r.k + 1)
    if r.k < r.n:
        rhs = rhs * poly_det(residual_hankel(r))
    if r.factorization_sign == -1:
        rhs = -rhs
    return lhs == rhs


# -- exact evaluation at rational points --------------------------------------


def fraction_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a dense rational matrix by Gaussian elimination."""
    size = len(rows)
    m = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for c in range(size):
        pivot_row = next((i for i in range(c, size) if m[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, size):
            if m[i][c] == 0:
                continue
            factor = m[i][c] * inv
            for j in range(c, size):
                m[i][j] -= factor * m[c][j]
    return det


def random_locus_point(n: int, k: int, rng: random.Random) -> List[Fraction]:
    """A random rational point on the locus: x_j = 0 for j < k, x_k != 0.

    Coordinates are drawn with numerator and denominator bounded by 20 in
    absolute value; small heights keep the exact arithmetic fast.
    """
    point = [Fraction(0)] * (2 * n + 1)
    for j in range(k, 2 * n + 1):
        while True:
            value = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            if j != k or value != 0:
                break
        point[j] = value
    return point


def factorization_identity_at_point(
    n: int, k: int, point: Sequence[Fraction]
) -> bool:
    """Evaluate det H_n = y_0^(k+1) * det H_{n-k-1}(y..) at one exact point.

    The p-recurrence and the y-coordinates are evaluated numerically in
    exact rational arithmetic; no symbolic reduction is built.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must satisfy 0 <= k <= n-1, got {k}")
    x = [Fraction(v) for v in point]
    if len(x) != 2 * n + 1:
        raise ValueError("point arity mismatch")
    if any(x[j] != 0 for j in range(k)) or x[k] == 0:
        raise ValueError("point is not on the reduction locus")

    p = [1 / x[k]]
    for ell in range(1, 2 * n - k + 1):
        acc = sum(p[j] * x[k + ell - j] for j in range(ell))
        p.append(-acc / x[k])

    y = [x[k]]
    xk2 = x[k] ** 2
    for i in range(1, 2 * n - k + 1):
        yi = xk2 * p[i]
        y.append(yi if i <= k else -yi)

    lhs = fraction_det(
        [[x[i + j] for j in range(n + 1)] for i in range(n + 1)]
    )
    size = n - k
    rhs = y[0] ** (k + 1)
    if size:
        rhs *= fraction_det(
            [[y[k + 2 + i + j] for j in range(size)] for i in range(size)]
        )
    if k % 4 in (1, 2):
        rhs = -rhs
    return lhs == rhs
