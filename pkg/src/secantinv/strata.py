"""Composition-indexed stratification of the affine space of Hankel
matrices, and the torus normal form of the determinant on each stratum.

The (n+1) x (n+1) generic Hankel determinant f lives on C^(2n+1).  Each
composition P = (p_1, ..., p_l) of n+1 indexes a locally closed stratum Y_P
isomorphic to (C*)^l x C^n on which f becomes the monomial

    f|_{Y_P} = y_{q_1}^{p_1} * ... * y_{q_l}^{p_l},

where the anchor indices q_i are fixed deterministically by iterating the
Hankel block reduction: the i-th block occupies rows [s_i, s_i + p_i) of the
matrix (s_i = p_1 + ... + p_{i-1}) and its nonzero antidiagonal sits at
coordinate index q_i = 2*s_i + p_i - 1.  Each stratum has a companion piece
Y_{P,0} on which f vanishes identically; the union of the companion pieces
is the cone over the top secant variety.  Descriptors only record this as
metadata, no scheme-theoretic data is stored.

A single Euclidean-algorithm coordinate change on the torus factors turns
the monomial into z^d with d = gcd(P); `torus_normal_form` returns the
unimodular exponent matrix realizing that change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import List, Sequence, Tuple

from .compositions import Composition, iter_compositions


@dataclass(frozen=True)
class StratumDescriptor:
    """Combinatorial data of one torus stratum.

    ``monomial`` lists (coordinate index, exponent) pairs of the restricted
    determinant; ``torus_rank`` + ``affine_rank`` is the stratum dimension.
    """

    composition: Composition
    torus_rank: int
    affine_rank: int
    exponent_vector: Tuple[int, ...]
    gcd: int
    monomial: Tuple[Tuple[int, int], ...]

    @property
    def dimension(self) -> int:
        return self.torus_rank + self.affine_rank

    def to_obj(self) -> dict:
        return {
            "composition": self.composition.to_obj(),
            "gcd": self.gcd,
            "monomial": [{"var": q, "power": p} for q, p in self.monomial],
        }

    @staticmethod
    def from_obj(obj: dict, n: int) -> "StratumDescriptor":
        comp = Composition(tuple(obj["composition"]))
        monomial = tuple((rec["var"], rec["power"]) for rec in obj["monomial"])
        return StratumDescriptor(
            composition=comp,
            torus_rank=len(comp),
            affine_rank=n,
            exponent_vector=comp.parts,
            gcd=obj["gcd"],
            monomial=monomial,
        )


@dataclass(frozen=True)
class UnimodularChange:
    """Integer coordinate change on a torus, with the resulting exponent.

    ``matrix`` M satisfies det M = +-1 and M @ (d, 0, ..., 0) equals the
    original exponent vector: pulling the single-variable monomial z^d back
    through the change reproduces the original monomial.
    """

    matrix: Tuple[Tuple[int, ...], ...]
    exponent: int

    def size(self) -> int:
        return len(self.matrix)

    def determinant(self) -> int:
        return _int_det(self.matrix)

    def pullback_exponents(self) -> Tuple[int, ...]:
        """Exponent vector of the pullback of z^d (z = first new coordinate)."""
        return tuple(row[0] * self.exponent for row in self.matrix)


def _int_det(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free elimination."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for r in range(n - 1):
        if a[r][r] == 0:
            for i in range(r + 1, n):
                if a[i][r] != 0:
                    a[r], a[i] = a[i], a[r]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]) // prev
            a[i][r] = 0
        prev = a[r][r]
    return sign * a[n - 1][n - 1]


def stratum_coordinate_trace(n: int, composition: Composition) -> List[Tuple[int, int]]:
    """Block sizes and anchor coordinate indices for one stratum.

    Iterating the block reduction once per part turns the Hankel matrix into
    a block diagonal matrix of skew-lower-triangular Hankel blocks; block i
    has size p_i and its antidiagonal carries the coordinate with index
    q_i = 2*(p_1 + ... + p_{i-1}) + p_i - 1.  Returns [(p_i, q_i), ...].
    """
    if composition.total != n + 1:
        raise ValueError(
            f"composition sums to {composition.total}, expected {n + 1}"
        )
    out: List[Tuple[int, int]] = []
    start = 0
    for p in composition.parts:
        out.append((p, 2 * start + p - 1))
        start += p
    return out


def stratify(n: int) -> List[StratumDescriptor]:
    """One descriptor per composition of n+1, in enumeration order.

    On each stratum the determinant is the recorded monomial and is
    nonvanishing; it vanishes identically on the companion piece Y_{P,0},
    and the union of those companions is the determinantal hypersurface cone.
    """
    if n < 0:
        raise ValueError(f"defined for n >= 0, got {n}")
    out: List[StratumDescriptor] = []
    for comp in iter_compositions(n + 1):
        trace = stratum_coordinate_trace(n, comp)
        out.append(
            StratumDescriptor(
                composition=comp,
                torus_rank=len(comp),
                affine_rank=n,
                exponent_vector=comp.parts,
                gcd=comp.gcd(),
                monomial=tuple((q, p) for p, q in trace),
            )
        )
    return out


def torus_normal_form(exponents: Sequence[int]) -> UnimodularChange:
    """Unimodular torus coordinate change turning a monomial into z^d.

    Repeated Euclidean steps on adjacent nonzero exponents (always reducing
    the larger against the smaller, sweeping left to right to a fixpoint)
    leave a single exponent equal to d = gcd; a final transposition brings
    it to the first coordinate.  The accumulated matrix M is unimodular and
    satisfies M @ (d, 0, ..., 0) = exponents.
    """
    exps = list(exponents)
    if not exps:
        raise ValueError("exponent list must be nonempty")
    if any(e < 1 for e in exps):
        raise ValueError("exponents must be positive")
    size = len(exps)
    d = reduce(math.gcd, exps)
    # U columns track the inverse of the elementary steps applied so far,
    # keeping the invariant U @ exps == original.
    u = [[1 if i == j else 0 for j in range(size)] for i in range(size)]

    def nonzero_positions() -> List[int]:
        return [i for i, e in enumerate(exps) if e != 0]

    while True:
        pos = nonzero_positions()
        if len(pos) <= 1:
            break
        progressed = False
        for a, b in zip(pos, pos[1:]):
            if exps[a] == 0 or exps[b] == 0:
                continue
            if exps[a] >= exps[b]:
                q, keep, dropped = exps[a] // exps[b], b, a
            else:
                q, keep, dropped = exps[b] // exps[a], a, b
            exps[dropped] -= q * exps[keep]
            for row in u:
                row[keep] += q * row[dropped]
            progressed = True
        if not progressed:
            break
    pos = nonzero_positions()
    target = pos[0]
    if target != 0:
        exps[0], exps[target] = exps[target], exps[0]
        for row in u:
            row[0], row[target] = row[target], row[0]
    assert exps[0] == d and all(e == 0 for e in exps[1:])
    return UnimodularChange(tuple(tuple(row) for row in u), d)
