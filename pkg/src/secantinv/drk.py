"""Polynomial differential forms with the twisted differential
D_f(w) = dw + df ^ w, graded by homogeneous degree mod deg f.

The cohomology of this complex computes the reduced cohomology of the
Milnor fiber of the homogeneous polynomial f, with the monodromy eigenvalue
e^(2*pi*i*a/N) read off the homogeneous degree class a mod N = deg f
(a k-form with homogeneous degree-d coefficients sits in degree d + k).

Representation:

* A k-form is a map {strictly increasing index tuple of length k:
  polynomial coefficient}; antisymmetry is normalized away by sorting the
  indices and folding signs into the coefficients.
* A form may carry one simple log pole along a coordinate hyperplane
  {x_v = 0}: ``log_var = v`` means every stored term contains index v and
  its true coefficient is the stored polynomial divided by x_v.  That is
  exactly the shape of the lifts w ^ (dx_v / x_v) used by the residue
  connecting maps, and it is closed under D_f.

The univariate complex for g(z) = z^(m+1) has H^0 = 0 and H^1 spanned by
dz, z dz, ..., z^(m-1) dz (plus dz/z in the log variant); this module
recomputes those dimensions independently by exact truncated linear algebra
rather than trusting the closed-form description.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exactalg import DimensionError, Monomial, MultiPoly


class MixedDegreeError(ValueError):
    """The form is not homogeneous, so it has no single graded class."""


class ResidueMismatchError(ValueError):
    """The proposed lift does not have the required residue."""


class PoleSurvivesError(ValueError):
    """The log pole failed to cancel, signaling an invalid lift."""


class CohomologyMismatchError(RuntimeError):
    """An independently computed cohomology check failed."""


IndexTuple = Tuple[int, ...]


def _insert_index(indices: IndexTuple, j: int) -> Optional[Tuple[IndexTuple, int]]:
    """Sorted insertion of dx_j into dx_I; returns (new indices, sign) or
    None when j already occurs (the wedge vanishes)."""
    if j in indices:
        return None
    pos = sum(1 for i in indices if i < j)
    sign = -1 if pos % 2 else 1
    return indices[:pos] + (j,) + indices[pos:], sign


class ExtForm:
    """Exterior form of pure degree with exact polynomial coefficients."""

    __slots__ = ("nvars", "degree", "terms", "log_var")

    def __init__(
        self,
        nvars: int,
        degree: int,
        terms: Mapping[IndexTuple, MultiPoly] | None = None,
        log_var: Optional[int] = None,
    ):
        if not 0 <= degree <= nvars:
            raise DimensionError(f"form degree {degree} out of range for {nvars} variables")
        clean: Dict[IndexTuple, MultiPoly] = {}
        if terms:
            for indices, coeff in terms.items():
                idx = tuple(indices)
                if len(idx) != degree:
                    raise DimensionError("index set size does not match form degree")
                if list(idx) != sorted(set(idx)):
                    raise ValueError("index sets must be strictly increasing")
                if idx and (idx[0] < 0 or idx[-1] >= nvars):
                    raise DimensionError("form index out of range")
                if coeff.nvars != nvars:
                    raise DimensionError("coefficient arity mismatch")
                if log_var is not None and log_var not in idx:
                    raise ValueError(
                        "every term of a log form must contain the pole variable"
                    )
                if not coeff.is_zero():
                    clean[idx] = coeff
        self.nvars = nvars
        self.degree = degree
        self.terms = clean
        # A zero form carries no pole; this keeps equality well behaved.
        self.log_var = log_var if clean else None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(nvars: int, degree: int) -> "ExtForm":
        return ExtForm(nvars, degree)

    @staticmethod
    def monomial_form(nvars: int, indices: Sequence[int], coeff: MultiPoly) -> "ExtForm":
        return ExtForm(nvars, len(tuple(indices)), {tuple(indices): coeff})

    # -- basics ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def has_log_pole(self) -> bool:
        return self.log_var is not None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtForm)
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.log_var == other.log_var
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.nvars, self.degree, self.log_var, frozenset(self.terms.items()))
        )

    def _check_combinable(self, other: "ExtForm") -> None:
        if self.nvars != other.nvars:
            raise DimensionError("variable count mismatch")
        if self.degree != other.degree:
            raise DimensionError("form degree mismatch")
        if self.log_var != other.log_var and self.terms and other.terms:
            raise DimensionError("cannot combine forms with different log poles")

    def __add__(self, other: "ExtForm") -> "ExtForm":
        self._check_combinable(other)
        out = dict(self.terms)
        for idx, coeff in other.terms.items():
            merged = out.get(idx)
            merged = coeff if merged is None else merged + coeff
            if merged.is_zero():
                out.pop(idx, None)
            else:
                out[idx] = merged
        log_var = self.log_var if self.terms else other.log_var
        return ExtForm(self.nvars, self.degree, out, log_var)

    def __neg__(self) -> "ExtForm":
        return ExtForm(
            self.nvars, self.degree, {i: -c for i, c in self.terms.items()}, self.log_var
        )

    def __sub__(self, other: "ExtForm") -> "ExtForm":
        return self + (-other)

    def scale(self, value) -> "ExtForm":
        c = Fraction(value)
        if c == 0:
            return ExtForm(self.nvars, self.degree, None, self.log_var)
        return ExtForm(
            self.nvars,
            self.degree,
            {i: coeff.scale(c) for i, coeff in self.terms.items()},
            self.log_var,
        )

    def mul_poly(self, p: MultiPoly) -> "ExtForm":
        return ExtForm(
            self.nvars,
            self.degree,
            {i: coeff * p for i, coeff in self.terms.items()},
            self.log_var,
        )

    def proportionality(self, other: "ExtForm") -> Optional[Fraction]:
        """The scalar c with self = c * other, or None if not proportional.

        Both forms must be nonzero; proportionality is the equality notion
        for connecting-map outputs, which are defined up to convention.
        """
        if self.is_zero() or other.is_zero():
            return None
        if set(self.terms) != set(other.terms) or self.log_var != other.log_var:
            return None
        idx = next(iter(self.terms))
        mono, coeff = other.terms[idx].leading()
        ratio = self.terms[idx].terms.get(mono)
        if ratio is None:
            return None
        c = ratio / coeff
        return c if self == other.scale(c) else None

    # -- calculus ---------------------------------------------------------------

    def exterior_derivative(self) -> "ExtForm":
        """d(w); for a log form the pole variable derivative drops out."""
        if self.degree >= self.nvars:
            return ExtForm(self.nvars, self.nvars)
        out: Dict[IndexTuple, MultiPoly] = {}
        for indices, coeff in self.terms.items():
            for j in range(self.nvars):
                if j == self.log_var:
                    continue
                inserted = _insert_index(indices, j)
                if inserted is None:
                    continue
                partial = coeff.derivative(j)
                if partial.is_zero():
                    continue
                new_idx, sign = inserted
                piece = partial if sign == 1 else -partial
                merged = out.get(new_idx)
                merged = piece if merged is None else merged + piece
                if merged.is_zero():
                    out.pop(new_idx, None)
                else:
                    out[new_idx] = merged
        return ExtForm(self.nvars, self.degree + 1, out, self.log_var)

    def wedge_with_differential_of(self, f: MultiPoly) -> "ExtForm":
        """df ^ w, with df on the left."""
        if f.nvars != self.nvars:
            raise DimensionError("variable count mismatch")
        if self.degree >= self.nvars:
            return ExtForm(self.nvars, self.nvars)
        out: Dict[IndexTuple, MultiPoly] = {}
        partials = [f.derivative(j) for j in range(self.nvars)]
        for indices, coeff in self.terms.items():
            for j, df_j in enumerate(partials):
                if df_j.is_zero():
                    continue
                inserted = _insert_index(indices, j)
                if inserted is None:
                    continue
                new_idx, sign = inserted
                piece = df_j * coeff
                if sign == -1:
                    piece = -piece
                merged = out.get(new_idx)
                merged = piece if merged is None else merged + piece
                if merged.is_zero():
                    out.pop(new_idx, None)
                else:
                    out[new_idx] = merged
        return ExtForm(self.nvars, self.degree + 1, out, self.log_var)

    # -- log poles and residues ---------------------------------------------------

    def log_lift(self, v: int) -> "ExtForm":
        """w ^ (dx_v / x_v): the standard lift with residue w restricted to
        {x_v = 0} (equal to w itself when no coefficient involves x_v)."""
        if self.log_var is not None:
            raise ValueError("form already has a log pole")
        if not 0 <= v < self.nvars:
            raise DimensionError(f"variable index {v} out of range")
        out: Dict[IndexTuple, MultiPoly] = {}
        for indices, coeff in self.terms.items():
            if v in indices:
                raise ValueError(f"term already contains dx{v}; lift is not defined")
            # dx_I ^ dx_v: move dx_v left past the indices larger than v.
            larger = sum(1 for i in indices if i > v)
            inserted = _insert_index(indices, v)
            assert inserted is not None
            new_idx, _ = inserted
            out[new_idx] = coeff if larger % 2 == 0 else -coeff
        return ExtForm(self.nvars, self.degree + 1, out, v)

    def residue(self) -> "ExtForm":
        """Residue along the pole hyperplane (coefficients restricted to it)."""
        if self.is_zero():
            return ExtForm(self.nvars, self.degree - 1)
        if self.log_var is None:
            raise ValueError("form has no log pole")
        v = self.log_var
        out: Dict[IndexTuple, MultiPoly] = {}
        for indices, coeff in self.terms.items():
            rest = tuple(i for i in indices if i != v)
            larger = sum(1 for i in indices if i > v)
            restricted = coeff.substitute(v, 0)
            if restricted.is_zero():
                continue
            out[rest] = restricted if larger % 2 == 0 else -restricted
        return ExtForm(self.nvars, self.degree - 1, out)

    def strip_pole(self) -> "ExtForm":
        """Cancel the pole when every stored coefficient is divisible by x_v."""
        if self.is_zero():
            return ExtForm(self.nvars, self.degree)
        if self.log_var is None:
            raise ValueError("form has no log pole")
        v = self.log_var
        out: Dict[IndexTuple, MultiPoly] = {}
        for indices, coeff in self.terms.items():
            if coeff.var_multiplicity(v) < 1:
                raise PoleSurvivesError(
                    f"log pole along x{v} survives in term dx{list(indices)}"
                )
            out[indices] = coeff.div_var_power(v, 1)
        return ExtForm(self.nvars, self.degree, out)

    # -- grading ---------------------------------------------------------------

    def homogeneous_degree(self) -> int:
        """Common homogeneous degree (coefficient degree + form degree, with
        dx_v/x_v counting as degree 0); MixedDegreeError if not unique."""
        if self.is_zero():
            raise MixedDegreeError("the zero form has no homogeneous degree")
        pole_shift = -1 if self.log_var is not None else 0
        degrees = set()
        for indices, coeff in self.terms.items():
            if not coeff.is_homogeneous():
                raise MixedDegreeError("a coefficient is inhomogeneous")
            degrees.add(coeff.total_degree() + len(indices) + pole_shift)
        if len(degrees) != 1:
            raise MixedDegreeError(f"mixed homogeneous degrees {sorted(degrees)}")
        return degrees.pop()

    # -- serialization ------------------------------------------------------------

    def to_obj(self) -> dict:
        terms = [
            {"indices": list(idx), "coeff": self.terms[idx].to_obj()}
            for idx in sorted(self.terms)
        ]
        obj: dict = {"degree": self.degree, "terms": terms}
        if self.log_var is not None:
            obj["log_var"] = self.log_var
        return obj

    @staticmethod
    def from_obj(nvars: int, obj: dict) -> "ExtForm":
        terms = {
            tuple(rec["indices"]): MultiPoly.from_obj(nvars, rec["coeff"])
            for rec in obj["terms"]
        }
        return ExtForm(nvars, obj["degree"], terms, obj.get("log_var"))

    def to_str(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for idx in sorted(self.terms):
            wedge = "^".join(
                f"dx{i}/x{i}" if i == self.log_var else f"dx{i}" for i in idx
            )
            body = f"({self.terms[idx].to_str()})"
            pieces.append(f"{body}*{wedge}" if wedge else body)
        return " + ".join(pieces)

    def __repr__(self):
        return f"ExtForm({self.to_str()!r})"


@dataclass(frozen=True)
class GradedClass:
    """A residue class a mod N of homogeneous degrees."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue out of range")


def _d_f_any(f: MultiPoly, form: ExtForm) -> ExtForm:
    return form.exterior_derivative() + form.wedge_with_differential_of(f)


def d_f(f: MultiPoly, form: ExtForm) -> ExtForm:
    """The twisted differential D_f(w) = dw + df ^ w on pole-free forms."""
    if f.nvars != form.nvars:
        raise DimensionError("variable count mismatch between f and the form")
    if form.has_log_pole():
        raise ValueError("log forms are handled by the connecting map")
    return _d_f_any(f, form)


def homogeneous_class(form: ExtForm, modulus: int) -> GradedClass:
    """Graded class of a form: the common residue mod N of the homogeneous
    degrees of its pieces (a k-form piece with degree-d coefficient sits in
    degree d + k).  Pieces in distinct residue classes raise
    MixedDegreeError; callers must split such forms into components first.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if form.is_zero():
        raise MixedDegreeError("the zero form has no graded class")
    pole_shift = -1 if form.log_var is not None else 0
    residues = set()
    for indices, coeff in form.terms.items():
        for d in {m.degree() for m in coeff.terms}:
            residues.add((d + len(indices) + pole_shift) % modulus)
    if len(residues) != 1:
        raise MixedDegreeError(
            f"form mixes graded classes {sorted(residues)} mod {modulus}"
        )
    return GradedClass(residues.pop(), modulus)


def connecting_map(f: MultiPoly, form: ExtForm, lift: ExtForm) -> ExtForm:
    """Residue connecting homomorphism: D_f applied to a log lift.

    ``form`` must be the exact residue of ``lift``; the differential of the
    lift then loses its pole (otherwise the lift was invalid and a
    consistency error is raised) and the result is a D_f-closed form one
    cohomological step up, in the same graded class as ``form``.
    """
    if not lift.has_log_pole():
        raise ValueError("lift must carry exactly one log pole")
    if lift.residue() != form:
        raise ResidueMismatchError("lift residue differs from the given form")
    image = _d_f_any(f, lift)
    result = image.strip_pole()
    closure = d_f(f, result)
    if not closure.is_zero():
        raise CohomologyMismatchError("connecting-map output is not closed")
    return result


# -- exact truncated linear algebra --------------------------------------------


def _row_reduce(rows: List[List[Fraction]]) -> Tuple[int, List[List[Fraction]]]:
    """Gaussian elimination over the rationals.

    Returns (rank, transform) where transform is a square matrix T with
    T @ rows in echelon form; rows of T beyond the rank span the left null
    space (the relations among the input rows).
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    work = [list(map(Fraction, r)) for r in rows]
    transform = [
        [Fraction(1) if i == j else Fraction(0) for j in range(nrows)]
        for i in range(nrows)
    ]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        transform[rank], transform[pivot] = transform[pivot], transform[rank]
        inv = 1 / work[rank][col]
        for i in range(nrows):
            if i == rank or work[i][col] == 0:
                continue
            factor = work[i][col] * inv
            row, prow = work[i], work[rank]
            for j in range(col, ncols):
                row[j] -= factor * prow[j]
            trow, tprow = transform[i], transform[rank]
            for j in range(nrows):
                trow[j] -= factor * tprow[j]
        rank += 1
        if rank == nrows:
            break
    return rank, transform


def _rank(rows: List[List[Fraction]]) -> int:
    if not rows:
        return 0
    return _row_reduce(rows)[0]


def univariate_drk_cohomology(m: int, log: bool = False) -> List[ExtForm]:
    """Cohomology basis of the twisted complex for g(z) = z^(m+1) on one
    variable, computed by independent truncated linear algebra.

    H^0 vanishes and H^1 is m-dimensional (m+1 with a log pole at 0); the
    basis dz, z dz, ..., z^(m-1) dz (preceded by dz/z in the log case) is
    verified to be independent modulo the image at two truncation levels
    before being returned.  Any disagreement raises CohomologyMismatchError.
    """
    if m < 1:
        raise ValueError(f"defined for m >= 1, got {m}")
    expected = m + 1 if log else m

    def image_rows(cap: int) -> Tuple[List[List[Fraction]], int]:
        # Domain: z^j for j <= cap.  Target coordinates: z^i dz for
        # i = -1 (log only), 0 .. cap + m.
        offset = 1 if log else 0
        width = cap + m + 1 + offset
        rows = []
        for j in range(cap + 1):
            row = [Fraction(0)] * width
            if j >= 1:
                row[j - 1 + offset] = Fraction(j)
            row[j + m + offset] += Fraction(m + 1)
            rows.append(row)
        return rows, width

    dims = []
    for cap in (3 * (m + 1), 3 * (m + 1) + m + 1):
        rows, width = image_rows(cap)
        rank = _rank(rows)
        if rank != len(rows):
            raise CohomologyMismatchError("H^0 of the univariate complex is nonzero")
        dims.append(width - rank)
        # The stated basis must be independent modulo the image.
        basis_rows = []
        offset = 1 if log else 0
        if log:
            row = [Fraction(0)] * width
            row[0] = Fraction(1)
            basis_rows.append(row)
        for j in range(m):
            row = [Fraction(0)] * width
            row[j + offset] = Fraction(1)
            basis_rows.append(row)
        if _rank(rows + basis_rows) != rank + len(basis_rows):
            raise CohomologyMismatchError(
                "stated univariate basis is dependent modulo the image"
            )
    if dims[0] != dims[1] or dims[0] != expected:
        raise CohomologyMismatchError(
            f"truncated H^1 dimensions {dims} do not stabilize at {expected}"
        )

    out: List[ExtForm] = []
    if log:
        out.append(ExtForm(1, 1, {(0,): MultiPoly.const(1, 1)}, log_var=0))
    for j in range(m):
        coeff = MultiPoly.variable(1, 0) ** j if j else MultiPoly.const(1, 1)
        out.append(ExtForm(1, 1, {(0,): coeff}))
    return out


@dataclass(frozen=True)
class TruncatedDims:
    """Per-degree cohomology dimensions at one coefficient-degree truncation."""

    dims: Tuple[Tuple[int, int], ...]
    truncation: int
    stabilized: bool

    def dim(self, k: int) -> int:
        return dict(self.dims).get(k, 0)


def _class_basis(nvars: int, k: int, modulus: int, residue: int, cap: int):
    """Monomial k-form basis of the graded-class slice with coefficient
    degree <= cap: pairs (index tuple, exponent tuple)."""
    out = []
    for indices in combinations(range(nvars), k):
        for total in range(cap + 1):
            if (total + k) % modulus != residue:
                continue
            for expo in _exponents_of_degree(nvars, total):
                out.append((indices, expo))
    return out


def _exponents_of_degree(nvars: int, total: int):
    if nvars == 0:
        if total == 0:
            yield ()
        return
    if nvars == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _exponents_of_degree(nvars - 1, total - head):
            yield (head,) + rest


def truncated_drk_dims(
    f: MultiPoly,
    modulus: int,
    residue: int,
    truncation: int,
    degrees: Optional[Sequence[int]] = None,
) -> TruncatedDims:
    """Truncated cohomology dimensions of the graded-class subcomplex.

    Restricts the class-``residue`` subcomplex to coefficient degree <=
    ``truncation``; in each form degree the reported dimension is
    dim ker(D_f) minus the dimension of the image of the elements whose
    D_f stays inside the truncation.  The ``stabilized`` flag records
    whether the same computation one modulus step lower (truncation - N)
    already gives identical dimensions; stabilization is a pragmatic
    heuristic, not a proof of convergence.

    ``degrees`` optionally restricts the computation to the listed form
    degrees (the slice sizes grow quickly with the variable count).
    """
    if not f.is_homogeneous() or f.is_zero() or f.total_degree() != modulus:
        raise ValueError("f must be homogeneous of degree equal to the modulus")
    if truncation < modulus:
        raise ValueError("truncation must be at least the modulus")
    if not 0 <= residue < modulus:
        raise ValueError("residue out of range")
    wanted = tuple(range(f.nvars + 1)) if degrees is None else tuple(degrees)

    current = _dims_at(f, modulus, residue, truncation, wanted)
    previous = _dims_at(f, modulus, residue, truncation - modulus, wanted)
    return TruncatedDims(
        dims=tuple(sorted(current.items())),
        truncation=truncation,
        stabilized=current == previous,
    )


def _dims_at(
    f: MultiPoly, modulus: int, residue: int, cap: int, wanted: Sequence[int]
) -> Dict[int, int]:
    nvars = f.nvars
    dims: Dict[int, int] = {}

    def apply_rows(k: int, domain, coeff_cap: int):
        """Images of the domain basis under D_f, as coordinate rows over the
        (k+1)-form monomials of coefficient degree <= coeff_cap; entries
        beyond the cap are returned separately."""
        low_cols: Dict = {}
        high_cols: Dict = {}
        low_rows, high_rows = [], []
        for indices, expo in domain:
            form = ExtForm.monomial_form(
                nvars, indices, MultiPoly(nvars, {Monomial.from_dense(expo): Fraction(1)})
            )
            image = d_f(f, form)
            low: Dict[int, Fraction] = {}
            high: Dict[int, Fraction] = {}
            for idx, coeff in image.terms.items():
                for mono, c in coeff.terms.items():
                    key = (idx, mono.dense(nvars))
                    if mono.degree() <= coeff_cap:
                        col = low_cols.setdefault(key, len(low_cols))
                        low[col] = low.get(col, Fraction(0)) + c
                    else:
                        col = high_cols.setdefault(key, len(high_cols))
                        high[col] = high.get(col, Fraction(0)) + c
            low_rows.append(low)
            high_rows.append(high)
        return low_rows, len(low_cols), high_rows, len(high_cols)

    def densify(sparse_rows, width):
        out = []
        for sparse in sparse_rows:
            row = [Fraction(0)] * width
            for col, c in sparse.items():
                row[col] = c
            out.append(row)
        return out

    for k in wanted:
        domain = _class_basis(nvars, k, modulus, residue, cap)
        if not domain:
            dims[k] = 0
            continue
        # Kernel of D_f on the slice: full image, no truncation of the target.
        low_rows, low_w, high_rows, high_w = apply_rows(k, domain, cap)
        full_rows = []
        for lr, hr in zip(low_rows, high_rows):
            merged = dict(lr)
            for c, v in hr.items():
                merged[low_w + c] = v
            full_rows.append(merged)
        kernel_dim = len(domain) - _rank(densify(full_rows, low_w + high_w))

        # Image inside the truncation: combinations from one coefficient
        # degree above the cap (the exterior derivative lowers coefficient
        # degree by one) whose D_f has no component beyond the cap.
        boundary_rank = 0
        prev = (
            _class_basis(nvars, k - 1, modulus, residue, cap + 1) if k >= 1 else []
        )
        if prev:
            plow, plow_w, phigh, phigh_w = apply_rows(k - 1, prev, cap)
            if phigh_w == 0:
                boundary_rank = _rank(densify(plow, plow_w)) if plow_w else 0
            else:
                rank_high, transform = _row_reduce(densify(phigh, phigh_w))
                combos = transform[rank_high:]
                projected = []
                for combo in combos:
                    row = [Fraction(0)] * plow_w
                    for i, c in enumerate(combo):
                        if c == 0:
                            continue
                        for col, v in plow[i].items():
                            row[col] += c * v
                    projected.append(row)
                boundary_rank = _rank(projected) if projected and plow_w else 0
        dims[k] = kernel_dim - boundary_rank
    return dims


# -- the explicit eigenvector pipeline ------------------------------------------


def hankel_determinant_poly(n: int) -> MultiPoly:
    """det H_n as a plain polynomial in x_0 .. x_{2n}."""
    from .exactalg import poly_det
    from .hankel import hankel_matrix

    det = poly_det(hankel_matrix(n))
    assert det.power == 0
    return det.num


def n2_eigenvectors() -> Tuple[ExtForm, ExtForm]:
    """Monodromy eigenvectors for the 3 x 3 Hankel determinant.

    Runs the two-step residue connecting pipeline starting from dx2 and
    x2 dx2 on the smallest stratum closure {x0 = x1 = 0} (where the
    determinant restricts to -x2^3), lifting first across {x1 = 0} inside
    {x0 = 0}, then across {x0 = 0} into the full space.  The two resulting
    top forms are D_f-closed of homogeneous classes 1 and 2 mod 3 and span
    the two nontrivial monodromy eigenspaces.
    """
    f = hankel_determinant_poly(2)
    f_z0 = f.substitute(0, 0)
    f_w = f_z0.substitute(1, 0)

    outputs: List[ExtForm] = []
    x2 = MultiPoly.variable(5, 2)
    for start_coeff in (MultiPoly.const(5, 1), x2):
        start = ExtForm(5, 1, {(2,): start_coeff})
        if not d_f(f_w, start).is_zero():
            raise CohomologyMismatchError("pipeline seed form is not closed")
        middle = connecting_map(f_z0, start, start.log_lift(1))
        top = connecting_map(f, middle, middle.log_lift(0))
        outputs.append(top)

    alpha1, alpha2 = outputs
    if homogeneous_class(alpha1, 3).residue != 1:
        raise CohomologyMismatchError("first eigenvector has the wrong class")
    if homogeneous_class(alpha2, 3).residue != 2:
        raise CohomologyMismatchError("second eigenvector has the wrong class")
    return alpha1, alpha2
