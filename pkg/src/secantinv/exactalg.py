"""Exact arithmetic foundation: rationals, sparse multivariate polynomials,
localization at a single variable, and symbolic matrices with determinants.

Representation conventions:

* Rational numbers are ``fractions.Fraction`` (always reduced, positive
  denominator, zero is 0/1).  ``str(Fraction)`` already produces the
  canonical "p/q" (or "p" when q = 1) serialization.
* A monomial is a sparse map {variable index: positive exponent}, stored as
  a sorted tuple of (index, exponent) pairs with no zero exponents.
* A polynomial is a map {Monomial: Fraction} with no zero coefficients,
  together with a fixed variable count.  The canonical term order is graded
  lexicographic (total degree first, then lexicographic with x0 > x1 > ...),
  and all serialized output lists terms in descending graded-lex order.
* A localized polynomial is numerator / x_k^power for one designated
  variable x_k, normalized so that x_k does not divide the numerator unless
  power = 0.

All values are immutable after construction; every operation is a pure
function, so callers may parallelize freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Rational = Fraction


class DimensionError(ValueError):
    """Raised when matrix shapes or variable counts do not match."""


def rational_to_str(x: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


def rational_from_str(s: str) -> Fraction:
    """Parse the "p/q" (or "p") serialization of a rational."""
    return Fraction(s)


@dataclass(frozen=True)
class Monomial:
    """A monomial, as a sorted tuple of (variable index, positive exponent)."""

    powers: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        for idx, exp in self.powers:
            if exp <= 0:
                raise ValueError("monomial exponents must be positive")
            if idx < 0:
                raise ValueError("variable indices must be nonnegative")
        if list(self.powers) != sorted(self.powers):
            raise ValueError("monomial powers must be sorted by variable index")

    @staticmethod
    def from_map(exponents: Mapping[int, int]) -> "Monomial":
        return Monomial(tuple(sorted((i, e) for i, e in exponents.items() if e != 0)))

    @staticmethod
    def from_dense(exponents: Sequence[int]) -> "Monomial":
        return Monomial(tuple((i, e) for i, e in enumerate(exponents) if e != 0))

    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def exponent(self, idx: int) -> int:
        for i, e in self.powers:
            if i == idx:
                return e
        return 0

    def dense(self, nvars: int) -> Tuple[int, ...]:
        out = [0] * nvars
        for i, e in self.powers:
            if i >= nvars:
                raise DimensionError(f"monomial uses x{i} beyond {nvars} variables")
            out[i] = e
        return tuple(out)

    def mul(self, other: "Monomial") -> "Monomial":
        merged: Dict[int, int] = dict(self.powers)
        for i, e in other.powers:
            merged[i] = merged.get(i, 0) + e
        return Monomial.from_map(merged)

    def divides(self, other: "Monomial") -> bool:
        return all(other.exponent(i) >= e for i, e in self.powers)

    def div(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises if not divisible."""
        merged: Dict[int, int] = dict(self.powers)
        for i, e in other.powers:
            r = merged.get(i, 0) - e
            if r < 0:
                raise ValueError("monomial division is not exact")
            merged[i] = r
        return Monomial.from_map(merged)

    def grlex_key(self, nvars: int) -> Tuple[int, Tuple[int, ...]]:
        """Sort key for graded lexicographic order (larger key = leading)."""
        return (self.degree(), self.dense(nvars))


_MONOMIAL_ONE = Monomial()


class MultiPoly:
    """Sparse exact-rational multivariate polynomial with a fixed arity."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    for i, _ in mono.powers:
                        if i >= nvars:
                            raise DimensionError(
                                f"monomial uses x{i} beyond {nvars} variables"
                            )
                    clean[mono] = c
        self.nvars = nvars
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "MultiPoly":
        return MultiPoly(nvars)

    @staticmethod
    def const(nvars: int, value) -> "MultiPoly":
        return MultiPoly(nvars, {_MONOMIAL_ONE: Fraction(value)})

    @staticmethod
    def variable(nvars: int, idx: int) -> "MultiPoly":
        if not 0 <= idx < nvars:
            raise DimensionError(f"variable index {idx} out of range for {nvars} variables")
        return MultiPoly(nvars, {Monomial(((idx, 1),)): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises otherwise."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and _MONOMIAL_ONE in self.terms:
            return self.terms[_MONOMIAL_ONE]
        raise ValueError("polynomial is not constant")

    def total_degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(m.degree() for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {m.degree() for m in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order (leading term first)."""
        return sorted(
            self.terms.items(), key=lambda kv: kv[0].grlex_key(self.nvars), reverse=True
        )

    def leading(self) -> Tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=lambda m: m.grlex_key(self.nvars))
        return mono, self.terms[mono]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- ring operations ---------------------------------------------------

    def _check_arity(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_arity(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, Fraction(0)) + coeff
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_arity(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                c = out.get(m, Fraction(0)) + c1 * c2
                if c == 0:
                    out.pop(m, None)
                else:
                    out[m] = c
        return MultiPoly(self.nvars, out)

    def scale(self, value) -> "MultiPoly":
        c = Fraction(value)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        return MultiPoly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, exp: int) -> "MultiPoly":
        if exp < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        e = exp
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus and substitution ------------------------------------------

    def derivative(self, idx: int) -> "MultiPoly":
        """Partial derivative with respect to x_idx."""
        if not 0 <= idx < self.nvars:
            raise DimensionError(f"variable index {idx} out of range")
        out: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            e = mono.exponent(idx)
            if e == 0:
                continue
            lowered = dict(mono.powers)
            lowered[idx] = e - 1
            m = Monomial.from_map(lowered)
            c = out.get(m, Fraction(0)) + coeff * e
            if c == 0:
                out.pop(m, None)
            else:
                out[m] = c
        return MultiPoly(self.nvars, out)

    def substitute(self, idx: int, value) -> "MultiPoly":
        """Substitute x_idx := value (an exact rational)."""
        if not 0 <= idx < self.nvars:
            raise DimensionError(f"variable index {idx} out of range")
        val = Fraction(value)
        out: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            e = mono.exponent(idx)
            if e:
                if val == 0:
                    continue
                coeff = coeff * val**e
                mono = Monomial.from_map({i: p for i, p in mono.powers if i != idx})
            c = out.get(mono, Fraction(0)) + coeff
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = c
        return MultiPoly(self.nvars, out)

    def eval(self, point: Sequence) -> Fraction:
        """Exact evaluation at a rational point of matching arity."""
        if len(point) != self.nvars:
            raise DimensionError(
                f"point has {len(point)} coordinates, polynomial has {self.nvars} variables"
            )
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for i, e in mono.powers:
                term *= vals[i] ** e
            total += term
        return total

    # -- divisibility -------------------------------------------------------

    def var_multiplicity(self, idx: int) -> int:
        """Largest e such that x_idx^e divides this polynomial (0 if zero poly)."""
        if not self.terms:
            return 0
        return min(m.exponent(idx) for m in self.terms)

    def div_var_power(self, idx: int, power: int) -> "MultiPoly":
        """Exact quotient by x_idx^power; raises if not divisible."""
        if power == 0:
            return self
        out: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            e = mono.exponent(idx)
            if e < power:
                raise ValueError(f"polynomial is not divisible by x{idx}^{power}")
            lowered = dict(mono.powers)
            lowered[idx] = e - power
            out[Monomial.from_map(lowered)] = coeff
        return MultiPoly(self.nvars, out)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / other; raises if the division is not exact.

        Used by fraction-free elimination, where exactness is guaranteed.
        """
        self._check_arity(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_mono, lead_coeff = other.leading()
        remainder = self
        quotient: Dict[Monomial, Fraction] = {}
        while not remainder.is_zero():
            mono, coeff = remainder.leading()
            if not lead_mono.divides(mono):
                raise ValueError("polynomial division is not exact")
            qm = mono.div(lead_mono)
            qc = coeff / lead_coeff
            quotient[qm] = quotient.get(qm, Fraction(0)) + qc
            remainder = remainder - MultiPoly(self.nvars, {qm: qc}) * other
        return MultiPoly(self.nvars, quotient)

    # -- serialization -------------------------------------------------------

    def to_obj(self) -> List[dict]:
        """JSON-ready list of {exponents, coeff}, descending graded-lex."""
        return [
            {"exponents": list(m.dense(self.nvars)), "coeff": rational_to_str(c)}
            for m, c in self.sorted_terms()
        ]

    @staticmethod
    def from_obj(nvars: int, obj: Iterable[Mapping]) -> "MultiPoly":
        terms: Dict[Monomial, Fraction] = {}
        for rec in obj:
            mono = Monomial.from_dense(rec["exponents"])
            terms[mono] = terms.get(mono, Fraction(0)) + rational_from_str(rec["coeff"])
        return MultiPoly(nvars, terms)

    def to_str(self) -> str:
        """Canonical text form, e.g. "2*x1*x3 - 2*x2^2" (parseable back)."""
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for mono, coeff in self.sorted_terms():
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in mono.powers
            ]
            mag = abs(coeff)
            if not factors:
                body = rational_to_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = rational_to_str(mag) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    @staticmethod
    def from_str(nvars: int, text: str) -> "MultiPoly":
        """Parse the canonical text form produced by :meth:`to_str`."""
        text = text.strip()
        if text == "0":
            return MultiPoly.zero(nvars)
        out = MultiPoly.zero(nvars)
        # Normalize term separators, keeping fraction slashes intact.
        chunks = text.replace(" - ", " + -").split(" + ")
        for chunk in chunks:
            chunk = chunk.strip()
            sign = Fraction(1)
            if chunk.startswith("-"):
                sign = Fraction(-1)
                chunk = chunk[1:]
            coeff = Fraction(1)
            powers: Dict[int, int] = {}
            for factor in chunk.split("*"):
                factor = factor.strip()
                if factor.startswith("x"):
                    if "^" in factor:
                        var_s, exp_s = factor[1:].split("^")
                        powers[int(var_s)] = powers.get(int(var_s), 0) + int(exp_s)
                    else:
                        idx = int(factor[1:])
                        powers[idx] = powers.get(idx, 0) + 1
                else:
                    coeff *= Fraction(factor)
            out = out + MultiPoly(nvars, {Monomial.from_map(powers): sign * coeff})
        return out

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_str()!r})"


class LocalizedPoly:
    """numerator / x_var^power, normalized so x_var does not divide the
    numerator unless power = 0."""

    __slots__ = ("num", "var", "power")

    def __init__(self, num: MultiPoly, var: int, power: int = 0):
        if power < 0:
            raise ValueError("inverted power must be nonnegative")
        if not 0 <= var < max(num.nvars, 1):
            raise DimensionError(f"inverted variable x{var} out of range")
        if num.is_zero():
            power = 0
        else:
            drop = min(power, num.var_multiplicity(var))
            if drop:
                num = num.div_var_power(var, drop)
                power -= drop
        self.num = num
        self.var = var
        self.power = power

    @staticmethod
    def from_poly(p: MultiPoly, var: int = 0) -> "LocalizedPoly":
        return LocalizedPoly(p, var, 0)

    @staticmethod
    def const(nvars: int, value, var: int = 0) -> "LocalizedPoly":
        return LocalizedPoly(MultiPoly.const(nvars, value), var, 0)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.power == 0

    def _check_compatible(self, other: "LocalizedPoly") -> None:
        if self.nvars != other.nvars:
            raise DimensionError("variable count mismatch")
        if self.power and other.power and self.var != other.var:
            raise DimensionError(
                f"cannot combine localizations at x{self.var} and x{other.var}"
            )

    def _common_var(self, other: "LocalizedPoly") -> int:
        return self.var if self.power else (other.var if other.power else self.var)

    def __add__(self, other: "LocalizedPoly") -> "LocalizedPoly":
        self._check_compatible(other)
        var = self._common_var(other)
        common = max(self.power, other.power)
        xv = MultiPoly.variable(self.nvars, var)
        n1 = self.num * xv ** (common - self.power)
        n2 = other.num * xv ** (common - other.power)
        return LocalizedPoly(n1 + n2, var, common)

    def __neg__(self) -> "LocalizedPoly":
        return LocalizedPoly(-self.num, self.var, self.power)

    def __sub__(self, other: "LocalizedPoly") -> "LocalizedPoly":
        return self + (-other)

    def __mul__(self, other: "LocalizedPoly") -> "LocalizedPoly":
        self._check_compatible(other)
        var = self._common_var(other)
        return LocalizedPoly(self.num * other.num, var, self.power + other.power)

    def scale(self, value) -> "LocalizedPoly":
        return LocalizedPoly(self.num.scale(value), self.var, self.power)

    def mul_var_power(self, e: int) -> "LocalizedPoly":
        """Multiply by x_var^e (e may be negative, deepening the localization)."""
        if e >= 0:
            return LocalizedPoly(
                self.num * MultiPoly.variable(self.nvars, self.var) ** e,
                self.var,
                self.power,
            )
        return LocalizedPoly(self.num, self.var, self.power - e)

    def __pow__(self, exp: int) -> "LocalizedPoly":
        if exp < 0:
            raise ValueError("negative powers are not supported")
        out = LocalizedPoly.const(self.nvars, 1, self.var)
        for _ in range(exp):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocalizedPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        # Normal form makes direct comparison valid when localized at the
        # same variable; otherwise cross-multiply.
        if self.power and other.power and self.var != other.var:
            return False
        return self.power == other.power and self.num == other.num

    def __hash__(self):
        return hash((self.num, self.power if self.power else 0))

    def eval(self, point: Sequence) -> Fraction:
        """Exact evaluation at a point with point[var] != 0 when power > 0."""
        denom = Fraction(point[self.var]) ** self.power if self.power else Fraction(1)
        if denom == 0:
            raise ZeroDivisionError(f"evaluation requires x{self.var} != 0")
        return self.num.eval(point) / denom

    def to_str(self) -> str:
        if self.power == 0:
            return self.num.to_str()
        num_s = self.num.to_str()
        if len(self.num.terms) > 1:
            num_s = f"({num_s})"
        return f"{num_s} / x{self.var}^{self.power}"

    @staticmethod
    def from_str(nvars: int, text: str, var: int = 0) -> "LocalizedPoly":
        if " / " in text:
            num_s, den_s = text.rsplit(" / ", 1)
            den_s = den_s.strip()
            if not den_s.startswith("x") or "^" not in den_s:
                raise ValueError(f"malformed localized denominator: {den_s!r}")
            num_s = num_s.strip()
            if num_s.startswith("(") and num_s.endswith(")"):
                num_s = num_s[1:-1]
            var_s, pow_s = den_s[1:].split("^")
            return LocalizedPoly(MultiPoly.from_str(nvars, num_s), int(var_s), int(pow_s))
        return LocalizedPoly(MultiPoly.from_str(nvars, text), var, 0)

    def __repr__(self):
        return f"LocalizedPoly({self.to_str()!r})"


class PolyMatrix:
    """Row-major matrix of localized polynomials."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[LocalizedPoly]):
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    def at(self, i: int, j: int) -> LocalizedPoly:
        return self.entries[i * self.cols + j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.cols,
            self.rows,
            [self.at(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def mul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionError("matrix shapes do not compose")
        out: List[LocalizedPoly] = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = self.at(i, 0) * other.at(0, j)
                for t in range(1, self.cols):
                    acc = acc + self.at(i, t) * other.at(t, j)
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out)

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def to_obj(self) -> List[List[str]]:
        return [
            [self.at(i, j).to_str() for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))


# -- determinants -----------------------------------------------------------

#: Largest size handled by cofactor expansion; beyond it, fraction-free
#: elimination bounds intermediate growth.
_COFACTOR_LIMIT = 6


def _det_cofactor(mat: List[List[MultiPoly]], nvars: int) -> MultiPoly:
    """Determinant by cofactor expansion with memoized minors."""
    n = len(mat)
    memo: Dict[Tuple[int, ...], MultiPoly] = {}

    def minor(cols: Tuple[int, ...]) -> MultiPoly:
        if not cols:
            return MultiPoly.const(nvars, 1)
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - len(cols)
        acc = MultiPoly.zero(nvars)
        for pos, c in enumerate(cols):
            entry = mat[row][c]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def _det_bareiss(mat: List[List[MultiPoly]], nvars: int) -> MultiPoly:
    """Fraction-free (Bareiss) determinant; divisions are exact."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = MultiPoly.const(nvars, 1)
    for r in range(n - 1):
        if m[r][r].is_zero():
            for i in range(r + 1, n):
                if not m[i][r].is_zero():
                    m[r], m[i] = m[i], m[r]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(nvars)
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                num = m[r][r] * m[i][j] - m[i][r] * m[r][j]
                m[i][j] = num.exact_div(prev)
            m[i][r] = MultiPoly.zero(nvars)
        prev = m[r][r]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _clear_denominators(m: PolyMatrix) -> Tuple[List[List[MultiPoly]], int, int]:
    """Rescale rows to polynomial entries; returns (matrix, var, total power)."""
    loc_vars = {e.var for e in m.entries if e.power > 0}
    if len(loc_vars) > 1:
        raise DimensionError("matrix mixes localizations at different variables")
    var = loc_vars.pop() if loc_vars else 0
    total = 0
    cleared: List[List[MultiPoly]] = []
    for i in range(m.rows):
        row_pow = max(m.at(i, j).power for j in range(m.cols))
        total += row_pow
        xv = MultiPoly.variable(m.entries[0].nvars, var) if row_pow else None
        row: List[MultiPoly] = []
        for j in range(m.cols):
            e = m.at(i, j)
            p = e.num
            if row_pow and row_pow - e.power:
                p = p * xv ** (row_pow - e.power)
            row.append(p)
        cleared.append(row)
    return cleared, var, total


def poly_det(m: PolyMatrix, method: str | None = None) -> LocalizedPoly:
    """Exact determinant of a square matrix of localized polynomials.

    ``method`` forces "cofactor" or "bareiss"; by default small matrices use
    cofactor expansion and larger ones fraction-free elimination.  The result
    is identical either way.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        raise DimensionError("determinant of an empty matrix")
    nvars = m.entries[0].nvars
    cleared, var, total = _clear_denominators(m)
    if method is None:
        method = "cofactor" if m.rows <= _COFACTOR_LIMIT else "bareiss"
    if method == "cofactor":
        det = _det_cofactor(cleared, nvars)
    elif method == "bareiss":
        det = _det_bareiss(cleared, nvars)
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    return LocalizedPoly(det, var, total)


def poly_eval(p: MultiPoly, point: Sequence) -> Fraction:
    """Exact evaluation of a polynomial at a rational point."""
    return p.eval(point)


def homogeneous_components(p: MultiPoly) -> Dict[int, MultiPoly]:
    """Split into homogeneous parts, keyed by degree; their sum is p."""
    buckets: Dict[int, Dict[Monomial, Fraction]] = {}
    for mono, coeff in p.terms.items():
        buckets.setdefault(mono.degree(), {})[mono] = coeff
    return {d: MultiPoly(p.nvars, t) for d, t in sorted(buckets.items())}
