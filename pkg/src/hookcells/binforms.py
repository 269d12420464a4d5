"""Binary forms, subspaces, ramification data and Wronskians.

All coefficients are exact rationals.  A degree-j form is stored by its
coefficients on ``x^(j-k) y^k`` for k = 0..j; the monomials of each degree
are ordered ``y^j < x y^(j-1) < ... < x^j`` (increasing x-power), and the
*initial monomial* of a form is its smallest term in that order.  At a point
``p: ax + by = 0`` the same conventions apply with the basis (L, C), where
``L = ax + by`` and C is a fixed complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg, unipoly
from .errors import DegenerateBasis, ZeroForm


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_fraction(x: Fraction) -> str:
    return str(x)


def parse_fraction(s) -> Fraction:
    return Fraction(s)


class BinaryForm:
    """A homogeneous polynomial in two variables."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(_frac(c) for c in coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError(f"degree {degree} needs {degree + 1} coefficients")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("BinaryForm is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @classmethod
    def from_monomials(cls, degree: int, terms: dict) -> "BinaryForm":
        """Build from a dict mapping (x_power, y_power) to coefficient."""
        coeffs = [Fraction(0)] * (degree + 1)
        for (xp, yp), c in terms.items():
            if xp + yp != degree:
                raise ValueError(f"monomial x^{xp} y^{yp} has wrong degree")
            coeffs[yp] += _frac(c)
        return cls(degree, coeffs)

    def monomials(self) -> dict:
        return {
            (self.degree - k, k): c for k, c in enumerate(self.coeffs) if c != 0
        }

    def normalized(self) -> "BinaryForm":
        """Scale so the first nonzero coefficient (highest x-power) is 1."""
        lead = next((c for c in self.coeffs if c != 0), None)
        if lead is None:
            return self
        return BinaryForm(self.degree, [c / lead for c in self.coeffs])

    def coeff_poly_in_x(self):
        """Coefficients of f(x, 1) indexed by x-power."""
        return unipoly.trim([self.coeffs[self.degree - i] for i in range(self.degree + 1)])

    def coeff_poly_in_y(self):
        """Coefficients of f(1, y) indexed by y-power."""
        return unipoly.trim(list(self.coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            xp, yp = self.degree - k, k
            mono = "*".join(
                s for s in (
                    f"x^{xp}" if xp > 1 else ("x" if xp == 1 else ""),
                    f"y^{yp}" if yp > 1 else ("y" if yp == 1 else ""),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"BinaryForm({self.degree}, {self!s})"

    def to_json(self):
        return {"degree": self.degree, "coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "BinaryForm":
        return cls(int(data["degree"]), [parse_fraction(c) for c in data["coeffs"]])


@dataclass(frozen=True)
class PointP1:
    """A point of the projective line, named by the linear form a*x + b*y
    vanishing on it, normalized so the first nonzero coordinate is 1."""

    a: Fraction
    b: Fraction

    def __init__(self, a, b):
        a, b = _frac(a), _frac(b)
        if a == 0 and b == 0:
            raise ValueError("point needs a nonzero linear form")
        if a != 0:
            a, b = Fraction(1), b / a
        else:
            b = Fraction(1)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def linear_form(self) -> BinaryForm:
        return BinaryForm(1, (self.a, self.b))

    def complement_form(self) -> tuple[Fraction, Fraction]:
        """The default complement C: y when the form involves x, else x."""
        if self.a != 0:
            return (Fraction(0), Fraction(1))
        return (Fraction(1), Fraction(0))

    @classmethod
    def parse(cls, text: str) -> "PointP1":
        a, b = text.split(",")
        return cls(parse_fraction(a), parse_fraction(b))

    def __str__(self):
        return f"{self.a},{self.b}"

    def to_json(self):
        return [format_fraction(self.a), format_fraction(self.b)]


POINT_X = PointP1(1, 0)  # the point x = 0
POINT_Y = PointP1(0, 1)  # the point y = 0


class FormSpace:
    """A subspace of the degree-j forms, held as a reduced row echelon basis.

    Pivot search runs through the monomials in increasing order, so each
    basis row's initial monomial is a pivot and row i has strictly larger
    x-adic valuation than row i-1.
    """

    __slots__ = ("degree", "basis", "pivots")

    def __init__(self, degree: int, forms):
        rows = [self._row(degree, f) for f in forms]
        red, piv = linalg.rref(rows, degree + 1, col_order=range(degree, -1, -1))
        if len(red) != len(rows):
            raise DegenerateBasis(f"{len(rows)} forms span only {len(red)} dimensions")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", tuple(BinaryForm(degree, r) for r in red))
        object.__setattr__(self, "pivots", tuple(piv))

    @staticmethod
    def _row(degree, f):
        if isinstance(f, BinaryForm):
            if f.degree != degree:
                raise ValueError("mixed degrees in form space")
            return list(f.coeffs)
        row = [_frac(c) for c in f]
        if len(row) != degree + 1:
            raise ValueError("coefficient row has wrong length")
        return row

    @classmethod
    def span(cls, degree: int, forms) -> "FormSpace":
        """Like the constructor but silently drops dependent forms."""
        rows = [cls._row(degree, f) for f in forms]
        red, _ = linalg.rref(rows, degree + 1, col_order=range(degree, -1, -1))
        return cls(degree, red)

    def __setattr__(self, *a):
        raise AttributeError("FormSpace is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FormSpace)
            and self.degree == other.degree
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.degree, self.basis))

    def __repr__(self):
        return f"FormSpace({self.degree}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.degree + 1 - self.dim

    def contains(self, form: BinaryForm) -> bool:
        rows = [list(f.coeffs) for f in self.basis]
        return linalg.in_rowspace(list(form.coeffs), rows, self.degree + 1)

    def initial_monomials(self) -> tuple[tuple[int, int], ...]:
        """Initial monomials of the space as (x_power, y_power), by valuation."""
        return tuple((self.degree - k, k) for k in self.pivots)

    def to_json(self):
        return {
            "degree": self.degree,
            "basis": [[format_fraction(c) for c in f.coeffs] for f in self.basis],
        }

    @classmethod
    def from_json(cls, data) -> "FormSpace":
        return cls(int(data["degree"]), [[parse_fraction(c) for c in row] for row in data["basis"]])


@dataclass(frozen=True)
class RamData:
    """Ramification of a form space at a point.

    ``degree_sequence`` holds the strictly increasing L-adic valuations of an
    adapted basis; ``qram`` is that sequence minus (0, 1, ..., d-1), sorted
    decreasingly, one part per basis row; ``code`` is the analogous partition
    built from the cobasis monomials and has codim-many parts.  ``total`` is
    the sum of ``qram``.
    """

    degree_sequence: tuple[int, ...]
    qram: tuple[int, ...]
    code: tuple[int, ...]
    total: int

    def to_json(self):
        return {
            "degree_sequence": list(self.degree_sequence),
            "qram": list(self.qram),
            "code": list(self.code),
            "r": self.total,
        }


def box_complement(parts, rows: int, cols: int) -> tuple[int, ...]:
    """Complement of a zero-padded partition inside a rows x cols rectangle."""
    parts = tuple(parts)
    if len(parts) != rows or any(v > cols or v < 0 for v in parts):
        raise ValueError(f"{parts} does not fit a {rows}x{cols} box")
    return tuple(cols - parts[rows - 1 - k] for k in range(rows))


def conjugate_with_zeros(parts, width: int) -> tuple[int, ...]:
    """Conjugate of a padded partition, returned with ``width`` parts."""
    return tuple(sum(1 for v in parts if v > k) for k in range(width))


def change_basis(space: FormSpace, p: PointP1, c_form=None) -> FormSpace:
    """Coordinates of the space in the basis (L, C) at ``p``.

    Returned as a :class:`FormSpace` whose k-th coordinate is the coefficient
    of ``L^(j-k) C^k``; its pivots therefore read off the degree sequence.
    ``c_form`` overrides the default complement with a pair (c, d) meaning
    C = c*x + d*y.
    """
    a, b = p.a, p.b
    c, d = c_form if c_form is not None else p.complement_form()
    det = a * d - b * c
    if det == 0:
        raise ValueError("complement form is proportional to the point form")
    # x = (d*L - b*C)/det,  y = (-c*L + a*C)/det
    x_lc = (d / det, -b / det)
    y_lc = (-c / det, a / det)
    j = space.degree

    def pow_coeffs(lin, n):
        """Coefficients of (u*L + v*C)^n on L^(n-k) C^k."""
        u, v = lin
        out = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            out[k] = _comb(n, k) * u ** (n - k) * v**k
        return out

    rows = []
    for f in space.basis:
        acc = [Fraction(0)] * (j + 1)
        for (xp, yp), coef in f.monomials().items():
            px = pow_coeffs(x_lc, xp)
            py = pow_coeffs(y_lc, yp)
            for k1, c1 in enumerate(px):
                if c1 == 0:
                    continue
                for k2, c2 in enumerate(py):
                    if c2 == 0:
                        continue
                    acc[k1 + k2] += coef * c1 * c2
        rows.append(acc)
    return FormSpace.span(j, rows)


def _comb(n, k):
    from math import comb

    return Fraction(comb(n, k))


def initial_space(space: FormSpace, p: PointP1) -> tuple[tuple[int, int], ...]:
    """Initial monomials at ``p`` as (L_power, C_power) pairs, by valuation."""
    lc = change_basis(space, p)
    return lc.initial_monomials()


def ram_data(space: FormSpace, p: PointP1, c_form=None) -> RamData:
    """Degree sequence and ramification partitions of the space at ``p``."""
    lc = change_basis(space, p, c_form)
    j, d = space.degree, space.dim
    ns = sorted(j - k for k in lc.pivots)
    qram = tuple(sorted((n - i for i, n in enumerate(ns)), reverse=True))
    cob = sorted(j - k for k in range(j + 1) if k not in set(lc.pivots))
    q = tuple(sorted((a - i for i, a in enumerate(cob)), reverse=True))
    # the two partitions are complement-duals of each other inside their boxes
    assert qram == conjugate_with_zeros(box_complement(q, j + 1 - d, d), d)
    return RamData(tuple(ns), qram, q, sum(qram))


def wronskian(space: FormSpace) -> BinaryForm:
    """The Wronskian form of the space, of degree dim * codim.

    Computed as a classical one-variable Wronskian after substituting y = 1,
    then rehomogenized; the same computation at x = 1 must agree and is run
    as a cross-check.  The result is normalized to leading coefficient 1; its
    valuation at any point is the total ramification of the space there.
    """
    d = space.dim
    if d < 1:
        raise DegenerateBasis("Wronskian needs a nonzero space")
    n_deg = d * space.codim

    def one_variable(polys):
        rows = [polys]
        for _ in range(d - 1):
            rows.append([unipoly.derivative(q) for q in rows[-1]])
        return unipoly.det([[rows[r][i] for i in range(d)] for r in range(d)])

    wx = one_variable([f.coeff_poly_in_x() for f in space.basis])
    wy = one_variable([f.coeff_poly_in_y() for f in space.basis])
    assert not unipoly.is_zero(wx) and not unipoly.is_zero(wy)
    hx = {(m, n_deg - m): c for m, c in enumerate(wx) if c != 0}
    hy = {(n_deg - m, m): c for m, c in enumerate(wy) if c != 0}
    fx = BinaryForm.from_monomials(n_deg, hx).normalized()
    fy = BinaryForm.from_monomials(n_deg, hy).normalized()
    assert fx == fy, "x- and y-dehomogenized Wronskians disagree"
    return fx


def point_valuation(form: BinaryForm, p: PointP1) -> int:
    """Multiplicity of the linear form of ``p`` as a factor of ``form``."""
    if form.is_zero:
        raise ZeroForm("valuation of the zero form")
    if p.a == 0:
        px = form.coeff_poly_in_x()
        return form.degree - unipoly.degree(px)
    # root of f(x, 1) at x = -b/a = -b (a normalized to 1)
    poly = form.coeff_poly_in_x()
    root = -p.b
    mult = 0
    while unipoly.eval_at(poly, root) == 0:
        poly, rem = unipoly.divmod_(poly, [-root, Fraction(1)])
        assert unipoly.is_zero(rem)
        mult += 1
    return mult


@dataclass(frozen=True)
class RamificationSummary:
    """Where a Wronskian vanishes over the rationals."""

    degree: int
    rational_point_valuations: dict
    irrational_degree: int


def total_ramification_check(space: FormSpace) -> RamificationSummary:
    """Factor the Wronskian over the rationals and cross-check each point.

    Every rational zero of the Wronskian is located by exact root extraction;
    at each such point the valuation is compared against the total
    ramification computed independently from the degree sequence.  The
    multiplicities, together with the degree left in irrational factors, sum
    to dim * codim.
    """
    w = wronskian(space)
    n_deg = w.degree
    px = unipoly.trim(w.coeff_poly_in_x())
    vals = {}
    at_y = n_deg - unipoly.degree(px)
    if at_y:
        vals[POINT_Y] = at_y
    for root, mult in unipoly.rational_roots(px).items():
        vals[PointP1(1, -root)] = mult
    for point, mult in vals.items():
        if ram_data(space, point).total != mult:
            raise AssertionError(f"valuation {mult} at {point} disagrees with ramification data")
    irr = n_deg - sum(vals.values())
    return RamificationSummary(n_deg, vals, irr)
