"""The homology ring of the pencil-bundle varieties and the Hankel strata.

For the Hilbert functions (1, 2, ..., mu, mu, ..., mu, 1) of socle degree j
the variety of graded ideals is a projective (mu-1)-plane bundle over
projective mu-space; it embeds in P^mu x P^j and desingularizes the locus of
degree-j forms that are sums of at most mu powers of linear forms -- the
rank-mu stratum of the (mu+1) x (j+1-mu) Hankel matrices.  This module
implements the cell-class ring with basis [a, b] (0 <= a <= mu-1,
0 <= b <= mu, codimension a + b), its comparison with the ambient ring in
the hyperplane classes zeta and eta, the pullbacks of the rank strata, and
exact Hankel ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg, unipoly
from .binforms import BinaryForm
from .errors import OutOfRange, ShapeMismatch, ZeroForm
from .partitions import as_hilbert
from .schubert import grass_degree


def _clean(terms: dict) -> tuple:
    return tuple(sorted((k, int(c)) for k, c in terms.items() if c))


@dataclass(frozen=True)
class BundleClass:
    """Integer combination of the cell classes [a, b]."""

    mu: int
    j: int
    terms: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def make(cls, mu: int, j: int, terms: dict) -> "BundleClass":
        kept = {}
        for (a, b), c in terms.items():
            if 0 <= a <= mu - 1 and 0 <= b <= mu and c:
                kept[(a, b)] = kept.get((a, b), 0) + c
        return cls(mu, j, _clean(kept))

    @classmethod
    def basis(cls, mu: int, j: int, a: int, b: int) -> "BundleClass":
        if not (0 <= a <= mu - 1 and 0 <= b <= mu):
            raise OutOfRange(f"[{a},{b}] is not a basis class for mu={mu}")
        return cls.make(mu, j, {(a, b): 1})

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, a: int, b: int) -> int:
        return self.as_dict().get((a, b), 0)

    def point_coefficient(self) -> int:
        """Coefficient of the class of a point, [mu-1, mu]."""
        return self.coefficient(self.mu - 1, self.mu)

    def _check(self, other):
        if (self.mu, self.j) != (other.mu, other.j):
            raise ShapeMismatch(f"({self.mu},{self.j}) versus ({other.mu},{other.j})")

    def __add__(self, other):
        self._check(other)
        out = self.as_dict()
        for k, c in other.terms:
            out[k] = out.get(k, 0) + c
        return BundleClass.make(self.mu, self.j, out)

    def __neg__(self):
        return BundleClass.make(self.mu, self.j, {k: -c for k, c in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return t_multiply(self, other)

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for (a, b), c in self.terms:
            mono = f"[{a},{b}]"
            bits.append(mono if c == 1 else f"{c}*{mono}")
        out = bits[0]
        for t in bits[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def to_json(self):
        return {
            "mu": self.mu,
            "j": self.j,
            "terms": [{"a": a, "b": b, "coeff": c} for (a, b), c in self.terms],
        }

    @classmethod
    def from_json(cls, data) -> "BundleClass":
        return cls.make(
            int(data["mu"]), int(data["j"]),
            {(int(t["a"]), int(t["b"])): int(t["coeff"]) for t in data["terms"]},
        )


def t_multiply(x: BundleClass, y: BundleClass) -> BundleClass:
    """Product of cell classes.

    On basis classes: [a,b][c,e] = [a+c, b+e] while at most one factor has
    codimension >= mu; when both codimensions are below mu but the total is
    not, the product spreads binomially as
    sum_i C(j+1-mu, i) [a+c+i-1, b+e-i+1]; two factors of codimension >= mu
    multiply to zero.  Out-of-range targets are dropped.
    """
    x._check(y)
    mu, j = x.mu, x.j
    out: dict[tuple[int, int], int] = {}

    def put(a, b, c):
        if 0 <= a <= mu - 1 and 0 <= b <= mu and c:
            out[(a, b)] = out.get((a, b), 0) + c

    for (a, b), c1 in x.terms:
        for (ce, e), c2 in y.terms:
            cc = c1 * c2
            cod1, cod2 = a + b, ce + e
            if cod1 >= mu and cod2 >= mu:
                continue
            if cod1 + cod2 < mu or cod1 >= mu or cod2 >= mu:
                put(a + ce, b + e, cc)
            else:
                for i in range(j + 2 - mu):
                    put(a + ce + i - 1, b + e - i + 1, cc * comb(j + 1 - mu, i))
    return BundleClass.make(mu, j, out)


@dataclass(frozen=True)
class AmbientClass:
    """Integer combination of zeta^u eta^v on P^mu x P^j (truncated)."""

    mu: int
    j: int
    terms: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def make(cls, mu: int, j: int, terms: dict) -> "AmbientClass":
        kept = {}
        for (u, v), c in terms.items():
            if 0 <= u <= mu and 0 <= v <= j and c:
                kept[(u, v)] = kept.get((u, v), 0) + c
        return cls(mu, j, _clean(kept))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if (self.mu, self.j) != (other.mu, other.j):
            raise ShapeMismatch(f"({self.mu},{self.j}) versus ({other.mu},{other.j})")
        out = self.as_dict()
        for k, c in other.terms:
            out[k] = out.get(k, 0) + c
        return AmbientClass.make(self.mu, self.j, out)

    def __mul__(self, other):
        if (self.mu, self.j) != (other.mu, other.j):
            raise ShapeMismatch(f"({self.mu},{self.j}) versus ({other.mu},{other.j})")
        out: dict[tuple[int, int], int] = {}
        for (u1, v1), c1 in self.terms:
            for (u2, v2), c2 in other.terms:
                k = (u1 + u2, v1 + v2)
                out[k] = out.get(k, 0) + c1 * c2
        return AmbientClass.make(self.mu, self.j, out)

    def __str__(self):
        if self.is_zero:
            return "0"
        bits = []
        for (u, v), c in self.terms:
            mono = "*".join(s for s in (
                f"z^{u}" if u > 1 else ("z" if u else ""),
                f"e^{v}" if v > 1 else ("e" if v else ""),
            ) if s) or "1"
            bits.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(bits)


def class_gt(mu: int, j: int) -> AmbientClass:
    """Class of the bundle variety in P^mu x P^j: (zeta + eta)^(j+1-mu)."""
    if mu < 1 or j < mu:
        raise OutOfRange(f"need 1 <= mu <= j, got ({mu}, {j})")
    n = j + 1 - mu
    return AmbientClass.make(mu, j, {(i, n - i): comb(n, i) for i in range(n + 1)})


def iota_pullback(x: AmbientClass) -> BundleClass:
    """Restriction of an ambient class to the bundle variety.

    zeta^u eta^v pulls back to [u, v] below the critical codimension and
    spreads binomially past it, mirroring the product rule.
    """
    mu, j = x.mu, x.j
    out: dict[tuple[int, int], int] = {}

    def put(a, b, c):
        if 0 <= a <= mu - 1 and 0 <= b <= mu and c:
            out[(a, b)] = out.get((a, b), 0) + c

    for (u, v), c in x.terms:
        if u + v < mu:
            put(u, v, c)
        else:
            for i in range(j + 2 - mu):
                put(u + i - 1, v - i + 1, c * comb(j + 1 - mu, i))
    return BundleClass.make(mu, j, out)


def iota_pushforward(x: BundleClass) -> AmbientClass:
    """Image of a cell class in the ambient product.

    Classes of codimension >= mu push to single monomials; the others are
    supported on the full class of the variety.
    """
    mu, j = x.mu, x.j
    total = AmbientClass.make(mu, j, {})
    gt = class_gt(mu, j)
    for (a, b), c in x.terms:
        if a + b >= mu:
            total = total + AmbientClass.make(mu, j, {(a + 1, b + j - mu): c})
        else:
            total = total + AmbientClass.make(mu, j, {(a, b): c}) * gt
    return total


def secant_pullback(mu: int, j: int, i: int) -> BundleClass:
    """Pullback to the bundle variety of the rank-i Hankel stratum.

    Extracts the coefficient of t^(mu-i) in
    (1 - zeta t)^(j-mu-i+1) (1 + eta t)^(i+1) -- signs included -- and
    restricts it.  Requires 2*mu < j + 1 and 1 <= i <= mu; i = mu gives the
    identity class.
    """
    if not 2 * mu < j + 1:
        raise OutOfRange(f"need 2*mu < j+1, got ({mu}, {j})")
    if not 1 <= i <= mu:
        raise OutOfRange(f"rank {i} outside 1..{mu}")
    k = mu - i
    terms = {}
    for u in range(k + 1):
        v = k - u
        if u > j - mu - i + 1 or v > i + 1:
            continue
        c = (-1) ** u * comb(j - mu - i + 1, u) * comb(i + 1, v)
        if c:
            terms[(u, v)] = c
    return iota_pullback(AmbientClass.make(mu, j, terms))


# -- Hankel matrices and apolarity ranks -------------------------------------

def hankel_matrix(coeffs, mu: int):
    """The (mu+1) x (j+1-mu) matrix with entry (r, c) = a_(r+c).

    Any window 0 <= mu <= j is allowed so ranks can be compared across
    window shapes; the secant interpretation needs 2*mu < j + 1.
    """
    a = [Fraction(x) for x in coeffs]
    j = len(a) - 1
    if not 0 <= mu <= j:
        raise OutOfRange(f"need 0 <= mu <= j, got mu={mu}, j={j}")
    return [[a[r + c] for c in range(j + 1 - mu)] for r in range(mu + 1)]


def hankel_rank(coeffs, mu: int) -> int:
    """Exact rank of the Hankel matrix of a coefficient vector.

    ``coeffs`` uses the binomially scaled convention: the form is
    sum_i C(j, i) a_i x^(j-i) y^i.  The rank is at most ``i`` exactly when
    the form is a sum of ``i`` powers of linear forms (or a limit of such).
    """
    a = [Fraction(x) for x in coeffs]
    if all(x == 0 for x in a):
        raise ZeroForm("Hankel rank of the zero form")
    m = hankel_matrix(a, mu)
    return linalg.rank(m, len(m[0]))


def scaled_coefficients(form: BinaryForm) -> tuple[Fraction, ...]:
    """Convert a plain coefficient vector to the scaled Hankel convention."""
    j = form.degree
    return tuple(c / comb(j, k) for k, c in enumerate(form.coeffs))


def wronskian_cover_degree(T) -> int:
    """Degree of the product-of-Wronskians map on the graded-ideal variety:
    the product of the Pluecker degrees of the ambient Grassmannians."""
    T = as_hilbert(T)
    out = 1
    for i in range(T.mu, T.j + 1):
        out *= grass_degree(i + 1 - T.value(i), i + 1)
    return out


@dataclass(frozen=True)
class TripleRamificationCount:
    """Outcome of the fixed worked intersection on the (3, 6) ring."""

    product_class: BundleClass
    count: int
    det_poly: tuple[Fraction, ...]
    det_degree: int
    root_count: int


def ramification_count_example() -> TripleRamificationCount:
    """Count ideals with prescribed ramification at three points (mu=3, j=6).

    Two independent routes: the ring product [1,1]*[0,2]*[1,0], whose point
    coefficient is the count, and an explicit elimination -- the generator
    x(x+y)(x+a*y) forced by the first two conditions leads to a 4 x 4
    matrix over the quotient by <y^6, x*y^5, x^6> whose determinant in a has
    one root per solution ideal.
    """
    mu, j = 3, 6
    prod = t_multiply(
        t_multiply(BundleClass.basis(mu, j, 1, 1), BundleClass.basis(mu, j, 0, 2)),
        BundleClass.basis(mu, j, 1, 0),
    )
    count = prod.point_coefficient()

    # f_a = x (x + y)(x + a y) = x^3 + (1+a) x^2 y + a x y^2, coefficients as
    # polynomials in a; rows are x^3 f, x^2 y f, x y^2 f, y^3 f written in the
    # basis (x^5 y, x^4 y^2, x^3 y^3, x^2 y^4) of R_6 mod <y^6, x y^5, x^6>.
    one = [Fraction(1)]
    a_lin = [Fraction(0), Fraction(1)]
    one_plus_a = [Fraction(1), Fraction(1)]
    f_coeffs = {(3, 0): one, (2, 1): one_plus_a, (1, 2): a_lin}  # (xpow, ypow) -> poly in a
    basis = [(5, 1), (4, 2), (3, 3), (2, 4)]
    dropped = {(0, 6), (1, 5), (6, 0)}
    matrix = []
    for (mx, my) in [(3, 0), (2, 1), (1, 2), (0, 3)]:
        row = {b: list(unipoly.ZERO) for b in basis}
        for (fx, fy), poly in f_coeffs.items():
            mono = (fx + mx, fy + my)
            if mono in dropped:
                continue
            row[mono] = unipoly.add(row[mono], poly)
        matrix.append([row[b] for b in basis])
    det = unipoly.det(matrix)
    deg = unipoly.degree(det)
    return TripleRamificationCount(prod, count, tuple(det), deg, deg)
