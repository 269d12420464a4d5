"""Littlewood-Richardson products in the cohomology of a Grassmannian.

Classes are integer combinations of partitions inside a fixed rows x cols
rectangle; products are computed by counting Littlewood-Richardson skew
tableaux (column-strict fillings whose reverse reading word is a lattice
word), with everything falling outside the rectangle truncated away.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BoxMismatch, DimensionMismatch, MalformedE


def _norm_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(v) for v in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(v < 0 for v in parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


@lru_cache(maxsize=None)
def _box_partitions(rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    out = []

    def rec(pref, mx):
        if len(pref) == rows:
            out.append(_norm_partition(pref))
            return
        for v in range(mx, -1, -1):
            rec(pref + [v], v)

    rec([], cols)
    return tuple(dict.fromkeys(out))


def lr_coefficient(lam, mu, nu) -> int:
    """The Littlewood-Richardson number: multiplicity of the class of
    ``lam`` in the product of ``mu`` and ``nu``.

    Counts fillings of the skew shape lam/mu with content nu, weakly
    increasing along rows, strictly down columns, whose reverse reading word
    (rows read right to left, top to bottom) is a lattice word.
    """
    lam, mu, nu = _norm_partition(lam), _norm_partition(mu), _norm_partition(nu)
    if len(mu) > len(lam) or any(m > l for l, m in zip(lam, mu)):
        return 0
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    mu = mu + (0,) * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, mu[r] - 1, -1)]
    nvals = len(nu)
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (nvals + 2)
    found = 0

    def rec(idx):
        nonlocal found
        if idx == len(cells):
            found += 1
            return
        r, c = cells[idx]
        right = grid.get((r, c + 1))
        up = grid.get((r - 1, c))
        lo = 1 if up is None else up + 1
        hi = nvals if right is None else right
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[(r, c)] = v
            counts[v] += 1
            rec(idx + 1)
            counts[v] -= 1
        grid.pop((r, c), None)

    rec(0)
    return found


@dataclass(frozen=True)
class SchubertClass:
    """An integer combination of Schubert classes in a fixed box."""

    box: tuple[int, int]
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def make(cls, box, terms: dict) -> "SchubertClass":
        rows, cols = box
        clean = {}
        for parts, coeff in terms.items():
            parts = _norm_partition(parts)
            if len(parts) > rows or (parts and parts[0] > cols):
                raise ValueError(f"{parts} does not fit a {rows}x{cols} box")
            if coeff:
                clean[parts] = clean.get(parts, 0) + coeff
        items = tuple(sorted((p, c) for p, c in clean.items() if c))
        return cls((rows, cols), items)

    @classmethod
    def basis(cls, box, parts) -> "SchubertClass":
        return cls.make(box, {_norm_partition(parts): 1})

    @classmethod
    def one(cls, box) -> "SchubertClass":
        return cls.basis(box, ())

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, parts) -> int:
        return self.as_dict().get(_norm_partition(parts), 0)

    def point_coefficient(self) -> int:
        rows, cols = self.box
        return self.coefficient((cols,) * rows)

    def codimensions(self) -> set[int]:
        return {sum(p) for p, _ in self.terms}

    def __add__(self, other):
        if self.box != other.box:
            raise BoxMismatch(f"{self.box} versus {other.box}")
        out = self.as_dict()
        for p, c in other.terms:
            out[p] = out.get(p, 0) + c
        return SchubertClass.make(self.box, out)

    def __mul__(self, other):
        return lr_multiply(self, other)

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + "s" + str(list(p)).replace(" ", "")
            for p, c in self.terms
        )

    def to_json(self):
        return {
            "box": list(self.box),
            "terms": [{"partition": list(p), "coeff": c} for p, c in self.terms],
        }

    @classmethod
    def from_json(cls, data) -> "SchubertClass":
        return cls.make(
            tuple(data["box"]),
            {tuple(t["partition"]): int(t["coeff"]) for t in data["terms"]},
        )


def lr_multiply(x: SchubertClass, y: SchubertClass) -> SchubertClass:
    """Product in the cohomology ring, truncated to the box."""
    if x.box != y.box:
        raise BoxMismatch(f"{x.box} versus {y.box}")
    rows, cols = x.box
    out: dict[tuple[int, ...], int] = {}
    for p1, c1 in x.terms:
        for p2, c2 in y.terms:
            size = sum(p1) + sum(p2)
            if size > rows * cols:
                continue
            for lam in _box_partitions(rows, cols):
                if sum(lam) != size:
                    continue
                co = lr_coefficient(lam, p1, p2)
                if co:
                    out[lam] = out.get(lam, 0) + c1 * c2 * co
    return SchubertClass.make(x.box, out)


def pieri_multiply(x: SchubertClass) -> SchubertClass:
    """Multiply by the codimension-one class by adding a box in all legal
    ways; kept as an independent cross-check of the tableau rule."""
    rows, cols = x.box
    out: dict[tuple[int, ...], int] = {}
    for p, c in x.terms:
        padded = list(p) + [0] * (rows - len(p))
        for r in range(rows):
            if padded[r] < cols and (r == 0 or padded[r - 1] > padded[r]):
                q = list(padded)
                q[r] += 1
                key = _norm_partition(q)
                out[key] = out.get(key, 0) + c
    return SchubertClass.make(x.box, out)


def grass_degree(d: int, n: int) -> int:
    """Self-intersection number of the hyperplane class on Grass(d, n),
    equal to the degree of its Pluecker embedding."""
    if not 1 <= d <= n:
        raise DimensionMismatch(f"need 1 <= d <= n, got ({d}, {n})")
    box = (d, n - d)
    acc = SchubertClass.one(box)
    for _ in range(d * (n - d)):
        acc = pieri_multiply(acc)
    return acc.point_coefficient()


def qram_of_monomial_space(powers, j: int | None = None) -> tuple[int, ...]:
    """Ramification partition of the monomial space with the given x-powers.

    ``powers`` must be strictly increasing; the result subtracts the
    staircase (0, 1, ..., d-1) and is sorted decreasingly.  Its sum is the
    total ramification of the space at the point x = 0.
    """
    powers = list(powers)
    if not powers or any(powers[i] >= powers[i + 1] for i in range(len(powers) - 1)):
        raise MalformedE(f"x-powers must be strictly increasing, got {powers}")
    if powers[0] < 0 or (j is not None and powers[-1] > j):
        raise MalformedE(f"x-powers out of range for degree {j}: {powers}")
    return tuple(sorted((n - i for i, n in enumerate(powers)), reverse=True))


def intersect_ramification(d: int, j: int, conditions) -> SchubertClass:
    """Class of the intersection of ramification conditions at distinct
    points, each given by the x-powers of a d-dimensional monomial space of
    degree-j forms.  A zero class signals an empty intersection; otherwise
    every term has codimension equal to the total ramification imposed."""
    box = (d, j + 1 - d)
    acc = SchubertClass.one(box)
    for powers in conditions:
        powers = list(powers)
        if len(powers) != d:
            raise DimensionMismatch(f"condition {powers} is not {d}-dimensional")
        qram = qram_of_monomial_space(powers, j)
        acc = lr_multiply(acc, SchubertClass.basis(box, qram))
    return acc
