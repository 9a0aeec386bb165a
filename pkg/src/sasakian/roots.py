"""Root systems of the simple complex Lie algebras, in exact integer arithmetic.

Roots are stored as integer coordinate tuples in the simple-root basis. The
invariant form is the symmetrized Cartan matrix, normalized so that long roots
have squared length 2. The Cartan matrix convention is

    cartan[i][j] = 2 <alpha_j, alpha_i> / <alpha_i, alpha_i>,

so that the pairing of any lattice vector b with the i-th simple coroot is the
i-th entry of cartan @ b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidLieTypeError, NotARootError

Root = tuple[int, ...]

SERIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if s == "E":
            if r not in (6, 7, 8):
                raise InvalidLieTypeError(f"E{r}: series E requires rank in {{6, 7, 8}}")
        elif s == "F":
            if r != 4:
                raise InvalidLieTypeError(f"F{r}: series F requires rank 4")
        elif s == "G":
            if r != 2:
                raise InvalidLieTypeError(f"G{r}: series G requires rank 2")
        elif s in ("A", "B", "C", "D"):
            lo = {"A": 1, "B": 2, "C": 2, "D": 4}[s]
            if r < lo:
                raise InvalidLieTypeError(f"{s}{r}: series {s} requires rank >= {lo}")
        else:
            raise InvalidLieTypeError(f"unknown series {s!r}; expected one of {','.join(SERIES)}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        t = text.strip()
        if len(t) < 2 or not t[0].isalpha() or not t[1:].isdigit():
            raise InvalidLieTypeError(f"cannot parse Lie type {text!r} (expected e.g. 'A3', 'e8')")
        return cls(t[0].upper(), int(t[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _diagram_data(t: LieType):
    """Bond list [(i, j, a_ij, a_ji)] and half-norms d_i (long roots have d = 1)."""
    n, s = t.rank, t.series
    one, half, third = Fraction(1), Fraction(1, 2), Fraction(1, 3)
    chain = [(i, i + 1, -1, -1) for i in range(n - 1)]
    if s == "A":
        return chain, [one] * n
    if s == "B":
        # last simple root short
        return chain[:-1] + [(n - 2, n - 1, -1, -2)], [one] * (n - 1) + [half]
    if s == "C":
        # last simple root long
        return chain[:-1] + [(n - 2, n - 1, -2, -1)], [half] * (n - 1) + [one]
    if s == "D":
        bonds = [(i, i + 1, -1, -1) for i in range(n - 3)]
        bonds += [(n - 3, n - 2, -1, -1), (n - 3, n - 1, -1, -1)]
        return bonds, [one] * n
    if s == "E":
        base = [(0, 2), (2, 3), (1, 3), (3, 4)] + [(i, i + 1) for i in range(4, n - 1)]
        return [(i, j, -1, -1) for i, j in base], [one] * n
    if s == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)], [one, one, half, half]
    # G2, first simple root short
    return [(0, 1, -3, -1)], [third, one]


def cartan_matrix(t: LieType):
    bonds, lengths = _diagram_data(t)
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in bonds:
        a[i][j] = aij
        a[j][i] = aji
    return a, lengths


class RootSystem:
    """All roots of one simple type, with Cartan matrix and invariant form."""

    def __init__(self, lie_type: LieType, cartan, lengths, positives):
        self.type = lie_type
        self.rank = lie_type.rank
        self.cartan = cartan
        self.lengths = lengths
        self.sym = [[lengths[i] * cartan[i][j] for j in range(self.rank)]
                    for i in range(self.rank)]
        self.positives: list[Root] = list(positives)
        self.roots: list[Root] = self.positives + [tuple(-c for c in b) for b in self.positives]
        self.index: dict[Root, int] = {b: k for k, b in enumerate(self.roots)}
        self._crow: dict[Root, tuple[int, ...]] = {}

    def __repr__(self):
        return f"RootSystem({self.type}, {len(self.roots)} roots)"

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    @property
    def dim_algebra(self) -> int:
        return len(self.roots) + self.rank

    def simple_root(self, i: int) -> Root:
        return tuple(int(i == j) for j in range(self.rank))

    def is_root(self, v) -> bool:
        return tuple(v) in self.index

    def form(self, b, c) -> Fraction:
        """Invariant form <b, c> on the root lattice."""
        acc = Fraction(0)
        for i, bi in enumerate(b):
            if bi:
                row = self.sym[i]
                acc += bi * sum(row[j] * cj for j, cj in enumerate(c) if cj)
        return acc

    def norm2(self, b) -> Fraction:
        return self.form(b, b)

    def height(self, b) -> int:
        return sum(b)

    def cartan_row(self, alpha: Root) -> tuple[int, ...]:
        """Integers c_{alpha, alpha_j} for every simple root, cached."""
        row = self._crow.get(alpha)
        if row is None:
            den = self.norm2(alpha)
            vals = []
            for j in range(self.rank):
                v = 2 * self.form(self.simple_root(j), alpha) / den
                if v.denominator != 1:
                    raise NotARootError(f"{alpha} has a non-integral Cartan pairing")
                vals.append(int(v))
            row = tuple(vals)
            self._crow[alpha] = row
        return row

    def reflect(self, i: int, beta: Root) -> Root:
        """Simple reflection s_i applied to a lattice vector."""
        c = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        out = list(beta)
        out[i] -= c
        return tuple(out)


def build_root_system(t: LieType | str) -> RootSystem:
    """Generate the full root system by height induction over root strings."""
    if isinstance(t, str):
        t = LieType.parse(t)
    cartan, lengths = cartan_matrix(t)
    n = t.rank
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for b in layer:
            for i in range(n):
                cand = tuple(x + int(j == i) for j, x in enumerate(b))
                if cand in known:
                    continue
                c = sum(cartan[i][j] * b[j] for j in range(n))
                p = 0
                cur = tuple(x - int(j == i) for j, x in enumerate(b))
                while cur in known:
                    p += 1
                    cur = tuple(x - int(j == i) for j, x in enumerate(cur))
                if p - c > 0:
                    known.add(cand)
                    nxt.append(cand)
        layer = nxt
    positives = sorted(known, key=lambda b: (sum(b), b))
    return RootSystem(t, cartan, lengths, positives)


def cartan_number(rs: RootSystem, alpha: Root, beta) -> int:
    """The integer 2<beta,alpha>/<alpha,alpha> for a root alpha and lattice beta."""
    alpha = tuple(alpha)
    if alpha not in rs.index:
        raise NotARootError(f"{alpha} is not a root of {rs.type}")
    row = rs.cartan_row(alpha)
    return sum(r * b for r, b in zip(row, beta))


def highest_root(rs: RootSystem) -> Root:
    """The unique root dominating all others coefficientwise."""
    theta = max(rs.positives, key=lambda b: (sum(b), b))
    for b in rs.positives:
        if any(x > y for x, y in zip(b, theta)):
            raise NotARootError(f"no dominating root in {rs.type}")
    return theta


def is_maximal(rs: RootSystem, alpha: Root) -> bool:
    """Maximality criterion: |c| <= 2 over all roots, with |c| = 2 only at +-alpha."""
    alpha = tuple(alpha)
    if alpha not in rs.index:
        raise NotARootError(f"{alpha} is not a root of {rs.type}")
    neg = tuple(-x for x in alpha)
    row = rs.cartan_row(alpha)
    for beta in rs.roots:
        c = sum(r * b for r, b in zip(row, beta))
        if abs(c) > 2:
            return False
        if abs(c) == 2 and beta != alpha and beta != neg:
            return False
    return True


def root_string(rs: RootSystem, alpha: Root, beta: Root) -> tuple[int, int]:
    """Largest (p, q) with beta + r*alpha a root for all r in {-p, ..., q}.

    Undefined for beta in {alpha, -alpha}; asserts the string identity
    p - q = c_{alpha,beta}.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    for v in (alpha, beta):
        if v not in rs.index:
            raise NotARootError(f"{v} is not a root of {rs.type}")
    if beta == alpha or beta == tuple(-x for x in alpha):
        raise ValueError("root string through +-alpha itself is undefined")
    p = 0
    cur = tuple(b - a for b, a in zip(beta, alpha))
    while cur in rs.index:
        p += 1
        cur = tuple(b - a for b, a in zip(cur, alpha))
    q = 0
    cur = tuple(b + a for b, a in zip(beta, alpha))
    while cur in rs.index:
        q += 1
        cur = tuple(b + a for b, a in zip(cur, alpha))
    c = cartan_number(rs, alpha, beta)
    if p - q != c:
        raise NotARootError(f"string identity failed for {alpha}, {beta}: p={p} q={q} c={c}")
    return p, q
