"""Dynkin diagram machinery, isotropy typing and the classification tables.

The isotropy subalgebra of the homogeneous model is read off the simple roots
perpendicular to the highest root (equivalently, by deleting the lowest-root
node and its neighbors from the extended diagram). Group names are a finite
lookup keyed by series: Lie algebra data alone cannot see the difference
between, say, Spin(12) and SO(12), so the simply-connectedness facts are
encoded as annotations rather than recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .datum import ComplexDatum, build_complex_datum
from .chevalley import build_chevalley
from .errors import VerificationError
from .roots import (LieType, Root, RootSystem, build_root_system, cartan_number,
                    highest_root)


@dataclass
class Diagram:
    """Nodes with bond multiplicities; arrows point from long to short."""

    nodes: tuple[int, ...]
    edges: dict                      # {(i, j): multiplicity} with i < j
    lengths: dict                    # node -> half-norm of the root

    def neighbors(self, i: int):
        out = []
        for (a, b) in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def components(self):
        seen: set[int] = set()
        comps = []
        for start in self.nodes:
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbors(x):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def sub(self, keep) -> "Diagram":
        keep = set(keep)
        return Diagram(nodes=tuple(sorted(keep)),
                       edges={e: m for e, m in self.edges.items()
                              if e[0] in keep and e[1] in keep},
                       lengths={i: d for i, d in self.lengths.items() if i in keep})


def diagram(rs: RootSystem) -> Diagram:
    """Dynkin diagram of the simple base; multiplicity is c_ij * c_ji."""
    n = rs.rank
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            m = rs.cartan[i][j] * rs.cartan[j][i]
            if m:
                edges[(i, j)] = m
    return Diagram(nodes=tuple(range(n)), edges=edges,
                   lengths={i: rs.lengths[i] for i in range(n)})


def extended_diagram(rs: RootSystem) -> Diagram:
    """Diagram extended by the lowest root, attached as node index rank."""
    base = diagram(rs)
    theta = highest_root(rs)
    low = tuple(-x for x in theta)
    edges = dict(base.edges)
    lengths = dict(base.lengths)
    lengths[rs.rank] = rs.norm2(theta) / 2
    for i in range(rs.rank):
        cij = cartan_number(rs, rs.simple_root(i), low)
        cji = cartan_number(rs, low, rs.simple_root(i))
        m = cij * cji
        if m:
            edges[(i, rs.rank)] = m
    return Diagram(nodes=tuple(range(rs.rank + 1)), edges=edges, lengths=lengths)


def cartan_from_diagram(diag: Diagram):
    """Round-trip reconstruction of the Cartan matrix from bonds and lengths."""
    order = {node: k for k, node in enumerate(diag.nodes)}
    n = len(diag.nodes)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for (x, y), m in diag.edges.items():
        i, j = order[x], order[y]
        di, dj = diag.lengths[x], diag.lengths[y]
        if m == 1:
            a[i][j] = a[j][i] = -1
        elif di > dj:
            a[i][j], a[j][i] = -1, -m
        else:
            a[i][j], a[j][i] = -m, -1
    return a


def classify_component(diag: Diagram, comp) -> LieType:
    """Identify one connected component by its bonds and relative lengths."""
    sub = diag.sub(comp)
    r = len(comp)
    if r == 1:
        return LieType("A", 1)
    mults = sorted(sub.edges.values())
    if any(m == 3 for m in mults):
        if r != 2:
            raise VerificationError("diagram-classify", f"triple bond in a rank-{r} component")
        return LieType("G", 2)
    degs = sorted(sub.degree(i) for i in comp)
    if degs[-1] > 3 or len(sub.edges) != r - 1:
        raise VerificationError("diagram-classify", "component is not a tree of degree <= 3")
    if degs[-1] == 3:
        if any(m != 1 for m in mults):
            raise VerificationError("diagram-classify", "branched component with a multiple bond")
        branch = next(i for i in comp if sub.degree(i) == 3)
        arms = []
        for start in sub.neighbors(branch):
            length, prev, cur = 1, branch, start
            while True:
                nxt = [x for x in sub.neighbors(cur) if x != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return LieType("D", r)
        if arms[0] == 1 and arms[1] == 2 and r in (6, 7, 8):
            return LieType("E", r)
        raise VerificationError("diagram-classify", f"unrecognized branched shape {arms}")
    # chains
    if all(m == 1 for m in mults):
        return LieType("A", r)
    doubles = [(e, m) for e, m in sub.edges.items() if m == 2]
    if len(doubles) != 1 or any(m > 2 for m in mults):
        raise VerificationError("diagram-classify", "chain with unsupported bond pattern")
    dmax = max(sub.lengths[i] for i in comp)
    shorts = [i for i in comp if sub.lengths[i] < dmax]
    ends = [i for i in comp if sub.degree(i) == 1]
    (e1, e2), _ = doubles[0]
    if r == 4 and len(shorts) == 2 and not (e1 in ends or e2 in ends):
        return LieType("F", 4)
    if r == 2:
        # B2 and C2 present the same algebra; C is the canonical label here
        return LieType("C", 2)
    if len(shorts) == 1:
        return LieType("B", r)
    if len(shorts) == r - 1:
        return LieType("C", r)
    raise VerificationError("diagram-classify", f"unrecognized chain with shorts {shorts}")


def simple_roots_of_h(d: ComplexDatum) -> tuple[int, ...]:
    """Indices of the simple roots perpendicular to the maximal root.

    Verified to generate the perpendicular subsystem: every root of Phi_0 is
    supported on the returned index set (with its uniform sign).
    """
    rs = d.cb.rs
    alpha = d.alpha
    if alpha != highest_root(rs):
        raise ValueError("isotropy typing requires the canonical highest root")
    kept = tuple(j for j in range(rs.rank)
                 if rs.form(rs.simple_root(j), alpha) == 0)
    keep = set(kept)
    for beta in d.phi0:
        if any(beta[j] != 0 and j not in keep for j in range(rs.rank)):
            raise VerificationError("h-simple-roots",
                                    f"Phi_0 root {beta} is not generated by the perpendicular simples")
    return kept


_EXCEPTIONAL_NAMES = {
    "G2": ("G2", "Sp(1)", "SO(4)"),
    "F4": ("F4", "Sp(3)", "Sp(3)Sp(1)"),
    "E6": ("E6", "SU(6)", "SU(6)Sp(1)"),
    "E7": ("E7", "Spin(12)", "Spin(12)Sp(1)"),
    "E8": ("E8", "E7", "E7Sp(1)"),
}


@dataclass
class IsotropyReport:
    lie_type: LieType
    h_components: tuple[LieType, ...]
    center_dim: int
    g_name: str
    h_name: str
    normalizer_name: str
    dim_g: int
    dim_h: int
    dim_m: int
    n: int
    pi1_quotient: str          # lookup annotation, not computed
    space_name: str
    wolf_name: str

    def to_dict(self):
        return {
            "type": str(self.lie_type),
            "h_components": [str(c) for c in self.h_components],
            "center_dim": self.center_dim,
            "G": self.g_name, "H": self.h_name, "N_G(K)": self.normalizer_name,
            "dim_g": self.dim_g, "dim_h": self.dim_h, "dim_M": self.dim_m,
            "n": self.n, "einstein_constant": 2 * (2 * self.n + 1),
            "pi1_quotient": self.pi1_quotient + " (lookup)",
            "M": self.space_name, "wolf_space": self.wolf_name,
        }


def _dim_of_type(t: LieType) -> int:
    n = t.rank
    if t.series == "A":
        return n * (n + 2)
    if t.series in ("B", "C"):
        return n * (2 * n + 1)
    if t.series == "D":
        return n * (2 * n - 1)
    return {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}[str(t)]


def isotropy_report(d: ComplexDatum) -> IsotropyReport:
    rs = d.cb.rs
    t = rs.type
    kept = simple_roots_of_h(d)
    diag = diagram(rs).sub(kept)
    comps = tuple(classify_component(diag, c) for c in diag.components())
    center = (rs.rank - 1) - sum(c.rank for c in comps)
    if center < 0:
        raise VerificationError("isotropy", "component ranks exceed rank g - 1")
    dim_h = sum(_dim_of_type(c) for c in comps) + center
    if dim_h != d.dim_v:
        raise VerificationError("isotropy",
                                f"component dimensions {dim_h} do not match dim h = {d.dim_v}")
    dim_g = rs.dim_algebra
    n = d.n
    if dim_g - dim_h != 4 * n + 3:
        raise VerificationError("isotropy", "dim M is not 4n + 3")

    s, r = t.series, t.rank
    pi1 = "trivial"
    if s == "C" or (s == "A" and r == 1):
        # the sphere family; quotient annotation from the fundamental-group result
        pi1 = "Z2"
        g_name, h_name = f"Sp({r})", f"Sp({r - 1})"
        norm = f"Sp({r - 1})xSp(1)"
        space = f"Sp({r})/Sp({r - 1}) = S^{4 * n + 3}"
        wolf = f"Sp({r})/(Sp({r - 1})xSp(1))"
    elif s == "A":
        m = r + 1
        g_name, h_name = f"SU({m})", f"S(U({m - 2})xU(1))"
        norm = f"S(U({m - 2})xU(2))"
        space = f"SU({m})/S(U({m - 2})xU(1))"
        wolf = f"SU({m})/S(U({m - 2})xU(2))"
    elif s in ("B", "D"):
        k = 2 * r + 1 if s == "B" else 2 * r
        g_name, h_name = f"SO({k})", f"SO({k - 4})xSp(1)"
        norm = f"SO({k - 4})xSO(4)"
        space = f"SO({k})/(SO({k - 4})xSp(1))"
        wolf = f"SO({k})/(SO({k - 4})xSO(4))"
    else:
        g_name, h_name, norm = _EXCEPTIONAL_NAMES[str(t)]
        space = f"{g_name}/{h_name}"
        wolf = f"{g_name}/{norm}"
    return IsotropyReport(lie_type=t, h_components=comps, center_dim=center,
                          g_name=g_name, h_name=h_name, normalizer_name=norm,
                          dim_g=dim_g, dim_h=dim_h, dim_m=4 * n + 3, n=n,
                          pi1_quotient=pi1, space_name=space, wolf_name=wolf)


def report_for_type(t: LieType | str) -> IsotropyReport:
    if isinstance(t, str):
        t = LieType.parse(t)
    rs = build_root_system(t)
    cb = build_chevalley(rs)
    d = build_complex_datum(cb, highest_root(rs))
    return isotropy_report(d)


# the nine families of the classification, with their redundancy guards
FAMILY_TEMPLATES = (
    "Sp(n+1)/Sp(n) = S^{4n+3}  [n >= 0]",
    "Sp(n+1)/(Sp(n)xZ2) = RP^{4n+3}  [n >= 0, quotient of the sphere row]",
    "SU(m)/S(U(m-2)xU(1))  [m >= 3]",
    "SO(k)/(SO(k-4)xSp(1))  [k >= 7]",
    "G2/Sp(1)", "F4/Sp(3)", "E6/SU(6)", "E7/Spin(12)", "E8/E7",
)

WOLF_TEMPLATES = (
    "Sp(n+1)/(Sp(n)xSp(1))  [n >= 0]",
    "SU(m)/S(U(m-2)xU(2))  [m >= 3]",
    "SO(k)/(SO(k-4)xSO(4))  [k >= 7]",
    "G2/SO(4)", "F4/Sp(3)Sp(1)", "E6/SU(6)Sp(1)", "E7/Spin(12)Sp(1)", "E8/E7Sp(1)",
)


def classification_types(max_rank: int):
    """Deterministic row order: sphere family, SU family, SO family by k,
    then the exceptional types. Redundancy guards: A starts at m = 3, the
    SO family at k = 7, and A1 appears once as the n = 0 sphere."""
    types = [LieType("A", 1)]
    types += [LieType("C", r) for r in range(2, max_rank + 1)]
    types += [LieType("A", r) for r in range(2, max_rank + 1)]
    so_rows = [("B", r) for r in range(3, max_rank + 1)] + \
              [("D", r) for r in range(4, max_rank + 1)]
    so_rows.sort(key=lambda sr: (2 * sr[1] + 1 if sr[0] == "B" else 2 * sr[1]))
    types += [LieType(s, r) for s, r in so_rows]
    for s, r in (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)):
        if r <= max_rank:
            types.append(LieType(s, r))
    return types


def classification_table(max_rank: int) -> list[IsotropyReport]:
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    return [report_for_type(t) for t in classification_types(max_rank)]


def render_markdown(reports) -> str:
    head = ("| type | M = G/H | dim M | n | Einstein | Wolf space | pi1 quotient |",
            "|------|---------|-------|---|----------|------------|--------------|")
    rows = []
    for r in reports:
        rows.append(f"| {r.lie_type} | {r.space_name} | {r.dim_m} | {r.n} | "
                    f"{2 * (2 * r.n + 1)} | {r.wolf_name} | {r.pi1_quotient} (lookup) |")
    return "\n".join(head + tuple(rows)) + "\n"


def render_csv(reports) -> str:
    lines = ["type,M,dim_M,n,einstein_constant,wolf_space,pi1_quotient"]
    for r in reports:
        lines.append(f"{r.lie_type},{r.space_name},{r.dim_m},{r.n},"
                     f"{2 * (2 * r.n + 1)},{r.wolf_name},{r.pi1_quotient} (lookup)")
    return "\n".join(lines) + "\n"


def render_json(reports) -> str:
    import json
    return json.dumps({"families": list(FAMILY_TEMPLATES),
                       "wolf_families": list(WOLF_TEMPLATES),
                       "rows": [r.to_dict() for r in reports]},
                      indent=2, sort_keys=True) + "\n"
