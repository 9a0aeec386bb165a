"""Chevalley bases with integer structure constants, and the compact real form.

Signs follow the extraspecial-pair convention for the total order on positive
roots by height, then lexicographic coordinates: for every non-simple positive
root eps the pair (beta, eps - beta) with minimal beta gets N = p + 1, and all
other constants are forced from those through the standard zero-sum relations.

The compact real form is the real span of {i H_j} together with
U_beta = E_beta - E_{-beta} and V_beta = i (E_beta + E_{-beta}) over the
positive roots; its structure constants are integers. Killing forms are always
computed as traces of adjoint products, never from a normalized pairing.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import SignConsistencyError, VerificationError
from .linalg import is_negative_definite, spaxpy
from .roots import LieType, Root, RootSystem


class StructureTable:
    """Antisymmetric bracket table over a fixed basis, exact coefficients."""

    def __init__(self, labels, table):
        self.labels = list(labels)
        self.dim = len(self.labels)
        # {(i, j): {k: coeff}} stored for i < j only, zero rows omitted
        self._table = table
        self._killing = None

    def bracket(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        return {k: -v for k, v in self._table.get((j, i), {}).items()}

    def bracket_vec(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                if i == j:
                    continue
                c = xi * yj
                if not c:
                    continue
                if i < j:
                    row = self._table.get((i, j))
                else:
                    row = self._table.get((j, i))
                    c = -c
                if row:
                    spaxpy(out, c, row)
        return out

    def adjoint(self, i: int) -> dict:
        """Sparse matrix {(row, col): v} of ad applied to basis element i."""
        entries = {}
        for c in range(self.dim):
            for r, v in self.bracket(i, c).items():
                entries[(r, c)] = v
        return entries

    def killing(self):
        """Killing form B(x, y) = tr(ad_x ad_y) on the basis, cached."""
        if self._killing is None:
            ads = [self.adjoint(i) for i in range(self.dim)]
            b = [[0] * self.dim for _ in range(self.dim)]
            for p in range(self.dim):
                adp = ads[p]
                for q in range(p, self.dim):
                    adq = ads[q]
                    small, big = (adp, adq) if len(adp) <= len(adq) else (adq, adp)
                    acc = 0
                    for (r, c), v in small.items():
                        w = big.get((c, r))
                        if w:
                            acc += v * w
                    b[p][q] = acc
                    b[q][p] = acc
            self._killing = b
        return self._killing

    def killing_vec(self, x: dict, y: dict):
        b = self.killing()
        return sum(xi * sum(b[i][j] * yj for j, yj in y.items()) for i, xi in x.items())

    def jacobi_defect(self, i: int, j: int, k: int) -> dict:
        e = [{i: 1}, {j: 1}, {k: 1}]
        out: dict = {}
        for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            spaxpy(out, 1, self.bracket_vec(self.bracket_vec(e[a], e[b]), e[c]))
        return out

    def verify_jacobi(self, max_full_dim: int = 80, samples: int = 1000,
                      seed: int = 0) -> int:
        """Exact Jacobi check: every basis triple while the dimension allows,
        a seeded pseudo-random sample beyond. Returns triples checked."""
        if self.dim <= max_full_dim:
            triples = itertools.combinations(range(self.dim), 3)
            count = self.dim * (self.dim - 1) * (self.dim - 2) // 6
        else:
            rng = random.Random(seed)
            triples = [tuple(rng.randrange(self.dim) for _ in range(3))
                       for _ in range(samples)]
            count = samples
        for i, j, k in triples:
            if self.jacobi_defect(i, j, k):
                raise VerificationError("jacobi",
                                        f"defect at basis triple ({i}, {j}, {k})")
        return count

    def to_json(self) -> str:
        """Deterministic JSON document: labels plus sparse integer-fraction brackets."""
        brackets = []
        for (i, j) in sorted(self._table):
            row = self._table[(i, j)]
            if row:
                brackets.append([i, j, [[k, str(row[k])] for k in sorted(row)]])
        doc = {"dim": self.dim, "labels": self.labels, "brackets": brackets}
        return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def _build_constants(rs: RootSystem):
    """N_{beta,gamma} for every ordered pair of roots whose sum is a root."""
    pos = rs.positives
    posset = set(pos)
    ordpos = {b: k for k, b in enumerate(pos)}
    allroots = rs.index
    norm2 = {b: rs.norm2(b) for b in rs.roots}

    def add(x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(x, y):
        return tuple(a - b for a, b in zip(x, y))

    def neg(x):
        return tuple(-a for a in x)

    def pmax(beta, gamma):
        # largest k with gamma - k*beta a root (search ranges over all of Phi)
        k = 0
        cur = sub(gamma, beta)
        while cur in allroots:
            k += 1
            cur = sub(cur, beta)
        return k

    nplus: dict[tuple[Root, Root], int] = {}
    memo: dict[tuple[Root, Root], int] = {}

    def nfull(x: Root, y: Root) -> int:
        got = memo.get((x, y))
        if got is not None:
            return got
        s = add(x, y)
        if s not in allroots:
            val = 0
        elif x not in posset:
            val = -nfull(neg(x), neg(y)) if y not in posset else -nfull(y, x)
        elif y in posset:
            val = nplus[(x, y)] if ordpos[x] < ordpos[y] else -nplus[(y, x)]
        elif s in posset:
            f = norm2[s] / norm2[x] * nfull(neg(y), s)
            if f.denominator != 1:
                raise SignConsistencyError(f"non-integer constant at pair {x}, {y}")
            val = -int(f)
        else:
            val = -nfull(neg(x), neg(y))
        memo[(x, y)] = val
        return val

    # extraspecial pair per non-simple positive root; remaining special pairs
    # are forced via the zero-sum relation for (beta1, -beta, -gamma, gamma1).
    # Processing by height of the sum keeps every lookup at smaller heights.
    for eps in pos:
        if sum(eps) == 1:
            continue
        pairs = []
        for b in pos:
            g = sub(eps, b)
            if g in posset and ordpos[b] < ordpos[g]:
                pairs.append((b, g))
        if not pairs:
            raise SignConsistencyError(f"{eps} is not a sum of two positive roots")
        pairs.sort(key=lambda pg: ordpos[pg[0]])
        b1, g1 = pairs[0]
        nplus[(b1, g1)] = pmax(b1, g1) + 1
        for b, g in pairs[1:]:
            t = Fraction(0)
            x1 = sub(b1, b)
            if x1 in allroots:
                t += Fraction(nfull(b1, neg(b)) * nfull(neg(g), g1)) / norm2[x1]
            x2 = sub(b1, g)
            if x2 in allroots:
                t += Fraction(nfull(neg(g), b1) * nfull(neg(b), g1)) / norm2[x2]
            val = norm2[eps] * t / nplus[(b1, g1)]
            if val == 0 or val.denominator != 1:
                raise SignConsistencyError(
                    f"inconsistent constant for root triple {b}, {g}, {eps}")
            n = int(val)
            if abs(n) != pmax(b, g) + 1:
                raise SignConsistencyError(
                    f"|N| != p + 1 for root triple {b}, {g}, {eps}")
            nplus[(b, g)] = n

    table: dict[tuple[Root, Root], int] = {}
    for x in rs.roots:
        for y in rs.roots:
            s = add(x, y)
            if s in allroots:
                table[(x, y)] = nfull(x, y)
    return table


def coroot_coords(rs: RootSystem, beta: Root) -> tuple[int, ...]:
    """Coordinates of the coroot H_beta in the basis of simple coroots."""
    d_beta = rs.norm2(beta) / 2
    out = []
    for j in range(rs.rank):
        v = beta[j] * rs.lengths[j] / d_beta
        if v.denominator != 1:
            raise SignConsistencyError(f"non-integral coroot for {beta}")
        out.append(int(v))
    return tuple(out)


def _root_label(prefix: str, b: Root) -> str:
    return prefix + "(" + ",".join(str(x) for x in b) + ")"


@dataclass
class ChevalleyBasis:
    """Basis H_1..H_r, E_beta over all roots, with integer structure constants."""

    rs: RootSystem
    table: StructureTable
    nconst: dict

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def dim(self) -> int:
        return self.table.dim

    def e_index(self, beta: Root) -> int:
        return self.rank + self.rs.index[tuple(beta)]

    def structure_constant(self, beta: Root, gamma: Root) -> int:
        return self.nconst.get((tuple(beta), tuple(gamma)), 0)

    def coroot_vec(self, beta: Root) -> dict:
        return {j: h for j, h in enumerate(coroot_coords(self.rs, beta)) if h}


def build_chevalley(rs: RootSystem) -> ChevalleyBasis:
    """Chevalley basis; coroot relation and scaling hold by construction and
    are cross-checked by the verification suite via the Jacobi identity."""
    nconst = _build_constants(rs)
    r = rs.rank
    labels = [f"H{j + 1}" for j in range(r)] + [_root_label("E", b) for b in rs.roots]
    table: dict[tuple[int, int], dict] = {}
    for j in range(r):
        arow = rs.cartan[j]
        for ri, beta in enumerate(rs.roots):
            c = sum(arow[k] * beta[k] for k in range(r))
            if c:
                table[(j, r + ri)] = {r + ri: c}
    nroots = len(rs.roots)
    for i in range(nroots):
        beta = rs.roots[i]
        for j2 in range(i + 1, nroots):
            gamma = rs.roots[j2]
            s = tuple(a + b for a, b in zip(beta, gamma))
            if all(x == 0 for x in s):
                row = {j: h for j, h in enumerate(coroot_coords(rs, beta)) if h}
                table[(r + i, r + j2)] = row
            elif s in rs.index:
                table[(r + i, r + j2)] = {r + rs.index[s]: nconst[(beta, gamma)]}
    cb = ChevalleyBasis(rs=rs, table=StructureTable(labels, table), nconst=nconst)
    cb.table.verify_jacobi()
    return cb


def coroot_element(cb: ChevalleyBasis, alpha: Root) -> dict:
    """H_alpha as a sparse vector over the Cartan part, with alpha(H_alpha) = 2."""
    vec = cb.coroot_vec(alpha)
    pairing = sum(v * sum(cb.rs.cartan[j][k] * alpha[k] for k in range(cb.rank))
                  for j, v in vec.items())
    if pairing != 2:
        raise SignConsistencyError(f"alpha(H_alpha) = {pairing} != 2 for {alpha}")
    return vec


class CompactForm:
    """Real compact form on the basis {i H_j} + {U_beta, V_beta: beta > 0}."""

    def __init__(self, cb: ChevalleyBasis):
        self.cb = cb
        self.rs = cb.rs
        rs = cb.rs
        r = rs.rank
        pos = rs.positives
        self.positives = pos
        self.pos_index = {b: p for p, b in enumerate(pos)}
        labels = [f"iH{j + 1}" for j in range(r)]
        for b in pos:
            labels.append(_root_label("U", b))
            labels.append(_root_label("V", b))
        self._r = r
        table = self._build_table()
        self.table = StructureTable(labels, table)
        self.table.verify_jacobi()
        self.killing = self.table.killing()
        if not is_negative_definite(self.killing):
            raise VerificationError("compact-killing-form",
                                    f"Killing form of {rs.type} compact form is not negative definite")

    # basis index helpers
    def t_index(self, j: int) -> int:
        return j

    def u_index(self, p: int) -> int:
        return self._r + 2 * p

    def v_index(self, p: int) -> int:
        return self._r + 2 * p + 1

    @property
    def dim(self) -> int:
        return self.table.dim

    def _u_signed(self, delta: Root):
        """Index and sign realizing U_delta, with U_{-d} = -U_d."""
        p = self.pos_index.get(delta)
        if p is not None:
            return self.u_index(p), 1
        return self.u_index(self.pos_index[tuple(-x for x in delta)]), -1

    def _v_of(self, delta: Root) -> int:
        p = self.pos_index.get(delta)
        if p is None:
            p = self.pos_index[tuple(-x for x in delta)]
        return self.v_index(p)

    def _build_table(self):
        rs, cb = self.rs, self.cb
        r = rs.rank
        pos = rs.positives
        rootset = rs.index
        n_of = cb.nconst
        table: dict[tuple[int, int], dict] = {}

        def put(i, j, row):
            row = {k: v for k, v in row.items() if v}
            if row:
                table[(i, j)] = row

        for j in range(r):
            arow = rs.cartan[j]
            for p, beta in enumerate(pos):
                c = sum(arow[k] * beta[k] for k in range(r))
                if c:
                    put(j, self.u_index(p), {self.v_index(p): c})
                    put(j, self.v_index(p), {self.u_index(p): -c})

        for p, beta in enumerate(pos):
            hrow = {j: 2 * h for j, h in cb.coroot_vec(beta).items()}
            put(self.u_index(p), self.v_index(p), hrow)
            for q in range(p + 1, len(pos)):
                gamma = pos[q]
                s = tuple(a + b for a, b in zip(beta, gamma))
                dif = tuple(a - b for a, b in zip(beta, gamma))
                npg = n_of.get((beta, gamma), 0) if s in rootset else 0
                nmg = n_of.get((beta, tuple(-x for x in gamma)), 0) if dif in rootset else 0
                uu: dict = {}
                uv: dict = {}
                vu: dict = {}
                vv: dict = {}
                if npg:
                    us, sgn = self._u_signed(s)
                    uu[us] = uu.get(us, 0) + npg * sgn
                    vv[us] = vv.get(us, 0) - npg * sgn
                    vs = self._v_of(s)
                    uv[vs] = uv.get(vs, 0) + npg
                    vu[vs] = vu.get(vs, 0) + npg
                if nmg:
                    ud, sgn = self._u_signed(dif)
                    uu[ud] = uu.get(ud, 0) - nmg * sgn
                    vv[ud] = vv.get(ud, 0) - nmg * sgn
                    vd = self._v_of(dif)
                    uv[vd] = uv.get(vd, 0) + nmg
                    vu[vd] = vu.get(vd, 0) - nmg
                put(self.u_index(p), self.u_index(q), uu)
                put(self.u_index(p), self.v_index(q), uv)
                put(self.v_index(p), self.u_index(q), vu)
                put(self.v_index(p), self.v_index(q), vv)
        return table


def compact_real_form(cb: ChevalleyBasis) -> CompactForm:
    return CompactForm(cb)
