"""Reductive splitting, invariant metric, structure tensors, Nomizu operator
and curvature of the compact model, verified in exact rational arithmetic.

The tangent model is m = k + g_1 inside the compact form, with k spanned by
X_1 = iH_alpha, X_2 = i(X_alpha + Y_alpha), X_3 = Y_alpha - X_alpha. The metric
is -B/(4(n+2)) on k, -B/(8(n+2)) on g_1, zero across. All residuals asserted
here are exact zeros; any failure raises with the offending tuple.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .chevalley import ChevalleyBasis, CompactForm
from .datum import ComplexDatum
from .errors import VerificationError
from .linalg import (eye, inverse, is_zero_matrix, mat_scale, mat_sub, matmul,
                     matvec, outer, spaxpy, spneg, spscale, transpose, vecmat)

CYCLES = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


@dataclass
class ReductiveSplit:
    """B-orthogonal splitting g = h + k + g_1 with m = k + g_1."""

    cf: CompactForm
    datum: ComplexDatum
    n: int
    h_basis: list[dict]
    k_basis: list[dict]
    g1_basis: list[dict]
    m_basis: list[dict]
    _cls: dict = field(repr=False, default_factory=dict)
    _tinv: list = field(repr=False, default_factory=list)
    _h_t_count: int = field(repr=False, default=0)

    @property
    def dim_m(self) -> int:
        return len(self.m_basis)

    def project(self, vec: dict) -> tuple[dict, dict]:
        """Split a compact-coordinates vector into (h-part, m-part).

        The h-part comes back re-embedded in compact coordinates, the m-part
        in m-basis coordinates.
        """
        r = self.cf.rs.rank
        hpart: dict = {}
        mpart: dict = {}
        tvec = [vec.get(j, 0) for j in range(r)]
        if any(tvec):
            coeffs = matvec(self._tinv, tvec)
            if coeffs[0]:
                mpart[0] = coeffs[0]
            for s, c in enumerate(coeffs[1:]):
                if c:
                    spaxpy(hpart, c, self.h_basis[s])
        for idx, val in vec.items():
            if idx < r:
                continue
            kind, pos = self._cls[idx]
            if kind == "h":
                w = hpart.get(idx, 0) + val
                if w:
                    hpart[idx] = w
                elif idx in hpart:
                    del hpart[idx]
            elif kind == "m":
                mpart[pos] = mpart.get(pos, 0) + val
            elif kind == "x2":
                mpart[1] = mpart.get(1, 0) + val
            else:  # x3: stored basis vector is -U_alpha
                mpart[2] = mpart.get(2, 0) - val
        return hpart, {k: v for k, v in mpart.items() if v}

    def embed_m(self, mvec: dict) -> dict:
        out: dict = {}
        for pos, c in mvec.items():
            spaxpy(out, c, self.m_basis[pos])
        return out


def compact_split(d: ComplexDatum, cf: CompactForm) -> ReductiveSplit:
    """Assemble the splitting and verify all of its defining relations."""
    rs = cf.rs
    r = rs.rank
    alpha = d.alpha
    p_alpha = cf.pos_index[alpha]

    x1 = dict(d.cb.coroot_vec(alpha))
    x2 = {cf.v_index(p_alpha): 1}
    x3 = {cf.u_index(p_alpha): -1}
    k_basis = [x1, x2, x3]

    phi0_pos = [cf.pos_index[b] for b in d.phi0 if b in cf.pos_index]
    u1_pos = [cf.pos_index[b] for b in d.u1_plus]

    h_basis: list[dict] = [dict(v) for v in d.v_cartan]
    h_t_count = len(h_basis)
    for p in sorted(phi0_pos):
        h_basis.append({cf.u_index(p): 1})
        h_basis.append({cf.v_index(p): 1})
    g1_basis: list[dict] = []
    for p in sorted(u1_pos):
        g1_basis.append({cf.u_index(p): 1})
        g1_basis.append({cf.v_index(p): 1})
    m_basis = k_basis + g1_basis

    if len(g1_basis) != 4 * d.n:
        raise VerificationError("split-dims", f"dim g_1 = {len(g1_basis)} != 4n = {4 * d.n}")
    if len(h_basis) + len(m_basis) != cf.dim:
        raise VerificationError("split-dims", "h + m does not fill the algebra")

    # classification of compact U/V indices and the Cartan-block solver
    cls: dict = {}
    phi0set, u1set = set(phi0_pos), set(u1_pos)
    for p in range(len(cf.positives)):
        ui, vi = cf.u_index(p), cf.v_index(p)
        if p == p_alpha:
            cls[ui] = ("x3", 2)
            cls[vi] = ("x2", 1)
        elif p in phi0set:
            cls[ui] = ("h", None)
            cls[vi] = ("h", None)
        elif p in u1set:
            mpos = 3 + 2 * sorted(u1_pos).index(p)
            cls[ui] = ("m", mpos)
            cls[vi] = ("m", mpos + 1)
        else:
            raise VerificationError("split-dims", f"positive root {cf.positives[p]} unclassified")
    tcols = [[x1.get(j, 0) for j in range(r)]] + \
            [[h.get(j, 0) for j in range(r)] for h in h_basis[:h_t_count]]
    tinv = inverse(transpose(tcols)) if r else []

    split = ReductiveSplit(cf=cf, datum=d, n=d.n, h_basis=h_basis, k_basis=k_basis,
                           g1_basis=g1_basis, m_basis=m_basis, _cls=cls, _tinv=tinv,
                           _h_t_count=h_t_count)
    _check_sp1_commutators(split)
    _check_orthogonality(split)
    _check_bracket_relations(split)
    return split


def _check_sp1_commutators(split: ReductiveSplit) -> None:
    tab = split.cf.table
    x = split.k_basis
    for i, j, k in CYCLES:
        got = tab.bracket_vec(x[i], x[j])
        want: dict = {}
        spaxpy(want, 2, x[k])
        if got != want:
            raise VerificationError("split-commutators",
                                    f"[X_{i + 1}, X_{j + 1}] != 2 X_{k + 1}")


def _check_orthogonality(split: ReductiveSplit) -> None:
    tab = split.cf.table
    for name, left, right in (("h vs m", split.h_basis, split.m_basis),
                              ("k vs g1", split.k_basis, split.g1_basis)):
        for a in left:
            for b in right:
                if tab.killing_vec(a, b) != 0:
                    raise VerificationError("split-orthogonality",
                                            f"B does not vanish on {name}")


def _check_bracket_relations(split: ReductiveSplit) -> None:
    """The commutator relations among h, k and g_1 verified on basis pairs."""
    tab = split.cf.table

    def parts(x, y):
        h, m = split.project(tab.bracket_vec(x, y))
        kpart = {p: v for p, v in m.items() if p < 3}
        gpart = {p: v for p, v in m.items() if p >= 3}
        return h, kpart, gpart

    for a in split.h_basis:
        for b in split.h_basis:
            _, kp, gp = parts(a, b)
            if kp or gp:
                raise VerificationError("split-relations", "[h, h] leaves h")
        for b in split.k_basis:
            if tab.bracket_vec(a, b):
                raise VerificationError("split-relations", "[h, k] != 0")
        for b in split.g1_basis:
            hp, kp, _ = parts(a, b)
            if hp or kp:
                raise VerificationError("split-relations", "[h, g1] leaves g1")
    for a in split.k_basis:
        for b in split.k_basis:
            hp, _, gp = parts(a, b)
            if hp or gp:
                raise VerificationError("split-relations", "[k, k] leaves k")
        for b in split.g1_basis:
            hp, kp, _ = parts(a, b)
            if hp or kp:
                raise VerificationError("split-relations", "[k, g1] leaves g1")
    for a in split.g1_basis:
        for b in split.g1_basis:
            _, _, gp = parts(a, b)
            if gp:
                raise VerificationError("split-relations", "[g1, g1] leaves h + k")


@dataclass
class SasakiModel:
    """Metric, Reeb vectors, contact covectors and endomorphisms on m."""

    split: ReductiveSplit
    n: int
    dim: int
    gram: list
    gram_inv: list
    gram_diagonal: bool
    eta: list
    phi: list
    mbk: dict = field(repr=False, default_factory=dict)
    hpart: dict = field(repr=False, default_factory=dict)

    @property
    def xi(self):
        return [{0: 1}, {1: 1}, {2: 1}]

    def g_of(self, x: dict, y: dict):
        return sum(xv * sum(self.gram[xk][yk] * yv for yk, yv in y.items())
                   for xk, xv in x.items())


def build_model(split: ReductiveSplit) -> SasakiModel:
    cf = split.cf
    tab = cf.table
    n = split.n
    d = split.dim_m
    scale_k = Fraction(-1, 4 * (n + 2))
    scale_g1 = Fraction(-1, 8 * (n + 2))

    bm = [[tab.killing_vec(a, b) for b in split.m_basis] for a in split.m_basis]
    for i in range(3):
        if bm[i][i] != -4 * (n + 2):
            raise VerificationError("gram-normalization",
                                    f"B(X_{i + 1}, X_{i + 1}) = {bm[i][i]} != -4(n+2)")
    gram = [[0] * d for _ in range(d)]
    for a in range(d):
        for b in range(d):
            if a < 3 and b < 3:
                gram[a][b] = scale_k * bm[a][b]
            elif a >= 3 and b >= 3:
                gram[a][b] = scale_g1 * bm[a][b]
            elif bm[a][b] != 0:
                raise VerificationError("gram-normalization", "k and g_1 are not B-orthogonal")
    diagonal = all(gram[a][b] == 0 for a in range(d) for b in range(d) if a != b)
    if diagonal:
        gram_inv = [[Fraction(1) / gram[a][a] if a == b else 0 for b in range(d)]
                    for a in range(d)]
    else:
        gram_inv = inverse(gram)

    # bracket tables on m: projected m-part and the complementary h-part
    mbk: dict = {}
    hpart: dict = {}
    for a in range(d):
        for b in range(a, d):
            h, m = split.project(tab.bracket_vec(split.m_basis[a], split.m_basis[b]))
            mbk[(a, b)] = m
            mbk[(b, a)] = spneg(m)
            hpart[(a, b)] = h
            hpart[(b, a)] = spneg(h)

    phi = []
    for i in range(3):
        mat = [[0] * d for _ in range(d)]
        for b in range(d):
            if hpart[(i, b)]:
                raise VerificationError("split-relations", "[k, m] has an h-component")
            col = mbk[(i, b)]
            factor = Fraction(1, 2) if b < 3 else 1
            for rpos, v in col.items():
                mat[rpos][b] = factor * v
        phi.append(mat)

    eta = [[gram[i][b] for b in range(d)] for i in range(3)]
    model = SasakiModel(split=split, n=n, dim=d, gram=gram, gram_inv=gram_inv,
                        gram_diagonal=diagonal, eta=eta, phi=phi, mbk=mbk, hpart=hpart)

    for i in range(3):
        for j in range(3):
            if gram[i][j] != int(i == j):
                raise VerificationError("gram-normalization", "g(xi_i, xi_j) != delta_ij")
            if eta[i][j] != int(i == j):
                raise VerificationError("gram-normalization", "eta_i(xi_j) != delta_ij")
    # eta_i = -B(X_i, .)/(4(n+2)) along all of m
    for i in range(3):
        for b in range(d):
            if eta[i][b] != scale_k * bm[i][b]:
                raise VerificationError("gram-normalization",
                                        f"eta_{i + 1} differs from -B(X_{i + 1}, .)/(4(n+2))")
    return model


@dataclass
class IdentityReport:
    lie_type: str
    checks: list

    def to_dict(self):
        return {"type": self.lie_type, "checks": [{"name": c, "status": "pass"} for c in self.checks]}


def verify_sasaki_identities(model: SasakiModel) -> IdentityReport:
    """All structure-tensor identities, exact, over every basis pair."""
    d = model.dim
    g = model.gram
    phi = model.phi
    eta = model.eta
    done = []

    def fail(name, detail):
        raise VerificationError(name, detail)

    for i, j, k in CYCLES:
        got = model.mbk[(i, j)]
        if got != {k: 2}:
            fail("sp1-commutators", f"[xi_{i + 1}, xi_{j + 1}]_m != 2 xi_{k + 1}")
    done.append("sp1-commutators")

    unit = eye(d)
    for i in range(3):
        lhs = matmul(phi[i], phi[i])
        rhs = mat_sub(outer([int(r == i) for r in range(d)], eta[i]), unit)
        if lhs != rhs:
            fail("phi-square", f"phi_{i + 1}^2 != -id + xi (x) eta")
    done.append("phi-square")

    for i in range(3):
        if any(phi[i][r][i] for r in range(d)):
            fail("phi-reeb", f"phi_{i + 1} xi_{i + 1} != 0")
        if any(vecmat(eta[i], phi[i])):
            fail("eta-phi", f"eta_{i + 1} o phi_{i + 1} != 0")
    done.append("phi-reeb")
    done.append("eta-phi")

    for i in range(3):
        gp = matmul(g, phi[i])
        if not is_zero_matrix(mat_sub(mat_scale(-1, gp), matmul(transpose(phi[i]), g))):
            fail("phi-skew", f"g(., phi_{i + 1} .) is not skew")
        lhs = matmul(transpose(phi[i]), gp)
        rhs = mat_sub(g, outer(eta[i], eta[i]))
        if lhs != rhs:
            fail("phi-metric", f"g(phi_{i + 1} x, phi_{i + 1} y) != g(x,y) - eta(x)eta(y)")
        # two-form convention: d eta(x, y) = -eta([x, y]_m) must equal 2 g(x, phi y)
        for a in range(d):
            for b in range(d):
                deta = -sum(eta[i][p] * v for p, v in model.mbk[(a, b)].items())
                if deta != 2 * gp[a][b]:
                    fail("deta-convention",
                         f"d eta_{i + 1}({a}, {b}) != 2 g(x, phi_{i + 1} y)")
    done.append("phi-skew")
    done.append("phi-metric")
    done.append("deta-convention")

    for i, j, k in CYCLES:
        comp = mat_sub(matmul(phi[i], phi[j]),
                       outer([int(r == i) for r in range(d)], eta[j]))
        if comp != phi[k]:
            fail("quaternionic-compat", f"phi_{i + 1} phi_{j + 1} - eta (x) xi != phi_{k + 1}")
        col = [phi[i][r][j] for r in range(d)]
        if col != [int(r == k) for r in range(d)]:
            fail("quaternionic-compat", f"phi_{i + 1} xi_{j + 1} != xi_{k + 1}")
        if vecmat(eta[i], phi[j]) != eta[k]:
            fail("quaternionic-compat", f"eta_{i + 1} o phi_{j + 1} != eta_{k + 1}")
    done.append("quaternionic-compat")

    return IdentityReport(lie_type=str(model.split.cf.rs.type), checks=done)


@dataclass
class NomizuTable:
    """Connection coefficients alpha(e_a, e_b) at the base point, m coordinates."""

    table: dict
    checks: list

    def apply(self, a: int, w: dict) -> dict:
        out: dict = {}
        for c, v in w.items():
            spaxpy(out, v, self.table[(a, c)])
        return out


def _case_formula(model: SasakiModel, a: int, b: int) -> dict:
    ak, bk = a < 3, b < 3
    if ak and not bk:
        return {}
    if ak == bk:
        return spscale(Fraction(1, 2), model.mbk[(a, b)])
    return dict(model.mbk[(a, b)])


def nomizu(model: SasakiModel) -> NomizuTable:
    """Solve the Koszul system for every basis pair and pin it against the
    three-case formula; also checks metric compatibility, the torsion
    identity, and the Reeb covariant derivative against -phi."""
    d = model.dim
    g = model.gram
    checks = []

    gm: dict = {}
    for (a, b), vec in model.mbk.items():
        if model.gram_diagonal:
            gm[(a, b)] = {k: g[k][k] * v for k, v in vec.items()}
        else:
            dense = [0] * d
            for k, v in vec.items():
                for r in range(d):
                    dense[r] += g[r][k] * v
            gm[(a, b)] = {r: x for r, x in enumerate(dense) if x}

    # r_z = g([a,b], z) - g([b,z], a) + g([z,a], b), assembled sparsely
    t2: dict = {}
    t3: dict = {}
    for (x, y), vec in gm.items():
        for idx, val in vec.items():
            t2.setdefault((x, idx), {})[y] = val   # z -> gm[(x, z)][idx]
            t3.setdefault((idx, y), {})[x] = val   # z -> gm[(z, y)][idx]

    table: dict = {}
    for a in range(d):
        for b in range(d):
            r = dict(gm[(a, b)])
            for z, val in t2.get((b, a), {}).items():
                w = r.get(z, 0) - val
                if w:
                    r[z] = w
                elif z in r:
                    del r[z]
            for z, val in t3.get((b, a), {}).items():
                w = r.get(z, 0) + val
                if w:
                    r[z] = w
                elif z in r:
                    del r[z]
            if model.gram_diagonal:
                sol = {z: v / (2 * g[z][z]) for z, v in r.items()}
            else:
                dense = [0] * d
                for z, v in r.items():
                    dense[z] = v
                col = matvec(model.gram_inv, dense)
                sol = {z: Fraction(v, 2) for z, v in enumerate(col) if v}
            sol = {z: v for z, v in sol.items() if v}
            case = _case_formula(model, a, b)
            if sol != case:
                raise VerificationError("nomizu-case-formula",
                                        f"Koszul solution differs from the case value at pair ({a}, {b})")
            table[(a, b)] = sol
    checks.append("nomizu-case-formula")

    ga: dict = {}
    for (a, b), vec in table.items():
        if model.gram_diagonal:
            ga[(a, b)] = {k: g[k][k] * v for k, v in vec.items()}
        else:
            dense = [0] * d
            for k, v in vec.items():
                for r2 in range(d):
                    dense[r2] += g[r2][k] * v
            ga[(a, b)] = {r2: x for r2, x in enumerate(dense) if x}
    # every nonzero of g(alpha(a,b), c) is visited from one side or the other
    for (a, b), row in ga.items():
        for c, v in row.items():
            if v + ga[(a, c)].get(b, 0) != 0:
                raise VerificationError("nomizu-compat",
                                        f"metric compatibility fails at ({a}, {b}, {c})")
    checks.append("nomizu-compat")

    for a in range(d):
        if table[(a, a)]:
            raise VerificationError("nomizu-torsion", f"alpha(x, x) != 0 at {a}")
        for b in range(a + 1, d):
            dif: dict = dict(table[(a, b)])
            spaxpy(dif, -1, table[(b, a)])
            if dif != model.mbk[(a, b)]:
                raise VerificationError("nomizu-torsion",
                                        f"alpha(x,y) - alpha(y,x) != [x,y]_m at ({a}, {b})")
    checks.append("nomizu-torsion")

    # covariant derivative of the Reeb fields: alpha(., X_i) = -phi_i
    for i in range(3):
        for a in range(d):
            want = {r: -model.phi[i][r][a] for r in range(d) if model.phi[i][r][a]}
            if table[(a, i)] != want:
                raise VerificationError("reeb-derivative",
                                        f"alpha(e_{a}, xi_{i + 1}) != -phi_{i + 1}(e_{a})")
    checks.append("reeb-derivative")

    return NomizuTable(table=table, checks=checks)


@dataclass
class CurvatureReport:
    lie_type: str
    mode: str
    seed: int | None
    tuples_checked: int
    einstein_constant: int
    checks: list

    def to_dict(self):
        return {"type": self.lie_type, "mode": self.mode, "seed": self.seed,
                "tuples_checked": self.tuples_checked,
                "einstein_constant": self.einstein_constant,
                "checks": [{"name": c, "status": "pass"} for c in self.checks]}


class _Curvature:
    """R(x,y)z = a(x,a(y,z)) - a(y,a(x,z)) - a([x,y]_m, z) - [[x,y]_h, z]."""

    def __init__(self, model: SasakiModel, nt: NomizuTable):
        self.model = model
        self.nt = nt
        self.split = model.split
        self._adm: dict = {}

    def _adm_col(self, w: int, b: int) -> dict:
        got = self._adm.get((w, b))
        if got is None:
            tab = self.split.cf.table
            h, m = self.split.project(tab.bracket_vec({w: 1}, self.split.m_basis[b]))
            if h:
                raise VerificationError("curvature", "[h, m] has an h-component")
            got = m
            self._adm[(w, b)] = got
        return got

    def r_vec(self, a: int, b: int, c: int) -> dict:
        nt, model = self.nt, self.model
        out = nt.apply(a, nt.table[(b, c)])
        spaxpy(out, -1, nt.apply(b, nt.table[(a, c)]))
        for u, v in model.mbk[(a, b)].items():
            spaxpy(out, -v, nt.table[(u, c)])
        for w, v in model.hpart[(a, b)].items():
            spaxpy(out, -v, self._adm_col(w, c))
        return out

    def ric_entry(self, a: int, b: int):
        tab = self.nt.table
        model = self.model
        total = 0
        for c in range(model.dim):
            acc = 0
            for u, v in tab[(a, b)].items():
                acc += v * tab[(c, u)].get(c, 0)
            for u, v in tab[(c, b)].items():
                acc -= v * tab[(a, u)].get(c, 0)
            for u, v in model.mbk[(c, a)].items():
                acc -= v * tab[(u, b)].get(c, 0)
            for w, v in model.hpart[(c, a)].items():
                acc -= v * self._adm_col(w, b).get(c, 0)
            total += acc
        return total


def curvature_checks(model: SasakiModel, nt: NomizuTable, mode: str = "full",
                     seed: int = 0, def21_samples: int = 9000,
                     einstein_samples: int = 1200) -> CurvatureReport:
    """Reeb curvature condition and the Einstein equation Ric = 2(2n+1) g.

    In full mode every index tuple is evaluated; in sampled mode a
    deterministic pseudo-random subset (seed recorded in the report).
    """
    if mode not in ("full", "sampled"):
        raise ValueError(f"unknown curvature mode {mode!r}")
    d = model.dim
    cur = _Curvature(model, nt)
    const = 2 * (2 * model.n + 1)
    checks = []

    def check_def21(i: int, a: int, b: int) -> None:
        got = cur.r_vec(a, i, b)
        want: dict = {}
        if model.eta[i][b]:
            want[a] = want.get(a, 0) + model.eta[i][b]
        gab = model.gram[a][b]
        if gab:
            want[i] = want.get(i, 0) - gab
        want = {k: v for k, v in want.items() if v}
        if got != want:
            spaxpy(got, -1, want)
            witness = {k: str(v) for k, v in got.items()}
            raise VerificationError("curvature-reeb-condition",
                                    f"R(e_{a}, xi_{i + 1}) e_{b} residual {witness}")

    def check_einstein(a: int, b: int) -> None:
        got = cur.ric_entry(a, b)
        want = const * model.gram[a][b]
        if got != want:
            raise VerificationError("einstein",
                                    f"Ric({a}, {b}) = {got} != {want}")

    if mode == "full":
        count = 0
        for i in range(3):
            for a in range(d):
                for b in range(d):
                    check_def21(i, a, b)
                    count += 1
        for a in range(d):
            for b in range(a, d):
                check_einstein(a, b)
                count += 1
        return CurvatureReport(lie_type=str(model.split.cf.rs.type), mode="full",
                               seed=None, tuples_checked=count,
                               einstein_constant=const, checks=["curvature-reeb-condition",
                                                                "einstein"])

    rng = random.Random(seed)
    for _ in range(def21_samples):
        check_def21(rng.randrange(3), rng.randrange(d), rng.randrange(d))
    for _ in range(einstein_samples):
        check_einstein(rng.randrange(d), rng.randrange(d))
    return CurvatureReport(lie_type=str(model.split.cf.rs.type), mode="sampled",
                           seed=seed, tuples_checked=def21_samples + einstein_samples,
                           einstein_constant=const,
                           checks=["curvature-reeb-condition", "einstein"])
