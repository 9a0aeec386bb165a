"""Z-grading by a maximal root and the complex datum (v, s_alpha, W).

Everything here happens in the rational Chevalley algebra. The grading blocks
are the eigenspaces of ad(H_alpha); v is the centralizer ker(alpha) plus the
root spaces perpendicular to alpha; the module checks certify that u_1 is a
copy of C^2 tensor W over the even part.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chevalley import ChevalleyBasis, coroot_element
from .errors import NotMaximalError, VerificationError
from .linalg import kernel_of_functional, rank, spaxpy
from .roots import Root, cartan_number, is_maximal


@dataclass
class Grading:
    alpha: Root
    blocks: dict[int, tuple[Root, ...]]
    dims: dict[int, int]  # complex dimensions; block 0 includes the Cartan


def z_grading(cb: ChevalleyBasis, alpha: Root) -> Grading:
    """Grade the algebra by Cartan pairing against a maximal root.

    Verifies that ad(H_alpha) acts on every root space as multiplication by
    the grading integer.
    """
    rs = cb.rs
    alpha = tuple(alpha)
    if not is_maximal(rs, alpha):
        raise NotMaximalError(
            f"{alpha} is not maximal in {rs.type}: some |c| exceeds 2 or |c| = 2 off +-alpha")
    blocks: dict[int, list[Root]] = {k: [] for k in range(-2, 3)}
    for beta in rs.roots:
        blocks[cartan_number(rs, alpha, beta)].append(beta)
    halpha = coroot_element(cb, alpha)
    for k, roots in blocks.items():
        for beta in roots:
            got = cb.table.bracket_vec(halpha, {cb.e_index(beta): 1})
            if got != ({cb.e_index(beta): k} if k else {}):
                raise VerificationError("grading-eigenspace",
                                        f"ad(H_alpha) is not {k}*id on root space {beta}")
    dims = {k: len(v) + (rs.rank if k == 0 else 0) for k, v in blocks.items()}
    return Grading(alpha=alpha, blocks={k: tuple(v) for k, v in blocks.items()}, dims=dims)


@dataclass
class ComplexDatum:
    cb: ChevalleyBasis
    grading: Grading
    alpha: Root
    phi0: tuple[Root, ...]
    v_cartan: list[dict]        # integer kernel vectors over the H_j coordinates
    u1_plus: tuple[Root, ...]   # roots with c = +1
    u1_minus: tuple[Root, ...]
    n: int
    alpha_pairings: tuple[int, ...] = field(default=(), repr=False)

    @property
    def dim_v(self) -> int:
        return (self.cb.rank - 1) + len(self.phi0)

    @property
    def dim_m(self) -> int:
        return 4 * self.n + 3

    def v_basis_vectors(self) -> list[dict]:
        vecs = [dict(v) for v in self.v_cartan]
        vecs += [{self.cb.e_index(b): 1} for b in self.phi0]
        return vecs

    def s_alpha_vectors(self) -> list[dict]:
        x = {self.cb.e_index(self.alpha): 1}
        y = {self.cb.e_index(tuple(-a for a in self.alpha)): 1}
        h = coroot_element(self.cb, self.alpha)
        return [x, y, h]

    def alpha_of_cartan(self, hvec: dict):
        """Value of the root alpha on a Cartan vector sum x_j H_j."""
        return sum(v * self.alpha_pairings[j] for j, v in hvec.items())


def build_complex_datum(cb: ChevalleyBasis, alpha: Root) -> ComplexDatum:
    """Assemble v, s_alpha and the odd part; all closure relations verified."""
    rs = cb.rs
    grading = z_grading(cb, alpha)
    phi0 = grading.blocks[0]
    u1_plus, u1_minus = grading.blocks[1], grading.blocks[-1]
    if grading.dims[2] != 1 or grading.dims[-2] != 1:
        raise VerificationError("grading-top", f"dim of the +-2 blocks is not 1 for {rs.type}")

    # alpha(H_j) for each simple coroot
    pairings = tuple(sum(rs.cartan[j][k] * alpha[k] for k in range(rs.rank))
                     for j in range(rs.rank))
    v_cartan = [{j: x for j, x in enumerate(v) if x}
                for v in kernel_of_functional(list(pairings))] if rs.rank > 1 else []

    d = ComplexDatum(cb=cb, grading=grading, alpha=tuple(alpha), phi0=phi0,
                     v_cartan=v_cartan, u1_plus=u1_plus, u1_minus=u1_minus,
                     n=0, alpha_pairings=pairings)

    if len(u1_plus) != len(u1_minus):
        raise VerificationError("datum-dims", "odd blocks have unequal dimensions")
    if len(u1_plus) % 2 != 0:
        # n is defined through dim M = 4n + 3; this requires the odd block even
        raise VerificationError("datum-dims",
                                f"dim u^(1) = {len(u1_plus)} is odd for {rs.type}")
    d.n = len(u1_plus) // 2

    _check_v_subalgebra(d)
    _check_v_commutes_with_s_alpha(d)

    # dimension bookkeeping: u_0 = v + s_alpha and dim M = 4n + 3 both ways
    if grading.dims[0] + 2 != d.dim_v + 3:
        raise VerificationError("datum-dims", "u_0 is not v + s_alpha by dimension count")
    dim_g = rs.dim_algebra
    if dim_g - d.dim_v != d.dim_m:
        raise VerificationError("datum-dims",
                                f"dim g - dim h = {dim_g - d.dim_v} != 4n+3 = {d.dim_m}")
    return d


def _check_v_subalgebra(d: ComplexDatum) -> None:
    cb, rs = d.cb, d.cb.rs
    phi0set = set(d.phi0)
    # Cartan pieces bracket to zero; [ker, e_gamma] stays in the gamma line
    for gamma in d.phi0:
        for hv in d.v_cartan:
            got = cb.table.bracket_vec(hv, {cb.e_index(gamma): 1})
            extra = {k for k in got if k != cb.e_index(gamma)}
            if extra:
                raise VerificationError("v-subalgebra", f"[ker alpha, u_{gamma}] escapes")
    for i, beta in enumerate(d.phi0):
        for gamma in d.phi0[i:]:
            s = tuple(a + b for a, b in zip(beta, gamma))
            if all(x == 0 for x in s):
                hvec = cb.coroot_vec(beta)
                if d.alpha_of_cartan(hvec) != 0:
                    raise VerificationError("v-subalgebra",
                                            f"H_{beta} is not in ker alpha")
            elif rs.is_root(s) and s not in phi0set:
                raise VerificationError("v-subalgebra",
                                        f"[u_{beta}, u_{gamma}] lands outside Phi_0")


def _check_v_commutes_with_s_alpha(d: ComplexDatum) -> None:
    cb = d.cb
    svecs = d.s_alpha_vectors()
    for v in d.v_basis_vectors():
        for s in svecs:
            got = cb.table.bracket_vec(v, s)
            if got:
                raise VerificationError("v-sp-commute",
                                        f"[v, s_alpha] != 0 at {v} x {s}")


@dataclass
class ModuleIsoReport:
    lie_type: str
    dim_w: int
    bijective_rank: int
    equivariance_checks: int
    passed: bool

    def to_dict(self):
        return {"type": self.lie_type, "dim_W": self.dim_w,
                "ad_Xalpha_rank": self.bijective_rank,
                "equivariance_checks": self.equivariance_checks,
                "passed": self.passed}


def verify_module_iso(d: ComplexDatum) -> ModuleIsoReport:
    """Certify u_1 = C^2 (x) W as modules over v + s_alpha.

    Checks (a) ad(X_alpha) maps every c = -1 root space onto its partner
    (exact rank over the rationals), (b) equivariance of the pairing map for
    the X, Y, H generators on every basis vector of u_1, (c) the same for a
    basis of v.
    """
    cb = d.cb
    alpha = d.alpha
    widx = {b: i for i, b in enumerate(d.u1_plus)}
    dim_w = len(d.u1_plus)

    # (a) matrix of ad(X_alpha): u^(-1) -> u^(1) over the root-vector bases
    xvec = {cb.e_index(alpha): 1}
    rows = []
    for beta in d.u1_minus:
        img = cb.table.bracket_vec(xvec, {cb.e_index(beta): 1})
        row = [0] * dim_w
        for k, v in img.items():
            target = cb.rs.roots[k - cb.rank]
            row[widx[target]] = v
        rows.append(row)
    rk = rank(rows) if rows else 0
    if rk != dim_w:
        raise VerificationError("module-iso",
                                f"ad(X_alpha) has rank {rk} < {dim_w} on the odd block")

    def to_w(vec: dict) -> dict:
        out = {}
        for k, v in vec.items():
            root = cb.rs.roots[k - cb.rank]
            out[widx[root]] = v
        return out

    def psi(vec: dict) -> tuple[dict, dict]:
        """Split a u_1 vector into (W-part of u^(1), W-part of [X_alpha, u^(-1)])."""
        plus, minus = {}, {}
        for k, v in vec.items():
            root = cb.rs.roots[k - cb.rank]
            (plus if root in widx else minus)[k] = v
        return to_w(plus), to_w(cb.table.bracket_vec(xvec, minus))

    u1_all = list(d.u1_plus) + list(d.u1_minus)
    yvec = {cb.e_index(tuple(-a for a in alpha)): 1}
    hvec = coroot_element(cb, alpha)

    def w_action(zvec: dict, w: dict) -> dict:
        out: dict = {}
        for i, c in w.items():
            img = cb.table.bracket_vec(zvec, {cb.e_index(d.u1_plus[i]): 1})
            spaxpy(out, c, to_w(img))
        return out

    checks = 0
    generators = [("X", xvec), ("Y", yvec), ("H", hvec)] + \
                 [("v", v) for v in d.v_basis_vectors()]
    for beta in u1_all:
        evec = {cb.e_index(beta): 1}
        p1, p2 = psi(evec)
        for name, zvec in generators:
            lhs = psi(cb.table.bracket_vec(zvec, evec))
            if name == "X":
                rhs = (p2, {})
            elif name == "Y":
                rhs = ({}, p1)
            elif name == "H":
                rhs = (p1, {k: -v for k, v in p2.items()})
            else:
                rhs = (w_action(zvec, p1), w_action(zvec, p2))
            if lhs != rhs:
                raise VerificationError("module-iso",
                                        f"equivariance fails for generator {name} at root {beta}")
            checks += 1
    return ModuleIsoReport(lie_type=str(cb.rs.type), dim_w=dim_w,
                           bijective_rank=rk, equivariance_checks=checks, passed=True)


@dataclass
class ShortRootProbe:
    witnesses: dict
    maximal_long: int
    maximal_total: int

    def to_dict(self):
        return {"witnesses": {str(k): str(v) for k, v in self.witnesses.items()},
                "maximal_long_roots": self.maximal_long,
                "maximal_roots_total": self.maximal_total}


def g2_short_root_probe(cb: ChevalleyBasis) -> ShortRootProbe:
    """For G2: every short root admits |c| = 3 and fails maximality; all six
    long roots pass."""
    rs = cb.rs
    if str(rs.type) != "G2":
        raise ValueError("the short-root probe applies to G2 only")
    witnesses = {}
    maximal = []
    for sigma in rs.roots:
        short = rs.norm2(sigma) < 2
        if short:
            wit = next((beta for beta in rs.roots
                        if abs(cartan_number(rs, sigma, beta)) == 3), None)
            if wit is None or is_maximal(rs, sigma):
                raise VerificationError("g2-probe",
                                        f"short root {sigma} lacks a |c| = 3 witness")
            witnesses[sigma] = wit
        else:
            if not is_maximal(rs, sigma):
                raise VerificationError("g2-probe", f"long root {sigma} is not maximal")
            maximal.append(sigma)
    if len(maximal) != 6 or len(witnesses) != 6:
        raise VerificationError("g2-probe", "expected exactly six long and six short roots")
    return ShortRootProbe(witnesses=witnesses, maximal_long=len(maximal),
                          maximal_total=len(maximal))
