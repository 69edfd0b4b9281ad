"""Clifford homomorphisms between explicit U(m) modules.

Given a matrix model of the module labelled rho, the tensor space with the
natural module (sign +) or its conjugate (sign -) splits into the shifted
modules labelled rho +- mu_i.  The splitting is computed by exact spectral
projection: the operator

    Chat = 2 sum_{kl} pi_rho(e_{kl}) (x) pi_aux(e_{lk})

acts as the constant -2 w_{+-i} on the component labelled rho +- mu_i, the
predicted constants are pairwise distinct, and Lagrange interpolation gives
the projectors without ever leaving Q.  The construction doubles as a proof
that the predicted spectrum is right: spectral completeness and the rank of
every projector against the Weyl dimension are checked during the build.

The maps p_{+i}(eps_k) (resp. p_{-i}(eps_bar_k)) are the compositions
phi |-> projection of (phi (x) basis vector k), written in a basis of the
projector image obtained from its pivot columns, orthogonalized against the
tensor Gram form so the induced Gram form stays diagonal.  No phase choices
are made; every verified identity below is phase independent (it involves
p* p, p p*, or solved intertwiners), which is exactly the content that
survives the unit-scalar ambiguity of the splitting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .linalg import Matrix, gram_adjoint, lagrange_projector
from .report import VerificationReport
from .weights import (
    ConformalWeightTable,
    HighestWeight,
    conformal_table,
    shift,
    weyl_dimension,
)
from .envalg import k_of_casimirs
from .gtrep import Representation, e_power_matrix

__all__ = [
    "TargetData",
    "CliffordSystem",
    "build_system",
    "derived_representation",
    "verify_relations",
    "verify_cross_relations",
    "verify_adjoint_pairing",
    "verify_equivariance",
    "verify_spinor_model",
]


@dataclass
class TargetData:
    index: int                    # i with 1 <= i <= m
    weight: HighestWeight
    dim: int
    basis: Matrix                 # N x dim, columns orthogonal for the tensor form
    gram: Matrix                  # diagonal dim x dim, induced squared norms
    coords: Matrix                # dim x N coordinate map (left inverse of basis)
    pmaps: List[Matrix]           # entry k-1: dim x n matrix of the k-th map


@dataclass
class CliffordSystem:
    rep: Representation
    sign: str
    table: ConformalWeightTable
    chat: Matrix
    eigenvalues: List[Fraction]
    projectors: List[Matrix]
    targets: List[Optional[TargetData]]
    tensor_gen: Dict[Tuple[int, int], Matrix]
    _pp_cache: dict = field(default_factory=dict, repr=False)

    @property
    def m(self) -> int:
        return self.rep.m

    def p_map(self, i: int, k: int) -> Matrix:
        t = self.targets[i - 1]
        if t is None:
            raise ValueError(f"no component at i={i} (shift not dominant)")
        return t.pmaps[k - 1]

    def p_star_p(self, i: int, k: int, l: int) -> Matrix:
        """p_i(basis_k)^* p_i(basis_l) on the source module; zero matrix when
        the component vanishes."""
        key = (i, k, l)
        cached = self._pp_cache.get(key)
        if cached is not None:
            return cached
        t = self.targets[i - 1]
        n = self.rep.dim
        if t is None:
            out = Matrix.zeros(n, n)
        else:
            pk_star = gram_adjoint(t.pmaps[k - 1], self.rep.gram, t.gram)
            out = pk_star * t.pmaps[l - 1]
        self._pp_cache[key] = out
        return out


def _aux_generator(m: int, sign: str, k: int, l: int) -> Matrix:
    """Action of e_{kl} on the auxiliary module: the natural one for sign +,
    its contragredient (X |-> -X^T on the conjugate basis) for sign -."""
    out = Matrix.zeros(m, m)
    if sign == "+":
        out.data[k - 1][l - 1] = Fraction(1)
    else:
        out.data[l - 1][k - 1] = Fraction(-1)
    return out


def _embed_column(m: int, k: int, n: int) -> Matrix:
    """Matrix of phi |-> phi (x) basis_k, with tensor index a*m + (k-1)."""
    out = Matrix.zeros(n * m, n)
    for a in range(n):
        out.data[a * m + (k - 1)][a] = Fraction(1)
    return out


def build_system(rep: Representation, sign: str) -> CliffordSystem:
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    m, n = rep.m, rep.dim
    N = n * m
    table = conformal_table(rep.rho, sign)

    ident_n = Matrix.identity(n)
    ident_m = Matrix.identity(m)
    tensor_gen: Dict[Tuple[int, int], Matrix] = {}
    for k in range(1, m + 1):
        for l in range(1, m + 1):
            tensor_gen[(k, l)] = rep.gen[(k, l)].kron(ident_m) + ident_n.kron(
                _aux_generator(m, sign, k, l)
            )

    chat = Matrix.zeros(N, N)
    for k in range(1, m + 1):
        for l in range(1, m + 1):
            chat = chat + rep.gen[(k, l)].kron(_aux_generator(m, sign, l, k)).scale(2)

    eigenvalues = [Fraction(-2 * w) for w in table.w]
    projectors = [lagrange_projector(chat, eigenvalues, t) for t in range(m)]

    total = Matrix.zeros(N, N)
    for p in projectors:
        total = total + p
    if total != Matrix.identity(N):
        raise AssertionError("projectors do not resolve the identity")

    # tensor Gram form: source form on the module factor, unit form on the
    # auxiliary factor (both bases are unitary)
    source_diag = rep.gram.diagonal_entries()
    tensor_diag = [source_diag[a] for a in range(n) for _ in range(m)]

    targets: List[Optional[TargetData]] = []
    for i in range(1, m + 1):
        shifted = shift(rep.rho, sign, i)
        proj = projectors[i - 1]
        if shifted is None:
            if not proj.is_zero():
                raise AssertionError(
                    f"projector at invalid shift i={i} is nonzero (rank "
                    f"{proj.rank()}, expected 0)"
                )
            targets.append(None)
            continue
        expected_dim = weyl_dimension(shifted)
        _, pivots = proj.rref()
        if len(pivots) != expected_dim:
            raise AssertionError(
                f"projector rank {len(pivots)} != Weyl dimension {expected_dim} "
                f"at i={i} for {rep.rho} sign {sign}"
            )
        # orthogonalize the pivot columns against the tensor form
        ortho: List[list] = []
        norms: List[Fraction] = []
        for c in pivots:
            v = proj.column(c)
            for u, nu in zip(ortho, norms):
                coeff = sum(
                    tensor_diag[a] * u[a] * v[a] for a in range(N) if u[a] and v[a]
                ) / nu
                if coeff:
                    v = [x - coeff * y for x, y in zip(v, u)]
            nv = sum(tensor_diag[a] * x * x for a, x in enumerate(v) if x)
            if nv <= 0:
                raise AssertionError("pivot columns not independent")
            ortho.append(v)
            norms.append(nv)
        d = len(ortho)
        basis = Matrix([[ortho[r][a] for r in range(d)] for a in range(N)])
        coords = Matrix(
            [
                [ortho[r][a] * tensor_diag[a] / norms[r] for a in range(N)]
                for r in range(d)
            ]
        )
        pmaps = []
        for k in range(1, m + 1):
            pk = Matrix(
                [[coords.data[r][a * m + (k - 1)] for a in range(n)] for r in range(d)]
            )
            pmaps.append(pk)
        targets.append(
            TargetData(
                index=i,
                weight=shifted,
                dim=d,
                basis=basis,
                gram=Matrix.diagonal(norms),
                coords=coords,
                pmaps=pmaps,
            )
        )

    return CliffordSystem(
        rep=rep,
        sign=sign,
        table=table,
        chat=chat,
        eigenvalues=eigenvalues,
        projectors=projectors,
        targets=targets,
        tensor_gen=tensor_gen,
    )


def target_generator(sys: CliffordSystem, i: int, k: int, l: int) -> Matrix:
    """Action of e_{kl} on the component at i, in the component basis."""
    t = sys.targets[i - 1]
    if t is None:
        raise ValueError(f"no component at i={i}")
    return t.coords * sys.tensor_gen[(k, l)] * t.basis


def derived_representation(sys: CliffordSystem, i: int, validate: bool = False) -> Representation:
    """The component at i packaged as a standalone matrix model, so that a
    further system can be built on top of it with consistent bases."""
    t = sys.targets[i - 1]
    if t is None:
        raise ValueError(f"no component at i={i}")
    gen = {
        (k, l): target_generator(sys, i, k, l)
        for k in range(1, sys.m + 1)
        for l in range(1, sys.m + 1)
    }
    rep = Representation(rho=t.weight, dim=t.dim, basis=None, gen=gen, gram=t.gram)
    if validate:
        rep.check_invariants()
    return rep


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _elementary_symmetric(values: List[Fraction], j: int) -> Fraction:
    e = [Fraction(1)] + [Fraction(0)] * len(values)
    for v in values:
        for deg in range(len(values), 0, -1):
            e[deg] += v * e[deg - 1]
    return e[j]


def _diff_witness(diff: Matrix) -> str:
    return f"{diff.nonzero_count()} nonzero entries in difference"


def verify_relations(
    sys: CliffordSystem,
    q_max: int,
    paired: Optional[CliffordSystem] = None,
    cross_q_max: Optional[int] = None,
) -> VerificationReport:
    """Exact matrix checks of the algebraic identities satisfied by one
    system: completeness, the degree-q trace identities against the
    enveloping-algebra elements, the Vandermonde-solved form, the gamma
    trace constants, the target-side completeness, the projection formula,
    and (given the opposite-sign system) the cross-sign relations.
    """
    rep_ = sys.rep
    m, n = sys.m, rep_.dim
    rho = rep_.rho
    report = VerificationReport()
    base = {"rho": str(rho), "sign": sys.sign}
    ws = sys.table.w
    gammas = sys.table.gamma
    ident = Matrix.identity(n)

    for i in range(1, m + 1):
        proj = sys.projectors[i - 1]
        report.check("projector-idempotent", {**base, "i": i},
                     proj * proj == proj)
        expected = weyl_dimension(shift(rho, sys.sign, i)) if sys.table.valid[i - 1] else 0
        report.check("projector-rank", {**base, "i": i, "expected": expected},
                     proj.rank() == expected)
        for j in range(i + 1, m + 1):
            prod = proj * sys.projectors[j - 1]
            report.check("projector-orthogonal", {**base, "i": i, "j": j},
                         prod.is_zero(), witness=_diff_witness(prod))

    variant = "tilde" if sys.sign == "+" else "plain"
    # degrees up to m-1 are also needed by the Vandermonde-solved form
    powers = {q: e_power_matrix(rep_, q, variant)
              for q in range(max(q_max, m - 1) + 1)}

    for q in range(q_max + 1):
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                acc = Matrix.zeros(n, n)
                for i in range(1, m + 1):
                    if sys.targets[i - 1] is None:
                        continue
                    wq = Fraction(ws[i - 1]) ** q if q else Fraction(1)
                    acc = acc + sys.p_star_p(i, k, l).scale(wq)
                diff = acc - powers[q][(k, l)]
                tag = "completeness" if q == 0 else "moment-identity"
                report.check(tag, {**base, "q": q, "k": k, "l": l},
                             diff.is_zero(), witness=_diff_witness(diff))

    # intertwining: the maps shuffle the source action into the weight factor
    for i in range(1, m + 1):
        t = sys.targets[i - 1]
        if t is None:
            continue
        for k in range(1, m + 1):
            lhs = t.pmaps[k - 1].scale(Fraction(ws[i - 1]))
            rhs = Matrix.zeros(t.dim, n)
            for l in range(1, m + 1):
                if sys.sign == "+":
                    rhs = rhs - t.pmaps[l - 1] * rep_.gen[(k, l)]
                else:
                    rhs = rhs + t.pmaps[l - 1] * rep_.gen[(l, k)]
            diff = lhs - rhs
            report.check("intertwining", {**base, "i": i, "k": k},
                         diff.is_zero(), witness=_diff_witness(diff))

    # Vandermonde-solved form: p_i^* p_i as a combination of degrees < m
    wlist = [Fraction(w) for w in ws]
    for i in range(1, m + 1):
        if sys.targets[i - 1] is None:
            continue
        others = [w for j, w in enumerate(wlist) if j != i - 1]
        denom = Fraction(1)
        for w in others:
            denom *= wlist[i - 1] - w
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                acc = Matrix.zeros(n, n)
                for j in range(1, m + 1):
                    coeff = (Fraction(-1) ** (m - j)) * _elementary_symmetric(
                        others, m - j
                    ) / denom
                    if coeff:
                        acc = acc + powers[j - 1][(k, l)].scale(coeff)
                diff = sys.p_star_p(i, k, l) - acc
                report.check("vandermonde-solved", {**base, "i": i, "k": k, "l": l},
                             diff.is_zero(), witness=_diff_witness(diff))

    # trace constants
    for i in range(1, m + 1):
        acc = Matrix.zeros(n, n)
        for k in range(1, m + 1):
            acc = acc + sys.p_star_p(i, k, k)
        diff = acc - ident.scale(gammas[i - 1])
        report.check("gamma-trace", {**base, "i": i, "gamma": gammas[i - 1]},
                     diff.is_zero(), witness=_diff_witness(diff))

    # completeness on each component
    for i in range(1, m + 1):
        t = sys.targets[i - 1]
        if t is None:
            report.skip("target-completeness", {**base, "i": i}, "component vanishes")
            continue
        acc = Matrix.zeros(t.dim, t.dim)
        for k in range(1, m + 1):
            pk = t.pmaps[k - 1]
            acc = acc + pk * gram_adjoint(pk, rep_.gram, t.gram)
        diff = acc - Matrix.identity(t.dim)
        report.check("target-completeness", {**base, "i": i},
                     diff.is_zero(), witness=_diff_witness(diff))

    # projection formula on the tensor space
    for i in range(1, m + 1):
        if sys.targets[i - 1] is None:
            continue
        proj = sys.projectors[i - 1]
        for l in range(1, m + 1):
            lhs = proj * _embed_column(m, l, n)
            rhs = Matrix.zeros(n * m, n)
            for k in range(1, m + 1):
                rhs = rhs + _embed_column(m, k, n) * sys.p_star_p(i, k, l)
            diff = lhs - rhs
            report.check("projection-formula", {**base, "i": i, "l": l},
                         diff.is_zero(), witness=_diff_witness(diff))

    if paired is not None:
        plus = sys if sys.sign == "+" else paired
        minus = sys if sys.sign == "-" else paired
        if plus.sign != "+" or minus.sign != "-" or plus.rep is not minus.rep:
            raise ValueError("paired systems must have opposite signs on one module")
        report.extend(
            verify_cross_relations(
                plus, minus, q_max if cross_q_max is None else cross_q_max
            )
        )

    return report


def verify_cross_relations(
    plus: CliffordSystem, minus: CliffordSystem, q_max: int
) -> VerificationReport:
    """Cross-sign relations: each shifted binomial power of one family is a
    Casimir-weighted combination of the other, with swapped basis indices.
    Also reports the rank of the emitted relation family over the 2m symbol
    slots (the family is linearly dependent beyond the component count)."""
    rep_ = plus.rep
    m, n = plus.m, rep_.dim
    rho = rep_.rho
    report = VerificationReport()
    base = {"rho": str(rho)}
    wp = [Fraction(w) for w in plus.table.w]
    wm = [Fraction(w) for w in minus.table.w]

    kc = {qq: k_of_casimirs(qq, rho, "plain") for qq in range(q_max + 1)}
    kct = {qq: k_of_casimirs(qq, rho, "tilde") for qq in range(q_max + 1)}

    rows = []
    for q in range(q_max + 1):
        sgn = Fraction(-1) ** q
        # plus side shifted by -m against the minus family
        coeff_plus = [(wp[i] - m) ** q if q else Fraction(1) for i in range(m)]
        coeff_minus = [
            sgn * sum(kc[q - p] * (wm[i] ** p if p else 1) for p in range(q + 1))
            for i in range(m)
        ]
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                lhs = Matrix.zeros(n, n)
                for i in range(1, m + 1):
                    lhs = lhs + plus.p_star_p(i, k, l).scale(coeff_plus[i - 1])
                rhs = Matrix.zeros(n, n)
                for i in range(1, m + 1):
                    rhs = rhs + minus.p_star_p(i, l, k).scale(coeff_minus[i - 1])
                diff = lhs - rhs
                report.check("cross-sign-plus", {**base, "q": q, "k": k, "l": l},
                             diff.is_zero(), witness=_diff_witness(diff))
        rows.append(coeff_plus + [-c for c in coeff_minus])

        # minus side shifted by -m against the plus family
        coeff_minus2 = [(wm[i] - m) ** q if q else Fraction(1) for i in range(m)]
        coeff_plus2 = [
            sgn * sum(kct[q - p] * (wp[i] ** p if p else 1) for p in range(q + 1))
            for i in range(m)
        ]
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                lhs = Matrix.zeros(n, n)
                for i in range(1, m + 1):
                    lhs = lhs + minus.p_star_p(i, k, l).scale(coeff_minus2[i - 1])
                rhs = Matrix.zeros(n, n)
                for i in range(1, m + 1):
                    rhs = rhs + plus.p_star_p(i, l, k).scale(coeff_plus2[i - 1])
                diff = lhs - rhs
                report.check("cross-sign-minus", {**base, "q": q, "k": k, "l": l},
                             diff.is_zero(), witness=_diff_witness(diff))
        rows.append([-c for c in coeff_plus2] + coeff_minus2)

    valid_cols = [i for i in range(m) if plus.table.valid[i]] + [
        m + i for i in range(m) if minus.table.valid[i]
    ]
    restricted = Matrix([[row[c] for c in valid_cols] for row in rows])
    report.check(
        "cross-sign-rank",
        {**base, "relations": len(rows), "symbols": len(valid_cols),
         "rank": restricted.rank()},
        True,
    )
    return report


def verify_equivariance(sys: CliffordSystem) -> VerificationReport:
    """Infinitesimal equivariance: commuting a generator past a map costs
    exactly the action on the auxiliary vector."""
    rep_ = sys.rep
    m = sys.m
    report = VerificationReport()
    base = {"rho": str(rep_.rho), "sign": sys.sign}
    for i in range(1, m + 1):
        t = sys.targets[i - 1]
        if t is None:
            continue
        tg = {(s, u): target_generator(sys, i, s, u)
              for s in range(1, m + 1) for u in range(1, m + 1)}
        for s in range(1, m + 1):
            for u in range(1, m + 1):
                for k in range(1, m + 1):
                    lhs = tg[(s, u)] * t.pmaps[k - 1] - t.pmaps[k - 1] * rep_.gen[(s, u)]
                    rhs = Matrix.zeros(t.dim, rep_.dim)
                    if sys.sign == "+" and u == k:
                        rhs = t.pmaps[s - 1]
                    if sys.sign == "-" and s == k:
                        rhs = t.pmaps[u - 1].scale(-1)
                    diff = lhs - rhs
                    report.check(
                        "equivariance",
                        {**base, "i": i, "s": s, "u": u, "k": k},
                        diff.is_zero(), witness=_diff_witness(diff),
                    )
    return report


def verify_adjoint_pairing(
    sys_plus: CliffordSystem, sys_minus_on_target: CliffordSystem, i: int
) -> VerificationReport:
    """Phase-free comparison of the two maps between a module and its raised
    neighbour.

    With P_k the raising maps of ``sys_plus`` at i and M_k the lowering maps
    of the minus system built on the raised module (whose source basis must
    be the raised component of ``sys_plus``), a single intertwiner T with
    M_k = T P_k^* for every k is solved for explicitly; the squared-norm
    statement is T^* T = (1/gamma_{+i}) id together with
    M_k^* M_l = (1/gamma_{+i}) P_k P_l^* on the raised module.  Phases are
    never compared.
    """
    report = VerificationReport()
    m = sys_plus.m
    rho = sys_plus.rep.rho
    base = {"rho": str(rho), "i": i}
    raised = shift(rho, "+", i)
    if raised is None:
        report.skip("raise-lower", base, "shift not dominant; no map to compare")
        return report
    if sys_minus_on_target is None:
        raise ValueError(
            f"shift at i={i} is dominant; the minus system on {raised} is required"
        )
    if sys_minus_on_target.sign != "-" or sys_minus_on_target.rep.rho != raised:
        raise ValueError(
            "second system must be the minus system on the raised module "
            f"{raised}, got sign {sys_minus_on_target.sign} on "
            f"{sys_minus_on_target.rep.rho}"
        )
    t_plus = sys_plus.targets[i - 1]
    t_minus = sys_minus_on_target.targets[i - 1]
    if t_minus is None or t_minus.weight != rho:
        raise ValueError("minus system does not descend back to the source module")
    if sys_minus_on_target.rep.dim != t_plus.dim:
        raise ValueError("bases are not shared: build the minus system on the "
                         "derived representation of the plus target")

    gamma = sys_plus.table.gamma[i - 1]
    g_rho = sys_plus.rep.gram
    g_sigma = t_plus.gram

    P = [t_plus.pmaps[k] for k in range(m)]
    P_star = [gram_adjoint(pk, g_rho, g_sigma) for pk in P]
    M = [t_minus.pmaps[k] for k in range(m)]

    T = Matrix.zeros(t_minus.dim, sys_plus.rep.dim)
    for k in range(m):
        T = T + M[k] * P[k]
    T = T.scale(Fraction(1) / gamma)

    for k in range(m):
        diff = M[k] - T * P_star[k]
        report.check("raise-lower-proportionality", {**base, "k": k + 1},
                     diff.is_zero(), witness=_diff_witness(diff))

    T_star = gram_adjoint(T, g_rho, t_minus.gram)
    diff = T_star * T - Matrix.identity(sys_plus.rep.dim).scale(Fraction(1) / gamma)
    report.check("raise-lower-ratio-squared",
                 {**base, "ratio_squared": Fraction(1) / gamma},
                 diff.is_zero(), witness=_diff_witness(diff))

    M_star = [gram_adjoint(mk, g_sigma, t_minus.gram) for mk in M]
    for k in range(m):
        for l in range(m):
            diff = M_star[k] * M[l] - (P[k] * P_star[l]).scale(Fraction(1) / gamma)
            report.check("raise-lower-squared", {**base, "k": k + 1, "l": l + 1},
                         diff.is_zero(), witness=_diff_witness(diff))
    return report


def verify_spinor_model(m: int) -> VerificationReport:
    """Exterior-algebra family: for each degree p the module labelled
    (1_p, 0_{m-p}) carries at most four maps, whose table has closed forms
    and whose bilinear combinations reproduce the Clifford relation and the
    diagonal action of the matrix units.
    """
    from .gtrep import build_rep

    if m < 2:
        raise ValueError("need m >= 2")
    report = VerificationReport()
    for p in range(m + 1):
        rho = HighestWeight(tuple([1] * p + [0] * (m - p)))
        rep_ = build_rep(rho)
        plus = build_system(rep_, "+")
        minus = build_system(rep_, "-")
        base = {"m": m, "p": p}
        wp, gp = plus.table.w, plus.table.gamma
        wm, gm = minus.table.w, minus.table.gamma

        # closed-form table rows, whenever the row's index exists
        if p >= 1:
            report.check("spinor-table", {**base, "row": "+1"},
                         wp[0] == -1 and gp[0] == Fraction(p * (m + 1), p + 1),
                         witness=f"w={wp[0]}, gamma={gp[0]}")
            report.check("spinor-table", {**base, "row": f"-{p}"},
                         wm[p - 1] == m - p + 1 and gm[p - 1] == Fraction(p, m - p + 1),
                         witness=f"w={wm[p-1]}, gamma={gm[p-1]}")
        if p <= m - 1:
            report.check("spinor-table", {**base, "row": f"+{p+1}"},
                         wp[p] == p and gp[p] == Fraction(m - p, p + 1),
                         witness=f"w={wp[p]}, gamma={gp[p]}")
            report.check("spinor-table", {**base, "row": f"-{m}"},
                         wm[m - 1] == 0
                         and gm[m - 1] == Fraction((m + 1) * (m - p), m - p + 1),
                         witness=f"w={wm[m-1]}, gamma={gm[m-1]}")

        n = rep_.dim
        ident = Matrix.identity(n)
        plain_units = {
            (k, l): rep_.gen[(k, l)] for k in range(1, m + 1) for l in range(1, m + 1)
        }

        # bilinear Clifford relation (creation/annihilation squared scalings)
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                acc = Matrix.zeros(n, n)
                if p <= m - 1:
                    acc = acc + plus.p_star_p(p + 1, k, l).scale(p + 1)
                if p >= 1:
                    acc = acc + minus.p_star_p(p, l, k).scale(m - p + 1)
                target = ident if k == l else Matrix.zeros(n, n)
                diff = acc - target
                report.check("clifford-anticommutation", {**base, "k": k, "l": l},
                             diff.is_zero(), witness=_diff_witness(diff))

        # the matrix units through the annihilation pair
        if p >= 1:
            for k in range(1, m + 1):
                for l in range(1, m + 1):
                    diff = minus.p_star_p(p, k, l).scale(m - p + 1) - plain_units[(k, l)]
                    report.check("unit-action", {**base, "k": k, "l": l},
                                 diff.is_zero(), witness=_diff_witness(diff))

        # degree-1 trace identity with the closed-form weights
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                acc = Matrix.zeros(n, n)
                for i in range(1, m + 1):
                    if plus.table.valid[i - 1]:
                        acc = acc + plus.p_star_p(i, k, l).scale(Fraction(wp[i - 1]))
                diff = acc + plain_units[(l, k)]
                report.check("spinor-moment-identity-q1", {**base, "k": k, "l": l},
                             diff.is_zero(), witness=_diff_witness(diff))

        # completeness (both signs) and the projection formula
        for sysx in (plus, minus):
            for k in range(1, m + 1):
                for l in range(1, m + 1):
                    acc = Matrix.zeros(n, n)
                    for i in range(1, m + 1):
                        acc = acc + sysx.p_star_p(i, k, l)
                    target = ident if k == l else Matrix.zeros(n, n)
                    diff = acc - target
                    report.check("spinor-completeness",
                                 {**base, "sign": sysx.sign, "k": k, "l": l},
                                 diff.is_zero(), witness=_diff_witness(diff))
            for i in range(1, m + 1):
                if sysx.targets[i - 1] is None:
                    continue
                proj = sysx.projectors[i - 1]
                for l in range(1, m + 1):
                    lhs = proj * _embed_column(m, l, n)
                    rhs = Matrix.zeros(n * m, n)
                    for k in range(1, m + 1):
                        rhs = rhs + _embed_column(m, k, n) * sysx.p_star_p(i, k, l)
                    diff = lhs - rhs
                    report.check("spinor-projection-formula",
                                 {**base, "sign": sysx.sign, "i": i, "l": l},
                                 diff.is_zero(), witness=_diff_witness(diff))
    return report
