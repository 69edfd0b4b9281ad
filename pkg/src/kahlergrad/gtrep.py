"""Explicit rational matrix models of irreducible gl(m) modules.

The basis is indexed by Gelfand-Tsetlin patterns: triangular integer arrays
whose row r has r entries, whose top row equals the highest weight, and whose
adjacent rows interlace.  The raising/lowering matrix elements use the
classical rational (non-orthonormal) normalization, so every entry stays in
Q; unitarity is recovered by solving separately for the invariant diagonal
Gram form instead of orthonormalizing, which would need square roots.

Conventions for the matrix-element formulas, with shifted entries
l_{k,j} = lambda_{k,j} - j:

  E_{k,k+1}: coefficient of the pattern with lambda_{k,j} raised by one is
      - prod_{i<=k+1} (l_{k+1,i} - l_{k,j}) / prod_{i != j} (l_{k,i} - l_{k,j})
  E_{k+1,k}: coefficient of the pattern with lambda_{k,j} lowered by one is
        prod_{i<=k-1} (l_{k-1,i} - l_{k,j}) / prod_{i != j} (l_{k,i} - l_{k,j})

Terms whose target array is not a pattern are dropped (the classical
convention); every build is then machine-checked against the commutation
relations, the weight grading, and the adjoint condition, so a transcription
error in the formulas cannot survive construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .linalg import Matrix, gram_adjoint
from .envalg import PBWElement
from .weights import HighestWeight, weyl_dimension

__all__ = [
    "GTPattern",
    "Representation",
    "gt_patterns",
    "build_rep",
    "invariant_gram",
    "evaluate",
    "e_power_matrix",
    "casimir_matrix",
    "DEFAULT_DIMENSION_BUDGET",
]

DEFAULT_DIMENSION_BUDGET = 4000


@dataclass(frozen=True)
class GTPattern:
    """Rows stored bottom-up: rows[r] has r+1 entries; rows[-1] is the label."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for r, row in enumerate(self.rows):
            if len(row) != r + 1:
                raise ValueError("row lengths must be 1..m")
        if not _interlaces(self.rows):
            raise ValueError(f"interlacing violated in {self.rows}")

    @property
    def m(self) -> int:
        return len(self.rows)

    def weight(self) -> Tuple[int, ...]:
        sums = [0] + [sum(row) for row in self.rows]
        return tuple(sums[r + 1] - sums[r] for r in range(self.m))

    def __str__(self):
        return "/".join(",".join(str(x) for x in row) for row in self.rows)


def _interlaces(rows) -> bool:
    for r in range(len(rows) - 1):
        low, high = rows[r], rows[r + 1]
        for i in range(r + 1):
            if not (high[i] >= low[i] >= high[i + 1]):
                return False
    return True


def gt_patterns(rho) -> list:
    """All patterns with top row rho, highest-weight pattern first."""
    rho = HighestWeight.coerce(rho)
    out = []

    def descend(rows_topdown):
        top = rows_topdown[-1]
        if len(top) == 1:
            out.append(GTPattern(tuple(reversed(rows_topdown))))
            return
        r = len(top)
        choices = [range(top[i], top[i + 1] - 1, -1) for i in range(r - 1)]

        def rec(i, acc):
            if i == r - 1:
                descend(rows_topdown + [tuple(acc)])
                return
            for v in choices[i]:
                rec(i + 1, acc + [v])

        rec(0, [])

    descend([rho.entries])
    return out


@dataclass
class Representation:
    """Matrix model: generator matrices gen[(k,l)] (1-based) plus the
    invariant diagonal Gram form.  basis is None for models obtained by
    restriction to an invariant subspace rather than from patterns."""

    rho: HighestWeight
    dim: int
    basis: Optional[tuple]            # tuple of GTPattern, or None
    gen: Dict[Tuple[int, int], Matrix]
    gram: Matrix

    @property
    def m(self) -> int:
        return self.rho.m

    def generator(self, k: int, l: int) -> Matrix:
        return self.gen[(k, l)]

    def check_invariants(self):
        """Commutation, weight grading, unitarity; raises on violation."""
        m, n = self.m, self.dim
        for k in range(1, m + 1):
            if not self.gen[(k, k)].is_diagonal():
                raise AssertionError(f"gen[{k},{k}] not diagonal")
        total = Matrix.zeros(n, n)
        for k in range(1, m + 1):
            total = total + self.gen[(k, k)]
        expected = Fraction(sum(self.rho.entries))
        if any(x != expected for x in total.diagonal_entries()):
            raise AssertionError("weight grading: trace of diagonal action wrong")
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for k in range(1, m + 1):
                    for l in range(1, m + 1):
                        lhs = (self.gen[(i, j)] * self.gen[(k, l)]
                               - self.gen[(k, l)] * self.gen[(i, j)])
                        rhs = Matrix.zeros(n, n)
                        if j == k:
                            rhs = rhs + self.gen[(i, l)]
                        if l == i:
                            rhs = rhs - self.gen[(k, j)]
                        if lhs != rhs:
                            raise AssertionError(f"commutation fails at {(i,j,k,l)}")
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                if gram_adjoint(self.gen[(k, l)], self.gram, self.gram) != self.gen[(l, k)]:
                    raise AssertionError(f"unitarity fails at {(k,l)}")


def _raising(pats, index, k, m):
    n = len(pats)
    mat = Matrix.zeros(n, n)
    for c, p in enumerate(pats):
        lk = [p.rows[k - 1][j] - (j + 1) for j in range(k)]
        lk1 = [p.rows[k][j] - (j + 1) for j in range(k + 1)]
        for j in range(k):
            num = Fraction(1)
            for v in lk1:
                num *= v - lk[j]
            if not num:
                continue
            den = Fraction(1)
            for i in range(k):
                if i != j:
                    den *= lk[i] - lk[j]
            rows = [list(r) for r in p.rows]
            rows[k - 1][j] += 1
            if not _interlaces(rows):
                continue
            target = tuple(tuple(r) for r in rows)
            mat.data[index[target]][c] += -num / den
    return mat


def _lowering(pats, index, k, m):
    n = len(pats)
    mat = Matrix.zeros(n, n)
    for c, p in enumerate(pats):
        lk = [p.rows[k - 1][j] - (j + 1) for j in range(k)]
        lkm = [p.rows[k - 2][j] - (j + 1) for j in range(k - 1)] if k >= 2 else []
        for j in range(k):
            num = Fraction(1)
            for v in lkm:
                num *= v - lk[j]
            if not num:
                continue
            den = Fraction(1)
            for i in range(k):
                if i != j:
                    den *= lk[i] - lk[j]
            rows = [list(r) for r in p.rows]
            rows[k - 1][j] -= 1
            if not _interlaces(rows):
                continue
            target = tuple(tuple(r) for r in rows)
            mat.data[index[target]][c] += num / den
    return mat


def invariant_gram(m: int, gen: Dict[Tuple[int, int], Matrix]) -> Matrix:
    """Diagonal positive G with G^-1 A_{kl}^T G = A_{lk}, normalized so the
    highest-weight vector has norm 1.

    The ratio G_x / G_y along a lowering edge y -> x is forced by the adjoint
    condition on the raising/lowering pair; the solution is propagated from
    the highest-weight vector and then the full condition is re-checked, so
    an inconsistent system (a generator bug) raises instead of returning.
    """
    n = gen[(1, 1)].rows
    weights = []
    for b in range(n):
        weights.append(tuple(gen[(k, k)].data[b][b] for k in range(1, m + 1)))
    hw = max(range(n), key=lambda b: weights[b])
    G: list = [None] * n
    G[hw] = Fraction(1)
    frontier = [hw]
    while frontier:
        nxt = []
        for y in frontier:
            for k in range(1, m):
                A = gen[(k, k + 1)]
                B = gen[(k + 1, k)]
                for x in range(n):
                    if B.data[x][y] and G[x] is None:
                        if not A.data[y][x]:
                            raise ValueError(
                                "inconsistent adjoint system: one-sided edge "
                                f"{y}->{x} at k={k}"
                            )
                        G[x] = G[y] * A.data[y][x] / B.data[x][y]
                        nxt.append(x)
        frontier = nxt
    if any(g is None for g in G):
        raise ValueError("weight graph not connected; generators inconsistent")
    if any(g <= 0 for g in G):
        raise ValueError("invariant form not positive; generators inconsistent")
    gram = Matrix.diagonal(G)
    for k in range(1, m + 1):
        for l in range(1, m + 1):
            if gram_adjoint(gen[(k, l)], gram, gram) != gen[(l, k)]:
                raise ValueError(f"adjoint condition fails at {(k, l)}")
    return gram


def build_rep(rho, dim_budget: int = DEFAULT_DIMENSION_BUDGET) -> Representation:
    """Construct the full matrix model for the module labelled rho."""
    rho = HighestWeight.coerce(rho)
    m = rho.m
    dim = weyl_dimension(rho)
    if dim > dim_budget:
        raise ValueError(f"dimension {dim} exceeds budget {dim_budget} for {rho}")
    pats = gt_patterns(rho)
    if len(pats) != dim:
        raise AssertionError(
            f"pattern count {len(pats)} != Weyl dimension {dim} for {rho}"
        )
    index = {p.rows: i for i, p in enumerate(pats)}
    gen: Dict[Tuple[int, int], Matrix] = {}
    for k in range(1, m + 1):
        gen[(k, k)] = Matrix.diagonal([Fraction(p.weight()[k - 1]) for p in pats])
    for k in range(1, m):
        gen[(k, k + 1)] = _raising(pats, index, k, m)
        gen[(k + 1, k)] = _lowering(pats, index, k, m)
    # remaining units by commutator closure e_{kl} = [e_{k,l-1}, e_{l-1,l}]
    for d in range(2, m):
        for k in range(1, m + 1 - d):
            l = k + d
            gen[(k, l)] = (gen[(k, l - 1)] * gen[(l - 1, l)]
                           - gen[(l - 1, l)] * gen[(k, l - 1)])
            gen[(l, k)] = (gen[(l, l - 1)] * gen[(l - 1, k)]
                           - gen[(l - 1, k)] * gen[(l, l - 1)])
    gram = invariant_gram(m, gen)
    rep = Representation(rho=rho, dim=dim, basis=tuple(pats), gen=gen, gram=gram)
    rep.check_invariants()
    return rep


def evaluate(rep: Representation, x: PBWElement) -> Matrix:
    """Apply the module action to a normal-ordered element."""
    if x.m != rep.m:
        raise ValueError(f"rank mismatch: element has m={x.m}, module m={rep.m}")
    n = rep.dim
    total = Matrix.zeros(n, n)
    cache: Dict[tuple, Matrix] = {(): Matrix.identity(n)}
    for word, coeff in x.terms.items():
        # monomials share sorted prefixes heavily; cache prefix products
        k = len(word)
        while k > 0 and word[:k] not in cache:
            k -= 1
        mat = cache[word[:k]]
        for j in range(k, len(word)):
            mat = mat * rep.gen[word[j]]
            cache[word[: j + 1]] = mat
        total = total + mat.scale(coeff)
    return total


def _block_matrix(rep: Representation, variant: str) -> Matrix:
    """m*dim square matrix whose (k,l) block is gen[(k,l)] (plain) or
    gen[(l,k)] (tilde); its q-th power tabulates all degree-q elements via
    the composition law."""
    m, n = rep.m, rep.dim
    big = Matrix.zeros(m * n, m * n)
    for k in range(m):
        for l in range(m):
            g = rep.gen[(k + 1, l + 1)] if variant == "plain" else rep.gen[(l + 1, k + 1)]
            for a in range(n):
                row = big.data[k * n + a]
                grow = g.data[a]
                off = l * n
                for b in range(n):
                    if grow[b]:
                        row[off + b] = grow[b]
    return big


def e_power_matrix(rep: Representation, q: int, variant: str = "plain") -> Dict[Tuple[int, int], Matrix]:
    """Matrices of all e_{kl}^q (or tilde) at once, via block powers."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    if variant not in ("plain", "tilde"):
        raise ValueError("variant must be 'plain' or 'tilde'")
    m, n = rep.m, rep.dim
    if q == 0:
        out = {}
        for k in range(1, m + 1):
            for l in range(1, m + 1):
                out[(k, l)] = Matrix.identity(n) if k == l else Matrix.zeros(n, n)
        return out
    power = _block_matrix(rep, variant)
    base = power
    for _ in range(q - 1):
        power = power * base
    sign = Fraction(-1) ** q if variant == "tilde" else Fraction(1)
    out = {}
    for k in range(m):
        for l in range(m):
            blk = [
                [sign * power.data[k * n + a][l * n + b] for b in range(n)]
                for a in range(n)
            ]
            out[(k + 1, l + 1)] = Matrix(blk)
    return out


def casimir_matrix(rep: Representation, q: int, variant: str = "plain") -> Matrix:
    """Matrix of c_q (plain) or of its involution image (tilde)."""
    blocks = e_power_matrix(rep, q, variant)
    total = Matrix.zeros(rep.dim, rep.dim)
    for k in range(1, rep.m + 1):
        total = total + blocks[(k, k)]
    return total
