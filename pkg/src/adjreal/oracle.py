"""Independent cross-checks: Krylov-based canonical form similarity,
bounded-height reverser search, and closed-form symbolic obstructions.

The canonical-form code deliberately avoids the Smith-form machinery: it
computes invariant factors by the cyclic decomposition (maximal-order
vector, then recursion on the quotient), giving a second, unrelated route
to the similarity decision.

Search outcomes are evidence, never proofs of absence: "exhausted" only
says no reverser exists whose coefficients come from the height pool.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .certificates import ReverserCertificate, verify_certificate
from .errors import AlgebraMismatch, InconsistentSystem, SearchSpaceTooLarge
from .gaussian import GaussRat, ONE, ZERO, rational
from .liecore import LieContext, algebra_member, group_member, reverser_linear_space
from .matrix import (
    ExactMatrix,
    char_poly,
    det,
    eval_poly,
    inverse,
    kernel,
    rank,
    solve_linear,
)
from .polynomial import ExactPoly, linear_roots, poly_gcd, poly_lcm, squarefree_part


# ---------------------------------------------------------------------------
# rational canonical form via cyclic decomposition
# ---------------------------------------------------------------------------


def _unit_vector(n: int, k: int):
    return [ONE if i == k else ZERO for i in range(n)]


def _poly_on_vector(p: ExactPoly, a: ExactMatrix, v):
    out = [ZERO] * len(v)
    for c in reversed(p.coeffs):
        out = a.mul_vector(out)
        if not c.is_zero():
            out = [x + c * y for x, y in zip(out, v)]
    return out


def _local_min_poly(a: ExactMatrix, v):
    """Minimal monic p with p(a) v = 0 (first Krylov dependence)."""
    vecs = [list(v)]
    while True:
        nxt = a.mul_vector(vecs[-1])
        try:
            coeffs, _ = solve_linear(ExactMatrix.from_columns(vecs), nxt)
        except InconsistentSystem:
            vecs.append(nxt)
            continue
        return ExactPoly(list(map(lambda c: -c, coeffs)) + [ONE])


def _coprime_split(a: ExactPoly, b: ExactPoly):
    """(a1, b1) with a1 | a, b1 | b, a1 b1 = lcm(a, b), gcd(a1, b1) = 1."""
    g = poly_gcd(a, b)
    a1 = (a // g).monic()
    while True:
        d = poly_gcd(a1, g)
        if d.degree() == 0:
            break
        a1 = (a1 * d).monic()
        g = (g // d).monic()
    b1 = (poly_lcm(a, b) // a1).monic()
    return a1, b1


def _max_order_vector(a: ExactMatrix):
    """Vector whose local minimal polynomial is the minimal polynomial."""
    n = a.rows
    v = _unit_vector(n, 0)
    p = _local_min_poly(a, v)
    for k in range(1, n):
        w = _unit_vector(n, k)
        q = _local_min_poly(a, w)
        if poly_lcm(p, q) == p:
            continue
        f, g = _coprime_split(p, q)
        v1 = _poly_on_vector(p // f, a, v)
        v2 = _poly_on_vector(q // g, a, w)
        v = [x + y for x, y in zip(v1, v2)]
        p = (f * g).monic()
    return v, p


def _invariant_chain(a: ExactMatrix):
    """Nontrivial invariant factors, largest first (cyclic decomposition:
    peel a maximal cyclic subspace, recurse on the quotient action)."""
    n = a.rows
    if n == 0:
        return []
    v, m = _max_order_vector(a)
    k = m.degree()
    cols = [list(v)]
    for _ in range(k - 1):
        cols.append(a.mul_vector(cols[-1]))
    for idx in range(n):
        if len(cols) == n:
            break
        cand = _unit_vector(n, idx)
        if rank(ExactMatrix.from_columns(cols + [cand])) > len(cols):
            cols.append(cand)
    p = ExactMatrix.from_columns(cols)
    abar = inverse(p) * a * p
    if k == n:
        return [m]
    quotient = ExactMatrix.from_rows(
        [[abar[i, j] for j in range(k, n)] for i in range(k, n)]
    )
    rest = _invariant_chain(quotient)
    assert not rest or (m % rest[0]).is_zero(), "cyclic chain broke"
    return [m] + rest


def rcf_invariant_factors(a: ExactMatrix):
    """Invariant factors ascending (ones included), by Krylov cyclic
    decomposition; independent of the Smith-form route."""
    chain = _invariant_chain(a)
    chain.reverse()
    return [ExactPoly.one()] * (a.rows - len(chain)) + chain


def rcf_similar(a: ExactMatrix, b: ExactMatrix) -> bool:
    """Similarity over Q(i) by comparing cyclic-decomposition factors."""
    if a.rows != b.rows or a.cols != b.cols:
        return False
    return rcf_invariant_factors(a) == rcf_invariant_factors(b)


# ---------------------------------------------------------------------------
# bounded-height reverser search
# ---------------------------------------------------------------------------


def _rat_height(q) -> int:
    return max(abs(int(q.numerator)), abs(int(q.denominator)))


def _scalar_order_key(v: GaussRat):
    h = max(_rat_height(v.re), _rat_height(v.im))
    if v.is_zero():
        cat = 0
    elif v.im == 0:
        cat = 1 if v.re > 0 else 2
    elif v.re == 0:
        cat = 3 if v.im > 0 else 4
    else:
        cat = 5
    return (h, cat, v.re, v.im)


def height_pool(height: int):
    """Gaussian rationals p/q + (r/s)i with |p|,|q|,|r|,|s| <= height,
    deterministically ordered from simplest to most complex."""
    fracs = set()
    for p in range(-height, height + 1):
        for q in range(1, height + 1):
            fracs.add(rational(p, q))
    pool = {GaussRat(re, im) for re in fracs for im in fracs}
    return sorted(pool, key=_scalar_order_key)


@dataclass
class SearchOutcome:
    found: bool
    certificate: ReverserCertificate | None
    height: int
    candidates_checked: int
    note: str

    def to_json(self):
        return {
            "outcome": "found" if self.found else "exhausted",
            "height": self.height,
            "candidates_checked": self.candidates_checked,
            "note": self.note,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


class _StructuredInapplicable(Exception):
    pass


def _eigen_split_or_raise(x: ExactMatrix):
    roots, cofactor = linear_roots(char_poly(x))
    if cofactor.degree() > 0:
        raise _StructuredInapplicable
    distinct = sorted(set(roots), key=GaussRat.lex_key)
    ident = ExactMatrix.identity(x.rows)
    return {lam: kernel(x - ident.scale(lam)) for lam in distinct}


def _structured_involutions(x: ExactMatrix, height: int, limit: int):
    """Lazily enumerate every involution of the anticommutant whose
    eigen-block entries come from the height pool.

    Works for diagonalizable X with Q(i) spectrum and kernel of dimension
    at most one: an involutive anticommuting r swaps each eigenspace pair
    (V_lam, V_-lam) by blocks (B, B^{-1}) and acts by a sign on the
    kernel, so enumerating B over the pool covers every candidate whose
    coefficients are pool-bounded (the computed B^{-1} side may exceed
    the height, which only widens the search).

    Yields (det, builder) pairs; the determinant comes from the exact
    block formula det r = (-1)^{sum of pair multiplicities} * kernel sign.
    """
    if not eval_poly(squarefree_part(char_poly(x)), x).is_zero():
        raise _StructuredInapplicable
    spaces = _eigen_split_or_raise(x)
    zero = GaussRat.from_int(0)
    kernel_basis = spaces.get(zero, [])
    if len(kernel_basis) > 1:
        raise _StructuredInapplicable
    reps = []
    for lam in sorted(spaces, key=GaussRat.lex_key):
        if lam.is_zero():
            continue
        neg = -lam
        if lam.lex_key() < neg.lex_key():
            continue
        if neg not in spaces or len(spaces[neg]) != len(spaces[lam]):
            # asymmetric multiplicities: no involution exists at all
            return
        reps.append(lam)
    pool = height_pool(height)
    nonzero_pool = [c for c in pool if not c.is_zero()]
    block_sizes = [len(spaces[lam]) for lam in reps]
    total = 1
    for k in block_sizes:
        total *= len(pool if k > 1 else nonzero_pool) ** (k * k)
    total *= 2 if kernel_basis else 1
    if total > limit:
        raise SearchSpaceTooLarge(
            f"structured involution space has {total} candidates (limit {limit})"
        )
    columns = []
    for lam in reps:
        columns.extend(spaces[lam])
    for lam in reps:
        columns.extend(spaces[-lam])
    columns.extend(kernel_basis)
    s = ExactMatrix.from_columns(columns)
    s_inv = inverse(s)
    m = len(columns)
    pair_dim = sum(block_sizes)
    kernel_signs = [ONE, -ONE] if kernel_basis else [None]

    def block_candidates(k):
        src = pool if k > 1 else nonzero_pool
        for flat in itertools.product(src, repeat=k * k):
            b = ExactMatrix(k, k, flat)
            d = det(b)
            if d.is_zero():
                continue
            yield b, d

    for choice in itertools.product(*[block_candidates(k) for k in block_sizes]):
        for ksign in kernel_signs:
            # det of an antidiagonal pair block [[0, B], [B^-1, 0]] is
            # (-1)^k: the B and B^-1 determinants cancel exactly
            total_det = -ONE if pair_dim % 2 else ONE
            if ksign is not None:
                total_det = total_det * ksign

            def build(choice=choice, ksign=ksign):
                big = [[ZERO] * m for _ in range(m)]
                off = 0
                for (b, _), k in zip(choice, block_sizes):
                    binv = inverse(b)
                    for a_ in range(k):
                        for b_ in range(k):
                            big[pair_dim + off + a_][off + b_] = b[a_, b_]
                            big[off + a_][pair_dim + off + b_] = binv[a_, b_]
                    off += k
                if ksign is not None:
                    big[m - 1][m - 1] = ksign
                return s * ExactMatrix.from_rows(big) * s_inv

            yield total_det, build


def enumerate_involutive_reversers(x: ExactMatrix, height: int, limit: int = 300000):
    """Full matrices of every pool-bounded involution in the
    anticommutant of x (see _structured_involutions for coverage)."""
    for _, build in _structured_involutions(x, height, limit):
        yield build()


def involution_determinant_census(
    x: ExactMatrix, height: int, limit: int = 300000, sample_every: int = 997
):
    """Count pool-bounded involutive anticommutant elements and collect
    their determinants (exact block formula); every ``sample_every``-th
    candidate is fully rebuilt and re-verified entry by entry."""
    count = 0
    dets = set()
    samples_verified = 0
    for d, build in _structured_involutions(x, height, limit):
        count += 1
        dets.add(d)
        if count % sample_every == 1:
            r = build()
            assert r * r == ExactMatrix.identity(r.rows), "sampled r not involutive"
            assert (r * x + x * r).is_zero(), "sampled r not anticommuting"
            assert det(r) == d, "block determinant formula mismatch"
            samples_verified += 1
    return count, dets, samples_verified


def search_reverser(
    x: ExactMatrix,
    ctx: LieContext,
    height: int,
    require_involution: bool,
    candidate_limit: int = 300000,
) -> SearchOutcome:
    """Enumerate group reversers with pool-bounded coefficients over the
    anticommutant; returns the first verified certificate or exhaustion.

    Exhaustion is evidence, not proof.  For involution searches on split
    semisimple elements the enumeration runs over eigen-block matrices
    (complete for pool-bounded candidates and far smaller); otherwise it
    is a plain product scan over the anticommutant basis.
    """
    if not algebra_member(x, ctx):
        raise AlgebraMismatch(f"element is not in {ctx.algebra}({ctx.n})")
    if require_involution:
        try:
            checked = 0
            for d, build in _structured_involutions(x, height, candidate_limit):
                checked += 1
                if ctx.group in ("SL", "PSL") and d != 1:
                    continue
                r = build()
                if group_member(r, ctx):
                    cert = ReverserCertificate(x, r, ctx, True)
                    if verify_certificate(cert).ok:
                        return SearchOutcome(True, cert, height, checked, "found")
            return SearchOutcome(
                False, None, height, checked, "exhausted(structured)"
            )
        except _StructuredInapplicable:
            pass
    basis = reverser_linear_space(x)
    pool = height_pool(height)
    total = len(pool) ** len(basis)
    if total > candidate_limit:
        raise SearchSpaceTooLarge(
            f"{total} candidates exceed the limit {candidate_limit}"
        )
    checked = 0
    n = x.rows
    for combo in itertools.product(pool, repeat=len(basis)):
        checked += 1
        r = ExactMatrix.zeros(n)
        for c, b in zip(combo, basis):
            if not c.is_zero():
                r = r + b.scale(c)
        if r.is_zero() or det(r).is_zero():
            continue
        if require_involution and not (r * r == ExactMatrix.identity(n)):
            continue
        if not group_member(r, ctx):
            continue
        cert = ReverserCertificate(x, r, ctx, require_involution)
        if verify_certificate(cert).ok:
            return SearchOutcome(True, cert, height, checked, "found")
    return SearchOutcome(False, None, height, checked, "exhausted")


# ---------------------------------------------------------------------------
# closed-form symbolic obstructions
# ---------------------------------------------------------------------------


class BiPoly:
    """Tiny exact polynomial in two commuting symbols b and c."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for key, val in (terms or {}).items():
            if not val.is_zero():
                self.terms[key] = val

    @staticmethod
    def const(v) -> "BiPoly":
        if isinstance(v, int):
            v = GaussRat.from_int(v)
        return BiPoly({(0, 0): v})

    @staticmethod
    def b() -> "BiPoly":
        return BiPoly({(1, 0): ONE})

    @staticmethod
    def c() -> "BiPoly":
        return BiPoly({(0, 1): ONE})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for key, val in other.terms.items():
            out[key] = out.get(key, ZERO) + val
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict = {}
        for (i, j), u in self.terms.items():
            for (k, l), v in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, ZERO) + u * v
        return BiPoly(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def evaluate(self, bval: GaussRat, cval: GaussRat) -> GaussRat:
        out = ZERO
        for (i, j), v in self.terms.items():
            out = out + v * bval ** i * cval ** j
        return out


def _sym_mul_2x2(m1, m2):
    return [
        [
            m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0],
            m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1],
        ],
        [
            m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0],
            m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1],
        ],
    ]


@dataclass
class ObstructionRecord:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [{"check": n, "ok": ok} for n, ok in self.checks],
        }


def sp1_involution_obstruction() -> ObstructionRecord:
    """Machine-checked polynomial identities for the antidiagonal family
    g = b E12 + c E21 (the full anticommutant of diag(x, -x), x != 0):
    det g = -bc and g^2 = bc I, hence det g = 1 forces g^2 = -I, so the
    rank-one symplectic group has no involutive reverser there."""
    zero = BiPoly.const(0)
    b, c = BiPoly.b(), BiPoly.c()
    g = [[zero, b], [c, zero]]
    det_g = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    g2 = _sym_mul_2x2(g, g)
    bc = b * c
    rec = ObstructionRecord("sp1-involution-obstruction")
    rec.checks.append(("det g = -bc as a polynomial identity", det_g == -bc))
    rec.checks.append(
        (
            "g^2 = bc * I as a polynomial identity",
            g2[0][0] == bc and g2[1][1] == bc
            and g2[0][1].is_zero() and g2[1][0].is_zero(),
        )
    )
    combined = [
        [g2[0][0] + det_g, g2[0][1]],
        [g2[1][0], g2[1][1] + det_g],
    ]
    rec.checks.append(
        (
            "g^2 + det(g) I = 0 on the whole family",
            all(entry.is_zero() for row in combined for entry in row),
        )
    )
    one = GaussRat.from_int(1)
    two = GaussRat.from_int(2)
    rec.checks.append(
        (
            "at (b,c) = (1,-1): det 1 and g^2 = -I",
            det_g.evaluate(one, -one) == 1
            and g2[0][0].evaluate(one, -one) == -1,
        )
    )
    rec.checks.append(
        ("at (b,c) = (2,1): det -2, outside the group", det_g.evaluate(two, one) == -2)
    )
    return rec


def so2_reverser_obstruction() -> ObstructionRecord:
    """Symbolic form of the rank-two rotation dichotomy: on the family
    g = a diag(1,-1) + b (E12 + E21) (the anticommutant of the canonical
    rotation block), g^t g = (a^2 + b^2) I and det g = -(a^2 + b^2); an
    orthogonal member therefore always has determinant -1, so none lies
    in the special orthogonal group."""
    zero = BiPoly.const(0)
    a, b = BiPoly.b(), BiPoly.c()
    g = [[a, b], [b, -a]]
    gt_g = _sym_mul_2x2([[g[0][0], g[1][0]], [g[0][1], g[1][1]]], g)
    norm = a * a + b * b
    det_g = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    rec = ObstructionRecord("so2-reverser-obstruction")
    rec.checks.append(
        (
            "g^t g = (a^2+b^2) I as a polynomial identity",
            gt_g[0][0] == norm and gt_g[1][1] == norm
            and gt_g[0][1].is_zero() and gt_g[1][0].is_zero(),
        )
    )
    rec.checks.append(
        ("det g = -(a^2+b^2) as a polynomial identity", det_g == -norm)
    )
    return rec
