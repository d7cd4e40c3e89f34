"""Reality decisions and reverser constructions for semisimple elements.

``decide_semisimple`` answers, per acting group, whether -X lies in the
adjoint orbit of X and whether an involutive conjugator exists; the
criteria are purely arithmetic (spectrum symmetry, a zero eigenvalue,
n mod 4, eigenvalue multiplicities) and never leave Q(i).

``witness_semisimple`` builds an explicit certified reverser for canonical
block forms; ``witness_general_semisimple`` conjugates an arbitrary
diagonalizable element to canonical shape first (requires the spectrum to
split over Q(i)) and transports the canonical witness back.

Verdict reason vocabulary: ZeroElement, SpectrumAsymmetric,
SpectrumSymmetric, ZeroEigenvalue, NMod4, OrthogonalAlwaysStrong,
SO2NotReal, PaperSilent, EvenMultiplicity, OddMultiplicity,
ProjectiveAlwaysStrong.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificates import ReverserCertificate, verify_certificate
from .errors import (
    AlgebraMismatch,
    NotRealizable,
    NotSemisimple,
    ParseError,
    SizeMismatch,
    SpectrumNotSplit,
)
from .gaussian import I, ONE, ZERO, GaussRat
from .liecore import (
    CanonicalSemisimple,
    LieContext,
    build_canonical,
    algebra_member,
    jn_matrix,
    kernel,
)
from .matrix import (
    ExactMatrix,
    char_poly,
    det,
    eval_poly,
    inverse,
    similar_to_negative,
)
from .polynomial import (
    ExactPoly,
    linear_roots,
    squarefree_decomposition,
    squarefree_part,
)

YES = "yes"
NO = "no"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RealityVerdict:
    is_real: str
    is_strongly_real: str
    reason: str
    witness: ReverserCertificate | None = None

    def to_json(self):
        return {
            "real": self.is_real,
            "strongly_real": self.is_strongly_real,
            "reason": self.reason,
            "witness": self.witness.to_json() if self.witness else None,
        }

    @staticmethod
    def from_json(data) -> "RealityVerdict":
        try:
            wit = data.get("witness")
            return RealityVerdict(
                str(data["real"]),
                str(data["strongly_real"]),
                str(data["reason"]),
                ReverserCertificate.from_json(wit) if wit else None,
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad verdict JSON: {exc}") from exc


def _require_semisimple_member(x: ExactMatrix, ctx: LieContext):
    if not algebra_member(x, ctx):
        raise AlgebraMismatch(f"element is not in {ctx.algebra}({ctx.n})")
    if not eval_poly(squarefree_part(char_poly(x)), x).is_zero():
        raise NotSemisimple("element is not diagonalizable")


def zero_in_spectrum(x: ExactMatrix) -> bool:
    return det(x).is_zero()


def _nonzero_multiplicities_even(x: ExactMatrix) -> bool:
    """True iff every nonzero eigenvalue (over the algebraic closure) has
    even multiplicity; read off the squarefree decomposition, so no
    splitting field is needed."""
    t = ExactPoly((ZERO, ONE))
    for factor, mult in squarefree_decomposition(char_poly(x)):
        if mult % 2 == 1 and factor != t:
            return False
    return True


def decide_semisimple(x: ExactMatrix, ctx: LieContext) -> RealityVerdict:
    """Reality verdict for a semisimple element under the context group."""
    _require_semisimple_member(x, ctx)
    if x.is_zero():
        cert = ReverserCertificate(x, ExactMatrix.identity(x.rows), ctx, True)
        return RealityVerdict(YES, YES, "ZeroElement", cert)
    group = ctx.group
    if group in ("GL", "SL", "PSL"):
        if not similar_to_negative(x):
            return RealityVerdict(NO, NO, "SpectrumAsymmetric")
        if group == "GL":
            return RealityVerdict(YES, YES, "SpectrumSymmetric")
        if group == "PSL":
            return RealityVerdict(YES, YES, "ProjectiveAlwaysStrong")
        if zero_in_spectrum(x):
            return RealityVerdict(YES, YES, "ZeroEigenvalue")
        if ctx.n % 4 != 2:
            return RealityVerdict(YES, YES, "NMod4")
        return RealityVerdict(YES, NO, "NMod4")
    if group == "O":
        return RealityVerdict(YES, YES, "OrthogonalAlwaysStrong")
    if group == "SO":
        if zero_in_spectrum(x):
            return RealityVerdict(YES, YES, "ZeroEigenvalue")
        if ctx.n % 4 != 2:
            return RealityVerdict(YES, YES, "NMod4")
        if ctx.n == 2:
            # the 2x2 rotation block has no special-orthogonal reverser
            return RealityVerdict(NO, NO, "SO2NotReal")
        return RealityVerdict(UNDETERMINED, NO, "PaperSilent")
    if group == "Sp":
        if _nonzero_multiplicities_even(x):
            return RealityVerdict(YES, YES, "EvenMultiplicity")
        return RealityVerdict(YES, NO, "OddMultiplicity")
    # PSp
    return RealityVerdict(YES, YES, "ProjectiveAlwaysStrong")


# ---------------------------------------------------------------------------
# canonical witnesses
# ---------------------------------------------------------------------------


def _pair_rep(v: GaussRat) -> GaussRat:
    """Lexicographically larger of v and -v; the pair representative."""
    return v if v.lex_key() >= (-v).lex_key() else -v


def _pair_indices(values):
    """Match indices of v against indices of -v; returns (pairs, zeros)
    with each pair ordered (index of representative, index of negative).
    Returns None if the multiset is not symmetric under negation."""
    zeros = [k for k, v in enumerate(values) if v.is_zero()]
    buckets: dict = {}
    for k, v in enumerate(values):
        if not v.is_zero():
            buckets.setdefault(v, []).append(k)
    pairs = []
    for v in sorted(buckets, key=GaussRat.lex_key):
        if v != _pair_rep(v):
            continue
        pos = buckets.get(v, [])
        neg = buckets.get(-v, [])
        if len(pos) != len(neg):
            return None
        pairs.extend(zip(pos, neg))
    matched = 2 * len(pairs) + len(zeros)
    if matched != len(values):
        return None
    return pairs, zeros


def _swap_involution(n: int, pairs, zeros, flip_zero: bool) -> ExactMatrix:
    """Per-pair swap blocks [[0,1],[1,0]], identity on zeros, with an
    optional -1 on the last zero coordinate to fix the determinant."""
    g = [[ZERO] * n for _ in range(n)]
    for k in range(n):
        g[k][k] = ONE
    for p, q in pairs:
        g[p][p] = ZERO
        g[q][q] = ZERO
        g[p][q] = ONE
        g[q][p] = ONE
    if flip_zero:
        z = zeros[-1]
        g[z][z] = -ONE
    return ExactMatrix.from_rows(g)


def _rotation_reverser(n: int, pairs) -> ExactMatrix:
    """Per-pair blocks [[0,-1],[1,0]] (determinant one, square -I on the
    paired part), identity elsewhere."""
    g = [[ZERO] * n for _ in range(n)]
    for k in range(n):
        g[k][k] = ONE
    for p, q in pairs:
        g[p][p] = ZERO
        g[q][q] = ZERO
        g[p][q] = -ONE
        g[q][p] = ONE
    return ExactMatrix.from_rows(g)


def _witness_linear(values, ctx: LieContext, want_involution: bool) -> ExactMatrix:
    pairing = _pair_indices(values)
    assert pairing is not None
    pairs, zeros = pairing
    n = len(values)
    if not want_involution:
        return _rotation_reverser(n, pairs)
    flip = ctx.group == "SL" and len(pairs) % 2 == 1
    return _swap_involution(n, pairs, zeros, flip)


def _witness_projective_linear(values, ctx: LieContext) -> ExactMatrix:
    """SL representative g with g X g^-1 = -X and g^2 a scalar matrix."""
    pairing = _pair_indices(values)
    assert pairing is not None
    pairs, zeros = pairing
    n = len(values)
    if len(zeros) % 2 == 0:
        # rotation blocks on the value pairs and on zero coordinates
        # paired among themselves: determinant 1, square -I
        zero_pairs = [
            (zeros[2 * t], zeros[2 * t + 1]) for t in range(len(zeros) // 2)
        ]
        return _rotation_reverser(n, pairs + zero_pairs)
    g = [[ZERO] * n for _ in range(n)]
    for k in range(n):
        g[k][k] = ONE
    for p, q in pairs:
        g[p][p] = ZERO
        g[q][q] = ZERO
        g[p][q] = -ONE
        g[q][p] = ONE
    for z in zeros:
        g[z][z] = I
    mat = ExactMatrix.from_rows(g)
    # odd zero count forces odd n, so a power of i can absorb det = i^s
    s = len(zeros) % 4
    k = ((-s) * pow(n, -1, 4)) % 4
    mat = mat.scale(I ** k)
    assert det(mat) == 1
    return mat


def _witness_orthogonal(c: CanonicalSemisimple, ctx: LieContext) -> ExactMatrix:
    """diag(1,-1) on each rotation block, identity on the zero block, with
    a sign flip on a spare zero direction when SO needs determinant one."""
    m = len(c.values)
    r = c.zero_block
    n = 2 * m + r
    diag = []
    for _ in range(m):
        diag.extend([ONE, -ONE])
    diag.extend([ONE] * r)
    need_fix = ctx.group == "SO" and m % 2 == 1
    if need_fix:
        if r >= 1:
            diag[-1] = -ONE
        else:
            # a vanishing rotation parameter leaves a zero 2x2 block whose
            # witness is unconstrained; drop its -1 instead
            j = next(k for k, v in enumerate(c.values) if v.is_zero())
            diag[2 * j + 1] = ONE
    return ExactMatrix.diagonal(diag)


def _antidiag_rotation_blocks(m: int) -> ExactMatrix:
    """m x m antisymmetric B with [[0,-1],[1,0]] blocks on the
    antidiagonal; needs m even."""
    b = [[ZERO] * m for _ in range(m)]
    for t in range(m // 2):
        col = m - 2 * t - 2
        b[2 * t][col + 1] = -ONE
        b[2 * t + 1][col] = ONE
    return ExactMatrix.from_rows(b)


def _sp_flip(n: int, positions) -> ExactMatrix:
    """Symplectic sign flip: rotation block on coordinates (j, n+j) for
    each listed j, sending h_j to -h_j on the canonical form."""
    g = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for k in range(2 * n):
        g[k][k] = ONE
    for j in positions:
        g[j][j] = ZERO
        g[n + j][n + j] = ZERO
        g[j][n + j] = -ONE
        g[n + j][j] = ONE
    return ExactMatrix.from_rows(g)


def _sp_permutation(n: int, perm) -> ExactMatrix:
    """diag(P, P) for the permutation sending slot a to old index perm[a]."""
    g = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for a, old in enumerate(perm):
        g[a][old] = ONE
        g[n + a][n + old] = ONE
    return ExactMatrix.from_rows(g)


def _witness_symplectic_involution(values, ctx: LieContext) -> ExactMatrix:
    """Involution in Sp(n) reversing diag(h, -h) when every nonzero
    eigenvalue has even multiplicity."""
    n = ctx.n
    flips = [j for j, v in enumerate(values) if not v.is_zero() and v != _pair_rep(v)]
    s1 = _sp_flip(n, flips)
    hvals = [_pair_rep(v) if not v.is_zero() else v for v in values]
    order = sorted(range(n), key=lambda j: (hvals[j].lex_key(), j))
    s2 = _sp_permutation(n, order)
    s = s2 * s1
    sorted_vals = [hvals[j] for j in order]
    # group equal consecutive values into eigenvalue classes
    g = [[ZERO] * (2 * n) for _ in range(2 * n)]
    a = 0
    while a < n:
        b = a
        while b < n and sorted_vals[b] == sorted_vals[a]:
            b += 1
        idxs = list(range(a, b))
        if sorted_vals[a].is_zero():
            for j in idxs:
                g[j][j] = ONE
                g[n + j][n + j] = ONE
        else:
            m = len(idxs)
            assert m % 2 == 0, "odd multiplicity has no symplectic involution"
            bmat = _antidiag_rotation_blocks(m)
            cmat = inverse(bmat)
            for p in range(m):
                for q in range(m):
                    g[idxs[p]][n + idxs[q]] = bmat[p, q]
                    g[n + idxs[p]][idxs[q]] = cmat[p, q]
        a = b
    g_norm = ExactMatrix.from_rows(g)
    return inverse(s) * g_norm * s


def witness_semisimple(
    c: CanonicalSemisimple, ctx: LieContext, want_involution: bool
) -> ReverserCertificate:
    """Certified reverser for a canonical semisimple element.

    Raises NotRealizable when the requested level is denied.
    """
    if c.algebra != ctx.algebra:
        raise AlgebraMismatch(
            f"canonical data is for {c.algebra}, context wants {ctx.algebra}"
        )
    if c.matrix_size != ctx.matrix_size:
        raise SizeMismatch("canonical data size does not match context")
    x = build_canonical(c)
    verdict = decide_semisimple(x, ctx)
    granted = verdict.is_strongly_real if want_involution else verdict.is_real
    if granted != YES:
        raise NotRealizable(
            f"{'strong ' if want_involution else ''}reality not granted "
            f"({verdict.reason})"
        )
    if x.is_zero():
        g = ExactMatrix.identity(x.rows)
    elif ctx.group in ("GL", "SL"):
        g = _witness_linear(list(c.values), ctx, want_involution)
    elif ctx.group == "PSL":
        g = _witness_projective_linear(list(c.values), ctx)
    elif ctx.group in ("O", "SO"):
        g = _witness_orthogonal(c, ctx)
    elif ctx.group == "Sp":
        if want_involution:
            g = _witness_symplectic_involution(list(c.values), ctx)
        else:
            g = jn_matrix(ctx.n)
    else:  # PSp
        g = jn_matrix(ctx.n)
    cert = ReverserCertificate(x, g, ctx, want_involution)
    report = verify_certificate(cert)
    assert report.ok, f"internal witness failure: {report.failures}"
    return cert


# ---------------------------------------------------------------------------
# general (non-canonical) semisimple witnesses
# ---------------------------------------------------------------------------


def _eigen_data(x: ExactMatrix):
    """Sorted distinct Q(i) eigenvalues with kernel bases; raises
    SpectrumNotSplit when the characteristic polynomial has an
    irrational factor."""
    roots, cofactor = linear_roots(char_poly(x))
    if cofactor.degree() > 0:
        raise SpectrumNotSplit(
            f"characteristic polynomial has irrational factor {cofactor}"
        )
    distinct = sorted(set(roots), key=GaussRat.lex_key)
    ident = ExactMatrix.identity(x.rows)
    return [
        (lam, kernel(x - ident.scale(lam))) for lam in distinct
    ]


def _bilinear(form: ExactMatrix | None):
    if form is None:
        return lambda u, v: sum(
            (a * b for a, b in zip(u, v)), ZERO
        )
    def pairing(u, v):
        return sum((a * b for a, b in zip(u, form.mul_vector(v))), ZERO)
    return pairing


def _combine(u, v, cu, cv):
    return [cu * a + cv * b for a, b in zip(u, v)]


def _dual_basis(us, vs, pairing, target: GaussRat):
    """Mix the vs so that pairing(u_a, v_b) = target * delta_ab."""
    k = len(us)
    gram = ExactMatrix.from_rows([[pairing(u, v) for v in vs] for u in us])
    t = inverse(gram).scale(target)
    out = []
    for b in range(k):
        col = [ZERO] * len(vs[0])
        for cidx in range(k):
            col = _combine(col, vs[cidx], ONE, t[cidx, b])
        out.append(col)
    return out


def _orthogonalize_symmetric(vectors, pairing):
    """Basis with diagonal Gram for a nondegenerate symmetric form; exact,
    no normalization (diagonal entries stay arbitrary nonzero)."""
    rest = [list(v) for v in vectors]
    out = []
    while rest:
        pidx = next(
            (k for k, w in enumerate(rest) if not pairing(w, w).is_zero()), None
        )
        if pidx is None:
            found = False
            for a in range(len(rest)):
                for b in range(a + 1, len(rest)):
                    if not pairing(rest[a], rest[b]).is_zero():
                        rest[a] = _combine(rest[a], rest[b], ONE, ONE)
                        pidx = a
                        found = True
                        break
                if found:
                    break
            if pidx is None:
                raise ArithmeticError("degenerate symmetric form")
        pivot = rest.pop(pidx)
        out.append(pivot)
        c = pairing(pivot, pivot)
        rest = [
            _combine(w, pivot, ONE, -(pairing(w, pivot) / c)) for w in rest
        ]
    return out


def _symplectic_pair_basis(vectors, pairing, target: GaussRat):
    """Split a space with nondegenerate antisymmetric form into pairs
    (p_a, q_a) with pairing(p_a, q_b) = target * delta_ab; exact."""
    rest = [list(v) for v in vectors]
    firsts, seconds = [], []
    while rest:
        p = rest.pop(0)
        qidx = next(
            (k for k, w in enumerate(rest) if not pairing(p, w).is_zero()), None
        )
        if qidx is None:
            raise ArithmeticError("degenerate antisymmetric form")
        q = rest.pop(qidx)
        q = [e * (target / pairing(p, q)) for e in q]
        firsts.append(p)
        seconds.append(q)
        new_rest = []
        for w in rest:
            beta = pairing(p, w) / target
            alpha = -(pairing(q, w) / target)
            # subtract components so w pairs to zero with both p and q
            w2 = _combine(w, p, ONE, alpha)
            w2 = _combine(w2, q, ONE, beta)
            new_rest.append(w2)
        rest = [w for w in new_rest if any(not e.is_zero() for e in w)]
    return firsts, seconds


def witness_general_semisimple(
    x: ExactMatrix, ctx: LieContext, want_involution: bool
) -> ReverserCertificate:
    """Reverser for an arbitrary semisimple element with Q(i) spectrum.

    Builds an algebra-compatible eigenbasis, delegates to the canonical
    construction, and conjugates the witness back.
    """
    _require_semisimple_member(x, ctx)
    if x.is_zero():
        cert = ReverserCertificate(x, ExactMatrix.identity(x.rows), ctx, want_involution)
        assert verify_certificate(cert).ok
        return cert
    eigen = _eigen_data(x)
    if ctx.algebra in ("gl", "sl"):
        values, columns = [], []
        for lam, basis in eigen:
            values.extend([lam] * len(basis))
            columns.extend(basis)
        canon = CanonicalSemisimple(ctx.algebra, tuple(values))
        s = ExactMatrix.from_columns(columns)
    elif ctx.algebra == "so":
        canon, s = _so_eigenbasis(x, eigen)
    else:  # sp
        canon, s = _sp_eigenbasis(x, eigen, ctx)
    inner = witness_semisimple(canon, ctx, want_involution)
    g = s * inner.reverser * inverse(s)
    cert = ReverserCertificate(x, g, ctx, want_involution)
    report = verify_certificate(cert)
    assert report.ok, f"general witness failed verification: {report.failures}"
    return cert


def _so_eigenbasis(x: ExactMatrix, eigen):
    """Columns turning x into canonical rotation-block form while keeping
    the symmetric form compatible: paired eigenvectors are mixed into
    exact 'cosine/sine' combinations, the kernel is orthogonalized but
    not normalized (the canonical witness never needs unit lengths)."""
    pairing = _bilinear(None)
    by_value = {lam: basis for lam, basis in eigen}
    half = GaussRat.parse("1/2")
    columns = []
    params = []
    reps = [
        lam
        for lam, _ in eigen
        if not lam.is_zero() and lam == _pair_rep(lam)
    ]
    for lam in reps:
        us = by_value[lam]
        vs_raw = by_value.get(-lam)
        assert vs_raw is not None and len(vs_raw) == len(us)
        vs = _dual_basis(us, vs_raw, pairing, half)
        for u, v in zip(us, vs):
            f1 = _combine(u, v, ONE, ONE)
            f2 = _combine(u, v, -I, I)
            columns.extend([f1, f2])
            params.append(-I * lam)
    zero_basis = by_value.get(GaussRat.from_int(0), [])
    r = len(zero_basis)
    if zero_basis:
        columns.extend(_orthogonalize_symmetric(zero_basis, pairing))
    canon = CanonicalSemisimple("so", tuple(params), r)
    return canon, ExactMatrix.from_columns(columns)


def _sp_eigenbasis(x: ExactMatrix, eigen, ctx: LieContext):
    """Symplectic eigenbasis: columns (u_1..u_n | w_1..w_n) whose Gram
    matrix under x^t J y is exactly J, mapping x to diag(h, -h)."""
    j = jn_matrix(ctx.n)
    pairing = _bilinear(j)
    by_value = {lam: basis for lam, basis in eigen}
    first, second, hvals = [], [], []
    reps = [
        lam for lam, _ in eigen if not lam.is_zero() and lam == _pair_rep(lam)
    ]
    minus_one = -ONE
    for lam in reps:
        us = by_value[lam]
        ws_raw = by_value.get(-lam)
        assert ws_raw is not None and len(ws_raw) == len(us)
        ws = _dual_basis(us, ws_raw, pairing, minus_one)
        first.extend(us)
        second.extend(ws)
        hvals.extend([lam] * len(us))
    zero_basis = by_value.get(GaussRat.from_int(0), [])
    if zero_basis:
        zf, zs = _symplectic_pair_basis(zero_basis, pairing, minus_one)
        first.extend(zf)
        second.extend(zs)
        hvals.extend([ZERO] * len(zf))
    canon = CanonicalSemisimple("sp", tuple(hvals))
    return canon, ExactMatrix.from_columns(first + second)
