"""Exact dense linear algebra over Q(i) and over Q(i)[x].

Everything here is deterministic: Gaussian elimination always takes the
first nonzero pivot in column order, and the Smith-form reduction picks
the minimal-degree nonzero entry with ties broken in row-major order, so
repeated runs produce identical bases, kernels, and invariant factors.

JSON wire format for matrices:
    {"rows": n, "cols": m, "entries": [["a/b+c/d*i", ...], ...]}
"""

from __future__ import annotations

from .errors import InconsistentSystem, ParseError, SingularMatrix, SizeMismatch
from .gaussian import ONE, ZERO, GaussRat, rational
from .polynomial import ExactPoly, squarefree_part


class ExactMatrix:
    """Immutable dense matrix of GaussRat entries, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        es = tuple(
            e if isinstance(e, GaussRat) else GaussRat.from_int(e) for e in entries
        )
        if len(es) != rows * cols:
            raise SizeMismatch(
                f"expected {rows * cols} entries, got {len(es)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = es

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(rows) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise SizeMismatch("ragged rows")
            flat.extend(row)
        return ExactMatrix(r, c, flat)

    @staticmethod
    def zeros(rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return ExactMatrix(rows, cols, [ZERO] * (rows * cols))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix.diagonal([ONE] * n)

    @staticmethod
    def diagonal(values) -> "ExactMatrix":
        vals = [v if isinstance(v, GaussRat) else GaussRat.from_int(v) for v in values]
        n = len(vals)
        flat = [ZERO] * (n * n)
        for k, v in enumerate(vals):
            flat[k * n + k] = v
        return ExactMatrix(n, n, flat)

    @staticmethod
    def from_columns(columns) -> "ExactMatrix":
        c = len(columns)
        r = len(columns[0]) if c else 0
        flat = [ZERO] * (r * c)
        for j, col in enumerate(columns):
            if len(col) != r:
                raise SizeMismatch("ragged columns")
            for i, v in enumerate(col):
                flat[i * c + j] = v
        return ExactMatrix(r, c, flat)

    @staticmethod
    def block_diagonal(blocks) -> "ExactMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[ZERO] * m for _ in range(n)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[i0 + i][j0 + j] = b[i, j]
            i0 += b.rows
            j0 += b.cols
        return ExactMatrix.from_rows(out)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij) -> GaussRat:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self, i: int):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def column(self, j: int):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_lists(self):
        return [self.row_list(i) for i in range(self.rows)]

    def with_entry(self, i: int, j: int, value: GaussRat) -> "ExactMatrix":
        flat = list(self.entries)
        flat[i * self.cols + j] = value
        return ExactMatrix(self.rows, self.cols, flat)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "ExactMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise SizeMismatch("shape mismatch")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            [a + b for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            [a - b for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: GaussRat) -> "ExactMatrix":
        if isinstance(c, int):
            c = GaussRat.from_int(c)
        return ExactMatrix(self.rows, self.cols, [a * c for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, (GaussRat, int)):
            return self.scale(other)
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise SizeMismatch("inner dimensions differ")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        flat = [ZERO] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for t in range(k):
                av = arow[t]
                if av.is_zero():
                    continue
                brow = b[t * m : (t + 1) * m]
                base = i * m
                for j in range(m):
                    bv = brow[j]
                    if not bv.is_zero():
                        flat[base + j] = flat[base + j] + av * bv
        return ExactMatrix(n, m, flat)

    __rmul__ = scale

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            raise SizeMismatch("vector length mismatch")
        out = []
        for i in range(self.rows):
            s = ZERO
            for j, v in enumerate(vec):
                if not v.is_zero():
                    s = s + self[i, j] * v
            out.append(s)
        return out

    def transpose(self) -> "ExactMatrix":
        flat = [ZERO] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                flat[j * self.rows + i] = self[i, j]
        return ExactMatrix(self.cols, self.rows, flat)

    def trace(self) -> GaussRat:
        if not self.is_square():
            raise SizeMismatch("trace of a non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self[i, i]
        return t

    def power(self, k: int) -> "ExactMatrix":
        if not self.is_square():
            raise SizeMismatch("power of a non-square matrix")
        out = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(e) for e in self.row_list(i)] for i in range(self.rows)],
        }

    @staticmethod
    def from_json(data) -> "ExactMatrix":
        try:
            rows = int(data["rows"])
            cols = int(data["cols"])
            grid = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad matrix JSON: {exc}") from exc
        if len(grid) != rows:
            raise ParseError("matrix JSON row count mismatch")
        flat = []
        for row in grid:
            if len(row) != cols:
                raise ParseError("matrix JSON column count mismatch")
            flat.extend(GaussRat.parse(s) for s in row)
        return ExactMatrix(rows, cols, flat)

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(e) for e in self.row_list(i)) for i in range(self.rows)
        )
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def _rref(rows, width):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(width):
        pivot_row = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv for e in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f.is_zero():
                continue
            rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def solve_linear(a: ExactMatrix, b):
    """Solve a x = b exactly.

    Returns (particular, kernel_basis) where particular is a column vector
    (free variables set to zero) and kernel_basis spans the solution space
    of a x = 0.  Raises InconsistentSystem when no solution exists.
    """
    if len(b) != a.rows:
        raise SizeMismatch("right-hand side length mismatch")
    rows = [a.row_list(i) + [b[i]] for i in range(a.rows)]
    pivots = _rref(rows, a.cols + 1)
    if a.cols in pivots:
        raise InconsistentSystem("no solution")
    particular = [ZERO] * a.cols
    for r, c in enumerate(pivots):
        particular[c] = rows[r][a.cols]
    return particular, _kernel_from_rref(rows, pivots, a.cols)


def kernel(a: ExactMatrix):
    """Basis of the null space of a, deterministic."""
    rows = [a.row_list(i) for i in range(a.rows)]
    pivots = _rref(rows, a.cols)
    return _kernel_from_rref(rows, pivots, a.cols)


def _kernel_from_rref(rows, pivots, ncols):
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][free]
        basis.append(vec)
    return basis


def rank(a: ExactMatrix) -> int:
    rows = [a.row_list(i) for i in range(a.rows)]
    return len(_rref(rows, a.cols))


def det(a: ExactMatrix) -> GaussRat:
    """Determinant by exact elimination with first-nonzero pivoting."""
    if not a.is_square():
        raise SizeMismatch("determinant of a non-square matrix")
    n = a.rows
    rows = [a.row_list(i) for i in range(n)]
    out = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            out = -out
        pv = rows[c][c]
        out = out * pv
        inv = pv.inverse()
        for i in range(c + 1, n):
            f = rows[i][c]
            if f.is_zero():
                continue
            f = f * inv
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return out


def inverse(a: ExactMatrix) -> ExactMatrix:
    if not a.is_square():
        raise SizeMismatch("inverse of a non-square matrix")
    n = a.rows
    rows = [a.row_list(i) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    pivots = _rref(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return ExactMatrix.from_rows([r[n:] for r in rows])


def is_invertible(a: ExactMatrix) -> bool:
    return a.is_square() and not det(a).is_zero()


# ---------------------------------------------------------------------------
# characteristic / minimal polynomial and similarity
# ---------------------------------------------------------------------------


def char_poly(x: ExactMatrix) -> ExactPoly:
    """Characteristic polynomial det(tI - X) by the trace recurrence of
    Faddeev-LeVerrier; exact, no eigenvalues needed."""
    if not x.is_square():
        raise SizeMismatch("characteristic polynomial of a non-square matrix")
    n = x.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = ExactMatrix.zeros(n)
    ident = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        m = x * m + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(x * m).trace() * GaussRat(rational(1, k))
    return ExactPoly(coeffs)


def eval_poly(p: ExactPoly, x: ExactMatrix) -> ExactMatrix:
    """Horner evaluation of p at a square matrix."""
    if not x.is_square():
        raise SizeMismatch("polynomial of a non-square matrix")
    out = ExactMatrix.zeros(x.rows)
    ident = ExactMatrix.identity(x.rows)
    for c in reversed(p.coeffs):
        out = x * out + ident.scale(c)
    return out


class PolyMatrix:
    """Dense matrix with ExactPoly entries; carrier for tI - X."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        es = tuple(entries)
        if len(es) != rows * cols:
            raise SizeMismatch("polynomial matrix entry count mismatch")
        self.rows = rows
        self.cols = cols
        self.entries = es

    def __getitem__(self, ij) -> ExactPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    @staticmethod
    def characteristic(x: ExactMatrix) -> "PolyMatrix":
        """t*I - X as a polynomial matrix."""
        if not x.is_square():
            raise SizeMismatch("characteristic matrix of a non-square matrix")
        n = x.rows
        entries = []
        for i in range(n):
            for j in range(n):
                c = -x[i, j]
                if i == j:
                    entries.append(ExactPoly((c, ONE)))
                else:
                    entries.append(ExactPoly((c,)))
        return PolyMatrix(n, n, entries)


def smith_invariant_factors(pm: PolyMatrix):
    """Diagonal of the Smith normal form over Q(i)[x], monic, ordered so
    that each factor divides the next.

    Pivoting is by minimal degree with row-major tie-breaking; each corner
    step repeats until the pivot divides every remaining entry, which makes
    the divisibility chain hold by construction.
    """
    m = [[pm[i, j] for j in range(pm.cols)] for i in range(pm.rows)]
    nr, nc = pm.rows, pm.cols
    factors = []
    top = 0
    while top < min(nr, nc):
        # locate minimal-degree nonzero entry in the trailing block
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j].is_zero():
                    continue
                if best is None or m[i][j].degree() < m[best[0]][best[1]].degree():
                    best = (i, j)
        if best is None:
            factors.extend([ExactPoly.zero()] * (min(nr, nc) - top))
            break
        bi, bj = best
        if bi != top:
            m[top], m[bi] = m[bi], m[top]
        if bj != top:
            for row in m:
                row[top], row[bj] = row[bj], row[top]
        pivot = m[top][top]
        dirty = False
        for i in range(top + 1, nr):
            if m[i][top].is_zero():
                continue
            q, r = divmod(m[i][top], pivot)
            m[i] = [a - q * b for a, b in zip(m[i], m[top])]
            if not r.is_zero():
                dirty = True
        for j in range(top + 1, nc):
            if m[top][j].is_zero():
                continue
            q, r = divmod(m[top][j], pivot)
            for i in range(nr):
                m[i][j] = m[i][j] - q * m[i][top]
            if not r.is_zero():
                dirty = True
        if dirty:
            continue
        # row/column are clear; make the pivot divide the rest of the block
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if not (m[i][j] % pivot).is_zero():
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[top] = [a + b for a, b in zip(m[top], m[offender])]
            continue
        factors.append(pivot.monic())
        top += 1
    return factors


def invariant_factors(x: ExactMatrix):
    """Invariant factors d1 | d2 | ... | dn of tI - X (monic); their
    product is the characteristic polynomial and the last one is the
    minimal polynomial."""
    return smith_invariant_factors(PolyMatrix.characteristic(x))


def minimal_polynomial(x: ExactMatrix) -> ExactPoly:
    return invariant_factors(x)[-1]


def is_semisimple(x: ExactMatrix) -> bool:
    """True iff the minimal polynomial is squarefree; checked by testing
    whether the squarefree part of the characteristic polynomial already
    annihilates the matrix (equivalent and much cheaper)."""
    q = squarefree_part(char_poly(x))
    return eval_poly(q, x).is_zero()


def is_nilpotent(x: ExactMatrix) -> bool:
    """True iff the minimal polynomial is a power of x, i.e. X^n = 0."""
    if not x.is_square():
        raise SizeMismatch("nilpotency of a non-square matrix")
    return x.power(x.rows).is_zero()


def similar_to_negative(x: ExactMatrix) -> bool:
    """True iff X and -X have identical invariant-factor lists.

    The factors of -X are the monicized d_i(-t), so one Smith reduction
    suffices; for diagonalizable X this is the statement that the spectrum
    is symmetric under negation with multiplicities.
    """
    for f in invariant_factors(x):
        if f.substitute_negated().monic() != f:
            return False
    return True
