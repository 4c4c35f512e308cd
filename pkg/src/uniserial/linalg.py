"""Exact dense linear algebra over Gaussian rationals.

Every computation in the package reduces to the primitives here: reduced
row echelon form, kernel bases, linear solves and the trace-form radical
of a matrix algebra.  No floating point anywhere; scalars are pairs of
exact rationals (gmpy2.mpq when available, fractions.Fraction otherwise).
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is optional
    from fractions import Fraction as _Q


class Scalar:
    """A Gaussian rational re + im*i with exact, canonical components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is type(_ZERO_Q) else _Q(re))
        object.__setattr__(self, "im", im if type(im) is type(_ZERO_Q) else _Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def rational(num, den=1):
        return Scalar(_Q(num, den))

    @staticmethod
    def imaginary(num=1, den=1):
        return Scalar(0, _Q(num, den))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        # real-only fast path; most entries in practice are rational
        if not self.im and not other.im:
            return Scalar(self.re * other.re)
        a, b, c, d = self.re, self.im, other.re, other.im
        return Scalar(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        if not other.re and not other.im:
            raise ZeroDivisionError("division by zero Scalar")
        if not self.im and not other.im:
            return Scalar(self.re / other.re)
        c, d = other.re, other.im
        n = c * c + d * d
        a, b = self.re, self.im
        return Scalar((a * c + b * d) / n, (b * c - a * d) / n)

    def conjugate(self):
        return Scalar(self.re, -self.im)

    def is_rational(self):
        return not self.im

    def __repr__(self):
        return "Scalar(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


_ZERO_Q = _Q(0)
ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def _format_q(q) -> str:
    return str(q)


def format_scalar(s: Scalar) -> str:
    """Canonical text form: 0, 1/2, -2, i, -i, 1/3*i, 1/2-1/3*i."""
    if not s.im:
        return _format_q(s.re)
    if s.im == 1:
        imtxt = "i"
    elif s.im == -1:
        imtxt = "-i"
    else:
        imtxt = "%s*i" % _format_q(s.im)
    if not s.re:
        return imtxt
    sign = "+" if not imtxt.startswith("-") else ""
    return "%s%s%s" % (_format_q(s.re), sign, imtxt)


def parse_scalar(text: str) -> Scalar:
    """Parse an exact Gaussian-rational literal.

    Accepts rationals (``2``, ``-1/3``), pure imaginaries (``i``, ``-i``,
    ``2*i``, ``i/3``) and sums such as ``1/2+1/3*i`` or ``1/2-i``.
    Raises ValueError on anything else; no floats.
    """
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty scalar literal")
    # split into at most two signed terms at a top-level + or - (not the leading sign)
    terms = []
    start = 0
    for pos in range(1, len(t)):
        if t[pos] in "+-" and t[pos - 1] not in "+-*/":
            terms.append(t[start:pos])
            start = pos
    terms.append(t[start:])
    if len(terms) > 2:
        raise ValueError("bad scalar literal: %r" % text)
    re_q = _Q(0)
    im_q = _Q(0)
    seen_im = seen_re = False
    for term in terms:
        if "i" in term:
            if seen_im:
                raise ValueError("bad scalar literal: %r" % text)
            seen_im = True
            im_q = _parse_imag_term(term, text)
        else:
            if seen_re:
                raise ValueError("bad scalar literal: %r" % text)
            seen_re = True
            re_q = _parse_q(term, text)
    return Scalar(re_q, im_q)


def _parse_q(term: str, orig: str):
    try:
        if "/" in term:
            num, den = term.split("/")
            return _Q(int(num), int(den))
        return _Q(int(term))
    except (ValueError, ZeroDivisionError):
        raise ValueError("bad rational literal %r in %r" % (term, orig)) from None


def _parse_imag_term(term: str, orig: str):
    sign = _Q(1)
    if term.startswith("-"):
        sign = _Q(-1)
        term = term[1:]
    elif term.startswith("+"):
        term = term[1:]
    if term == "i":
        return sign
    if term.endswith("*i"):
        return sign * _parse_q(term[:-2], orig)
    if term.startswith("i/"):
        return sign / _parse_q(term[2:], orig)
    raise ValueError("bad imaginary literal %r in %r" % (term, orig))


class Matrix:
    """Immutable dense matrix of Scalars; supports 0-row/0-column shapes."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data):
        entries = tuple(tuple(r) for r in data)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry table does not match %dx%d" % (rows, cols))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def from_rows(data) -> "Matrix":
        data = [list(r) for r in data]
        return Matrix(len(data), len(data[0]) if data else 0, data)

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def from_columns(cols, rows: int) -> "Matrix":
        cols = list(cols)
        return Matrix(rows, len(cols), [[c[i] for c in cols] for i in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other):
        self._check_shape(other, same=True)
        return Matrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
        )

    def __sub__(self, other):
        self._check_shape(other, same=True)
        return Matrix(
            self.rows,
            self.cols,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
        )

    def __neg__(self):
        return Matrix(self.rows, self.cols, [[-a for a in r] for r in self._data])

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(self.rows, self.cols, [[c * a for a in r] for r in self._data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d * %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        ot = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            orow = []
            for c in ot:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                orow.append(acc)
            out.append(orow)
        return Matrix(self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix times column vector (tuple of Scalars)."""
        if len(vec) != self.cols:
            raise ValueError("vector length %d != cols %d" % (len(vec), self.cols))
        out = []
        for r in self._data:
            acc = ZERO
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, list(zip(*self._data)) if self.rows else [[] for _ in range(self.cols)])

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self._data[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(not a for r in self._data for a in r)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.rows, self.cols + other.cols, [ra + rb for ra, rb in zip(self._data, other._data)])

    def _check_shape(self, other, same=False):
        if not isinstance(other, Matrix):
            raise TypeError("expected Matrix")
        if same and (self.rows != other.rows or self.cols != other.cols):
            raise ValueError("shape mismatch")

    def __repr__(self):
        return "Matrix(%d, %d, %s)" % (
            self.rows,
            self.cols,
            [[format_scalar(a) for a in r] for r in self._data],
        )


def _rref_rows(rows, cols):
    """In-place rref of a list of row lists; returns pivot column list.

    Skips zero multipliers and only touches the nonzero tail of the pivot
    row, which keeps elimination fast on the banded systems produced by
    intertwining and cocycle constraints.
    """
    m = len(rows)
    piv = 0
    pivots = []
    for c in range(cols):
        target = None
        for i in range(piv, m):
            if rows[i][c]:
                target = i
                break
        if target is None:
            continue
        rows[piv], rows[target] = rows[target], rows[piv]
        pr = rows[piv]
        inv = ONE / pr[c]
        nz = [j for j in range(c, cols) if pr[j]]
        if inv != ONE:
            for j in nz:
                pr[j] = inv * pr[j]
        for i in range(m):
            if i != piv:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nz:
                        ri[j] = ri[j] - f * pr[j]
        pivots.append(c)
        piv += 1
        if piv == m:
            break
    return pivots


def rref(m: Matrix):
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    rows = [list(r) for r in m._data]
    pivots = _rref_rows(rows, m.cols)
    return Matrix(m.rows, m.cols, rows), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix):
    """Basis of the null space as a list of column vectors."""
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(tuple(v))
    return basis


def solve(a: Matrix, b):
    """Some x with a*x = b (column vector), or None if inconsistent."""
    if len(b) != a.rows:
        raise ValueError("rhs length %d != rows %d" % (len(b), a.rows))
    rows = [list(r) + [bv] for r, bv in zip(a._data, b)]
    if a.rows == 0:
        return tuple([ZERO] * a.cols)
    pivots = _rref_rows(rows, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [ZERO] * a.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][a.cols]
    return tuple(x)


def solve_matrix(a: Matrix, b: Matrix):
    """Some X with a*X = b, or None if any column is inconsistent."""
    if a.rows != b.rows:
        raise ValueError("row mismatch in solve_matrix")
    cols = []
    for j in range(b.cols):
        x = solve(a, b.column(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_columns(cols, a.cols)


def column_space_basis(vectors, dim: int):
    """Independent spanning subset of the given column vectors, in rref shape.

    Returns the canonical reduced basis of the span (rows of the rref of
    the stacked vectors, transposed back to columns), so equal subspaces
    yield identical bases.
    """
    vecs = [list(v) for v in vectors if any(v)]
    if not vecs:
        return []
    pivots = _rref_rows(vecs, dim)
    return [tuple(vecs[i]) for i in range(len(pivots))]


def in_span(vectors, v) -> bool:
    """Whether column vector v lies in the span of the given vectors."""
    if not any(v):
        return True
    if not vectors:
        return False
    a = Matrix.from_columns(vectors, len(v))
    return solve(a, v) is not None


def inverse(m: Matrix):
    """Inverse of a square matrix, or None if singular."""
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    rows = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m._data)]
    pivots = _rref_rows(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return Matrix(n, n, [r[n:] for r in rows])


def trace_product(a: Matrix, b: Matrix) -> Scalar:
    """trace(a*b) without forming the product; skips zero entries of a."""
    if a.cols != b.rows or a.rows != b.cols:
        raise ValueError("shape mismatch in trace_product")
    acc = ZERO
    for i in range(a.rows):
        row = a.row(i)
        for j in range(a.cols):
            x = row[j]
            if x:
                y = b[j, i]
                if y:
                    acc = acc + x * y
    return acc


def algebra_radical(basis):
    """Jacobson radical of a unital matrix algebra, via the trace form.

    The input spans a unital subalgebra of square matrices (closed under
    product); in characteristic zero the radical is the kernel of the
    bilinear form (x, y) -> trace(xy) restricted to the algebra.  Returns
    a basis of the radical as matrices.
    """
    basis = list(basis)
    if not basis:
        return []
    n = basis[0].rows
    for b in basis:
        if b.rows != b.cols:
            raise ValueError("algebra basis contains a non-square matrix")
        if b.rows != n:
            raise ValueError("algebra basis has inconsistent dimensions")
    gram = Matrix(
        len(basis),
        len(basis),
        [[trace_product(bi, bj) for bj in basis] for bi in basis],
    )
    rad = []
    for coeffs in kernel_basis(gram):
        acc = Matrix.zero(n, n)
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + b.scale(c)
        rad.append(acc)
    return rad
