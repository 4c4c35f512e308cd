"""Windowed graded modules over the first Weyl algebra as matrix data.

A GradedRep stores, for every weight in a finite window, a vector space
dimension together with the raising action of t and the lowering action
of d.  The commutation rule holds on interior weights; maps that would
leave the window are simply absent, which is the price of truncation and
the reason downstream computations insist on window margins.

Degree-0 morphisms between these objects are handled uniformly by the
category engine (abcat); this module only builds and validates objects.

Conventions: weight(t) = +1, weight(d) = -1; twisting by s shifts all
weights up by s.  The boundary simple of kind D/Dt carries its generator
at weight -1 at twist 0 (support w <= -1), which places both boundary
Ext pairings at equal twist; the other boundary simple D/Dd has its
generator at weight 0 (support w >= 0).
"""

from __future__ import annotations

from .linalg import Matrix, ONE, Scalar, ZERO, format_scalar, parse_scalar
from .weyl import EulerPolynomial, WeylElement, theta, to_theta_form

GRADEDREP_TAG = "specfile gradedrep v1"


class GradedRep:
    """Matrix model of a graded module on a finite weight window."""

    __slots__ = ("window", "dims", "tmat", "pmat")

    def __init__(self, window, dims, tmat, pmat):
        wmin, wmax = window
        if wmin > wmax:
            raise ValueError("degenerate window %r" % (window,))
        self_dims = {w: int(dims.get(w, 0)) for w in range(wmin, wmax + 1)}
        object.__setattr__(self, "window", (wmin, wmax))
        object.__setattr__(self, "dims", self_dims)
        tm = {}
        pm = {}
        for w in range(wmin, wmax):
            m = tmat.get(w)
            if m is None:
                m = Matrix.zero(self_dims[w + 1], self_dims[w])
            if m.rows != self_dims[w + 1] or m.cols != self_dims[w]:
                raise ValueError("t matrix at weight %d has shape %dx%d, expected %dx%d"
                                 % (w, m.rows, m.cols, self_dims[w + 1], self_dims[w]))
            tm[w] = m
        for w in range(wmin + 1, wmax + 1):
            m = pmat.get(w)
            if m is None:
                m = Matrix.zero(self_dims[w - 1], self_dims[w])
            if m.rows != self_dims[w - 1] or m.cols != self_dims[w]:
                raise ValueError("p matrix at weight %d has shape %dx%d, expected %dx%d"
                                 % (w, m.rows, m.cols, self_dims[w - 1], self_dims[w]))
            pm[w] = m
        object.__setattr__(self, "tmat", tm)
        object.__setattr__(self, "pmat", pm)

    def __setattr__(self, name, value):
        raise AttributeError("GradedRep is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GradedRep)
            and self.window == other.window
            and self.dims == other.dims
            and self.tmat == other.tmat
            and self.pmat == other.pmat
        )

    def __hash__(self):
        return hash((self.window, tuple(sorted(self.dims.items()))))

    # -- protocol used by the category engine -------------------------------

    def slot_ids(self):
        wmin, wmax = self.window
        return tuple(range(wmin, wmax + 1))

    def slot_dim(self, w) -> int:
        return self.dims[w]

    def edge_ids(self):
        wmin, wmax = self.window
        out = [("t", w) for w in range(wmin, wmax)]
        out += [("p", w) for w in range(wmin + 1, wmax + 1)]
        return tuple(out)

    def edge_ends(self, edge):
        kind, w = edge
        return (w, w + 1) if kind == "t" else (w, w - 1)

    def edge_matrix(self, edge) -> Matrix:
        kind, w = edge
        return self.tmat[w] if kind == "t" else self.pmat[w]

    def relations(self):
        """Interior commutation identities p.t - t.p = id, in application order."""
        wmin, wmax = self.window
        rels = []
        for w in range(wmin + 1, wmax):
            rels.append(
                (w, w, (
                    (ONE, (("t", w), ("p", w + 1))),
                    (-ONE, (("p", w), ("t", w - 1))),
                    (-ONE, ()),
                ))
            )
        return rels

    def with_matrices(self, dims, mats) -> "GradedRep":
        tm = {w: m for (kind, w), m in mats.items() if kind == "t"}
        pm = {w: m for (kind, w), m in mats.items() if kind == "p"}
        return GradedRep(self.window, dims, tm, pm)

    def same_space(self, other) -> bool:
        return isinstance(other, GradedRep) and self.window == other.window

    def validate_report(self):
        return validate(self)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def euler_action(self, w) -> Matrix:
        """E = t.d acting on the weight-w piece (needs w-1 inside the window)."""
        wmin, wmax = self.window
        if not (wmin < w <= wmax):
            raise ValueError("Euler action needs weight %d-1 inside window" % w)
        return self.tmat[w - 1] * self.pmat[w]

    def __repr__(self):
        return "GradedRep(window=%r, dims=%r)" % (self.window, {w: d for w, d in sorted(self.dims.items()) if d})


def validate(m: GradedRep):
    """Check interior commutation identities; returns a list of violations."""
    violations = []
    wmin, wmax = m.window
    for w in range(wmin + 1, wmax):
        d = m.dims[w]
        lhs = m.pmat[w + 1] * m.tmat[w] - m.tmat[w - 1] * m.pmat[w]
        if lhs != Matrix.identity(d):
            violations.append("commutation identity fails at weight %d" % w)
    return violations


def _raising_factor(w: int) -> EulerPolynomial:
    # t . theta_w = theta_{w+1} . u_w(E)
    if w >= 0:
        return EulerPolynomial.one()
    return EulerPolynomial([Scalar(w + 1), ONE])


def _lowering_factor(w: int) -> EulerPolynomial:
    # d . theta_w = theta_{w-1} . v_w(E)
    if w >= 1:
        return EulerPolynomial([Scalar(w), ONE])
    return EulerPolynomial.one()


def ideal_quotient_rep(p: WeylElement, window) -> GradedRep:
    """Windowed representation of the cyclic quotient by the left ideal of p.

    The weight-w piece is k[E]/(q_w) with q_w the Euler polynomial of
    theta_{w-d} * p, on the basis of residues of theta_w * E^j; the t and
    d actions reduce u_w(E) E^j and v_w(E) E^j modulo the neighbouring q.
    """
    if p.is_zero():
        raise ValueError("zero element generates the unit ideal quotient ambiguously")
    d = p.weight()
    if d is None:
        raise ValueError("element is not homogeneous")
    wmin, wmax = window
    if wmin > wmax:
        raise ValueError("degenerate window %r" % (window,))
    qs = {}
    dims = {}
    for w in range(wmin, wmax + 1):
        prod = theta(w - d) * p
        _, q = to_theta_form(prod)
        if q.is_zero():
            raise ValueError("unexpected zero weight piece generator")
        q = q.monic()
        qs[w] = q
        dims[w] = q.degree()

    def reduce_cols(w_src, w_dst, factor: EulerPolynomial) -> Matrix:
        rows = dims[w_dst]
        cols = []
        for j in range(dims[w_src]):
            poly = factor * EulerPolynomial([ZERO] * j + [ONE])
            rem = poly.mod(qs[w_dst])
            col = list(rem.coeffs) + [ZERO] * (rows - len(rem.coeffs))
            cols.append(tuple(col))
        return Matrix.from_columns(cols, rows)

    tm = {w: reduce_cols(w, w + 1, _raising_factor(w)) for w in range(wmin, wmax)}
    pm = {w: reduce_cols(w, w - 1, _lowering_factor(w)) for w in range(wmin + 1, wmax + 1)}
    return GradedRep(window, dims, tm, pm)


def in_alpha_range(alpha: Scalar) -> bool:
    """Whether alpha indexes an interior simple: 0 <= Re(alpha) < 1, alpha != 0."""
    return bool(alpha) and 0 <= alpha.re < 1


def twist_rep(m: GradedRep, s: int) -> GradedRep:
    """Shift all weights up by s; the window shifts accordingly."""
    if s == 0:
        return m
    wmin, wmax = m.window
    dims = {w + s: d for w, d in m.dims.items()}
    tm = {w + s: mat for w, mat in m.tmat.items()}
    pm = {w + s: mat for w, mat in m.pmat.items()}
    return GradedRep((wmin + s, wmax + s), dims, tm, pm)


def simple_rep(label, twist: int, window) -> GradedRep:
    """Windowed simple module for a label in the alpha range or '0' / 'inf'.

    The result lives on the requested window whatever the twist; the
    boundary label 'inf' carries its built-in generator-weight offset of
    -1 (see module docstring).
    """
    wmin, wmax = window
    if wmin > wmax:
        raise ValueError("degenerate window %r" % (window,))
    if isinstance(label, Scalar):
        if not in_alpha_range(label):
            raise ValueError("label %s outside the simple range 0 <= re < 1, nonzero" % label)
        gen = WeylElement.monomial(1, 1) - WeylElement.monomial(0, 0, label)
        offset = twist
    elif label == "0":
        gen = WeylElement.gen_d()
        offset = twist
    elif label == "inf":
        gen = WeylElement.gen_t()
        offset = twist - 1
    else:
        raise ValueError("unknown simple label %r" % (label,))
    base = ideal_quotient_rep(gen, (wmin - offset, wmax - offset))
    return twist_rep(base, offset)


# -- serialization -----------------------------------------------------------


def format_matrix(m: Matrix) -> str:
    return "%dx%d %s" % (
        m.rows,
        m.cols,
        ";".join(",".join(format_scalar(m[i, j]) for j in range(m.cols)) for i in range(m.rows)),
    )


def parse_matrix(text: str) -> Matrix:
    head, _, body = text.strip().partition(" ")
    rows_s, _, cols_s = head.partition("x")
    rows, cols = int(rows_s), int(cols_s)
    if rows == 0 or cols == 0:
        return Matrix.zero(rows, cols)
    data = [[parse_scalar(e) for e in line.split(",")] for line in body.split(";")]
    return Matrix(rows, cols, data)


def to_text(m: GradedRep) -> str:
    wmin, wmax = m.window
    lines = [GRADEDREP_TAG, "window %d %d" % (wmin, wmax)]
    for w in range(wmin, wmax + 1):
        if m.dims[w]:
            lines.append("dim %d %d" % (w, m.dims[w]))
    for w in range(wmin, wmax):
        mat = m.tmat[w]
        if mat.rows and mat.cols:
            lines.append("map t %d %s" % (w, format_matrix(mat)))
    for w in range(wmin + 1, wmax + 1):
        mat = m.pmat[w]
        if mat.rows and mat.cols:
            lines.append("map p %d %s" % (w, format_matrix(mat)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> GradedRep:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0] != GRADEDREP_TAG:
        raise ValueError("missing format tag %r" % GRADEDREP_TAG)
    window = None
    dims = {}
    tm = {}
    pm = {}
    for ln in lines[1:]:
        parts = ln.split(None, 1)
        key = parts[0]
        if key == "window":
            a, b = parts[1].split()
            window = (int(a), int(b))
        elif key == "dim":
            w, d = parts[1].split()
            dims[int(w)] = int(d)
        elif key == "map":
            kind, w, rest = parts[1].split(None, 2)
            mat = parse_matrix(rest)
            (tm if kind == "t" else pm)[int(w)] = mat
        else:
            raise ValueError("unknown line %r in graded module file" % ln)
    if window is None:
        raise ValueError("graded module file has no window line")
    return GradedRep(window, dims, tm, pm)
