"""Finite-dimensional representations of quivers with relations.

The presentation format (see parse_presentation) is:

    specfile quiver v1
    node <name>
    arrow <name> <src> <tgt>
    relation <term> [+|- <term> ...]
    rep dim <node> <d>
    rep map <arrow> <rows>x<cols> <entries>

A relation term is ``coef*path`` (or a bare ``path``), where a path is a
'.'-separated arrow sequence read left to right in application order
(``a.b`` means first a, then b), and ``e(<node>)`` is the identity path.
All terms of one relation must share source and target nodes.  The
optional ``rep`` lines describe one representation, used by commands
that consume concrete objects.
"""

from __future__ import annotations

from .gradedrep import format_matrix, parse_matrix
from .linalg import Matrix, ONE, Scalar, format_scalar, parse_scalar

QUIVER_TAG = "specfile quiver v1"


class QuiverPresentation:
    """Nodes, arrows, and relations; hashable so reps can share it."""

    __slots__ = ("nodes", "arrows", "relation_list")

    def __init__(self, nodes, arrows, relations=()):
        nodes = tuple(str(n) for n in nodes)
        if len(set(nodes)) != len(nodes):
            raise ValueError("duplicate node names")
        arrows = tuple((str(a), str(s), str(t)) for a, s, t in arrows)
        names = [a for a, _, _ in arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        node_set = set(nodes)
        for a, s, t in arrows:
            if s not in node_set or t not in node_set:
                raise ValueError("arrow %s has unknown endpoint" % a)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "arrows", arrows)
        checked = tuple(self._check_relation(r) for r in relations)
        object.__setattr__(self, "relation_list", checked)

    def __setattr__(self, name, value):
        raise AttributeError("QuiverPresentation is immutable")

    def arrow_ends(self, name):
        for a, s, t in self.arrows:
            if a == name:
                return s, t
        raise KeyError(name)

    def _check_relation(self, rel):
        """A relation is (src, tgt, terms) with terms ((coef, path), ...)."""
        src, tgt, terms = rel
        out_terms = []
        for coef, path in terms:
            path = tuple(path)
            if path:
                here = src
                for name in path:
                    s, t = self.arrow_ends(name)
                    if s != here:
                        raise ValueError("path %r is not composable at %s" % (path, name))
                    here = t
                if here != tgt:
                    raise ValueError("path %r does not end at %s" % (path, tgt))
            else:
                if src != tgt:
                    raise ValueError("identity term needs equal source and target")
            if not isinstance(coef, Scalar):
                coef = Scalar(coef)
            out_terms.append((coef, path))
        return (src, tgt, tuple(out_terms))

    def __eq__(self, other):
        return (
            isinstance(other, QuiverPresentation)
            and self.nodes == other.nodes
            and self.arrows == other.arrows
            and self.relation_list == other.relation_list
        )

    def __hash__(self):
        return hash((self.nodes, self.arrows))

    def __repr__(self):
        return "QuiverPresentation(nodes=%r, arrows=%r, relations=%d)" % (
            self.nodes,
            self.arrows,
            len(self.relation_list),
        )


class RelationViolation(ValueError):
    """A candidate representation fails a relation; carries the culprit."""

    def __init__(self, relation, value):
        self.relation = relation
        self.value = value
        super().__init__("relation %s violated" % format_relation(relation))


class QuiverRep:
    """Validated representation: per-node dimensions and per-arrow matrices."""

    __slots__ = ("pres", "dims", "mats")

    def __init__(self, pres: QuiverPresentation, dims, mats):
        self_dims = {n: int(dims.get(n, 0)) for n in pres.nodes}
        self_mats = {}
        for a, s, t in pres.arrows:
            m = mats.get(a)
            if m is None:
                m = Matrix.zero(self_dims[t], self_dims[s])
            if m.rows != self_dims[t] or m.cols != self_dims[s]:
                raise ValueError("matrix for arrow %s has shape %dx%d, expected %dx%d"
                                 % (a, m.rows, m.cols, self_dims[t], self_dims[s]))
            self_mats[a] = m
        object.__setattr__(self, "pres", pres)
        object.__setattr__(self, "dims", self_dims)
        object.__setattr__(self, "mats", self_mats)
        for rel in pres.relation_list:
            value = self._evaluate(rel)
            if not value.is_zero():
                raise RelationViolation(rel, value)

    def __setattr__(self, name, value):
        raise AttributeError("QuiverRep is immutable")

    def _evaluate(self, rel) -> Matrix:
        src, tgt, terms = rel
        acc = Matrix.zero(self.dims[tgt], self.dims[src])
        for coef, path in terms:
            m = Matrix.identity(self.dims[src])
            for name in path:
                m = self.mats[name] * m
            acc = acc + m.scale(coef)
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, QuiverRep)
            and self.pres == other.pres
            and self.dims == other.dims
            and self.mats == other.mats
        )

    def __hash__(self):
        return hash((self.pres, tuple(sorted(self.dims.items()))))

    # -- protocol used by the category engine -------------------------------

    def slot_ids(self):
        return self.pres.nodes

    def slot_dim(self, node) -> int:
        return self.dims[node]

    def edge_ids(self):
        return tuple(a for a, _, _ in self.pres.arrows)

    def edge_ends(self, name):
        return self.pres.arrow_ends(name)

    def edge_matrix(self, name) -> Matrix:
        return self.mats[name]

    def relations(self):
        return self.pres.relation_list

    def with_matrices(self, dims, mats) -> "QuiverRep":
        return QuiverRep(self.pres, dims, mats)

    def same_space(self, other) -> bool:
        return isinstance(other, QuiverRep) and self.pres == other.pres

    def validate_report(self):
        # relation checks already ran in the constructor
        return []

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def __repr__(self):
        return "QuiverRep(dims=%r)" % (self.dims,)


def rep(pres: QuiverPresentation, dims, mats) -> QuiverRep:
    """Build and validate a representation; raises RelationViolation."""
    return QuiverRep(pres, dims, mats)


def simple_at(pres: QuiverPresentation, node) -> QuiverRep:
    """One-dimensional at the node, zero elsewhere, all arrows zero."""
    node = str(node)
    if node not in pres.nodes:
        raise ValueError("unknown node %r" % node)
    return QuiverRep(pres, {node: 1}, {})


# -- text format -------------------------------------------------------------


def format_relation(rel) -> str:
    """Relation text; imaginary coefficients are parenthesized so the
    factor splitter never has to guess whether 'i' names an arrow."""
    src, tgt, terms = rel
    parts = []
    for coef, path in terms:
        body = ".".join(path) if path else "e(%s)" % src
        ctxt = format_scalar(coef)
        if coef.im:
            ctxt = "(%s)" % ctxt
        parts.append("%s*%s" % (ctxt, body))
    return " + ".join(parts)


def _split_relation_factors(term: str, orig: str):
    factors = []
    depth = 0
    start = 0
    for pos, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses in relation %r" % orig)
        elif ch == "*" and depth == 0:
            factors.append(term[start:pos])
            start = pos + 1
    if depth != 0:
        raise ValueError("unbalanced parentheses in relation %r" % orig)
    factors.append(term[start:])
    return factors


def _parse_relation_text(text: str, pres_nodes, arrow_ends):
    terms = []
    chunk = ""
    depth = 0
    pieces = []
    for ch in text.replace(" ", ""):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and chunk and chunk[-1] not in "*/+-(":
            pieces.append(chunk)
            chunk = ch
        else:
            chunk += ch
    pieces.append(chunk)
    for piece in pieces:
        sign = ONE
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        coef = sign
        path = None
        for factor in _split_relation_factors(piece, text):
            if not factor:
                raise ValueError("empty factor in relation %r" % text)
            if factor.startswith("e(") and factor.endswith(")"):
                node = factor[2:-1]
                path = ()
                anchor = node
            elif all(part in arrow_ends for part in factor.split(".")):
                path = tuple(factor.split("."))
            else:
                coef = coef * parse_scalar(factor if not factor.startswith("(") else factor[1:-1])
        if path is None:
            raise ValueError("relation term %r has no path" % piece)
        if path:
            src = arrow_ends[path[0]][0]
            tgt = arrow_ends[path[-1]][1]
        else:
            src = tgt = anchor
        terms.append((coef, path, src, tgt))
    src = terms[0][2]
    tgt = terms[0][3]
    for _, _, s, t in terms:
        if (s, t) != (src, tgt):
            raise ValueError("relation %r mixes source/target pairs" % text)
    return (src, tgt, tuple((c, p) for c, p, _, _ in terms))


def parse_presentation(text: str):
    """Parse a quiver file; returns (presentation, rep or None)."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or lines[0] != QUIVER_TAG:
        raise ValueError("missing format tag %r" % QUIVER_TAG)
    nodes = []
    arrows = []
    relation_texts = []
    rep_dims = {}
    rep_mats_raw = {}
    has_rep = False
    for ln in lines[1:]:
        parts = ln.split(None, 1)
        key = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if key == "node":
            nodes.append(rest.strip())
        elif key == "arrow":
            name, src, tgt = rest.split()
            arrows.append((name, src, tgt))
        elif key == "relation":
            relation_texts.append(rest)
        elif key == "rep":
            has_rep = True
            sub = rest.split(None, 1)
            if sub[0] == "dim":
                node, d = sub[1].split()
                rep_dims[node] = int(d)
            elif sub[0] == "map":
                arrow, mat_text = sub[1].split(None, 1)
                rep_mats_raw[arrow] = parse_matrix(mat_text)
            else:
                raise ValueError("unknown rep line %r" % ln)
        else:
            raise ValueError("unknown line %r in quiver file" % ln)
    arrow_ends = {a: (s, t) for a, s, t in arrows}
    relations = [_parse_relation_text(t, nodes, arrow_ends) for t in relation_texts]
    pres = QuiverPresentation(nodes, arrows, relations)
    the_rep = QuiverRep(pres, rep_dims, rep_mats_raw) if has_rep else None
    return pres, the_rep


def to_text(pres: QuiverPresentation, the_rep: QuiverRep = None) -> str:
    lines = [QUIVER_TAG]
    lines += ["node %s" % n for n in pres.nodes]
    lines += ["arrow %s %s %s" % (a, s, t) for a, s, t in pres.arrows]
    lines += ["relation %s" % format_relation(r) for r in pres.relation_list]
    if the_rep is not None:
        for n in pres.nodes:
            if the_rep.dims[n]:
                lines.append("rep dim %s %d" % (n, the_rep.dims[n]))
        for a, _, _ in pres.arrows:
            m = the_rep.mats[a]
            if m.rows and m.cols:
                lines.append("rep map %s %s" % (a, format_matrix(m)))
    return "\n".join(lines) + "\n"


KRONECKER = QuiverPresentation(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
