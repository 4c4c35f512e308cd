import pytest

from uniserial.linalg import Matrix, Scalar
from uniserial.quiverrep import (
    KRONECKER,
    QuiverPresentation,
    RelationViolation,
    parse_presentation,
    rep,
    simple_at,
    to_text,
)


def M(rows):
    return Matrix.from_rows([[Scalar(e) for e in r] for r in rows])


LOOP = QuiverPresentation(["1"], [("x", "1", "1")], [("1", "1", ((Scalar(1), ("x", "x")),))])


def test_zero_maps_always_valid():
    r = rep(LOOP, {"1": 2}, {})
    assert r.dims == {"1": 2}
    assert r.mats["x"].is_zero()


def test_kronecker_rep():
    r = rep(KRONECKER, {"1": 1, "2": 1}, {"a": M([[1]]), "b": M([[0]])})
    assert r.slot_dim("1") == 1
    assert r.edge_matrix("a") == M([[1]])


def test_loop_relation_enforced():
    good = rep(LOOP, {"1": 2}, {"x": M([[0, 1], [0, 0]])})
    assert good.mats["x"][0, 1] == Scalar(1)
    with pytest.raises(RelationViolation):
        rep(LOOP, {"1": 2}, {"x": Matrix.identity(2)})


def test_shape_check():
    with pytest.raises(ValueError):
        rep(KRONECKER, {"1": 1, "2": 2}, {"a": M([[1]])})


def test_simple_at():
    s1 = simple_at(KRONECKER, "1")
    s2 = simple_at(KRONECKER, "2")
    assert s1.dims == {"1": 1, "2": 0}
    assert s2.dims == {"1": 0, "2": 1}
    assert s1.dims != s2.dims
    with pytest.raises(ValueError):
        simple_at(KRONECKER, "3")


def test_relation_composability_checked():
    with pytest.raises(ValueError):
        QuiverPresentation(
            ["1", "2"],
            [("a", "1", "2")],
            [("1", "2", ((Scalar(1), ("a", "a")),))],
        )


def test_identity_terms():
    # projector relation x^2 - x = 0 written with an identity term times zero
    pres = QuiverPresentation(
        ["1"],
        [("x", "1", "1")],
        [("1", "1", ((Scalar(1), ("x", "x")), (Scalar(-1), ("x",))))],
    )
    rep(pres, {"1": 2}, {"x": M([[1, 0], [0, 0]])})
    with pytest.raises(RelationViolation):
        rep(pres, {"1": 2}, {"x": M([[0, 1], [0, 0]])})


def test_text_roundtrip_presentation_only():
    pres = QuiverPresentation(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3")],
        [("1", "3", ((Scalar(1), ("a", "b")),))],
    )
    text = to_text(pres)
    parsed, parsed_rep = parse_presentation(text)
    assert parsed == pres
    assert parsed_rep is None
    assert to_text(parsed) == text


def test_text_roundtrip_with_rep():
    r = rep(KRONECKER, {"1": 1, "2": 2}, {"a": M([[1], [0]]), "b": M([[0], [1]])})
    text = to_text(KRONECKER, r)
    parsed, parsed_rep = parse_presentation(text)
    assert parsed == KRONECKER
    assert parsed_rep == r
    assert to_text(parsed, parsed_rep) == text


def test_parse_rejects_untagged():
    with pytest.raises(ValueError):
        parse_presentation("node 1\n")


def test_relation_with_gaussian_coefficient_roundtrips():
    from uniserial.linalg import parse_scalar

    pres = QuiverPresentation(
        ["1"],
        [("x", "1", "1"), ("y", "1", "1")],
        [("1", "1", ((parse_scalar("1/2+1/3*i"), ("x", "y")), (parse_scalar("-2*i"), ("y", "x"))))],
    )
    text = to_text(pres)
    parsed, _ = parse_presentation(text)
    assert parsed == pres
    assert to_text(parsed) == text


def test_relation_violation_reports_culprit():
    try:
        rep(LOOP, {"1": 2}, {"x": Matrix.identity(2)})
    except RelationViolation as exc:
        assert "x.x" in str(exc)
    else:
        raise AssertionError("expected RelationViolation")
