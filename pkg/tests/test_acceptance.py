"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Every check is exact; the asserted time limits are
the contract limits for this suite.
"""

import random
import time

from conftest import rewrite_oracle, words_up_to

from uniserial import abcat
from uniserial.abcat import ExtSpace
from uniserial.itext import (
    deformation_dimension_check,
    from_deformation,
    path_algebra,
    splice,
    to_deformation,
)
from uniserial.linalg import ONE, parse_scalar
from uniserial.quiverrep import KRONECKER, QuiverPresentation, simple_at
from uniserial.species import Species, classify, realize_vector, species_of, uc_check
from uniserial.weyl import EulerPolynomial, WeylElement, normal_form
from uniserial.weylcat import (
    euler_tower_class,
    verify_theorem,
    weyl_label,
    weyl_simple_family,
)

HALF = parse_scalar("1/2")
MIXED = parse_scalar("1/3+1/2*i")
ALPHAS = (HALF, MIXED)


def report(name, ok, elapsed, limit, detail=""):
    line = "criterion %-28s %s in %6.2fs (limit %gs)%s" % (
        name,
        "PASS" if ok else "FAIL",
        elapsed,
        limit,
        " " + detail if detail else "",
    )
    print(line)
    assert ok, line
    assert elapsed < limit, line


def test_criterion_1_weyl_relations():
    t0 = time.time()
    ok = True
    for w in words_up_to(6):
        ok = ok and normal_form([(1, w)]) == rewrite_oracle(w)
    t = WeylElement.gen_t()
    d = WeylElement.gen_d()
    ok = ok and (d * t - t * d == WeylElement.one())
    for b in range(1, 6):
        ok = ok and EulerPolynomial.falling(b).to_weyl() == WeylElement.monomial(b, b)
    report("1 (weyl relations)", ok, time.time() - t0, 1.0)


def _ext_table(window):
    bases = [HALF, MIXED, "0", "inf"]
    sources = weyl_simple_family(bases, [0], window)
    targets = dict(weyl_simple_family(bases, range(-2, 3), window))
    table = {}
    for la, a in sources:
        for base_b in bases:
            for off in range(-2, 3):
                lb = weyl_label(base_b, off)
                table[(la, lb)] = ExtSpace(a, targets[lb]).dim()
    return table


def _expected_entry(la, lb):
    base_a, _ = la.rsplit("@", 1)
    base_b, off = lb.rsplit("@", 1)
    if off != "0":
        return 0
    boundary = {("0", "inf"), ("inf", "0")}
    if (base_a, base_b) in boundary:
        return 1
    if base_a == base_b and base_a not in ("0", "inf"):
        return 1
    return 0


def test_criterion_2_ext_table():
    t0 = time.time()
    table = _ext_table((-8, 8))
    ok = all(d == _expected_entry(la, lb) for (la, lb), d in table.items())
    report("2 (ext table)", ok, time.time() - t0, 10.0, "%d entries" % len(table))


def test_criterion_3_uc_checker():
    t0 = time.time()
    fam = weyl_simple_family([HALF, MIXED, "0", "inf"], [0], (-6, 6))
    ok = uc_check(species_of(fam)).ok
    double = uc_check(Species(("a", "b"), (("a", "b", 2),)))
    fan_out = uc_check(Species(("a", "b", "c"), (("a", "b", 1), ("a", "c", 1))))
    fan_in = uc_check(Species(("a", "b", "c"), (("a", "c", 1), ("b", "c", 1))))
    ok = ok and not double.ok and double.pattern[0] == "double arrow"
    ok = ok and not fan_out.ok and fan_out.pattern[0] == "fan-out"
    ok = ok and not fan_in.ok and fan_in.pattern[0] == "fan-in"
    report("3 (criterion checker)", ok, time.time() - t0, 1.0)


FAN_OUT = QuiverPresentation(["u", "s", "t"], [("a", "u", "s"), ("b", "u", "t")])
FAN_IN = QuiverPresentation(["s", "t", "u"], [("a", "s", "u"), ("b", "t", "u")])


def test_criterion_4_counterexamples():
    t0 = time.time()
    ok = True

    # double arrow: glue two non-isomorphic nonsplit extensions over the sub
    s1 = simple_at(KRONECKER, "1")
    s2 = simple_at(KRONECKER, "2")
    kron_family = (("1", s1), ("2", s2))
    u_cls, v_cls = abcat.ext1_basis(s1, s2)
    u_obj, u_inj, _ = abcat.realize_extension(u_cls)
    v_obj, v_inj, _ = abcat.realize_extension(v_cls)
    ok = ok and not abcat.are_isomorphic(u_obj, v_obj)
    ds = abcat.direct_sum(u_obj, v_obj)
    diag = (ds.inj1 * u_inj) + (ds.inj2 * v_inj)
    spaces = {s: abcat.column_space_basis(diag.mats[s].columns(), ds.obj.slot_dim(s)) for s in ds.obj.slot_ids()}
    x1, _ = abcat.quotient_object(ds.obj, spaces)
    ok = ok and abcat.is_indecomposable(x1)[0]
    ok = ok and not abcat.is_uniserial(x1, kron_family)[0]
    soc = abcat.socle(x1, kron_family)
    ok = ok and sum(c for _, c in soc.multiplicities) == 1

    # fan-out: pullback with two distinct minimal subobjects
    fo_fam = tuple((n, simple_at(FAN_OUT, n)) for n in ("s", "t", "u"))
    (xi1,) = abcat.ext1_basis(simple_at(FAN_OUT, "u"), simple_at(FAN_OUT, "s"))
    (xi2,) = abcat.ext1_basis(simple_at(FAN_OUT, "u"), simple_at(FAN_OUT, "t"))
    _, _, g1 = abcat.realize_extension(xi1)
    _, _, g2 = abcat.realize_extension(xi2)
    x2, _, _ = abcat.fiber_product(g1, g2)
    ok = ok and abcat.is_indecomposable(x2)[0]
    soc2 = abcat.socle(x2, fo_fam)
    ok = ok and dict(soc2.multiplicities) == {"s": 1, "t": 1, "u": 0}

    # fan-in: pushout, indecomposable, non-uniserial, two composition series
    fi_fam = tuple((n, simple_at(FAN_IN, n)) for n in ("u", "s", "t"))
    (eta1,) = abcat.ext1_basis(simple_at(FAN_IN, "s"), simple_at(FAN_IN, "u"))
    (eta2,) = abcat.ext1_basis(simple_at(FAN_IN, "t"), simple_at(FAN_IN, "u"))
    _, f1, _ = abcat.realize_extension(eta1)
    _, f2, _ = abcat.realize_extension(eta2)
    x3, i1, i2 = abcat.amalgamated_sum(f1, f2)
    ok = ok and abcat.is_indecomposable(x3)[0]
    ok = ok and not abcat.is_uniserial(x3, fi_fam)[0]
    mid1 = {s: abcat.column_space_basis(i1.mats[s].columns(), x3.slot_dim(s)) for s in x3.slot_ids()}
    mid2 = {s: abcat.column_space_basis(i2.mats[s].columns(), x3.slot_dim(s)) for s in x3.slot_ids()}
    ok = ok and mid1 != mid2

    report("4 (counterexamples)", ok, time.time() - t0, 5.0)


def test_criterion_5_classification_equivalence():
    t0 = time.time()
    rep = verify_theorem(4, alphas=ALPHAS)
    detail = "" if rep.ok else "; ".join(r.key.describe() for r in rep.failures())
    report("5 (classification)", rep.ok, time.time() - t0, 60.0, detail)
    # stash for the stability rerun
    test_criterion_5_classification_equivalence.base = [(r.key.describe(), r.ok) for r in rep.results]
    test_criterion_5_classification_equivalence.elapsed = time.time() - t0


def test_criterion_6_non_splitness():
    t0 = time.time()
    ok = True
    for alpha in ALPHAS:
        for n in (2, 3):
            cls = euler_tower_class(alpha, n, (-(n + 4), n + 4))
            ok = ok and not cls.is_zero()
    report("6 (non-split towers)", ok, time.time() - t0, 5.0)


def _random_splices(pool, families, rng, rounds):
    ok = True
    fam = families
    for _ in range(rounds):
        e_sub = rng.choice(pool)
        e_quot = rng.choice(pool)
        classes = abcat.ext1_basis(e_quot.x, e_sub.x)
        if classes and rng.random() < 0.7:
            _, inj, surj = abcat.realize_extension(rng.choice(classes))
        else:
            ds = abcat.direct_sum(e_sub.x, e_quot.x)
            inj, surj = ds.inj1, ds.proj2
        spliced = splice(e_sub, e_quot, inj, surj)
        ok = ok and spliced.length == e_sub.length + e_quot.length
        series = abcat.composition_series(spliced.x, fam)
        expected = {}
        for lbl in list(e_sub.order_vector) + list(e_quot.order_vector):
            expected[lbl] = expected.get(lbl, 0) + 1
        ok = ok and series.multiplicities() == expected
    return ok


def test_criterion_7_splicing():
    t0 = time.time()
    rng = random.Random(2024)
    wfam = weyl_simple_family([HALF, "0", "inf"], [0], (-6, 6))
    wpool = [
        realize_vector(("1/2@0",), wfam),
        realize_vector(("1/2@0", "1/2@0"), wfam),
        realize_vector(("0@0", "inf@0"), wfam),
        realize_vector(("inf@0", "0@0"), wfam),
    ]
    ok = _random_splices(wpool, wfam, rng, 5)
    a3 = QuiverPresentation(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    qfam = tuple((n, simple_at(a3, n)) for n in ("1", "2", "3"))
    qpool = [
        realize_vector(("1",), qfam),
        realize_vector(("2",), qfam),
        realize_vector(("1", "2"), qfam),
        realize_vector(("2", "3"), qfam),
        realize_vector(("1", "2", "3"), qfam),
    ]
    ok = ok and _random_splices(qpool, qfam, rng, 5)
    report("7 (splicing)", ok, time.time() - t0, 5.0)


def test_criterion_8_deformation_roundtrip():
    t0 = time.time()
    ok = True
    wfam = weyl_simple_family([HALF, "0", "inf"], [0], (-7, 7))
    wspec = species_of(wfam)
    a3 = QuiverPresentation(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    qfam = tuple((n, simple_at(a3, n)) for n in ("1", "2", "3"))
    qspec = species_of(qfam)
    outputs = []
    for spec, fam in ((wspec, wfam), (qspec, qfam)):
        for n in (1, 2, 3):
            outputs.extend((item, fam) for item in classify(spec, fam, n))
    assert outputs
    for item, fam in outputs:
        e = item.extension
        d = to_deformation(e)
        back = from_deformation(d)
        ok = ok and back.order_vector == e.order_vector
        ok = ok and abcat.are_isomorphic(back.x, e.x)
        ok = ok and deformation_dimension_check(d)
        alg = path_algebra(d.gamma)
        ok = ok and alg.radical_power_zero(len(e.order_vector))
    report("8 (deformation roundtrip)", ok, time.time() - t0, 30.0, "%d objects" % len(outputs))


def test_criterion_9_window_stability():
    t0 = time.time()
    base_table = _ext_table((-8, 8))
    grown_table = _ext_table((-10, 10))
    ok = base_table == grown_table
    rep = verify_theorem(4, alphas=ALPHAS, window_pad=2)
    grown = [(r.key.describe(), r.ok) for r in rep.results]
    base = getattr(test_criterion_5_classification_equivalence, "base", None)
    if base is None:
        base_rep = verify_theorem(4, alphas=ALPHAS)
        base = [(r.key.describe(), r.ok) for r in base_rep.results]
    ok = ok and grown == base
    elapsed = time.time() - t0
    base_elapsed = getattr(test_criterion_5_classification_equivalence, "elapsed", 30.0)
    limit = 2 * (base_elapsed + 10.0)
    report("9 (window stability)", ok, elapsed, limit)
