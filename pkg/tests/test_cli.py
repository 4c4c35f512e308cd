from uniserial.cli import main, parse_report
from uniserial.gradedrep import from_text as gradedrep_from_text
from uniserial.species import Species, species_to_text


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def write_species(path, s):
    path.write_text(species_to_text(s))
    return str(path)


KRONECKER_SPECIES = Species(("1", "2"), (("1", "2", 2),))
CHAIN_SPECIES = Species(("a", "b"), (("a", "b", 1),))


A3_FILE = """specfile quiver v1
node 1
node 2
node 3
arrow a 1 2
arrow b 2 3
"""


def test_check_uc_uniserial(tmp_path, capsys):
    p = write_species(tmp_path / "s.species", CHAIN_SPECIES)
    status, out, _ = run(capsys, "check-uc", p)
    assert status == 0
    assert "uniserial" in out


def test_check_uc_violated(tmp_path, capsys):
    p = write_species(tmp_path / "s.species", KRONECKER_SPECIES)
    status, out, _ = run(capsys, "check-uc", p)
    assert status == 1
    assert "double arrow" in out


def test_check_uc_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.species"
    bad.write_text("not a species file\n")
    status, _, err = run(capsys, "check-uc", str(bad))
    assert status == 2
    assert "input error" in err


def test_check_uc_missing_file(capsys):
    status, _, err = run(capsys, "check-uc", "/nonexistent/file.species")
    assert status == 2


def test_check_uc_machine_roundtrip(tmp_path, capsys):
    p = write_species(tmp_path / "s.species", KRONECKER_SPECIES)
    status, out, _ = run(capsys, "check-uc", p, "--format", "machine")
    assert status == 1
    name, payload = parse_report(out)
    assert name == "check-uc-report"
    assert payload["uniserial"] is False
    assert payload["pattern"][0] == "double arrow"
    # emit -> parse -> emit is a fixed point
    from uniserial.cli import emit_report

    assert emit_report(name, payload) == out


def test_classify_weyl_inf_start(capsys):
    from uniserial.cli import emit_report

    status, out, _ = run(
        capsys, "classify", "--start", "inf", "--n", "2", "--format", "machine"
    )
    assert status == 0
    name, payload = parse_report(out)
    assert name == "classify-report"
    assert emit_report(name, payload) == out
    assert payload["start"] == "inf@0"
    assert len(payload["realized"]) == 1
    rec = payload["realized"][0]
    assert rec["order_vector"] == ["inf@0", "0@0"]
    assert rec["factors"] == ["inf@0", "0@0"]
    obj = gradedrep_from_text(rec["object"])
    # D/D(dt) has one-dimensional pieces on the whole window
    assert all(obj.dims[w] == 1 for w in obj.slot_ids())


def test_classify_quiver(tmp_path, capsys):
    qf = tmp_path / "a3.quiver"
    qf.write_text(A3_FILE)
    status, out, _ = run(capsys, "classify", "--quiver", str(qf), "--n", "2", "--format", "machine")
    assert status == 0
    _, payload = parse_report(out)
    assert [r["order_vector"] for r in payload["realized"]] == [["1", "2"], ["2", "3"]]


def test_classify_reports_obstructed_vector(tmp_path, capsys):
    qf = tmp_path / "loop.quiver"
    qf.write_text("specfile quiver v1\nnode 1\narrow x 1 1\nrelation 1*x.x\n")
    status, out, _ = run(capsys, "classify", "--quiver", str(qf), "--n", "3", "--format", "machine")
    assert status == 0
    _, payload = parse_report(out)
    # the arrow condition admits the vector but no object realizes it
    assert payload["admissible_vectors"] == [["1", "1", "1"]]
    assert payload["realized"] == []


def test_classify_weyl_object_matches_catalog():
    from uniserial import abcat
    from uniserial.cli import main as cli_main
    from uniserial.weylcat import CatalogKey, catalog_module
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        status = cli_main(["classify", "--start", "inf", "--n", "2", "--format", "machine"])
    assert status == 0
    _, payload = parse_report(buf.getvalue())
    obj = gradedrep_from_text(payload["realized"][0]["object"])
    cat = catalog_module(CatalogKey("word", None, "inf", 2), obj.window)
    assert abcat.are_isomorphic(obj, cat)


def test_classify_refuses_criterion_violation(tmp_path, capsys):
    qf = tmp_path / "kron.quiver"
    qf.write_text("specfile quiver v1\nnode 1\nnode 2\narrow a 1 2\narrow b 1 2\n")
    status, out, _ = run(capsys, "classify", "--quiver", str(qf), "--n", "2")
    assert status == 1
    assert "check-uc" in out


def test_classify_n1_simples(capsys):
    status, out, _ = run(capsys, "classify", "--start", "1/2", "--n", "1", "--format", "machine")
    assert status == 0
    _, payload = parse_report(out)
    assert payload["realized"][0]["order_vector"] == ["1/2@0"]


def test_classify_normalize_alpha(capsys):
    status, out, _ = run(
        capsys, "classify", "--start", "5/2", "--n", "1", "--normalize-alpha", "--format", "machine"
    )
    assert status == 0
    _, payload = parse_report(out)
    assert payload["start"] == "1/2@-2"


def test_classify_rejects_out_of_range_alpha(capsys):
    status, _, err = run(capsys, "classify", "--start", "5/2", "--n", "1")
    assert status == 2
    assert "normalize" in err


def test_ext_table_matches(capsys):
    status, out, _ = run(
        capsys, "ext-table", "--labels", "1/2,1/3+1/2*i", "--max-offset", "1", "--format", "machine"
    )
    assert status == 0
    _, payload = parse_report(out)
    assert payload["matches_expected"] is True
    nonzero = {(e["from"], e["to"]) for e in payload["entries"] if e["dim"]}
    assert ("1/2@0", "1/2@0") in nonzero
    assert ("0@0", "inf@0") in nonzero
    assert ("inf@0", "0@0") in nonzero
    assert len(nonzero) == 4


def test_ext_table_emit_species_feeds_check_uc(tmp_path, capsys):
    sp = tmp_path / "weyl.species"
    status, _, _ = run(
        capsys, "ext-table", "--max-offset", "1", "--emit-species", str(sp)
    )
    assert status == 0
    status, out, _ = run(capsys, "check-uc", str(sp))
    assert status == 0
    assert "uniserial" in out


def test_ext_table_window_too_small(capsys):
    status, _, err = run(capsys, "ext-table", "--window", "-2", "2")
    assert status == 2
    assert "window" in err


def test_weyl_module_roundtrips(tmp_path, capsys):
    status, out, _ = run(
        capsys, "weyl-module", "--kind", "euler", "--alpha", "1/2", "--n", "2", "--format", "machine"
    )
    assert status == 0
    obj = gradedrep_from_text(out)
    assert all(obj.dims[w] == 2 for w in obj.slot_ids())


def test_weyl_module_word(capsys):
    status, out, _ = run(
        capsys, "weyl-module", "--kind", "word", "--beta", "0", "--n", "1", "--format", "machine"
    )
    assert status == 0
    obj = gradedrep_from_text(out)
    support = [w for w in obj.slot_ids() if obj.dims[w]]
    assert min(support) == 0


def test_weyl_module_window_too_small(capsys):
    status, _, err = run(
        capsys, "weyl-module", "--kind", "euler", "--alpha", "1/2", "--n", "4", "--window", "-3", "3"
    )
    assert status == 2


def test_verify_weyl_passes(capsys):
    from uniserial.cli import emit_report

    status, out, _ = run(capsys, "verify-weyl", "--n-max", "2", "--format", "machine")
    assert status == 0
    name, payload = parse_report(out)
    assert payload["ok"] is True
    assert all(r["ok"] for r in payload["results"])
    assert emit_report(name, payload) == out


def test_verify_weyl_window_too_small(capsys):
    status, _, err = run(capsys, "verify-weyl", "--n-max", "3", "--window", "-3", "3")
    assert status == 2
    assert "window" in err


def test_verify_weyl_human(capsys):
    status, out, _ = run(capsys, "verify-weyl", "--n-max", "1")
    assert status == 0
    assert "overall: pass" in out


def test_deform_catalog_key(capsys):
    from uniserial.cli import emit_report

    status, out, _ = run(
        capsys, "deform", "--kind", "euler", "--alpha", "1/2", "--n", "2", "--format", "machine"
    )
    assert status == 0
    name, payload = parse_report(out)
    assert emit_report(name, payload) == out
    assert payload["ok"] is True
    assert payload["order_vector"] == ["1/2@0", "1/2@0"]
    assert payload["psi"]  # nonsplit: some correction present
    assert payload["roundtrip"]["isomorphic"] is True


def test_deform_simple_trivial(capsys):
    status, out, _ = run(
        capsys, "deform", "--kind", "word", "--beta", "0", "--n", "1", "--format", "machine"
    )
    assert status == 0
    _, payload = parse_report(out)
    assert payload["psi"] == []
    assert payload["path_basis"] == ["e:0@0"]


def test_deform_object_file(tmp_path, capsys):
    mod_path = tmp_path / "mod.gradedrep"
    status, _, _ = run(
        capsys,
        "weyl-module", "--kind", "word", "--beta", "0", "--n", "2",
        "--format", "machine", "--output", str(mod_path),
    )
    assert status == 0
    status, out, _ = run(
        capsys,
        "deform", "--object", str(mod_path), "--labels", "0@0,inf@0", "--format", "machine",
    )
    assert status == 0
    _, payload = parse_report(out)
    assert payload["ok"] is True
    assert payload["order_vector"] == ["0@0", "inf@0"]


def test_deform_quiver_split_rep(tmp_path, capsys):
    qf = tmp_path / "a3rep.quiver"
    qf.write_text(A3_FILE + "rep dim 1 1\nrep dim 3 1\n")
    status, out, _ = run(capsys, "deform", "--quiver", str(qf), "--format", "machine")
    assert status == 0
    _, payload = parse_report(out)
    assert payload["psi"] == []
    assert payload["ok"] is True


def test_deform_needs_input(capsys):
    status, _, err = run(capsys, "deform")
    assert status == 2


def test_output_flag(tmp_path, capsys):
    out_path = tmp_path / "report.txt"
    status, out, _ = run(
        capsys, "verify-weyl", "--n-max", "1", "--output", str(out_path)
    )
    assert status == 0
    assert out == ""
    assert "overall: pass" in out_path.read_text()


def test_unknown_command(capsys):
    assert main(["bogus"]) == 2
