import json

import pytest

import rn_codes

EXAMPLE = {"a": 7, "t": 2, "g": [1, 1], "b": 4, "r": [1, 2], "c": 2, "h": []}


@pytest.fixture
def run(tmp_path):
    """Run the CLI with a JSON input document; return (code, output path)."""

    def runner(args, document=None, fmt="json"):

        out = tmp_path / f"out.{fmt}"
        argv = list(args) + ["--out", str(out)]

        if document is not None:

            path = tmp_path / "in.json"
            path.write_text(document if isinstance(document, str)
                            else json.dumps(document))
            argv += ["--in", str(path)]

        return rn_codes.main(argv), out

    return runner


def load(out):

    return json.loads(out.read_text())


def test_classify_example(run):

    code, out = run(["classify", "--p", "3", "--k", "2"], EXAMPLE)
    report = load(out)

    assert code == rn_codes.EXIT_OK
    assert report["profile"] == [7, 4, 2]
    assert report["classes"] == ["C", "C'"]
    assert report["size_exponent"] == 14
    assert report["consistent"] is True
    assert report["class_C"] == {"valid": True, "case": 1, "violations": []}
    assert report["triple"]["g"] == [[1], [1]]


def test_classify_principal_generator(run):

    code, out = run(["classify"], {"gens": [[[], [], [1]]]})
    report = load(out)

    assert code == 0
    assert report["profile"] == [4, 4, 0]
    assert report["consistent"] is None


def test_classify_raw_basis(run):

    # u^2 S at p = 2, k = 1: the basis u^2, u^2 (x-1)
    basis = [[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]
    code, out = run(["classify", "--k", "1"], {"basis": basis})

    assert code == 0
    assert load(out)["profile"] == [2, 2, 0]


def test_invalid_triple_names_the_violation(run, caplog):

    bad = dict(EXAMPLE, r=[1, 2, 1])
    code, out = run(["classify", "--p", "3", "--k", "2"], bad)

    assert code == rn_codes.EXIT_INVALID
    assert not out.exists()
    assert "deg(r)" in caplog.text


def test_non_ideal_basis_is_rejected(run):

    code, _ = run(["classify", "--k", "1"], {"basis": [[1, 0, 0, 0, 0, 0]]})

    assert code == rn_codes.EXIT_INVALID


def test_malformed_json(run):

    code, _ = run(["classify"], "{not json")

    assert code == rn_codes.EXIT_INVALID


@pytest.mark.parametrize("args, document", [
    (["classify", "--k", "2"], {"gens": [[["z"]]]}),
    (["classify", "--k", "2"], {"gens": [[5]]}),
    (["classify", "--k", "2"], {"gens": 7}),
    (["classify", "--k", "1"], {"basis": [[1, 0]]}),
    (["dual", "--k", "2", "--m", "2"], {"gens": [[[[1, "x"]]]]}),
    (["selfdual", "--mode", "check"], {"t": "one", "g": [1], "h": []}),
    (["selfdual", "--mode", "check"], {"t": 1, "g": ["z"], "h": []}),
    (["selfdual", "--mode", "check"], {"t": 1, "g": 1, "h": []}),
    (["selfdual", "--mode", "check"], {"k": [2], "t": 1, "g": [1]}),
])
def test_malformed_values_exit_invalid(run, args, document):

    code, _ = run(args, document)

    assert code == rn_codes.EXIT_INVALID


def test_dual_of_example(run):

    code, out = run(["dual", "--p", "3", "--k", "2"], EXAMPLE)
    report = load(out)

    assert code == 0
    assert report["annihilator_path"] == "closed-form"
    assert report["annihilator"]["a"] == 7
    assert report["annihilator"]["t"] == 3
    assert report["size_sum_ok"]
    assert report["dual_ring"]["alpha"] == [2]
    assert not report["selfdual"]


def test_dual_of_zero_code(run):

    zero = {"a": 4, "t": 0, "g": [], "b": 4, "r": [], "c": 4, "h": []}
    code, out = run(["dual"], zero)
    report = load(out)

    assert code == 0
    assert report["annihilator_path"] == "linear-algebra"
    assert [report["dual"][key] for key in "abc"] == [0, 0, 0]


def test_dual_flags_selfdual_input(run):

    outside = {"a": 4, "t": 0, "g": [], "b": 2, "r": [], "c": 0, "h": []}
    code, out = run(["dual"], outside)

    assert code == 0
    assert load(out)["selfdual"] is True


def test_selfdual_check_accepts_constant_g(run):

    code, out = run(["selfdual", "--mode", "check"],
                    {"t": 1, "g": [1], "h": [1]})
    report = load(out)

    assert code == 0
    assert report["selfdual"] and report["definitional"]
    assert report["monomial"] and report["M_system"]
    assert report["s"] == 0


def test_selfdual_check_t_zero(run):

    code, out = run(["selfdual", "--mode", "check"],
                    {"t": 0, "g": [1], "h": []})
    report = load(out)

    assert code == 0
    assert report["selfdual"] is False
    assert report["definitional"] is False


def test_selfdual_check_reports_shape_rejection(run):

    outside = {"a": 4, "t": 0, "g": [], "b": 2, "r": [], "c": 0, "h": []}
    code, out = run(["selfdual", "--mode", "check"], outside)
    report = load(out)

    assert code == 0
    assert report["shape"] != "ok"
    assert report["selfdual"] is True


def test_census_for_length_four(run):

    code, out = run(["selfdual", "--mode", "census"])
    report = load(out)

    assert code == 0
    assert report["N"] == 2
    assert report["summary"]["total"] == 3
    assert len(report["codes"]) == 3


def test_count_for_length_eight_as_csv(run):

    code, out = run(["selfdual", "--mode", "count", "--k", "3",
                     "--format", "csv"], fmt="csv")
    lines = out.read_text().splitlines()

    assert code == 0
    assert lines[0].startswith("k,t,s,w,dim")
    assert len(lines) == 7


def test_census_is_deterministic(run, tmp_path):

    _, first = run(["selfdual", "--mode", "census", "--k", "3"])
    text = first.read_text()
    _, second = run(["selfdual", "--mode", "census", "--k", "3"])

    assert second.read_text() == text
    assert json.loads(text)["summary"]["total"] == 22 + 4 + 1


def test_census_pdf(run):

    code, out = run(["selfdual", "--mode", "census", "--k", "3",
                     "--format", "pdf"], fmt="pdf")

    assert code == 0
    assert out.read_bytes().startswith(b"%PDF")


def test_odd_characteristic_has_no_selfdual_codes(run):

    code, out = run(["selfdual", "--mode", "enumerate", "--p", "3"])
    report = load(out)

    assert code == 0
    assert report["codes"] == []
    assert "p = 2" in report["note"]


def test_oracle_ideals_for_length_two(run):

    code, out = run(["oracle", "--scope", "ideals", "--k", "1"])
    report = load(out)

    assert code == 0
    assert report["bijection"] is True
    assert report["ideal_count"] == report["triple_count"]


def test_oracle_crosscheck_for_length_two(run):

    code, out = run(["oracle", "--scope", "crosscheck", "--k", "1"])
    report = load(out)

    assert code == 0
    assert report["mismatches"] == []


def test_oracle_budget(run):

    code, out = run(["oracle", "--scope", "crosscheck", "--k", "3"])

    assert code == rn_codes.EXIT_BUDGET
    assert not out.exists()


def test_delta_reduction_is_echoed(run):

    code, out = run(["classify", "--p", "3", "--k", "1", "--delta", "2"],
                    {"gens": [[[1, 1]]], "coords": "monomial"})
    report = load(out)

    assert code == 0
    assert report["transform"]["delta0"] == [2]
    assert report["ring"]["alpha"] == [2]
    # 1 + x maps to 1 + 2x, which vanishes at x = 1
    assert report["profile"][0] == 1


def test_delta_reduction_needs_monomial_generators(run):

    code, _ = run(["classify", "--p", "3", "--k", "1", "--delta", "2"],
                  {"gens": [[[1, 1]]]})

    assert code == rn_codes.EXIT_INVALID


def test_config_file(run, tmp_path):

    config = tmp_path / "job.toml"
    config.write_text("[job]\nmode = \"count\"\n[ring]\nk = 3\n")
    code, out = run(["selfdual", "--config", str(config)])

    assert code == 0
    assert load(out)["N"] == 22


def test_unknown_config_key(run, tmp_path):

    config = tmp_path / "job.toml"
    config.write_text("[ring]\nlength = 8\n")
    code, _ = run(["classify", "--config", str(config)], EXAMPLE)

    assert code == rn_codes.EXIT_INVALID


def test_unknown_verb_exits_with_usage_error():

    with pytest.raises(SystemExit) as excinfo:

        rn_codes.main(["encode"])

    assert excinfo.value.code == 2


@pytest.mark.slow
def test_oracle_crosscheck_for_length_four(run):

    code, out = run(["oracle", "--scope", "crosscheck"])

    assert code == 0
    assert load(out)["mismatches"] == []


@pytest.mark.slow
def test_oracle_selfdual_reconciliation(run):

    code, out = run(["oracle", "--scope", "selfdual"])
    report = load(out)

    assert code == 0
    assert report["selfdual_count"] == 3
    assert report["mismatches"] == []
