import json

from ealab import CSV_HEADER, read_records_csv, render_csv
from ealab.cli import main


def test_run_to_stdout(capsys):
    code = main([
        "run", "--algo", "comma", "--n", "25", "--p", "0.2", "--d", "3",
        "--k-star", "2", "--lambda", "3", "--budget", "20000",
        "--reps", "2", "--seed", "5",
    ])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 3
    assert lines[1].startswith("run,static_comma_3,25,")


def test_run_to_file(tmp_path, capsys):
    out_path = tmp_path / "records.csv"
    code = main([
        "run", "--id", "smoke", "--algo", "plus", "--n", "20", "--p", "0.1",
        "--lambda", "4", "--budget", "10000", "--reps", "3", "--out", str(out_path),
    ])
    assert code == 0
    records = read_records_csv(out_path)
    assert len(records) == 3
    assert {r.experiment_id for r in records} == {"smoke"}
    assert {r.algorithm for r in records} == {"static_plus_4"}
    # defaults d = ln(n), k_star = n^0.4 were resolved at n = 20
    assert records[0].d != 0 and records[0].k_star != 0


def test_run_sa_defaults(capsys):
    code = main(["run", "--n", "30", "--p", "0.05", "--budget", "20000"])
    out = capsys.readouterr().out
    assert code == 0
    row = out.splitlines()[1]
    assert ",sa_comma_reset," in row


def test_missing_n_is_usage_error(capsys):
    code = main(["run", "--p", "0.1"])
    err = capsys.readouterr().err
    assert code == 2
    assert "n is required" in err


def test_missing_p_is_usage_error(capsys):
    code = main(["run", "--n", "50"])
    err = capsys.readouterr().err
    assert code == 2
    assert "p is required" in err


def test_bad_formula_is_usage_error(capsys):
    code = main(["run", "--n", "50", "--p", "bogus"])
    err = capsys.readouterr().err
    assert code == 2
    assert "allowed forms" in err


def test_static_algo_needs_lambda(capsys):
    code = main(["run", "--algo", "comma", "--n", "50", "--p", "0.1"])
    err = capsys.readouterr().err
    assert code == 2
    assert "lambda" in err


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert main(["run", "--help"]) == 0


def test_unwritable_output_is_runtime_error(tmp_path, capsys):
    code = main([
        "run", "--algo", "one_plus_one", "--n", "10", "--p", "0",
        "--k-star", "1", "--budget", "2000",
        "--out", str(tmp_path / "no_such_dir" / "x.csv"),
    ])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_config_file_and_flag_override(tmp_path, capsys):
    config = {
        "experiment_id": "cfg",
        "algorithm": "comma",
        "n": 25,
        "p": 0.2,
        "d": 3.0,
        "k_star": 2.0,
        "lam": 3,
        "budget": 20000,
        "replications": 2,
        "base_seed": 5,
    }
    cfg_path = tmp_path / "exp.json"
    cfg_path.write_text(json.dumps(config))
    out_path = tmp_path / "a.csv"
    assert main(["run", "--config", str(cfg_path), "--out", str(out_path)]) == 0
    records = read_records_csv(out_path)
    assert len(records) == 2
    assert records[0].experiment_id == "cfg"

    # flags override config values
    out2 = tmp_path / "b.csv"
    assert main([
        "run", "--config", str(cfg_path), "--reps", "4", "--id", "flagged",
        "--out", str(out2),
    ]) == 0
    records2 = read_records_csv(out2)
    assert len(records2) == 4
    assert records2[0].experiment_id == "flagged"


def test_config_file_rejects_unknown_keys(tmp_path, capsys):
    cfg_path = tmp_path / "bad.json"
    cfg_path.write_text(json.dumps({"n": 10, "p": 0.1, "typo_key": 1}))
    code = main(["run", "--config", str(cfg_path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "typo_key" in err


def test_config_file_missing_is_usage_error(tmp_path, capsys):
    assert main(["run", "--config", str(tmp_path / "nope.json")]) == 2


def test_verify_checks_pass(capsys):
    code = main(["verify", "--trials", "2000", "--seed", "7"])
    out = capsys.readouterr().out
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out
    assert "ok" in out


def test_verify_single_walk_query(capsys):
    code = main(["verify", "--q", "0.5", "--beta", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0.25" in out


def test_verify_rejects_bad_q(capsys):
    code = main(["verify", "--q", "0.7", "--beta", "3"])
    assert code == 2
    assert "q" in capsys.readouterr().err


def test_figure2_command_and_plot(tmp_path, capsys):
    csv_path = tmp_path / "fig2.csv"
    svg_path = tmp_path / "fig2.svg"
    code = main([
        "figure2", "--n", "30", "--reps", "2", "--budget", "20000",
        "--out", str(csv_path), "--plot", str(svg_path),
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "reference" in out
    assert "static_comma_5" in out
    records = read_records_csv(csv_path)
    assert len(records) == 6
    svg = svg_path.read_text()
    assert svg.lstrip().startswith("<?xml")
    assert "</svg>" in svg


def test_figure1_command(tmp_path, capsys):
    csv_path = tmp_path / "fig1.csv"
    code = main([
        "figure1", "--n", "40", "--p-grid", "0.05,0.1", "--reps", "2",
        "--budget", "30000", "--out", str(csv_path),
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "normalized_median" in out
    records = read_records_csv(csv_path)
    assert len(records) == 4


def test_plot_command_roundtrip(tmp_path, capsys):
    csv_path = tmp_path / "fig2.csv"
    assert main([
        "figure2", "--n", "30", "--reps", "2", "--budget", "20000",
        "--out", str(csv_path),
    ]) == 0
    svg_path = tmp_path / "replot.svg"
    assert main([
        "plot", "--csv", str(csv_path), "--kind", "figure2", "--out", str(svg_path),
    ]) == 0
    assert svg_path.exists() and svg_path.stat().st_size > 0
    # the CSV the plot consumed re-renders byte-identically
    records = read_records_csv(csv_path)
    assert render_csv(records) == csv_path.read_text()


def test_plot_rejects_malformed_csv(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("not,a,records,file\n")
    code = main(["plot", "--csv", str(bad), "--kind", "figure1", "--out", str(tmp_path / "x.svg")])
    assert code == 2


def test_bad_integer_list_is_usage_error(capsys):
    code = main(["figure2", "--n", "30,abc", "--reps", "1", "--budget", "5000"])
    assert code == 2
