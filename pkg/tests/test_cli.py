"""
Tests for the rectcross command line

Focused tests covering:
- Argument parsing for each subcommand
- Output of count, classify, verify, grid-min, bounds and render
- Exit codes: 0 success, 1 rule failure or exhausted budget, 2 bad input
- Config loading and path resolution
"""
import json

import pytest
import yaml

from rectcross import (
    DEFAULT_CONFIG,
    EXIT_FAILURE,
    EXIT_INPUT,
    EXIT_OK,
    build_parser,
    load_config,
    main,
    resolve_path,
)


@pytest.fixture
def config_file(tmp_path):
    """Config with a suite log inside tmp_path and a short bounds table."""
    path = tmp_path / "config.yaml"
    path.write_text(
        yaml.safe_dump(
            {
                "verify": {"log_file": str(tmp_path / "logs" / "suite.log"), "log_format": "json"},
                "bounds": {"max_n": 12, "places": 4},
                "parallel": {"workers": 1},
            }
        )
    )
    return str(path)


class TestParser:
    """Test suite for argument parsing"""

    def test_count_flags(self):
        args = build_parser().parse_args(["count", "x.pts", "--responsibility"])
        assert args.command == "count"
        assert args.responsibility

    def test_verify_defaults(self):
        args = build_parser().parse_args(["verify"])
        assert args.suite == "all"
        assert args.instances is None
        assert args.file is None
        assert args.format == "text"

    def test_invalid_suite(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify", "--suite", "k7"])

    def test_grid_size(self):
        args = build_parser().parse_args(["grid-min", "--n", "5", "--grid", "4x4"])
        assert args.grid == [4, 4]

    def test_bad_grid_size(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["grid-min", "--n", "5", "--grid", "four"])

    def test_global_flags(self):
        args = build_parser().parse_args(["-d", "-c", "my.yaml", "bounds", "--bracket"])
        assert args.debug
        assert args.config == "my.yaml"
        assert args.bracket

    def test_command_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestConfig:
    """Test suite for config loading"""

    def test_explicit_file_overrides_defaults(self, config_file):
        config = load_config(config_file)
        assert config["bounds"]["max_n"] == 12
        assert config["bounds"]["base_cr"] == 62
        assert config["search"] == DEFAULT_CONFIG["search"]

    def test_resolve_path(self):
        assert resolve_path("~/x.log", home="/home/u") == "/home/u/x.log"
        assert resolve_path("rel/x.log", home="/home/u") == "/home/u/rel/x.log"
        assert resolve_path("/abs/x.log", home="/home/u") == "/abs/x.log"


class TestCommands:
    """Test suite for subcommand output"""

    def test_count(self, corpus_dir, config_file, capsys):
        code = main(["-c", config_file, "count", str(corpus_dir / "k9_nested.pts")])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "crossings: 36\n"

    def test_count_responsibility(self, corpus_dir, config_file, capsys):
        main(["-c", config_file, "count", "--responsibility", str(corpus_dir / "k4_convex.pts")])
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "crossings: 1"
        assert out[1:5] == ["vertex 0: 1", "vertex 1: 1", "vertex 2: 1", "vertex 3: 1"]
        assert out[-1] == "responsibility sum: 4"

    def test_classify_k9(self, corpus_dir, config_file, capsys):
        main(["-c", config_file, "classify", str(corpus_dir / "k9_nested.pts")])
        out = capsys.readouterr().out
        assert "peel: [3, 3, 3]" in out
        for pair in ("rg", "rb", "gb"):
            assert f"configuration {pair}: CCC [CCC]" in out
        assert "crossings: 36" in out
        assert "rb×gg" in out

    def test_classify_unsupported_peel(self, corpus_dir, config_file, capsys):
        assert main(["-c", config_file, "classify", str(corpus_dir / "k8_3_4_1.pts")]) == EXIT_OK
        out = capsys.readouterr().out
        assert "peel: [3, 4, 1]" in out
        assert "colouring: unsupported" in out

    def test_verify_one_drawing(self, corpus_dir, config_file, capsys):
        code = main(["-c", config_file, "verify", "--suite", "k9", str(corpus_dir / "k9_nested.pts")])
        assert code == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 9
        assert out[0].startswith("k5_principle\t-\tpass")
        assert out[-2] == "rb_rg_nine equality held: 1/1"
        assert out[-1] == "failures: 0"

    def test_verify_seeded_json_and_log(self, config_file, tmp_path, capsys):
        code = main(
            ["-c", config_file, "verify", "--suite", "k10", "--instances", "1", "--seed", "3",
             "--workers", "1", "--format", "json", "--log"]
        )
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert [json.loads(line)["rule_id"] for line in lines[:-1]] == ["ttq_62", "white_in_blue", "white_in_green"]
        assert lines[-1] == "failures: 0"
        record = json.loads((tmp_path / "logs" / "suite.log").read_text().splitlines()[0])
        assert record["suite"] == "k10"
        assert record["master_seed"] == 3

    def test_verify_log_times_the_suite(self, config_file, tmp_path, monkeypatch, capsys):
        import rectcross
        import suite_logger

        clock = [1000.0]
        monkeypatch.setattr(suite_logger.time, "time", lambda: clock[0])
        real_run_suite = rectcross.run_suite

        def slow_run_suite(*args, **kwargs):
            clock[0] += 7.5
            return real_run_suite(*args, **kwargs)

        monkeypatch.setattr(rectcross, "run_suite", slow_run_suite)
        main(["-c", config_file, "verify", "--suite", "k6", "--instances", "1", "--workers", "1", "--log"])
        record = json.loads((tmp_path / "logs" / "suite.log").read_text().splitlines()[0])
        assert record["duration"] == 7.5

    def test_verify_by_rule(self, corpus_dir, config_file, capsys):
        main(["-c", config_file, "verify", "--suite", "k6", "--by-rule", str(corpus_dir / "k6_vvv.pts")])
        out = capsys.readouterr().out
        assert "configuration_law" in out
        assert out.endswith("failures: 0\n")

    def test_search(self, config_file, tmp_path, capsys):
        output = tmp_path / "k5.pts"
        trace = tmp_path / "k5.trace"
        code = main(
            ["-c", config_file, "search", "--n", "5", "--restarts", "2", "--moves", "200",
             "--box", "100", "--seed", "1", "--workers", "1", "-o", str(output), "--trace", str(trace)]
        )
        assert code == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[0].startswith("crossings: ")
        assert len(out) == 2 + 5
        assert output.read_text().startswith("# n=5")
        assert "master_seed=1" in trace.read_text()

    def test_grid_min(self, config_file, capsys):
        assert main(["-c", config_file, "grid-min", "--n", "5", "--grid", "4x4"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("crossings: 1\n")

    def test_bounds(self, config_file, capsys):
        main(["-c", config_file, "bounds", "--bracket"])
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "n,lower,jensen_upper,ratio,ratio_fraction"
        assert out[1:4] == [
            "10,62,63,0.2952,31/105",
            "11,98,102,0.2970,49/165",
            "12,147,156,0.2970,49/165",
        ]
        assert out[-2].startswith("bracket: [0.3001")
        assert out[-1] == "k11 candidates: [98, 100, 102]"

    def test_bounds_default_table_reaches_400(self, capsys):
        main(["bounds", "--max-n", "400"])
        assert capsys.readouterr().out.splitlines()[-1].startswith("400,315356975,")

    def test_render(self, corpus_dir, config_file, tmp_path, capsys):
        out_file = tmp_path / "svg" / "k6.svg"
        main(["-c", config_file, "render", str(corpus_dir / "k6_ccc.pts"), "-o", str(out_file)])
        assert out_file.read_bytes().count(b'class="crossing"') == 3
        assert capsys.readouterr().out.strip() == f"wrote {out_file}"


class TestExitCodes:
    """Test suite for error handling"""

    def test_missing_file(self, config_file, tmp_path, capsys):
        assert main(["-c", config_file, "count", str(tmp_path / "none.pts")]) == EXIT_INPUT
        assert capsys.readouterr().err.startswith("error: ")

    def test_collinear_input(self, config_file, tmp_path, capsys):
        bad = tmp_path / "line.pts"
        bad.write_text("3\n0 0\n1 1\n2 2\n")
        assert main(["-c", config_file, "count", str(bad)]) == EXIT_INPUT
        assert "collinear" in capsys.readouterr().err

    def test_parse_error(self, config_file, tmp_path, capsys):
        bad = tmp_path / "short.pts"
        bad.write_text("4\n0 0\n1 0\n")
        assert main(["-c", config_file, "count", str(bad)]) == EXIT_INPUT
        assert "line 4" in capsys.readouterr().err

    def test_grid_budget(self, config_file):
        assert main(["-c", config_file, "grid-min", "--n", "8", "--grid", "20x20"]) == EXIT_INPUT

    def test_bounds_domain(self, config_file):
        assert main(["-c", config_file, "bounds", "--max-n", "5"]) == EXIT_INPUT

    def test_search_budget_is_a_failure(self, config_file, capsys):
        code = main(["-c", config_file, "search", "--n", "5", "--box", "2", "--restarts", "1", "--workers", "1"])
        assert code == EXIT_FAILURE
        assert "error:" in capsys.readouterr().err

    def test_config_warnings_use_log_format(self, tmp_path, capsys):
        broken = tmp_path / "broken.yaml"
        broken.write_text("search: [1, 2\n")
        main(["-c", str(broken), "bounds", "--max-n", "10"])
        err = capsys.readouterr().err
        assert "WARNING rectcross: could not load config from" in err

    def test_debug_prints_traceback(self, config_file, tmp_path, capsys):
        main(["-d", "-c", config_file, "count", str(tmp_path / "none.pts")])
        assert "Traceback" in capsys.readouterr().err
