#!/usr/bin/env python
#
# rectcross - exact crossing counts, lemma checks, searches and bounds for
# rectilinear drawings of complete graphs
#
import argparse
import copy
import logging
import sys
import traceback
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import yaml

import bounds
import display
import env_manager
from drawing_io import read_drawing, save_drawing
from errors import GenerationBudgetExceeded, InconsistencyError, RectCrossError, UnsupportedShape
from geometry_core import count_crossings, fraction_to_decimal, responsibility
from hull_color import Colour, color_by_hulls, peel_hulls, sub_drawing
from kite_config import classify_configuration
from lemma_verify import SuiteSummary, run_suite, verify_drawing
from search_opt import SearchParams, grid_exhaustive, local_search
from suite_logger import SuiteLogger
from suite_mode import SuiteName
from svg_render import RenderSpec, render_svg

logger = logging.getLogger("rectcross")

HOME: str = str(Path.home())

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

DEFAULT_CONFIG: Dict[str, Any] = {
    "search": {
        "restarts": 20,
        "moves_per_restart": 2000,
        "box_size": 1000,
        "perturb_radius": 50,
        "allow_plateau": False,
        "per_n": {},
    },
    "verify": {
        "instances": 1000,
        "master_seed": 42,
        "log_file": "~/.cache/rectcross/suite.log",
        "log_format": "json",
    },
    "grid": {"subset_limit": 10**8},
    "bounds": {"base_n": 10, "base_cr": 62, "max_n": 400, "delimiter": ",", "places": 10},
    "render": {
        "width": 800,
        "margin": 20,
        "vertex_radius": 6,
        "crossing_radius": 2,
        "palette": {},
    },
    "parallel": {"workers": 1},
    "display": {"min_terminal_width": 40, "default_terminal_width": 80},
    "logging": {"format": "%(levelname)s %(name)s: %(message)s"},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """Load configuration from YAML file, merged over the built-in defaults"""
    config_paths = [
        Path("rectcross_config.yaml"),
        Path.home() / ".config/rectcross/config.yaml",
        Path("/etc/rectcross/config.yaml"),
    ]
    if config_path:
        config_paths.insert(0, Path(config_path).expanduser())

    for path in config_paths:
        if path.exists():
            try:
                with path.open("r") as f:
                    loaded = yaml.safe_load(f) or {}
                logger.debug("config loaded from %s", path)
                return _merge(DEFAULT_CONFIG, loaded)
            except (OSError, yaml.YAMLError) as e:
                logger.warning("could not load config from %s: %s", path, e)
                continue

    logger.warning("no config file found, using defaults")
    return copy.deepcopy(DEFAULT_CONFIG)


def resolve_path(path: str, home: str = HOME) -> str:
    """Resolve a configured path against HOME"""
    if path.startswith("~"):
        return path.replace("~", home, 1)
    elif not path.startswith("/"):
        return f"{home}/{path}"
    return path


def _grid_size(text: str) -> List[int]:
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like WxH, got {text!r}") from None
    return [w, h]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectcross",
        description="Exact tools for rectilinear drawings of complete graphs",
    )
    parser.add_argument("--config", "-c", type=str, default=None, help="Path to configuration file")
    parser.add_argument(
        "--debug", "-d", action="store_true", default=False, help="Debug logging and tracebacks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="Count the crossings of a drawing")
    p.add_argument("file")
    p.add_argument(
        "--responsibility", action="store_true", help="Also print crossings on each vertex's edges"
    )

    p = sub.add_parser("classify", help="Peel profile, configurations and colour tally")
    p.add_argument("file")

    p = sub.add_parser("verify", help="Run a lemma suite on seeded instances or on one drawing")
    p.add_argument("--suite", default="all", choices=[s.value for s in SuiteName])
    p.add_argument("--instances", type=int, default=None, help="Instances per rule [default: from config]")
    p.add_argument("--seed", type=int, default=None, help="Master seed [default: from config]")
    p.add_argument("--workers", type=int, default=None, help="Worker processes [default: RECTCROSS_WORKERS]")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--by-rule", action="store_true", help="Print pass/fail/n/a counts per rule instead of every report")
    p.add_argument("--log", action="store_true", help="Append the summary to the configured suite log")
    p.add_argument("--progress", action="store_true")
    p.add_argument("file", nargs="?", default=None)

    p = sub.add_parser("search", help="Local search for a drawing with few crossings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--moves", type=int, default=None)
    p.add_argument("--box", type=int, default=None)
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plateau", action="store_true", help="Accept moves that keep the count")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--progress", action="store_true")
    p.add_argument("-o", "--output", default=None, help="Write the best drawing here")
    p.add_argument("--trace", default=None, help="Write the seed trace here")

    p = sub.add_parser("grid-min", help="Exhaustive minimum over a small grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=_grid_size, required=True, help="WxH")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("bounds", help="Recursive lower bounds and Jensen upper bounds")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--base-n", type=int, default=None)
    p.add_argument("--base-cr", type=int, default=None)
    p.add_argument("--bracket", action="store_true", help="Append the limit bracket and K11 candidates")

    p = sub.add_parser("render", help="Render a drawing as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--no-crossings", action="store_true")
    return parser


def cmd_count(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    d = read_drawing(args.file)
    crossings = count_crossings(d)
    print(f"crossings: {crossings.count}")
    if args.responsibility:
        total = 0
        for v in range(d.n):
            r = responsibility(d, v)
            total += r
            print(f"vertex {v}: {r}")
        print(f"responsibility sum: {total}")
    return EXIT_OK


_PAIRS = (
    ("rg", Colour.RED, Colour.GREEN),
    ("rb", Colour.RED, Colour.BLUE),
    ("gb", Colour.GREEN, Colour.BLUE),
)


def cmd_classify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    d = read_drawing(args.file)
    profile = list(peel_hulls(d).profile)
    try:
        cd = color_by_hulls(d)
    except UnsupportedShape as e:
        logger.info("no colouring: %s", e)
        cd = None
    configurations = {}
    if cd is not None and tuple(profile) == (3, 3):
        configurations["rg"] = classify_configuration(cd)
    elif cd is not None and tuple(profile) == (3, 3, 3):
        for name, outer, inner in _PAIRS:
            configurations[name] = classify_configuration(sub_drawing(cd, (outer, inner)))
    width = display.get_terminal_width(config)
    print(display.format_classification(cd, profile, configurations, width))
    return EXIT_OK


def _print_summary(summary: SuiteSummary, fmt: str, by_rule: bool = False) -> None:
    if by_rule:
        print(display.format_suite_table(summary.by_rule(), color=sys.stdout.isatty()))
        print("\n".join(summary.footer_lines()))
    elif fmt == "json":
        sys.stdout.write(summary.to_json_lines())
        print("\n".join(summary.footer_lines()))
    else:
        sys.stdout.write(summary.to_text())


def cmd_verify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    suite = SuiteName.from_string(args.suite)
    rule_ids = suite.rule_ids()
    suite_log = SuiteLogger(resolve_path(config["verify"]["log_file"])) if args.log else None
    if args.file:
        reports = verify_drawing(read_drawing(args.file), rule_ids)
        summary = SuiteSummary(reports)
        instances = 1
    else:
        verify_cfg = config["verify"]
        instances = args.instances if args.instances is not None else verify_cfg["instances"]
        seed = args.seed if args.seed is not None else verify_cfg["master_seed"]
        workers = args.workers or env_manager.read_worker_count(config["parallel"]["workers"])
        summary = run_suite(rule_ids, instances, seed, workers=workers, progress=args.progress)
    _print_summary(summary, args.format, args.by_rule)
    if suite_log is not None:
        suite_log.record(str(suite), instances, summary)
        suite_log.write_summary(config["verify"]["log_format"])
    return EXIT_FAILURE if summary.failures else EXIT_OK


def cmd_search(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    params = SearchParams.from_config(
        args.n,
        config["search"],
        master_seed=args.seed,
        restarts=args.restarts,
        moves_per_restart=args.moves,
        box_size=args.box,
        perturb_radius=args.radius,
        allow_plateau=True if args.plateau else None,
    )
    workers = args.workers or env_manager.read_worker_count(config["parallel"]["workers"])
    result = local_search(params, workers=workers, progress=args.progress)
    print(f"crossings: {result.count}")
    print(f"restart counts: {' '.join(str(c) for c in result.history)}")
    for p in result.best.points:
        print(f"{p.x} {p.y}")
    if args.output:
        save_drawing(result.best, args.output, comments=[f"n={args.n} crossings={result.count} seed={args.seed}"])
    if args.trace and result.seed_trace is not None:
        trace = Path(args.trace).expanduser()
        trace.parent.mkdir(parents=True, exist_ok=True)
        trace.write_text(result.seed_trace.to_text())
    return EXIT_OK


def cmd_grid_min(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    w, h = args.grid
    result = grid_exhaustive(args.n, w, h, limit=config["grid"]["subset_limit"])
    print(f"crossings: {result.count}")
    for p in result.best.points:
        print(f"{p.x} {p.y}")
    if args.output:
        save_drawing(result.best, args.output, comments=[f"grid {w}x{h} minimum"])
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    cfg = config["bounds"]
    max_n = args.max_n if args.max_n is not None else cfg["max_n"]
    base_n = args.base_n if args.base_n is not None else cfg["base_n"]
    base_cr = args.base_cr if args.base_cr is not None else cfg["base_cr"]
    table = bounds.recursive_lower_bound(max_n, base_n, base_cr)
    sys.stdout.write(table.to_delimited(cfg["delimiter"], cfg["places"]))
    if args.bracket:
        lower, upper = bounds.nu_star_bracket()
        places = cfg["places"]
        print(
            f"bracket: [{fraction_to_decimal(lower, places)}, {fraction_to_decimal(upper, places)}] "
            f"= [{lower}, {upper}]"
        )
        print(f"k11 candidates: {sorted(bounds.k11_candidates())}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    cfg = config["render"]
    spec = RenderSpec(
        palette={k: tuple(v) for k, v in (cfg.get("palette") or {}).items()},
        width=cfg["width"],
        margin=cfg["margin"],
        vertex_radius=cfg["vertex_radius"],
        crossing_radius=cfg["crossing_radius"],
        show_crossings=not args.no_crossings,
    )
    out = Path(args.output).expanduser()
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(render_svg(read_drawing(args.file), spec))
    print(f"wrote {out}")
    return EXIT_OK


def _configure_logging(debug: bool, fmt: str) -> None:
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING, format=fmt, stream=sys.stderr, force=True
    )


def _fail(error: Exception, code: int, debug: bool) -> int:
    print(f"error: {error}", file=sys.stderr)
    if debug:
        print(traceback.format_exc(), file=sys.stderr)
    return code


COMMANDS = {
    "count": cmd_count,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "search": cmd_search,
    "grid-min": cmd_grid_min,
    "bounds": cmd_bounds,
    "render": cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main function

    Returns:
        Process exit code: 0 success, 1 rule failure or inconsistency, 2 input error
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.debug, DEFAULT_CONFIG["logging"]["format"])
    config = load_config(args.config)
    if config["logging"]["format"] != DEFAULT_CONFIG["logging"]["format"]:
        _configure_logging(args.debug, config["logging"]["format"])

    try:
        return COMMANDS[args.command](args, config)
    except (InconsistencyError, GenerationBudgetExceeded) as e:
        return _fail(e, EXIT_FAILURE, args.debug)
    except (RectCrossError, OSError, ValueError) as e:
        return _fail(e, EXIT_INPUT, args.debug)


if __name__ == "__main__":
    sys.exit(main())
