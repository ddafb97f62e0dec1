"""
Terminal formatting for rectcross results.

Functions here build strings; the CLI decides where they are printed.
Width handling follows the display section of the config file.
"""
import shutil
import textwrap
from typing import Any, Dict, List, Mapping, Optional

from hull_color import ColorLabel, ColoredDrawing
from kite_config import KiteConfiguration


# ANSI color codes for terminal output
class Colors:
    """ANSI escape codes for terminal coloring."""
    BOLD = "\033[1m"
    RED = "\033[91m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    CYAN = "\033[96m"
    RESET = "\033[0m"
    PASS = BOLD + GREEN
    FAIL = BOLD + RED


def get_terminal_width(config: Dict[str, Any]) -> int:
    """
    Get terminal width from config or detect dynamically.

    Args:
        config: Configuration dictionary with display settings

    Returns:
        Terminal width as integer
    """
    display = config.get('display', {})
    try:
        width = shutil.get_terminal_size().columns
        return max(width, display.get('min_terminal_width', 40))
    except Exception:
        return display.get('default_terminal_width', 80)


def wrap_text(text: str, width: int, indent: int = 0) -> str:
    """Wrap text to width, indenting every line by `indent` spaces."""
    wrapper = textwrap.TextWrapper(
        width=width,
        initial_indent=' ' * indent,
        subsequent_indent=' ' * indent,
        break_long_words=False,
        break_on_hyphens=False,
    )
    return wrapper.fill(text)


def format_tally(tally: Mapping[ColorLabel, int], terminal_width: int, show_zero: bool = False) -> str:
    """
    Colour-label histogram as aligned columns, canonical label order.

    Args:
        tally: Label -> count, as from ColoredDrawing.tally
        terminal_width: Available width
        show_zero: Include labels with no crossings
    """
    cells = [
        f"{str(label):>6} {count:>3}"
        for label, count in sorted(tally.items(), key=lambda kv: kv[0].sort_key())
        if count or show_zero
    ]
    if not cells:
        return "  (no crossings)"
    cell_width = max(len(c) for c in cells) + 3
    per_row = max(1, (terminal_width - 2) // cell_width)
    rows = []
    for start in range(0, len(cells), per_row):
        rows.append("  " + "".join(c.ljust(cell_width) for c in cells[start:start + per_row]).rstrip())
    return '\n'.join(rows)


def format_classification(
    cd: Optional[ColoredDrawing],
    profile: List[int],
    configurations: Mapping[str, KiteConfiguration],
    terminal_width: int,
) -> str:
    """
    Peel profile, per-pair configuration classes and the crossing tally.

    Args:
        cd: Coloured drawing, or None when the profile admits no colouring
        profile: Peel layer sizes
        configurations: Colour pair name -> configuration of that nested K6
        terminal_width: Available width
    """
    lines = [f"peel: {profile}"]
    if cd is None:
        lines.append("colouring: unsupported for this peel")
        return '\n'.join(lines)
    for pair, config in configurations.items():
        kites = " ".join(
            f"{k.origin}:{k.shape.letter}({k.left},{k.middle},{k.right})" for k in config.kites
        )
        lines.append(f"configuration {pair}: {config.config_class} [{config.shapes}] {kites}")
    if cd.white is not None:
        lines.append(f"white vertex: {cd.white}")
    lines.append(f"crossings: {cd.crossings.count}")
    lines.append(format_tally(cd.tally, terminal_width))
    return '\n'.join(lines)


def format_status(status: str, color: bool = True) -> str:
    """Suite status word, highlighted when color is on."""
    if not color:
        return status
    if status == "pass":
        return f"{Colors.PASS}{status}{Colors.RESET}"
    if status == "fail":
        return f"{Colors.FAIL}{status}{Colors.RESET}"
    return f"{Colors.YELLOW}{status}{Colors.RESET}"


def format_suite_table(by_rule: Mapping[str, Mapping[str, int]], color: bool = False) -> str:
    """One line per rule: pass, fail and n/a counts."""
    if not by_rule:
        return "  no rules run"
    width = max(len(rule) for rule in by_rule)
    lines = []
    for rule, counts in by_rule.items():
        status = "fail" if counts.get("fail") else "pass" if counts.get("pass") else "n/a"
        lines.append(
            f"  {rule.ljust(width)}  pass={counts.get('pass', 0):<5} fail={counts.get('fail', 0):<5} "
            f"n/a={counts.get('n/a', 0):<5} {format_status(status, color)}"
        )
    return '\n'.join(lines)
