"""
Human-readable rendering and verbose progress output.
"""

import sys
from typing import Any, Dict, Iterable, List, Mapping

import pandas as pd
from colorama import Fore, Style

from ..core.config import get_config


def log(message: str) -> None:
    """Progress line on stderr, only when logging is enabled."""
    if get_config().enable_logging:
        print(message, file=sys.stderr)


def mark(verdict: bool) -> str:
    return f"{Fore.GREEN}✓{Style.RESET_ALL}" if verdict else f"{Fore.RED}✗{Style.RESET_ALL}"


def incidence_table(rows: Mapping[str, Iterable[str]], types: Iterable[str]) -> str:
    """Instances × types grid with ✓ where the instance is of the type."""
    types = list(types)
    if not rows or not types:
        return f"  ({len(rows)} instances, {len(types)} types)"
    frame = pd.DataFrame(
        [["✓" if y in set(ys) else "·" for y in types] for ys in rows.values()],
        index=list(rows.keys()), columns=types,
    )
    return frame.to_string()


def render_human(payload: Mapping[str, Any]) -> str:
    """Render a report payload as indented text."""
    lines: List[str] = [f"{Style.BRIGHT}$ {' '.join(payload['command'])}{Style.RESET_ALL}"]
    for name, verdict in payload.get("verdicts", {}).items():
        if isinstance(verdict, bool):
            lines.append(f"  {name}: {mark(verdict)}")
        else:
            lines.append(f"  {name}: {verdict}")
    for name, value in payload.get("witnesses", {}).items():
        lines.extend(_render_value(name, value, indent=2))
    for table_name, table in payload.get("tables", {}).items():
        lines.append(f"  {table_name}:")
        lines.extend("    " + line for line in table.splitlines())
    if "error" in payload:
        err = payload["error"]
        lines.append(f"  {Fore.RED}error [{err['kind']}]{Style.RESET_ALL}: {err['message']}")
    caps: Dict[str, Any] = payload.get("caps", {})
    lines.append("  caps: " + ", ".join(f"{k}={v}" for k, v in caps.items()))
    if "timing_ms" in payload:
        lines.append(f"  ⏱  {payload['timing_ms']:.1f} ms")
    return "\n".join(lines)


def _render_value(name: str, value: Any, indent: int) -> List[str]:
    pad = " " * indent
    if isinstance(value, Mapping):
        out = [f"{pad}{name}:"]
        for k, v in value.items():
            out.extend(_render_value(str(k), v, indent + 2))
        return out
    if isinstance(value, list) and value and all(isinstance(v, (str, int, float, bool)) for v in value):
        return [f"{pad}{name}: " + "; ".join(str(v) for v in value)]
    if isinstance(value, list):
        out = [f"{pad}{name}:"]
        for i, v in enumerate(value):
            out.extend(_render_value(f"- [{i}]", v, indent + 2))
        return out
    return [f"{pad}{name}: {value}"]
