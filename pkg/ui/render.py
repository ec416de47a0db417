"""
Markdown rendering of sweeps and reports.

The summary view follows the two-column layout of the classification
tables (type on the left, transitive cells on the right) so that a
regenerated table can be compared with the printed one by eye.
"""

from collections import OrderedDict
from typing import Dict, List, Sequence

from utils.exporter import markdown_table

HEADERS = {
    "theorem1": ("Type of G", "(n, i)"),
    "theorem2": ("Type of G", "P"),
    "corollary": ("Type of G", "P"),
}


def _group(results: Sequence) -> Dict[str, List]:
    groups: Dict[str, List] = OrderedDict()
    for r in results:
        groups.setdefault(r.type_name, []).append(r)
    return groups


def _theorem1_cell(rows: Sequence) -> str:
    by_n: Dict[int, List[str]] = OrderedDict()
    for r in rows:
        if r.computed and r.n >= 3:
            by_n.setdefault(r.n, []).append(r.parabolic)
    if not by_n:
        return "none"
    return "; ".join(f"n = {n}, i = {', '.join(ids)}" for n, ids in sorted(by_n.items()))


def _parabolic_cell(rows: Sequence) -> str:
    names = [f"P_{{{r.parabolic}}}" for r in rows if r.computed and r.n in (None, 3)]
    return ", ".join(names) if names else "none"


def render_summary(table: str, results: Sequence) -> str:
    body = []
    for type_name, rows in _group(results).items():
        cell = _theorem1_cell(rows) if table == "theorem1" else _parabolic_cell(rows)
        body.append((type_name, cell))
    return markdown_table(HEADERS[table], body)


def render_cells(results: Sequence) -> str:
    """One line per cell; disagreements are marked with '!'."""
    headers = ("type", "P", "n", "computed", "expected", "levi", "rank", "method", "")
    body = []
    for r in results:
        flag = "" if r.matches and r.consistent else "!"
        body.append((r.type_name, "{" + r.parabolic + "}", r.n, r.computed, r.expected,
                     r.levi, f"{r.achieved_rank}/{r.target_rank}", r.method, flag))
    return markdown_table(headers, body)


def render_table(table: str, title: str, results: Sequence) -> str:
    return (f"## {title}\n\n" + render_summary(table, results) + "\n"
            + render_cells(results))


def render_mapping(title: str, report: dict) -> str:
    """Generic two-column rendering for single reports."""
    rows = [(k, v) for k, v in sorted(report.items()) if not isinstance(v, (list, dict))]
    text = f"## {title}\n\n" + markdown_table(("field", "value"), rows)
    for k, v in sorted(report.items()):
        if isinstance(v, list) and v and isinstance(v[0], dict):
            headers = list(v[0])
            text += f"\n### {k}\n\n" + markdown_table(headers, [[d.get(h) for h in headers] for d in v])
    return text
