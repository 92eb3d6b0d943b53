"""Emission of result documents as text, JSON or CSV."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from jinja2 import Environment, FileSystemLoader
from tabulate import tabulate

JINJA_ENV = Environment(
    loader=FileSystemLoader(searchpath=str(Path(__file__).parent / "templates")),
    keep_trailing_newline=True,
    trim_blocks=True,
    lstrip_blocks=True,
)


@dataclass
class Document:
    """
    One command's result in all three output shapes.

    `text` is the human-readable rendering, `data` the JSON value, and
    `headers`/`rows` the CSV table.
    """

    text: str
    data: Any
    headers: List[str] = field(default_factory=list)
    rows: List[List[Any]] = field(default_factory=list)


def render_template(template_name: str, template_data: Dict[str, Any]) -> str:
    """
    Render one of the packaged text templates.

    Args:
        template_name: File name under ``hck/cli/templates``.
        template_data: Template variables.

    Returns:
        The rendered text.
    """
    return JINJA_ENV.get_template(template_name).render(template_data)


def table(
    headers: Sequence[str],
    rows: Sequence[Sequence[Any]],
    colalign: Optional[Sequence[str]] = None,
) -> str:
    """
    Format rows as a text table.

    Args:
        headers: Column names.
        rows: Table rows.
        colalign: Per-column alignment.

    Returns:
        The table, ``presto`` style.
    """
    return tabulate(
        rows,
        headers=list(headers),
        tablefmt="presto",
        disable_numparse=True,
        colalign=colalign,
    )


def _to_csv(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def render(document: Document, fmt: str) -> str:
    """
    Render a document in one format.

    Args:
        document: The result document.
        fmt: One of ``text``, ``json``, ``csv``.

    Returns:
        The output, ending in a newline.

    Raises:
        ValueError: on an unknown format.
    """
    if fmt == "text":
        text = document.text
        return text if text.endswith("\n") else text + "\n"
    if fmt == "json":
        return json.dumps(document.data, indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        return _to_csv(document.headers, document.rows)
    raise ValueError(f"Unknown format {fmt}")
