"""Graphviz DOT rendering of Hasse diagrams."""

import logging
from collections.abc import Sequence
from pathlib import Path

from jinja2 import Template

from ..posets import Poset

logger = logging.getLogger(__name__)

TEMPLATE_PATH = Path(__file__).parent.parent / "templates" / "hasse.dot.j2"


def _escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def poset_to_dot(poset: Poset, labels: Sequence[str] | None = None) -> str:
    """Hasse diagram drawn bottom-up, one rank per height."""
    if labels is not None and len(labels) != poset.n:
        raise ValueError(f"{len(labels)} labels for {poset.n} elements")
    names = list(labels) if labels is not None else [poset.label(i) for i in range(poset.n)]
    levels: dict[int, list[int]] = {}
    for i, height in enumerate(poset.heights):
        levels.setdefault(height, []).append(i)

    with open(TEMPLATE_PATH, encoding="utf-8") as f:
        template = Template(f.read(), trim_blocks=True, lstrip_blocks=True)
    return template.render(
        nodes=[{"index": i, "label": _escape(name)} for i, name in enumerate(names)],
        levels=[levels[h] for h in sorted(levels)],
        edges=poset.covers,
    )


def write_dot(poset: Poset, path: Path, labels: Sequence[str] | None = None) -> None:
    path.write_text(poset_to_dot(poset, labels), encoding="utf-8")
    logger.debug(f"Wrote Hasse diagram to {path}")
