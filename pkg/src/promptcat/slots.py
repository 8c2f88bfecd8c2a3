"""Slotted-template utilities: ``{NAME}`` markers inside plain text."""

from __future__ import annotations

import re
from typing import Mapping

from .errors import RenderError

_SLOT_RE = re.compile(r"\{([A-Za-z][A-Za-z0-9 _-]*)\}")


def find_slots(text: str) -> list[str]:
    """Slot names in order of first appearance."""
    seen: list[str] = []
    for m in _SLOT_RE.finditer(text):
        if m.group(1) not in seen:
            seen.append(m.group(1))
    return seen


def slot_counts(text: str) -> dict[str, int]:
    counts: dict[str, int] = {}
    for m in _SLOT_RE.finditer(text):
        counts[m.group(1)] = counts.get(m.group(1), 0) + 1
    return counts


def render(text: str, values: Mapping[str, str], partial: bool = False) -> str:
    """Substitute slot markers in a single pass.

    Replacement values are inserted literally and never re-scanned. With
    ``partial=True`` unknown slots are left in place; otherwise every slot in
    the text must have a value and every value must name a slot.
    """
    slots = set(find_slots(text))
    for name, value in values.items():
        if name not in slots:
            raise RenderError(f"value given for absent slot {name!r}")
        if value is None:
            raise RenderError(f"missing value for slot {name!r}")
    if not partial:
        for name in slots:
            if name not in values:
                raise RenderError(f"no value for slot {name!r}")

    def _sub(m: re.Match) -> str:
        name = m.group(1)
        if name in values:
            return values[name]
        if partial:
            return m.group(0)
        raise RenderError(f"no value for slot {name!r}")

    return _SLOT_RE.sub(_sub, text)
