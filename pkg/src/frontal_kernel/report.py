"""Ordered key-value reports with per-entry certification status."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .basis import INFINITE
from .ring import Poly

EXACT = "exact"
CERTIFIED = "certified"
INFINITE_STATUS = "infinite"
NOT_COMPUTED = "not-computed"
ASSUMED = "assumed"
INCONCLUSIVE = "inconclusive"
ERROR = "error"


def render_value(value) -> str:
    if value is INFINITE:
        return "INFINITE"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, Poly):
        return str(value)
    if isinstance(value, (tuple, list)):
        return "[" + ", ".join(render_value(v) for v in value) + "]"
    return str(value)


@dataclass
class Entry:
    key: str
    value: object
    status: str = EXACT
    note: str = ""


@dataclass
class Report:
    title: str
    entries: list[Entry] = field(default_factory=list)

    def add(self, key: str, value, status: str = EXACT, note: str = "") -> None:
        self.entries.append(Entry(key, value, status, note))

    def get(self, key: str) -> Optional[Entry]:
        for e in self.entries:
            if e.key == key:
                return e
        return None

    def machine(self) -> str:
        lines = [f"report\t{self.title}"]
        for e in self.entries:
            note = e.note.replace("\t", " ").replace("\n", " ")
            lines.append(f"{e.key}\t{render_value(e.value)}\t{e.status}\t{note}")
        return "\n".join(lines) + "\n"

    def pretty(self) -> str:
        lines = [f"== {self.title} =="]
        width = max((len(e.key) for e in self.entries), default=0)
        for e in self.entries:
            line = f"  {e.key.ljust(width)} : {render_value(e.value)}"
            if e.status != EXACT:
                line += f"  [{e.status}]"
            if e.note:
                line += f"  ({e.note})"
            lines.append(line)
        return "\n".join(lines) + "\n"
