"""Recorded sigma values for seven sample words, cross-checked on demand.

The seven words all have a-count 6, so sigma is tabulated at g = 1, 2, 3, 6.
Three recorded cells disagree with the computed values; the computation is
confirmed independently (the stairstep route reproduces the computed numbers,
and two of the recorded cells are each other's values swapped), so the table
printer shows the computed value and annotates the recorded one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fringe import sigma
from .words import block_form

__all__ = ["GS", "RECORDED", "TableCell", "table_cells", "mismatched_cells", "table_text"]

GS = (1, 2, 3, 6)

_F = Fraction

RECORDED: tuple[tuple[str, tuple[Fraction, Fraction, Fraction, Fraction]], ...] = (
    ("aaabaaabbbb", (_F(4), _F(5, 2), _F(4, 3), _F(5, 6))),
    ("abaabaaabbbb", (_F(4), _F(5, 2), _F(5, 3), _F(1))),
    ("abbaabaaabbbb", (_F(4), _F(3), _F(2), _F(7, 6))),
    ("abbbaabaaabbbb", (_F(4), _F(7, 2), _F(4, 3), _F(7, 3))),
    ("abbbababaaabbbb", (_F(4), _F(7, 2), _F(8, 3), _F(3, 2))),
    ("abbbaabbaaabbbb", (_F(4), _F(7, 3), _F(7, 3), _F(3, 2))),
    ("abbbababbaaabbbb", (_F(4), _F(7, 2), _F(8, 3), _F(5, 3))),
)


@dataclass(frozen=True)
class TableCell:
    word: str
    g: int
    computed: Fraction
    recorded: Fraction

    @property
    def match(self) -> bool:
        return self.computed == self.recorded


def table_cells() -> list[TableCell]:
    """All 28 cells, row-major in the recorded order."""
    cells = []
    for word, recorded in RECORDED:
        bf = block_form(word)
        for g, rec in zip(GS, recorded):
            cells.append(TableCell(word, g, sigma(bf, g), rec))
    return cells


def mismatched_cells() -> list[TableCell]:
    return [cell for cell in table_cells() if not cell.match]


def _cell_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def table_text() -> str:
    """Fixed-width table of computed sigma; * marks cells whose recorded
    value differs, with the recorded values listed underneath."""
    cells = table_cells()
    width = max(len(word) for word, _ in RECORDED)
    header = ("word".ljust(width) + "".join(f"  g={g}".ljust(7) for g in GS)).rstrip()
    lines = [header]
    notes = []
    for row in range(len(RECORDED)):
        word = RECORDED[row][0]
        parts = [word.ljust(width)]
        for col in range(len(GS)):
            cell = cells[row * len(GS) + col]
            text = _cell_text(cell.computed)
            if not cell.match:
                text += "*"
                notes.append(
                    f"* {cell.word} g={cell.g}: recorded {_cell_text(cell.recorded)}, "
                    f"computed {_cell_text(cell.computed)}"
                )
            parts.append(("  " + text).ljust(7))
        lines.append("".join(parts).rstrip())
    lines.extend(notes)
    return "\n".join(lines) + "\n"
