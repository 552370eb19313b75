"""ASCII drawings of boards in the English convention.

Row labels run down the left margin and column labels across the top.
"""

from __future__ import annotations

from typing import Mapping

from .shapes import Cell


def render_grid(board, marks: Mapping[Cell, str], empty: str = ".") -> str:
    r, n = board.r, board.r + board.c
    width = max([len(str(n))] + [len(m) for m in marks.values()])
    label_w = len(str(r))
    header = " " * label_w + " " + " ".join(str(j).rjust(width) for j in range(r + 1, n + 1))
    lines = [header.rstrip()]
    for i in range(1, r + 1):
        row = []
        for j in range(r + 1, n + 1):
            if (i, j) in board:
                row.append(marks.get((i, j), empty).rjust(width))
            else:
                row.append(" " * width)
        lines.append((str(i).rjust(label_w) + " " + " ".join(row)).rstrip())
    return "\n".join(lines) + "\n"
