"""ASCII pictures of braid words, top to bottom, one crossing per three rows."""

from __future__ import annotations

from .words import BraidWord

GAP = 4


def render_ascii(w: BraidWord, labels: bool = True) -> str:
    """Strands are columns of '|'; the middle stroke of a crossing is the overpass.

    A positive crossing shows '/' (the strand from the right is on top), a
    negative one '\\'.
    """
    n = w.strands
    width = GAP * (n - 1) + 1
    idle = "".join("|" if c % GAP == 0 else " " for c in range(width))
    lines = []
    if labels:
        head = [" "] * width
        for p in range(n):
            tag = str(p + 1)
            head[GAP * p : GAP * p + len(tag)] = tag
        lines.append("".join(head).rstrip())
    lines.append(idle)
    for x in w.letters:
        c = GAP * (abs(x) - 1)
        rows = [list(idle) for _ in range(3)]
        for row in rows:
            row[c] = row[c + GAP] = " "
        rows[0][c + 1], rows[0][c + 3] = "\\", "/"
        rows[1][c + 2] = "/" if x > 0 else "\\"
        rows[2][c + 1], rows[2][c + 3] = "/", "\\"
        lines.extend("".join(r) for r in rows)
    lines.append(idle)
    return "\n".join(lines)
