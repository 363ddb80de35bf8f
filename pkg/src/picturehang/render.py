"""Schematic weaving diagrams for hanging words.

Nails sit on a horizontal line; the rope visits them in word order,
making one clockwise or counterclockwise loop per letter.  Wraps are
drawn as stacked loops in word order; over/under crossing optics are
deliberately not modeled, since the word determines the hanging up to
isotopy.  Output is deterministic text line art or SVG.
"""

from __future__ import annotations

from .words import Word, nail_counts

__all__ = ["to_diagram", "SUPPORTED_FORMATS"]

SUPPORTED_FORMATS = ("text", "vector")

_COL = 4


def _tok(x: int) -> str:
    return f"x{x}" if x > 0 else f"X{-x}"


def _legend_lines(w: Word, n: int) -> list[str]:
    counts = nail_counts(w, n)
    lines = [f"legend: {len(w)} letters"]
    for i in range(1, n + 1):
        lines.append(f"  nail {i}: {counts[i]} wraps")
    return lines


def _text_diagram(w: Word, n: int) -> str:
    header = "nails: " + "".join(str(i).ljust(_COL) for i in range(1, n + 1)).rstrip()
    marks = "       " + "".join("o".ljust(_COL) for _ in range(1, n + 1)).rstrip()
    lines = [header, marks]
    prefix = "rope:  "
    for t, x in enumerate(w.letters):
        nail = x if x > 0 else -x
        glyph = ")" if x > 0 else "("
        direction = "clockwise" if x > 0 else "counterclockwise"
        cells = "".join(
            (glyph if i == nail else ".").ljust(_COL) for i in range(1, n + 1)
        )
        lines.append(f"{prefix}{cells}{_tok(x)}  {direction}")
        prefix = "       "
    lines.extend(_legend_lines(w, n))
    return "\n".join(lines) + "\n"


def _vector_diagram(w: Word, n: int) -> str:
    margin = 30
    spacing = 60
    nail_y = 30
    rope_top = 70
    row_h = 26
    loop_r = 9
    width = margin * 2 + spacing * max(n - 1, 0) + 120
    height = rope_top + row_h * max(len(w), 1) + 24 * (n + 1) + 40

    def nx(i: int) -> int:
        return margin + spacing * (i - 1)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>picture hanging on {n} nails</title>",
    ]
    for i in range(1, n + 1):
        parts.append(f'<circle cx="{nx(i)}" cy="{nail_y}" r="4" fill="black"/>')
        parts.append(
            f'<text x="{nx(i)}" y="{nail_y - 10}" font-size="12" '
            f'text-anchor="middle">{i}</text>'
        )
    if w.letters:
        d = [f"M {margin - 20} {rope_top}"]
        labels = []
        for t, x in enumerate(w.letters):
            nail = x if x > 0 else -x
            sweep = 1 if x > 0 else 0
            y = rope_top + row_h * t
            cx = nx(nail)
            d.append(f"L {cx - loop_r} {y}")
            d.append(f"A {loop_r} {loop_r} 0 1 {sweep} {cx + loop_r} {y}")
            d.append(f"A {loop_r} {loop_r} 0 1 {sweep} {cx - loop_r} {y}")
            direction = "cw" if x > 0 else "ccw"
            labels.append(
                f'<text x="{cx + loop_r + 6}" y="{y + 4}" font-size="11">'
                f"{_tok(x)} {direction}</text>"
            )
        d.append(f"L {width - margin + 10} {rope_top + row_h * (len(w) - 1)}")
        parts.append(
            f'<path d="{" ".join(d)}" fill="none" stroke="black" stroke-width="1.5"/>'
        )
        parts.extend(labels)
    legend_y = rope_top + row_h * max(len(w), 1) + 20
    for k, line in enumerate(_legend_lines(w, n)):
        parts.append(
            f'<text x="{margin - 20}" y="{legend_y + 24 * k}" font-size="12" '
            f'xml:space="preserve">{line}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def to_diagram(w: Word, n: int, format: str = "text") -> str:
    """Render the weaving diagram for w on n nails in the given format."""
    if n < w.max_nail:
        raise ValueError(f"word uses nail {w.max_nail} beyond n={n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if format == "text":
        return _text_diagram(w, n)
    if format == "vector":
        return _vector_diagram(w, n)
    raise ValueError(
        f"unsupported format {format!r}; supported formats: {', '.join(SUPPORTED_FORMATS)}"
    )
