"""Deterministic CSV / JSON / SVG emitters for the command-line tools.

Reals are written with 17 significant digits, which round-trips binary64
exactly.  Column order is fixed by the caller; nothing time-dependent is
written unless a provenance line is requested.
"""
import csv
import io
import json
import math

__all__ = ["format_value", "parse_value", "to_csv", "read_csv", "to_json", "render_svg"]


def format_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError(f"refusing to serialise non-finite value {v!r}")
        return f"{v:.16e}"
    return str(v)


def parse_value(text):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def to_csv(columns, rows, provenance=None):
    buf = io.StringIO()
    if provenance:
        buf.write(f"# {provenance}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row[c]) for c in columns])
    return buf.getvalue()


def read_csv(text):
    """Parse emitted CSV back into ``(columns, rows, provenance)``."""
    lines = text.splitlines(keepends=True)
    provenance = None
    if lines and lines[0].startswith("#"):
        provenance = lines[0][1:].strip()
        lines = lines[1:]
    reader = csv.reader(lines)
    columns = next(reader)
    rows = [dict(zip(columns, map(parse_value, rec))) for rec in reader]
    return columns, rows, provenance


def _json_value(v):
    if isinstance(v, (bool, int, float)):
        return format_value(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(x)}" for k, x in v.items()) + "}"
    return json.dumps(str(v), ensure_ascii=False)


def to_json(columns, rows, meta):
    """``{"meta": {...}, "rows": [...]}`` with row keys in column order."""
    body = ",\n    ".join(_json_value({c: row[c] for c in columns}) for row in rows)
    return (
        "{\n"
        f'  "meta": {_json_value(meta)},\n'
        f'  "rows": [\n    {body}\n  ]\n'
        "}\n"
    )


_WIDTH, _HEIGHT = 800, 600


def render_svg(t, panels, title=""):
    """Stacked line plots sharing the t axis.

    ``panels`` is a sequence of ``(label, values)``; each gets its own
    linear y range.
    """
    left, right, top, bottom = 90, 20, 30, 40
    n = len(panels)
    inner_h = (_HEIGHT - top - bottom) / n
    t0, t1 = min(t), max(t)
    span_t = (t1 - t0) or 1.0

    def sx(x):
        return left + (x - t0) / span_t * (_WIDTH - left - right)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{_WIDTH / 2:.1f}" y="18" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="14">{title}</text>')
    for i, (label, values) in enumerate(panels):
        y_top = top + i * inner_h + 8
        y_bot = top + (i + 1) * inner_h - 8
        lo, hi = min(values), max(values)
        if hi == lo:
            hi, lo = hi + 1.0, lo - 1.0

        def sy(v, lo=lo, hi=hi, y_top=y_top, y_bot=y_bot):
            return y_bot - (v - lo) / (hi - lo) * (y_bot - y_top)

        out.append(f'<rect x="{left}" y="{y_top:.1f}" width="{_WIDTH - left - right}" '
                   f'height="{y_bot - y_top:.1f}" fill="none" stroke="black"/>')
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(t, values))
        out.append(f'<polyline fill="none" stroke="#1f4e9c" stroke-width="1.5" points="{pts}"/>')
        out.append(f'<text x="{left - 6}" y="{y_top + 10:.1f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="10">{hi:.3g}</text>')
        out.append(f'<text x="{left - 6}" y="{y_bot:.1f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="10">{lo:.3g}</text>')
        out.append(f'<text x="12" y="{(y_top + y_bot) / 2:.1f}" font-family="sans-serif" '
                   f'font-size="12">{label}</text>')
    y_axis = _HEIGHT - bottom + 14
    out.append(f'<text x="{left}" y="{y_axis}" font-family="sans-serif" font-size="10">{t0:.3g}</text>')
    out.append(f'<text x="{_WIDTH - right}" y="{y_axis}" text-anchor="end" '
               f'font-family="sans-serif" font-size="10">{t1:.3g}</text>')
    out.append(f'<text x="{_WIDTH / 2:.1f}" y="{_HEIGHT - 8}" text-anchor="middle" '
               'font-family="sans-serif" font-size="12">t = pi T / T_c</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
