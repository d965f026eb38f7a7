"""Text formats.

Polytope files hold one or more polytopes, each a header line ``m n`` (an
optional label may follow) and ``m`` rows of ``n`` integers, one vertex per
row.  Lines starting with ``#`` are comments.  A header with ``m < n`` is read
in the coordinate-major layout used by PALP (``m`` rows of ``n`` columns, one
vertex per column); ``transpose=True`` forces that reading and
``transpose=False`` disables it.

Piecewise linear function files have one affine piece per line:
``a_1 ... a_n c`` as rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .polytope import FAN, Polytope


@dataclass
class RawEntry:
    """A polytope block as read from a file, before validation."""

    rows: list  # vertex rows
    label: str | None
    line: int  # header line number (1-based)


def _content_lines(text):
    for no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield no, stripped


def _int_row(tokens, no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer entry in {' '.join(tokens)!r}", "non_integer", no) from None


def read_entries(text, transpose=None):
    """Split a polytope file into :class:`RawEntry` blocks."""
    lines = list(_content_lines(text))
    entries = []
    pos = 0
    while pos < len(lines):
        no, header = lines[pos]
        tokens = header.split()
        if len(tokens) < 2:
            raise ParseError(f"malformed header {header!r}", "malformed_header", no)
        try:
            m, n = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"malformed header {header!r}", "malformed_header", no) from None
        if m < 1 or n < 1:
            raise ParseError(f"header sizes must be positive, got {m} {n}", "malformed_header", no)
        label = " ".join(tokens[2:]) or None
        coord_major = transpose if transpose is not None else m < n
        if not coord_major and m <= n:
            raise ParseError(
                f"{m} vertices cannot span a full-dimensional polytope in dimension {n}",
                "too_few_vertices",
                no,
            )
        block = lines[pos + 1 : pos + 1 + m]
        if len(block) < m:
            raise ParseError(f"expected {m} rows after the header, found {len(block)}", "truncated", no)
        rows = []
        for rno, row in block:
            vals = _int_row(row.split(), rno)
            if len(vals) != n:
                raise ParseError(f"expected {n} entries, found {len(vals)}", "dimension_mismatch", rno)
            rows.append(vals)
        if coord_major:
            rows = [list(col) for col in zip(*rows)]
            if len(rows) <= m:
                raise ParseError(
                    f"{len(rows)} vertices cannot span a full-dimensional polytope in dimension {m}",
                    "too_few_vertices",
                    no,
                )
        entries.append(RawEntry(rows, label, no))
        pos += 1 + m
    return entries


def build_polytope(entry, lattice_tag=FAN):
    try:
        return Polytope(entry.rows, lattice_tag, entry.label)
    except ParseError:
        raise
    except ValueError as e:  # PolytopeError, DimensionError
        code = getattr(e, "code", "invalid_polytope")
        raise ParseError(str(e), code, entry.line) from e


def parse_polytopes(text, lattice_tag=FAN, transpose=None):
    return [build_polytope(e, lattice_tag) for e in read_entries(text, transpose)]


def parse_polytope(text, lattice_tag=FAN, transpose=None):
    """Parse a file expected to contain exactly one polytope."""
    polys = parse_polytopes(text, lattice_tag, transpose)
    if len(polys) != 1:
        raise ParseError(f"expected one polytope, found {len(polys)}", "entry_count")
    return polys[0]


def serialize_polytope(p):
    """Vertex-major text with vertices in lexicographic order."""
    head = f"{len(p.vertices)} {p.dim}"
    if p.label:
        head += f" {p.label}"
    rows = []
    for v in p.vertices:
        if any(Fraction(a).denominator != 1 for a in v):
            raise ValueError("only lattice polytopes can be written in the integer file format")
        rows.append(" ".join(str(int(a)) for a in v))
    return "\n".join([head] + rows) + "\n"


def serialize_polytopes(polys):
    return "".join(serialize_polytope(p) for p in polys)


def parse_pl_function(text, dim=None):
    """Parse a piecewise linear function file into a
    :class:`~toricstab.stability.PiecewiseLinearFunction`."""
    from .stability import PiecewiseLinearFunction

    pieces = []
    for no, line in _content_lines(text):
        line = line.split("#", 1)[0]
        try:
            vals = [Fraction(t) for t in line.split()]
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational in {line!r}", "non_rational", no) from None
        if dim is not None and len(vals) != dim + 1:
            raise ParseError(f"expected {dim + 1} numbers, found {len(vals)}", "dimension_mismatch", no)
        if pieces and len(vals) != len(pieces[0][0]) + 1:
            raise ParseError("pieces have different lengths", "dimension_mismatch", no)
        if len(vals) < 2:
            raise ParseError("a piece needs a gradient and a constant", "dimension_mismatch", no)
        pieces.append((tuple(vals[:-1]), vals[-1]))
    if not pieces:
        raise ParseError("no pieces found", "empty")
    return PiecewiseLinearFunction(tuple(pieces))
