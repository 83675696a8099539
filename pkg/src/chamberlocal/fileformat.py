"""
Arrangement text files::

    # three generic lines
    dim 2
    1 0 0      # x = 0
    0 1 0      # y = 0
    1 1 1      # x + y = 1

Each data line holds integer coefficients ``a_1 .. a_ell c`` meaning ``a . x = c``.
"""
from __future__ import annotations

from pathlib import Path

from .arrangement import Arrangement, ArrangementError, normalize_arrangement


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<string>"):
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def parse_arrangement(text: str, source: str = "<string>") -> Arrangement:
    ell = None
    raw = []
    first_data_line = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if ell is None:
            if tokens[0] != "dim" or len(tokens) != 2:
                raise ParseError("expected header 'dim <ell>'", lineno, source)
            try:
                ell = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad dimension {tokens[1]!r}", lineno, source) from None
            if ell not in (1, 2):
                raise ParseError(f"dimension must be 1 or 2, got {ell}", lineno, source)
            continue
        if len(tokens) != ell + 1:
            raise ParseError(f"expected {ell + 1} integers, got {len(tokens)}", lineno, source)
        try:
            nums = [int(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(f"non-integer coefficient ({exc})", lineno, source) from None
        first_data_line[len(raw)] = lineno
        raw.append((tuple(nums[:-1]), nums[-1]))
    if ell is None:
        raise ParseError("missing 'dim' header", None, source)
    try:
        return normalize_arrangement(raw, ell)
    except ArrangementError as exc:
        # messages name hyperplanes 1-based; map back to a file line when possible
        line = None
        for idx, lineno in first_data_line.items():
            if f"hyperplane {idx + 1}" in str(exc):
                line = lineno
        raise ParseError(str(exc), line, source) from None


def read_arrangement(path: str | Path) -> Arrangement:
    path = Path(path)
    return parse_arrangement(path.read_text(), str(path))


def format_arrangement(A: Arrangement, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"dim {A.ell}")
    for h in A:
        lines.append(" ".join(str(v) for v in (*h.normal, h.offset)))
    return "\n".join(lines) + "\n"
