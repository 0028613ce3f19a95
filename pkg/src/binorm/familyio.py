"""Reading and writing family files.

Two formats carry a list of families over one ground set.

JSON::

    {"n": 3, "families": [[[1], [2, 3]], [[]]]}

Text: a header ``n=<int>``, then one block per family separated by blank
lines, one set per line as space-separated elements, ``.`` for the empty
set.  A block holding the single line ``-`` is the empty family.
"""

from __future__ import annotations

import json
from typing import Sequence

from .core import MAX_N, Family, mask_of

__all__ = [
    "FamilyFileError",
    "dumps_json",
    "dumps_text",
    "family_from_sets",
    "load",
    "loads_json",
    "loads_text",
]


class FamilyFileError(ValueError):
    """Malformed family file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"{message} at line {line}" if line is not None else message)


def family_from_sets(n: int, sets: Sequence[Sequence[int]]) -> Family:
    return Family(n, (mask_of(s, n) for s in sets))


def _check_header_n(n: object, line: int | None) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or not 0 <= n <= MAX_N:
        raise FamilyFileError(f"ground-set size must be an integer in 0..{MAX_N}, got {n!r}", line)
    return n


def loads_json(text: str) -> tuple[int, list[Family]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFileError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "n" not in data or "families" not in data:
        raise FamilyFileError('expected an object with keys "n" and "families"')
    n = _check_header_n(data["n"], None)
    fams = []
    for fi, sets in enumerate(data["families"]):
        if not isinstance(sets, list):
            raise FamilyFileError(f"family {fi} is not a list of sets")
        masks = []
        for s in sets:
            if not isinstance(s, list):
                raise FamilyFileError(f"family {fi} contains a non-list set {s!r}")
            try:
                masks.append(mask_of(s, n))
            except (ValueError, TypeError) as exc:
                raise FamilyFileError(f"family {fi}: {exc}") from None
        fams.append(Family(n, masks))
    return n, fams


def dumps_json(n: int, families: Sequence[Family]) -> str:
    return json.dumps({"n": n, "families": [f.as_sets() for f in families]})


def loads_text(text: str) -> tuple[int, list[Family]]:
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise FamilyFileError("missing header 'n=<int>'", 1)
    header = lines[idx].strip().replace(" ", "")
    if not header.startswith("n="):
        raise FamilyFileError("expected header 'n=<int>'", idx + 1)
    try:
        n = int(header[2:])
    except ValueError:
        raise FamilyFileError("expected header 'n=<int>'", idx + 1) from None
    n = _check_header_n(n, idx + 1)

    fams: list[Family] = []
    block: list[int] | None = None
    empty_marker = False
    for lineno, raw in enumerate(lines[idx + 1:], start=idx + 2):
        line = raw.strip()
        if not line:
            if block is not None:
                fams.append(Family(n, block))
                block = None
                empty_marker = False
            continue
        if block is None:
            block = []
        if line == "-":
            if block:
                raise FamilyFileError("'-' must be the only line of an empty-family block", lineno)
            empty_marker = True
            continue
        if empty_marker:
            raise FamilyFileError("'-' must be the only line of an empty-family block", lineno)
        if line == ".":
            block.append(0)
            continue
        try:
            elems = [int(tok) for tok in line.split()]
        except ValueError:
            raise FamilyFileError(f"non-integer element in {line!r}", lineno) from None
        for e in elems:
            if not 1 <= e <= n:
                raise FamilyFileError(f"element out of range ({e} not in 1..{n})", lineno)
        block.append(mask_of(elems, n))
    if block is not None:
        fams.append(Family(n, block))
    return n, fams


def dumps_text(n: int, families: Sequence[Family]) -> str:
    out = [f"n={n}"]
    for i, fam in enumerate(families):
        if i:
            out.append("")
        if not len(fam):
            out.append("-")
        for s in fam.as_sets():
            out.append(" ".join(map(str, s)) if s else ".")
    return "\n".join(out) + "\n"


def load(path: str) -> tuple[int, list[Family]]:
    """Read a family file; the format is picked from a leading ``{``."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return loads_json(text)
    return loads_text(text)
