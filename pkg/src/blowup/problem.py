"""The line-oriented problem format.

    # E2
    field = QQ
    vars = x, y
    I = [x^2, x*y, y^2]
    J = [x^2, y^2]          # or: J = auto
    seed = 7                # optional, also rmax and pmax
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional

from .groebner import Ideal
from .polynomial import Field, ParseError, PolyRing, Polynomial, QQ

REQUIRED = ("field", "vars", "I", "J")
OPTIONAL = ("seed", "rmax", "pmax")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ProblemError(ValueError):
    """Problem text rejected, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class ProblemSpec:
    ring: PolyRing
    I: List[Polynomial]
    J: Optional[List[Polynomial]]  # None means generate
    seed: Optional[int] = None
    rmax: Optional[int] = None
    pmax: Optional[int] = None
    name: str = ""

    @property
    def auto(self) -> bool:
        return self.J is None

    def ideal_I(self) -> Ideal:
        return Ideal(self.ring, self.I)

    def ideal_J(self) -> Ideal:
        if self.J is None:
            raise ValueError("J is generated")
        return Ideal(self.ring, self.J)


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _parse_field(value: str, line: int, col: int) -> Field:
    parts = value.split()
    if parts == ["QQ"]:
        return QQ
    if len(parts) == 2 and parts[0] == "Fp" and parts[1].isdigit():
        try:
            return Field(int(parts[1]))
        except ValueError as exc:
            raise ProblemError(str(exc), line, col) from None
    raise ProblemError(f"field must be 'QQ' or 'Fp <prime>', got {value!r}", line, col)


def _parse_vars(value: str, line: int, col: int) -> List[str]:
    names = []
    offset = 0
    for chunk in value.split(","):
        name = chunk.strip()
        here = col + offset + len(chunk) - len(chunk.lstrip())
        if not _NAME.match(name):
            raise ProblemError(f"bad variable name {name!r}", line, here)
        if name in names:
            raise ProblemError(f"duplicate variable {name!r}", line, here)
        names.append(name)
        offset += len(chunk) + 1
    return names


def _parse_list(value: str, ring: PolyRing, line: int, col: int) -> List[Polynomial]:
    text = value.rstrip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ProblemError("expected a bracketed list [f1, f2, ...]", line, col)
    inner = text[1:-1]
    if not inner.strip():
        raise ProblemError("empty generator list", line, col)
    out = []
    offset = 1
    for chunk in inner.split(","):
        try:
            out.append(ring(chunk))
        except ParseError as exc:
            inner_col = exc.column or 1
            raise ProblemError(str(exc).rsplit(" (column", 1)[0], line, col + offset + inner_col - 1) from None
        offset += len(chunk) + 1
    return out


def _parse_int(value: str, key: str, line: int, col: int, low: int = 0) -> int:
    try:
        n = int(value.strip())
    except ValueError:
        raise ProblemError(f"{key} must be an integer", line, col) from None
    if n < low:
        raise ProblemError(f"{key} must be at least {low}", line, col)
    return n


def parse_problem(text: str, name: str = "") -> ProblemSpec:
    raw: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = _strip_comment(line)
        if not body.strip():
            continue
        if "=" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise ProblemError("expected 'key = value'", lineno, col)
        key_part, value = body.split("=", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        if key not in REQUIRED + OPTIONAL:
            raise ProblemError(f"unknown key {key!r}", lineno, key_col)
        if key in raw:
            raise ProblemError(f"duplicate key {key!r}", lineno, key_col)
        value_col = len(key_part) + 2 + len(value) - len(value.lstrip())
        if not value.strip():
            raise ProblemError(f"missing value for {key!r}", lineno, value_col)
        raw[key] = (value.strip(), lineno, value_col)
    last = max(1, len(text.splitlines()))
    for key in REQUIRED:
        if key not in raw:
            raise ProblemError(f"missing key {key!r}", last)

    field = _parse_field(*raw["field"])
    ring = PolyRing(_parse_vars(*raw["vars"]), field)
    I = _parse_list(raw["I"][0], ring, *raw["I"][1:])
    j_value = raw["J"][0]
    J = None if j_value == "auto" else _parse_list(j_value, ring, *raw["J"][1:])
    opts = {}
    for key in OPTIONAL:
        if key in raw:
            value, lineno, col = raw[key]
            opts[key] = _parse_int(value, key, lineno, col, low=0 if key != "seed" else -(2 ** 63))
    return ProblemSpec(ring, I, J, name=name, **opts)


def format_problem(spec: ProblemSpec) -> str:
    lines = [f"field = {spec.ring.field}", f"vars = {', '.join(spec.ring.variables)}"]
    lines.append("I = [" + ", ".join(map(str, spec.I)) + "]")
    lines.append("J = auto" if spec.J is None else "J = [" + ", ".join(map(str, spec.J)) + "]")
    for key in OPTIONAL:
        value = getattr(spec, key)
        if value is not None:
            lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"

