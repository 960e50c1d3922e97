"""JSON file formats for distributions, cumulant tables and R-diagonal specs.

Distribution / cumulant files::

    {"order": 2, "alphabet": ["a"], "moments": [{"word": "a", "value": "0"}, ...]}

with ``"cumulants"`` in place of ``"moments"`` for cumulant tables. Missing
words are an error unless the file sets ``"default"``. ``"star": false``
declares an alphabet without adjoints (default true). Files are written
with every word listed in canonical order so that writing what was read
reproduces the file byte for byte.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .words import (
    CumulantTable,
    MomentFunctional,
    WordError,
    format_word,
    parse_word,
    to_rational,
)

__all__ = [
    "FormatError",
    "table_to_dict",
    "table_from_dict",
    "dumps_table",
    "loads_table",
    "read_table",
    "write_table",
    "spec_to_dict",
    "spec_from_dict",
    "read_spec",
    "write_spec",
]

Table = Union[MomentFunctional, CumulantTable]


class FormatError(ValueError):
    """A structured file does not follow the expected schema."""


def rational_str(x: Fraction) -> str:
    return str(x)


def table_to_dict(table: Table) -> dict:
    d: dict = {"order": table.order, "alphabet": list(table.alphabet)}
    if not table.star:
        d["star"] = False
    d[table.kind] = [{"word": format_word(w), "value": rational_str(v)} for w, v in table.items()]
    return d


def table_from_dict(d: dict) -> Table:
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    kinds = [k for k in ("moments", "cumulants") if k in d]
    if len(kinds) != 1:
        raise FormatError('exactly one of "moments" or "cumulants" is required')
    kind = kinds[0]
    cls = MomentFunctional if kind == "moments" else CumulantTable
    try:
        order = d["order"]
        alphabet = d["alphabet"]
    except KeyError as e:
        raise FormatError(f"missing key {e.args[0]!r}") from None
    if not isinstance(order, int) or isinstance(order, bool):
        raise FormatError('"order" must be an integer')
    if not isinstance(alphabet, list) or not all(isinstance(a, str) for a in alphabet):
        raise FormatError('"alphabet" must be a list of strings')
    star = d.get("star", True)
    if not isinstance(star, bool):
        raise FormatError('"star" must be a boolean')
    if not isinstance(d[kind], list):
        raise FormatError(f'"{kind}" must be a list')
    values = {}
    for entry in d[kind]:
        try:
            w = parse_word(entry["word"], alphabet)
            v = to_rational(str(entry["value"]) if isinstance(entry["value"], int) else entry["value"])
        except (KeyError, TypeError):
            raise FormatError(f"bad entry {entry!r}") from None
        except WordError as e:
            raise FormatError(f"bad entry {entry!r}: {e}") from None
        if w in values:
            raise FormatError(f"duplicate word {entry['word']!r}")
        values[w] = v
    default = d.get("default")
    try:
        return cls(order, alphabet, values, star=star, default=default)
    except WordError as e:
        raise FormatError(str(e)) from None


def dumps_table(table: Table) -> str:
    return json.dumps(table_to_dict(table), indent=2) + "\n"


def loads_table(text: str) -> Table:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    return table_from_dict(d)


def read_table(path: str | Path) -> Table:
    return loads_table(Path(path).read_text())


def write_table(table: Table, path: str | Path) -> None:
    Path(path).write_text(dumps_table(table))


def spec_to_dict(spec) -> dict:
    return {
        "order": spec.order,
        "alpha": [rational_str(x) for x in spec.alpha],
        "beta": [rational_str(x) for x in spec.beta],
    }


def spec_from_dict(d: dict):
    from .free import RDiagonalSpec

    try:
        return RDiagonalSpec(
            d["order"],
            [to_rational(x) for x in d["alpha"]],
            [to_rational(x) for x in d["beta"]],
        )
    except KeyError as e:
        raise FormatError(f"missing key {e.args[0]!r}") from None
    except (TypeError, ValueError) as e:
        raise FormatError(str(e)) from None


def read_spec(path: str | Path):
    try:
        d = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    return spec_from_dict(d)


def write_spec(spec, path: str | Path) -> None:
    Path(path).write_text(json.dumps(spec_to_dict(spec), indent=2) + "\n")
