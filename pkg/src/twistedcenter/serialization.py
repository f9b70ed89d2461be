"""JSON encodings shared by the CLI and the disk cache."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable


def rational(x) -> str:
    """Fraction -> "a/b" (or "a" when integral)."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def partition_key(parts: Iterable[int]) -> str:
    """(3, 1) -> "[3,1]"; the empty partition is "[]"."""
    return json.dumps([int(p) for p in parts], separators=(",", ":"))


def parse_partition_key(text: str) -> tuple[int, ...]:
    return tuple(json.loads(text))


def pair_key(a: Iterable[int], b: Iterable[int]) -> str:
    return f"{partition_key(a)}|{partition_key(b)}"


def parse_pair_key(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    left, right = text.split("|")
    return parse_partition_key(left), parse_partition_key(right)


def coeff_map(coeffs: dict) -> dict[str, str]:
    """{partition: Fraction} -> {"[3,1]": "a/b"}, preserving iteration order."""
    return {partition_key(k): rational(v) for k, v in coeffs.items()}


def dumps(data) -> str:
    return json.dumps(data, indent=None, separators=(",", ":"))
