"""Group catalog: label grammar, manifest parsing, and the default corpus.

Labels follow ``Z<n> | D<2n> | Q<4n> | S<n> | A<n> | <label>x<label>``; the
product separator is a lowercase ``x`` and associates to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable

from .groups import (
    DEFAULT_BUDGET,
    GroupTable,
    direct_product,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_symmetric,
)


class ManifestError(ValueError):
    """A catalog manifest line that does not parse; carries the line number."""


_ATOM = re.compile(r"^([ZDQSA])(\d+)$")

_FAMILIES: dict[str, Callable[[int, int], GroupTable]] = {
    "Z": make_cyclic,
    "D": make_dihedral,
    "Q": make_generalized_quaternion,
    "S": make_symmetric,
    "A": make_alternating,
}


def parse_group_label(label: str, budget: int = DEFAULT_BUDGET) -> GroupTable:
    """Construct the group a label denotes."""
    label = label.strip()
    if not label:
        raise ManifestError("empty label")
    parts = label.split("x")
    groups = []
    for part in parts:
        m = _ATOM.match(part)
        if not m:
            raise ManifestError(f"bad label {part!r} in {label!r}")
        family, number = m.group(1), int(m.group(2))
        try:
            groups.append(_FAMILIES[family](number, budget))
        except ValueError as exc:
            raise ManifestError(f"{part!r}: {exc}") from exc
    out = groups[0]
    for g in groups[1:]:
        out = direct_product(out, g, budget)
    return out


def load_manifest(text: str, budget: int = DEFAULT_BUDGET) -> list[str]:
    """Parse a manifest (one label per line, '#' comments) into labels.

    Labels are validated for syntax only; groups are constructed lazily.
    Raises :class:`ManifestError` with a line diagnostic on bad input.
    """
    labels = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for part in line.split("x"):
            if not _ATOM.match(part):
                raise ManifestError(f"line {lineno}: bad label {line!r}")
        if line in seen:
            raise ManifestError(f"line {lineno}: duplicate label {line!r}")
        seen.add(line)
        labels.append(line)
    return labels


@dataclass
class GroupCatalog:
    """Labels plus lazily constructed groups, cached per catalog."""

    labels: list[str]
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("catalog labels must be unique")
        self._cache: dict[str, GroupTable] = {}

    def __iter__(self) -> Iterable[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def group(self, label: str) -> GroupTable:
        if label not in self._cache:
            self._cache[label] = parse_group_label(label, self.budget)
        return self._cache[label]

    def groups(self) -> Iterable[GroupTable]:
        for label in self.labels:
            yield self.group(label)


def default_catalog_labels() -> list[str]:
    """The built-in verification corpus.

    Cyclic groups through order 24, dihedral through order 40, generalized
    quaternion through order 40, symmetric/alternating through degree 7, and
    ten direct products mixing the families.
    """
    labels = [f"Z{n}" for n in range(1, 25)]
    labels += [f"D{m}" for m in range(6, 41, 2)]
    labels += [f"Q{m}" for m in range(8, 41, 4)]
    labels += [f"S{n}" for n in range(2, 8)]
    labels += [f"A{n}" for n in range(3, 8)]
    labels += [
        "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ6", "Z4xZ6",
        "S3xZ3", "S3xZ4", "A4xZ3", "Q8xZ3", "D10xZ3",
    ]
    return labels


def default_catalog(budget: int = DEFAULT_BUDGET) -> GroupCatalog:
    return GroupCatalog(default_catalog_labels(), budget)
