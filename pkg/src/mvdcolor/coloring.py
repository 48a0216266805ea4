"""Vertex colorings keyed by label."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

from .errors import FormatError, InputError


class Coloring(Mapping):
    """Total map from vertex label to a positive integer color.

    Color ids are names only: two colorings with the same classes are
    equivalent (see :meth:`same_partition`).
    """

    __slots__ = ("_colors",)

    def __init__(self, assignment: Mapping[str, int] | Iterable[tuple[str, int]]):
        colors = dict(assignment)
        for label, c in colors.items():
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise InputError(f"color of {label!r} must be a positive integer, got {c!r}")
        self._colors = colors

    def __getitem__(self, label: str) -> int:
        return self._colors[label]

    def __iter__(self) -> Iterator[str]:
        return iter(self._colors)

    def __len__(self) -> int:
        return len(self._colors)

    def __repr__(self) -> str:
        return f"Coloring({format_coloring(self)!r})"

    @property
    def colors(self) -> set[int]:
        return set(self._colors.values())

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    @property
    def classes(self) -> list[frozenset[str]]:
        """Color classes, ordered by color id."""
        groups: dict[int, set[str]] = {}
        for label, c in self._colors.items():
            groups.setdefault(c, set()).add(label)
        return [frozenset(groups[c]) for c in sorted(groups)]

    def partition(self) -> frozenset[frozenset[str]]:
        return frozenset(self.classes)

    def same_partition(self, other: Mapping[str, int]) -> bool:
        return self.partition() == Coloring(other).partition()

    def restrict(self, labels: Iterable[str]) -> Coloring:
        return Coloring({x: self._colors[x] for x in labels})

    def shifted(self, offset: int) -> Coloring:
        return Coloring({x: c + offset for x, c in self._colors.items()})

    def normalized(self, order: Iterable[str] | None = None) -> Coloring:
        """Renumber colors 1, 2, ... by first appearance along ``order``."""
        order = list(self._colors) if order is None else list(order)
        fresh: dict[int, int] = {}
        out = {}
        for x in order:
            c = self._colors[x]
            out[x] = fresh.setdefault(c, len(fresh) + 1)
        return Coloring(out)


def parse_coloring(text: str) -> Coloring:
    """Parse ``a:1, b:2`` into a :class:`Coloring`."""
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        label, sep, color = item.rpartition(":")
        label = label.strip()
        if not sep or not label:
            raise FormatError(f"bad coloring item {item!r}; expected label:color")
        try:
            value = int(color.strip())
        except ValueError:
            raise FormatError(f"bad color {color.strip()!r} for {label!r}") from None
        if label in out:
            raise FormatError(f"vertex {label!r} colored twice")
        if value < 1:
            raise FormatError(f"color of {label!r} must be positive")
        out[label] = value
    if not out:
        raise FormatError("empty coloring")
    return Coloring(out)


def format_coloring(c: Mapping[str, int], order: Iterable[str] | None = None, sep: str = ", ") -> str:
    order = list(c) if order is None else order
    return sep.join(f"{x}:{c[x]}" for x in order)
