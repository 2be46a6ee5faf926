"""Fractional factorial designs as counting functions on a product group,
with projections, class-function checks and the text file format."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .characters import ClassFunction
from .groups import (
    FactorIndexSet,
    GroupError,
    ProductGroup,
    direct_product,
    parse_group_spec,
    project,
)


class DesignError(ValueError):
    pass


class DesignParseError(DesignError):
    """Malformed design file."""


class NotClassFunctionError(DesignError):
    """The counting function is not constant on conjugacy classes."""


@dataclass(frozen=True)
class Design:
    """A multiset of runs over ``group``; ``counts`` holds only positive
    multiplicities, absent runs count zero."""

    group: ProductGroup
    counts: Mapping[tuple[int, ...], int]

    def __post_init__(self):
        counts = {}
        for run, m in self.counts.items():
            run = tuple(int(a) for a in run)
            if not self.group.contains(run):
                raise DesignError(f"run {run} is not an element of {self.group.name}")
            if int(m) != m or m < 0:
                raise DesignError(f"multiplicity of {run} must be a nonnegative integer, got {m}")
            if m:
                counts[run] = counts.get(run, 0) + int(m)
        if not counts:
            raise DesignError("a design needs at least one run")
        object.__setattr__(self, "counts", dict(sorted(counts.items())))

    @property
    def N(self) -> int:
        return sum(self.counts.values())

    @property
    def k(self) -> int:
        return self.group.k

    def O(self, x) -> int:
        return self.counts.get(tuple(x), 0)

    def runs(self) -> list[tuple[int, ...]]:
        """Runs with repetition, sorted."""
        return [r for r, m in self.counts.items() for _ in range(m)]

    def scaled(self, factor: int) -> Design:
        return Design(self.group, {r: m * factor for r, m in self.counts.items()})

    def permute_factors(self, perm) -> Design:
        """Reorder factors: new factor ``j`` is old factor ``perm[j]`` (0-based)."""
        group = ProductGroup(tuple(self.group.factors[p] for p in perm))
        return Design(group, {tuple(r[p] for p in perm): m for r, m in self.counts.items()})

    def class_masses(self) -> np.ndarray:
        """Total multiplicity falling in each conjugacy class."""
        masses = np.zeros(len(self.group.classes))
        for run, m in self.counts.items():
            masses[self.group.class_index(run)] += m
        return masses


def from_runs(group: ProductGroup, runs: Iterable) -> Design:
    runs = [tuple(r) for r in runs]
    if not runs:
        raise DesignError("a design needs at least one run")
    for r in runs:
        if not group.contains(r):
            raise DesignError(f"run {r} is not an element of {group.name}")
    return Design(group, Counter(runs))


def from_labels(group: ProductGroup, rows: Iterable[str | Iterable[str]]) -> Design:
    """Build a design from runs written with element labels, e.g. ``"e 1 0"``."""
    runs = []
    for row in rows:
        syms = row.split() if isinstance(row, str) else list(row)
        if len(syms) != group.k:
            raise DesignError(f"run {syms} has {len(syms)} symbols, expected {group.k}")
        runs.append(tuple(f.parse_label(s) for f, s in zip(group.factors, syms)))
    return from_runs(group, runs)


def full_factorial(group: ProductGroup, lam: int = 1) -> Design:
    if lam < 1:
        raise DesignError(f"replication must be positive, got {lam}")
    return Design(group, {x: lam for x in group.elements()})


def project_design(d: Design, indices: FactorIndexSet) -> Design:
    """Counting function of the projection onto the factors in ``indices``:
    ``O'(y) = sum of O(x) over x projecting to y``."""
    if not isinstance(indices, FactorIndexSet):
        indices = FactorIndexSet.of(indices, d.k)
    if indices.rank == 0:
        raise DesignError("cannot project onto an empty set of factors")
    out: dict[tuple, int] = {}
    for run, m in d.counts.items():
        y = project(run, indices)
        out[y] = out.get(y, 0) + m
    return Design(d.group.subgroup(indices), out)


def _class_values(d: Design) -> list[int] | None:
    """Common multiplicity per class, or None if some class is not constant."""
    sizes = d.group.classes.sizes
    seen: dict[int, list[int]] = {}
    for run, m in d.counts.items():
        seen.setdefault(d.group.class_index(run), []).append(m)
    values = [0] * len(sizes)
    for c, ms in seen.items():
        if len(ms) != sizes[c] or len(set(ms)) != 1:
            return None
        values[c] = ms[0]
    return values


def is_class_function(d: Design) -> bool:
    if d.group.is_abelian:
        return True
    return _class_values(d) is not None


def to_class_function(d: Design) -> ClassFunction:
    values = _class_values(d)
    if values is None:
        raise NotClassFunctionError("counting function is not constant on conjugacy classes")
    return ClassFunction(d.group, values)


# -- text format -----------------------------------------------------------

def parse_design(text: str, base_dir: Path | None = None) -> Design:
    """Parse the line-per-run design format.

    ``#`` lines are comments; one ``groups: <spec> ...`` header; each run is
    ``[<mult> x] <sym_1> ... <sym_k>``.
    """
    group = None
    counts: dict[tuple, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("groups:"):
            if group is not None:
                raise DesignParseError(f"line {lineno}: duplicate groups header")
            specs = line[len("groups:"):].split()
            if not specs:
                raise DesignParseError(f"line {lineno}: empty groups header")
            try:
                group = direct_product([parse_group_spec(s, base_dir) for s in specs])
            except GroupError as exc:
                raise DesignParseError(f"line {lineno}: {exc}") from exc
            continue
        if group is None:
            raise DesignParseError(f"line {lineno}: run before 'groups:' header")
        tokens = line.split()
        mult = 1
        if len(tokens) == group.k + 2 and tokens[1] == "x":
            try:
                mult = int(tokens[0])
            except ValueError:
                raise DesignParseError(f"line {lineno}: multiplicity {tokens[0]!r} is not an integer") from None
            if mult < 1:
                raise DesignParseError(f"line {lineno}: multiplicity must be positive")
            tokens = tokens[2:]
        if len(tokens) != group.k:
            raise DesignParseError(f"line {lineno}: expected {group.k} symbols, got {len(tokens)}")
        try:
            run = tuple(f.parse_label(s) for f, s in zip(group.factors, tokens))
        except GroupError as exc:
            raise DesignParseError(f"line {lineno}: {exc}") from exc
        counts[run] = counts.get(run, 0) + mult
    if group is None:
        raise DesignParseError("missing 'groups:' header")
    if not counts:
        raise DesignParseError("design has no runs")
    return Design(group, counts)


def load_design(path: Path | str) -> Design:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DesignParseError(f"cannot read {path}: {exc}") from exc
    return parse_design(text, base_dir=path.parent)


def format_design(d: Design, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("groups: " + " ".join(d.group.specs))
    for run, m in d.counts.items():
        lines.append(f"{m} x {d.group.format(run)}")
    return "\n".join(lines) + "\n"


def save_design(d: Design, path: Path | str, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_design(d, comments), encoding="utf-8")
