"""Finite groups given by multiplication tables, their direct products,
conjugacy classes, factorial subgroups and coordinate projections.

Elements of a :class:`FactorGroup` are dense integer ids ``0..order-1``.
Elements of a :class:`ProductGroup` are tuples of per-factor ids.  Factor
indices in every public function are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

MAX_ORDER = 200


class GroupError(ValueError):
    """Invalid group data."""


class NotAssociativeError(GroupError):
    pass


class NoIdentityError(GroupError):
    pass


class NoInverseError(GroupError):
    pass


class UnknownGroupSpecError(GroupError):
    pass


@dataclass(frozen=True)
class ConjugacyClasses:
    """Partition of a group into conjugacy classes.

    The class containing the identity is always first.
    """

    classes: tuple[tuple, ...]
    index: dict

    @property
    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, x) -> int:
        return self.index[x]


@dataclass(frozen=True, eq=True)
class FactorGroup:
    """A finite group on ids ``0..order-1`` with a validated Cayley table.

    ``kind`` records which factory built the group (``"cyclic"``, ``"S3"``
    or ``"table"``) so that character tables can use closed forms where
    they exist.  ``spec`` is the string that reproduces the group in design
    file headers.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    identity: int
    kind: str = "table"
    spec: str = ""

    def __post_init__(self):
        _validate(self.table, self.labels)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def name(self) -> str:
        return self.spec or f"G{self.order}"

    def elements(self) -> range:
        return range(self.order)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return int(self._inverses[a])

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    @cached_property
    def _inverses(self) -> np.ndarray:
        return np.argmax(self.array == self.identity, axis=1)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.array, self.array.T))

    def label(self, a: int) -> str:
        return self.labels[a]

    def parse_label(self, symbol: str) -> int:
        try:
            return self._label_index[symbol]
        except KeyError:
            raise GroupError(f"unknown symbol {symbol!r} for group {self.name}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.labels)}

    @cached_property
    def classes(self) -> ConjugacyClasses:
        # column h of conj[g, h] is h g h^-1
        t = self.array
        inv = self._inverses
        conj = t[t.T, inv[None, :]]
        seen: dict[int, int] = {}
        classes: list[tuple[int, ...]] = []
        for g in [self.identity] + [g for g in self.elements() if g != self.identity]:
            if g in seen:
                continue
            members = tuple(sorted({int(v) for v in conj[g]}))
            for m in members:
                seen[m] = len(classes)
            classes.append(members)
        return ConjugacyClasses(tuple(classes), seen)


def _validate(table, labels) -> None:
    n = len(table)
    if n == 0:
        raise GroupError("group must have at least one element")
    if n > MAX_ORDER:
        raise GroupError(f"groups of order > {MAX_ORDER} are not supported (got {n})")
    if len(labels) != n:
        raise GroupError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise GroupError("element labels must be unique")
    if any(not s or any(ch.isspace() for ch in s) for s in labels):
        raise GroupError("labels must be nonempty and contain no whitespace")
    t = np.asarray(table, dtype=np.int64)
    if t.shape != (n, n):
        raise GroupError(f"table must be {n}x{n}")
    if t.min() < 0 or t.max() >= n:
        raise GroupError("table entries must be element ids 0..order-1")
    # (ab)c versus a(bc), all triples at once
    if not np.array_equal(t[t, :], t[:, t]):
        raise NotAssociativeError("multiplication table is not associative")
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not ids:
        raise NoIdentityError("multiplication table has no identity element")
    e = ids[0]
    for a in range(n):
        if not np.any((t[a] == e) & (t[:, a] == e)):
            raise NoInverseError(f"element {labels[a]!r} has no inverse")


def make_from_table(
    order: int, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, spec: str = ""
) -> FactorGroup:
    """Build a group from an ``order x order`` Cayley table of ids.

    Raises a distinct :class:`GroupError` subclass for non-associative
    tables, a missing identity and missing inverses.
    """
    if labels is None:
        labels = [str(i) for i in range(order)]
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != order or any(len(r) != order for r in rows):
        raise GroupError(f"table must be {order}x{order}")
    t = np.asarray(rows) if rows else None
    identity = 0
    if t is not None and order <= MAX_ORDER:
        ar = np.arange(order)
        for e in range(order):
            if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
                identity = e
                break
    return FactorGroup(rows, tuple(labels), identity, "table", spec)


def make_cyclic(s: int) -> FactorGroup:
    """Additive group of integers modulo ``s``."""
    if s < 1:
        raise GroupError(f"cyclic group order must be positive, got {s}")
    table = tuple(tuple((a + b) % s for b in range(s)) for a in range(s))
    return FactorGroup(table, tuple(str(i) for i in range(s)), 0, "cyclic", f"Z{s}")


S3_LABELS = ("e", "a", "b", "c", "x", "y")
_S3_PERMS = {
    "e": (0, 1, 2),
    "a": (1, 0, 2),
    "b": (2, 1, 0),
    "c": (0, 2, 1),
    "x": (1, 2, 0),
    "y": (2, 0, 1),
}


def make_s3() -> FactorGroup:
    """Symmetric group on three letters: ``a, b, c`` transpositions and
    ``x, y`` the two 3-cycles, with ``x*x == y``."""
    perms = [_S3_PERMS[s] for s in S3_LABELS]
    lookup = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(lookup[tuple(p[q[i]] for i in range(3))] for q in perms) for p in perms)
    return FactorGroup(table, S3_LABELS, 0, "S3", "S3")


@dataclass(frozen=True)
class FactorIndexSet:
    """A sorted set of 1-based factor indices within ``1..k``."""

    indices: tuple[int, ...]
    k: int

    def __post_init__(self):
        idx = tuple(self.indices)
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"factor indices must be strictly increasing: {idx}")
        if idx and (idx[0] < 1 or idx[-1] > self.k):
            raise IndexError(f"factor indices {idx} out of range 1..{self.k}")

    @classmethod
    def of(cls, indices, k: int) -> FactorIndexSet:
        return cls(tuple(sorted(int(i) for i in indices)), k)

    @property
    def rank(self) -> int:
        return len(self.indices)

    def complement(self) -> FactorIndexSet:
        return factorial_complement(self.k, self)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)


def factorial_complement(k: int, indices) -> FactorIndexSet:
    chosen = set(indices.indices if isinstance(indices, FactorIndexSet) else indices)
    return FactorIndexSet(tuple(i for i in range(1, k + 1) if i not in chosen), k)


def all_index_sets(k: int, rank: int | None = None) -> Iterator[FactorIndexSet]:
    ranks = range(k + 1) if rank is None else [rank]
    for r in ranks:
        for combo in itertools.combinations(range(1, k + 1), r):
            yield FactorIndexSet(combo, k)


@dataclass(frozen=True)
class ProductGroup:
    """Direct product ``G_1 x ... x G_k`` acting componentwise on tuples."""

    factors: tuple[FactorGroup, ...]

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return int(np.prod([f.order for f in self.factors], dtype=np.int64))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(f.order for f in self.factors)

    @property
    def identity(self) -> tuple[int, ...]:
        return tuple(f.identity for f in self.factors)

    @property
    def is_abelian(self) -> bool:
        return all(f.is_abelian for f in self.factors)

    @property
    def specs(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.factors)

    @property
    def name(self) -> str:
        return " x ".join(self.specs) if self.factors else "1"

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(f.elements() for f in self.factors))

    def multiply(self, x, y) -> tuple[int, ...]:
        return tuple(f.table[a][b] for f, a, b in zip(self.factors, x, y))

    def inverse(self, x) -> tuple[int, ...]:
        return tuple(f.inverse(a) for f, a in zip(self.factors, x))

    def contains(self, x) -> bool:
        return len(x) == self.k and all(
            isinstance(a, (int, np.integer)) and 0 <= a < f.order for f, a in zip(self.factors, x)
        )

    def subgroup(self, indices: FactorIndexSet) -> ProductGroup:
        """The factorial subgroup on ``indices``, as a group in its own right."""
        return ProductGroup(tuple(self.factors[i - 1] for i in indices))

    def embed(self, y, indices: FactorIndexSet) -> tuple[int, ...]:
        """Inverse of :func:`project` on the factorial subgroup: fill the
        coordinates outside ``indices`` with identities."""
        out = list(self.identity)
        for i, v in zip(indices, y):
            out[i - 1] = v
        return tuple(out)

    @property
    def class_shape(self) -> tuple[int, ...]:
        return tuple(len(f.classes) for f in self.factors)

    def class_index(self, x) -> int:
        """Flat index of the class of ``x`` in :attr:`classes` order."""
        idx = 0
        for f, a in zip(self.factors, x):
            idx = idx * len(f.classes) + f.classes.index[a]
        return idx

    @cached_property
    def classes(self) -> ConjugacyClasses:
        """Cartesian products of the factor classes, in lexicographic order of
        factor class indices (so the identity class comes first)."""
        classes = []
        index = {}
        for combo in itertools.product(*(f.classes.classes for f in self.factors)):
            members = tuple(itertools.product(*combo))
            for m in members:
                index[m] = len(classes)
            classes.append(members)
        return ConjugacyClasses(tuple(classes), index)

    def format(self, x) -> str:
        return " ".join(f.label(a) for f, a in zip(self.factors, x))


def direct_product(factors: Sequence[FactorGroup]) -> ProductGroup:
    factors = tuple(factors)
    if not factors:
        raise GroupError("direct product needs at least one factor")
    return ProductGroup(factors)


def conjugacy_classes(g: FactorGroup | ProductGroup) -> ConjugacyClasses:
    return g.classes


def conjugacy_classes_bruteforce(g: ProductGroup) -> list[frozenset]:
    """Classes of a product found by conjugating every element by every
    element; quadratic in the group order."""
    elems = list(g.elements())
    seen = set()
    out = []
    for x in elems:
        if x in seen:
            continue
        cls = frozenset(g.multiply(g.multiply(h, x), g.inverse(h)) for h in elems)
        seen |= cls
        out.append(cls)
    return out


def hamming_weight(u, group: ProductGroup | None = None) -> int:
    """Number of coordinates of ``u`` that are not the factor identity.

    Without ``group`` every factor identity is taken to be id 0.
    """
    ident = group.identity if group is not None else (0,) * len(u)
    return sum(1 for a, e in zip(u, ident) if a != e)


def project(x, indices: FactorIndexSet | Sequence[int]) -> tuple:
    """Restrict ``x`` to the coordinates in ``indices`` (1-based)."""
    if not isinstance(indices, FactorIndexSet):
        indices = FactorIndexSet.of(indices, len(x))
    if indices.k != len(x):
        raise IndexError(f"index set is for k={indices.k}, element has {len(x)} coordinates")
    return tuple(x[i - 1] for i in indices)


def parse_group_spec(spec: str, base_dir: Path | None = None) -> FactorGroup:
    """Parse ``Z<s>``, ``S3`` or ``FILE:<path>``."""
    if spec == "S3":
        return make_s3()
    if spec.startswith("Z") and spec[1:].isdigit():
        return make_cyclic(int(spec[1:]))
    if spec.startswith("FILE:"):
        path = Path(spec[5:])
        if not path.is_absolute() and base_dir is not None and (base_dir / path).exists():
            path = base_dir / path
        return load_group_file(path, spec=spec)
    raise UnknownGroupSpecError(f"unknown group spec {spec!r} (expected Z<s>, S3 or FILE:<path>)")


def load_group_file(path: Path | str, spec: str | None = None) -> FactorGroup:
    """Read a multiplication-table file: ``order <n>``, ``n`` rows of ``n``
    ids, one row of ``n`` labels.  Blank lines and ``#`` comments are skipped."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GroupError(f"cannot read group file {path}: {exc}") from exc
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2 or lines[0][0] != "order":
        raise GroupError(f"{path}: first line must be 'order <n>'")
    try:
        n = int(lines[0][1])
        table = [[int(v) for v in row] for row in lines[1 : n + 1]]
    except ValueError as exc:
        raise GroupError(f"{path}: {exc}") from exc
    if n < 1 or len(lines) != n + 2:
        raise GroupError(f"{path}: expected {n} table rows and one label row")
    return make_from_table(n, table, lines[n + 1], spec=spec or f"FILE:{path}")


def format_group_file(g: FactorGroup) -> str:
    rows = [f"order {g.order}"]
    rows += [" ".join(str(v) for v in row) for row in g.table]
    rows.append(" ".join(g.labels))
    return "\n".join(rows) + "\n"
