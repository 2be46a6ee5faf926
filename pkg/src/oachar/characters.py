"""Irreducible characters of factor groups and their direct products.

Characters are stored as one complex value per conjugacy class, in the
class order of the owning group.  Three sources of factor tables exist:
closed forms for cyclic groups and S3, and a Burnside-Dixon style
eigenvector computation on the class algebra for anything else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .groups import FactorGroup, FactorIndexSet, ProductGroup

TOL = 1e-9


class CharacterTableError(RuntimeError):
    """The class-algebra eigenproblem could not be resolved."""


class KernelError(ValueError):
    """A factorial complement is not contained in a character's kernel."""


@dataclass(frozen=True, eq=False)
class ClassFunction:
    group: FactorGroup | ProductGroup
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (len(self.group.classes),):
            raise ValueError(
                f"class function needs {len(self.group.classes)} values, got shape {vals.shape}"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, group, fn) -> ClassFunction:
        return cls(group, [fn(rep) for rep in group.classes.representatives])

    def __call__(self, x) -> complex:
        return complex(self.values[self.group.classes.index[x]])

    def pointwise(self) -> dict:
        """Values on every element of the group."""
        return {x: self.values[i] for i, cls in enumerate(self.group.classes.classes) for x in cls}


@dataclass(frozen=True, eq=False)
class Character(ClassFunction):
    label: str = ""
    parts: tuple[int, ...] | None = None

    @property
    def degree(self) -> float:
        return float(self.values[0].real)

    @property
    def is_principal(self) -> bool:
        return bool(np.allclose(self.values, 1.0, rtol=0, atol=TOL))


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: FactorGroup | ProductGroup
    characters: tuple[Character, ...]
    principal: int = field(init=False)

    def __post_init__(self):
        hits = [i for i, c in enumerate(self.characters) if c.is_principal]
        if len(hits) != 1:
            raise CharacterTableError(f"expected one principal character, found {len(hits)}")
        object.__setattr__(self, "principal", hits[0])

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, i) -> Character:
        return self.characters[i]

    @cached_property
    def values(self) -> np.ndarray:
        return np.array([c.values for c in self.characters])

    @property
    def degrees(self) -> np.ndarray:
        return self.values[:, 0].real

    @cached_property
    def weights(self) -> np.ndarray:
        return np.array([weight_and_base(c, self.group)[0] for c in self.characters])


def _sort_key(weight: int, values: np.ndarray):
    rounded = tuple((round(v.real, 9) + 0.0, round(v.imag, 9) + 0.0) for v in values)
    return (weight, round(values[0].real), rounded)


def _factor_sorted(group: FactorGroup, rows: list[np.ndarray], labels: list[str]) -> CharacterTable:
    keyed = sorted(
        zip(rows, labels), key=lambda r: _sort_key(0 if np.allclose(r[0], 1.0) else 1, r[0])
    )
    return CharacterTable(group, tuple(Character(group, v, lab) for v, lab in keyed))


def cyclic_characters(s: int | FactorGroup) -> CharacterTable:
    """Characters ``chi_u(x) = exp(2 pi i u x / s)`` of Z_s, listed by ``u``."""
    from .groups import make_cyclic

    group = s if isinstance(s, FactorGroup) else make_cyclic(s)
    if group.kind != "cyclic":
        raise ValueError(f"{group.name} is not a built-in cyclic group")
    n = group.order
    reps = np.array(group.classes.representatives)
    chars = []
    for u in range(n):
        vals = np.exp(2j * np.pi * ((u * reps) % n) / n)
        chars.append(Character(group, vals, f"chi{u}", (u,)))
    return CharacterTable(group, tuple(chars))


def s3_characters(group: FactorGroup) -> CharacterTable:
    """Classical table of S3 on the classes {e}, {a,b,c}, {x,y}."""
    if group.kind != "S3":
        raise ValueError(f"{group.name} is not the built-in S3")
    rows = {"1": [1, 1, 1], "sgn": [1, -1, 1], "std": [2, 0, -1]}
    return CharacterTable(
        group, tuple(Character(group, v, lab, (i,)) for i, (lab, v) in enumerate(rows.items()))
    )


def class_multiplication_coefficients(group: FactorGroup) -> np.ndarray:
    """``a[i, j, k]``: number of pairs ``(x, y)`` in ``C_i x C_j`` with ``xy``
    equal to the representative of ``C_k``."""
    cc = group.classes
    h = len(cc)
    cls = np.empty(group.order, dtype=np.int64)
    for i, c in enumerate(cc.classes):
        cls[list(c)] = i
    t = group.array
    inv = np.array([group.inverse(x) for x in group.elements()])
    xs = np.arange(group.order)
    a = np.zeros((h, h, h), dtype=np.int64)
    for k, z in enumerate(cc.representatives):
        ys = t[inv[xs], z]
        np.add.at(a, (cls[xs], cls[ys], k), 1)
    return a


def generic_character_table(group: FactorGroup, seed: int = 0, max_tries: int = 8) -> CharacterTable:
    """Irreducible characters from simultaneous eigenvectors of the class
    multiplication matrices.

    The central characters ``w_k = |C_k| chi(g_k) / chi(e)`` are common right
    eigenvectors of every ``a[i]``.  A seeded random combination of those
    matrices has simple spectrum with probability one; if its eigenvalues
    are too close to separate, another combination is drawn.
    """
    cc = group.classes
    h = len(cc)
    sizes = np.array(cc.sizes, dtype=float)
    a = class_multiplication_coefficients(group).astype(float)
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        coef = rng.standard_normal(h)
        m = np.tensordot(coef, a, axes=1)
        evals, evecs = np.linalg.eig(m)
        scale = max(1.0, float(np.abs(evals).max()))
        gaps = np.abs(evals[:, None] - evals[None, :]) + np.eye(h) * scale
        if h > 1 and gaps.min() < 1e-6 * scale:
            continue
        w = evecs / evecs[0, :][None, :]
        # every class matrix must act on w as a scalar, namely w_i
        resid = max(
            float(np.abs(a[i] @ w - w * w[i][None, :]).max()) for i in range(h)
        ) if h > 1 else 0.0
        if resid > 1e-6 * scale:
            continue
        rows = []
        for col in range(h):
            wc = w[:, col]
            d2 = group.order / float(np.sum(np.abs(wc) ** 2 / sizes))
            d = round(np.sqrt(d2))
            if d < 1 or abs(np.sqrt(d2) - d) > 1e-6:
                raise CharacterTableError(f"non-integral degree {np.sqrt(d2)} for {group.name}")
            vals = d * wc / sizes
            vals[0] = d
            rows.append(vals)
        labels = [""] * h
        table = _factor_sorted(group, rows, labels)
        return CharacterTable(
            group,
            tuple(Character(group, c.values, f"X{i}", (i,)) for i, c in enumerate(table)),
        )
    raise CharacterTableError(
        f"could not separate class-algebra eigenspaces for {group.name} after {max_tries} tries"
    )


def factor_character_table(group: FactorGroup, seed: int = 0) -> CharacterTable:
    if group.kind == "cyclic":
        return cyclic_characters(group)
    if group.kind == "S3":
        return s3_characters(group)
    return generic_character_table(group, seed=seed)


def product_characters(group: ProductGroup, tables) -> CharacterTable:
    """All products ``chi(x) = prod_i chi_i(x_i)`` of factor characters.

    The value matrix is the Kronecker product of the factor value matrices,
    which matches the lexicographic order of product classes.  Characters
    are then ordered by weight, degree and rounded values.
    """
    tables = list(tables)
    if len(tables) != group.k or any(t.group != f for t, f in zip(tables, group.factors)):
        raise ValueError("factor tables do not match the product group's factors")
    values = np.ones((1, 1), dtype=complex)
    for t in tables:
        values = np.kron(values, t.values)
    combos = list(itertools.product(*(range(len(t)) for t in tables)))
    grid = values.reshape((len(combos),) + group.class_shape)
    deg = values[:, :1]
    weights = np.zeros(len(combos), dtype=np.int64)
    for i in range(group.k):
        idx = (slice(None),) + tuple(slice(None) if j == i else 0 for j in range(group.k))
        sub = grid[idx].reshape(len(combos), -1)
        weights += ~np.all(_in_kernel(sub, deg), axis=1)
    rounded = np.round(values, 9) + 0.0
    keys = [weights, np.round(deg[:, 0].real)]
    for col in range(values.shape[1]):
        keys += [rounded[:, col].real, rounded[:, col].imag]
    order = np.lexsort(keys[::-1])
    chars = tuple(
        Character(group, values[i], "*".join(t[j].label for t, j in zip(tables, combos[i])), combos[i])
        for i in order
    )
    table = CharacterTable(group, chars)
    table.__dict__["weights"] = weights[order]
    table.__dict__["values"] = values[order]
    return table


@lru_cache(maxsize=512)
def character_table(group: FactorGroup | ProductGroup, seed: int = 0) -> CharacterTable:
    """Cached irreducible character table of a factor or product group."""
    if isinstance(group, FactorGroup):
        return factor_character_table(group, seed)
    return product_characters(group, [character_table(f, seed) for f in group.factors])


def inner_product(f: ClassFunction, h: ClassFunction) -> complex:
    """``(1/|G|) sum_x f(x) conj(h(x))`` weighted by class sizes."""
    if f.group is not h.group and f.group != h.group:
        raise ValueError("class functions live on different groups")
    sizes = np.asarray(f.group.classes.sizes, dtype=float)
    return complex(np.sum(sizes * f.values * np.conj(h.values)) / f.group.order)


def fourier_expand(f: ClassFunction, table: CharacterTable | None = None) -> np.ndarray:
    """Coefficients ``mu_chi = <f, chi>`` in table order."""
    table = table or character_table(f.group)
    sizes = np.asarray(f.group.classes.sizes, dtype=float)
    return np.conj(table.values) @ (sizes * f.values) / f.group.order


def reconstruct(mu: np.ndarray, table: CharacterTable) -> ClassFunction:
    return ClassFunction(table.group, table.values.T @ mu)


def _in_kernel(values: np.ndarray, degree) -> np.ndarray:
    return np.abs(values - degree) <= TOL * np.maximum(1.0, np.abs(degree))


def kernel(chi: Character) -> set:
    """Elements where ``chi`` takes its degree."""
    mask = _in_kernel(chi.values, chi.values[0])
    return {x for i, cls in enumerate(chi.group.classes.classes) if mask[i] for x in cls}


def _as_grid(values: np.ndarray, group: ProductGroup) -> np.ndarray:
    return values.reshape(group.class_shape)


def _factor_in_kernel(grid: np.ndarray, i: int) -> bool:
    """Whether factor ``i`` (0-based), embedded with identities elsewhere,
    lies in the kernel; the identity class has index 0 in every factor."""
    deg = grid.flat[0]
    idx = tuple(slice(None) if j == i else 0 for j in range(grid.ndim))
    return bool(np.all(_in_kernel(grid[idx], deg)))


def _weight_from_values(values: np.ndarray, group: ProductGroup) -> int:
    grid = _as_grid(values, group)
    return sum(1 for i in range(group.k) if not _factor_in_kernel(grid, i))


def weight_and_base(chi: Character, group: ProductGroup | None = None) -> tuple[int, FactorIndexSet]:
    """Weight and base of a product character.

    The largest factorial subgroup inside the kernel is the product of the
    factors whose embedded copies lie in the kernel, since the kernel is a
    subgroup.  The base is its factorial complement.
    """
    group = group or chi.group
    if isinstance(group, FactorGroup):
        w = 0 if chi.is_principal else 1
        return w, FactorIndexSet((1,) if w else (), 1)
    grid = _as_grid(chi.values, group)
    base = tuple(i + 1 for i in range(group.k) if not _factor_in_kernel(grid, i))
    return len(base), FactorIndexSet(base, group.k)


def restrict_to_base(chi: Character, base: FactorIndexSet) -> Character:
    """The character of the factorial subgroup on ``base`` obtained by
    evaluating ``chi`` with identities on the complementary factors."""
    group = chi.group
    if not isinstance(group, ProductGroup):
        raise TypeError("restriction needs a character of a product group")
    grid = _as_grid(chi.values, group)
    for i in base.complement():
        if not _factor_in_kernel(grid, i - 1):
            raise KernelError(f"factor {i} is outside ker({chi.label}); cannot restrict to {base.indices}")
    sub = group.subgroup(base)
    idx = tuple(slice(None) if j + 1 in base.indices else 0 for j in range(group.k))
    parts = tuple(chi.parts[i - 1] for i in base) if chi.parts is not None else None
    return Character(sub, np.asarray(grid[idx]).ravel(), chi.label, parts)


def principal_character(group) -> Character:
    return Character(group, np.ones(len(group.classes)), "1")
