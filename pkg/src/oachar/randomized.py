"""Seeded generators of random designs for the randomized theorem checks.

Uniformly random run sets almost always have strength 0, so the generators
mix in kernels and cosets of characters, replicated full factorials and
perturbed versions of those to cover every strength.
"""

from __future__ import annotations

import numpy as np

from .characters import character_table, kernel
from .design import Design, from_runs, full_factorial
from .groups import ProductGroup, direct_product, make_cyclic, make_s3

ABELIAN_ORDERS = (2, 3, 4, 6)
MAX_RUNS = 48


def random_abelian_group(rng: np.random.Generator, max_k: int = 4) -> ProductGroup:
    k = int(rng.integers(1, max_k + 1))
    return direct_product([make_cyclic(int(s)) for s in rng.choice(ABELIAN_ORDERS, size=k)])


def _kernel_runs(group: ProductGroup, rng: np.random.Generator) -> list[tuple]:
    table = character_table(group)
    chi = table[int(rng.integers(len(table)))]
    runs = sorted(kernel(chi))
    shift = tuple(int(rng.integers(f.order)) for f in group.factors)
    return [group.multiply(shift, r) for r in runs]


def random_abelian_design(rng: np.random.Generator, max_k: int = 4, max_runs: int = MAX_RUNS) -> Design:
    while True:
        group = random_abelian_group(rng, max_k)
        family = int(rng.integers(4))
        if family == 0:
            n = int(rng.integers(1, max_runs + 1))
            idx = rng.integers(0, np.array(group.shape), size=(n, group.k))
            runs = [tuple(int(a) for a in row) for row in idx]
        elif family == 1:
            lam = int(rng.integers(1, 4))
            runs = full_factorial(group, lam).runs()
        else:
            runs = _kernel_runs(group, rng) * int(rng.integers(1, 3))
            if family == 3:
                runs = runs + _kernel_runs(group, rng)
        if 1 <= len(runs) <= max_runs:
            return from_runs(group, runs)


def random_class_function_design(rng: np.random.Generator, group: ProductGroup | None = None) -> Design:
    """Random design over S3 x Z2 or S3 x Z2 x Z2 with multiplicity constant
    on every conjugacy class."""
    if group is None:
        k = int(rng.integers(2, 4))
        group = direct_product([make_s3()] + [make_cyclic(2)] * (k - 1))
    classes = group.classes.classes
    while True:
        family = int(rng.integers(3))
        if family == 0:
            mult = rng.choice([0, 0, 1, 1, 2], size=len(classes))
        else:
            table = character_table(group)
            chi = table[int(rng.integers(len(table)))]
            ker = np.abs(chi.values - chi.values[0]) <= 1e-9 * max(1.0, abs(chi.values[0]))
            if family == 2:
                ker = ~ker if rng.random() < 0.5 else ker
            mult = ker.astype(int) * int(rng.integers(1, 3))
        counts = {x: int(m) for cls, m in zip(classes, mult) if m for x in cls}
        if counts:
            return Design(group, counts)


def abelian_suite(n: int = 200, seed: int = 20240101) -> list[Design]:
    rng = np.random.default_rng(seed)
    return [random_abelian_design(rng) for _ in range(n)]


def s3_suite(n: int = 50, seed: int = 20240102) -> list[Design]:
    """Alternates between S3 x Z2 and S3 x Z2 x Z2."""
    rng = np.random.default_rng(seed)
    groups = [direct_product([make_s3()] + [make_cyclic(2)] * r) for r in (1, 2)]
    return [random_class_function_design(rng, groups[i % 2]) for i in range(n)]
