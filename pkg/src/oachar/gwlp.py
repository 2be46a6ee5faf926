"""J-characteristics, generalized wordlength patterns and strength.

Two independent routes to strength are provided: :func:`strength_oracle`
checks projections directly, while :func:`gwlp` / :func:`strength_from_gwlp`
go through the character table.  :func:`verify_theorem` compares them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .characters import (
    Character,
    character_table,
    factor_character_table,
    inner_product,
    restrict_to_base,
    weight_and_base,
)
from .design import (
    Design,
    NotClassFunctionError,
    is_class_function,
    project_design,
    to_class_function,
)
from .groups import FactorIndexSet, all_index_sets, hamming_weight

# Zero test on A_j, i.e. 1e-8 * N^2 on the raw sum of |chi(D)|^2.
DEFAULT_TOL = 1e-8
LEMMA_TOL = 1e-9


@dataclass(frozen=True)
class CharacterRecord:
    index: int
    label: str
    weight: int
    degree: int
    jchar: complex
    mu: complex


@dataclass(frozen=True)
class GwlpReport:
    N: int
    k: int
    group_order: int
    groups: tuple[str, ...]
    records: tuple[CharacterRecord, ...]
    A: tuple[float, ...]
    strength: int | None
    class_function: bool
    tol: float

    @property
    def principal(self) -> CharacterRecord:
        return next(r for r in self.records if r.weight == 0)


@dataclass(frozen=True)
class StrengthResult:
    """Oracle strength plus, when ``t < k``, a projection of rank ``t + 1``
    whose counting function is not constant, with two runs of ``H`` that
    occur a different number of times."""

    t: int
    witness: FactorIndexSet | None = None
    runs: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    counts: tuple[int, int] | None = None


@dataclass(frozen=True)
class TheoremVerdict:
    oracle: int
    gwlp: int
    mu: int
    certificate: StrengthResult
    report: GwlpReport

    @property
    def agree(self) -> bool:
        return self.oracle == self.gwlp == self.mu


@dataclass(frozen=True)
class LemmaResidual:
    indices: FactorIndexSet
    max_residual: float
    checked: int


def j_characteristic(d: Design, chi: Character) -> complex:
    """``sum_x O(x) conj(chi(x))`` over the stored runs."""
    if chi.group is not d.group and chi.group != d.group:
        raise ValueError("character does not belong to the design's group")
    return complex(sum(m * np.conj(chi(run)) for run, m in d.counts.items()))


def _strength_from_A(A: Iterable[float], tol: float) -> int:
    t = 0
    for a in A:
        if a > tol:
            break
        t += 1
    return t


def gwlp(
    d: Design, tol: float = DEFAULT_TOL, allow_non_class_function: bool = False, seed: int = 0
) -> GwlpReport:
    """Generalized wordlength pattern ``A_j = N^-2 sum_{wt(chi)=j} |chi(D)|^2``.

    For nonabelian groups the counting function must be a class function;
    with ``allow_non_class_function`` the pattern is still computed but no
    strength is attached.
    """
    cf = is_class_function(d)
    if not cf and not allow_non_class_function:
        raise NotClassFunctionError(
            "counting function is not a class function; pass allow_non_class_function to override"
        )
    table = character_table(d.group, seed)
    jchars = np.conj(table.values) @ d.class_masses()
    mu = jchars / d.group.order
    weights = table.weights
    power = np.abs(jchars) ** 2
    N = d.N
    A = tuple(float(power[weights == j].sum() / N**2) for j in range(1, d.k + 1))
    records = tuple(
        CharacterRecord(i, c.label, int(w), int(round(c.degree)), complex(jc), complex(m))
        for i, (c, w, jc, m) in enumerate(zip(table, weights, jchars, mu))
    )
    return GwlpReport(
        N=N,
        k=d.k,
        group_order=d.group.order,
        groups=d.group.specs,
        records=records,
        A=A,
        strength=_strength_from_A(A, tol) if cf else None,
        class_function=cf,
        tol=tol,
    )


def strength_from_gwlp(report: GwlpReport, tol: float | None = None) -> int:
    """Largest ``t`` with ``A_1 .. A_t`` all within ``tol`` of zero."""
    if not report.class_function:
        raise NotClassFunctionError("strength is undefined from the GWLP of a non-class-function design")
    return _strength_from_A(report.A, report.tol if tol is None else tol)


def strength_from_mu(report: GwlpReport, tol: float | None = None) -> int:
    """Largest ``t`` such that every Fourier coefficient with
    ``1 <= wt <= t`` vanishes; each ``|mu|^2 |G|^2 / N^2`` is held to the
    same zero test as ``A_j``."""
    tol = report.tol if tol is None else tol
    scaled = {j: 0.0 for j in range(1, report.k + 1)}
    for r in report.records:
        if r.weight:
            scaled[r.weight] = max(scaled[r.weight], abs(r.mu) ** 2 * report.group_order**2 / report.N**2)
    return _strength_from_A([scaled[j] for j in range(1, report.k + 1)], tol)


def _projection_violation(d: Design, indices: FactorIndexSet):
    proj = project_design(d, indices)
    h = proj.group
    if len(proj.counts) < h.order:
        missing = next(y for y in h.elements() if y not in proj.counts)
        present, m = next(iter(proj.counts.items()))
        return (present, missing), (m, 0)
    (y0, m0), *rest = proj.counts.items()
    for y, m in rest:
        if m != m0:
            return (y0, y), (m0, m)
    return None


def strength_oracle(d: Design) -> StrengthResult:
    """Strength by brute force: the largest ``t`` such that every projection
    onto ``t`` factors has a constant counting function."""
    for t in range(1, d.k + 1):
        for indices in all_index_sets(d.k, t):
            bad = _projection_violation(d, indices)
            if bad is not None:
                return StrengthResult(t - 1, indices, bad[0], bad[1])
    return StrengthResult(d.k)


def verify_theorem(d: Design, tol: float = DEFAULT_TOL, seed: int = 0) -> TheoremVerdict:
    """Oracle strength, GWLP strength and Fourier-coefficient strength."""
    if not is_class_function(d):
        raise NotClassFunctionError("theorem verification needs a class-function design")
    report = gwlp(d, tol=tol, seed=seed)
    cert = strength_oracle(d)
    return TheoremVerdict(cert.t, strength_from_gwlp(report), strength_from_mu(report), cert, report)


def verify_projection_lemma(d: Design, indices: FactorIndexSet, seed: int = 0) -> LemmaResidual:
    """Max over characters with the complement of ``indices`` in their
    kernel of ``|<O', chi_hat> - |K| <O, chi>|``."""
    if not isinstance(indices, FactorIndexSet):
        indices = FactorIndexSet.of(indices, d.k)
    f = to_class_function(d)
    proj = project_design(d, indices)
    f_proj = to_class_function(proj)
    k_order = d.group.order // proj.group.order
    worst = 0.0
    checked = 0
    for chi in character_table(d.group, seed):
        _, base = weight_and_base(chi, d.group)
        if not set(base.indices) <= set(indices.indices):
            continue
        chi_hat = restrict_to_base(chi, indices)
        lhs = inner_product(f_proj, chi_hat)
        rhs = k_order * inner_product(f, chi)
        worst = max(worst, abs(lhs - rhs))
        checked += 1
    return LemmaResidual(indices, worst, checked)


def verify_projection_lemma_all(d: Design, max_rank: int = 3, seed: int = 0) -> list[LemmaResidual]:
    return [
        verify_projection_lemma(d, idx, seed)
        for r in range(1, min(d.k, max_rank) + 1)
        for idx in all_index_sets(d.k, r)
    ]


def _element_indexed_characters(factor) -> np.ndarray:
    """``F[u, x]``: value at ``x`` of the character indexed by ``u``.

    Cyclic factors use ``exp(2 pi i u x / s)``.  Other abelian factors pair
    the identity with the principal character and the remaining ids with
    the remaining characters in order; only that pairing matters for the
    Hamming weight of ``u``.
    """
    n = factor.order
    if factor.kind == "cyclic":
        u = np.arange(n)
        return np.exp(2j * np.pi * (np.multiply.outer(u, u) % n) / n)
    table = factor_character_table(factor)
    rows = [table[table.principal]] + [c for i, c in enumerate(table) if i != table.principal]
    ids = [factor.identity] + [x for x in factor.elements() if x != factor.identity]
    F = np.empty((n, n), dtype=complex)
    for u, chi in zip(ids, rows):
        F[u] = [chi(x) for x in factor.elements()]
    return F


def abelian_gwlp_direct(d: Design, tol: float = DEFAULT_TOL) -> GwlpReport:
    """GWLP of a design on an abelian product with characters indexed by
    group elements ``u`` and weights given by the Hamming weight of ``u``."""
    g = d.group
    bad = [f.name for f in g.factors if not f.is_abelian]
    if bad:
        raise ValueError(f"nonabelian factor(s) present: {', '.join(bad)}")
    O = np.zeros(g.shape)
    for run, m in d.counts.items():
        O[run] = m
    J = O.astype(complex)
    for axis, f in enumerate(g.factors):
        J = np.moveaxis(np.tensordot(np.conj(_element_indexed_characters(f)), J, axes=([1], [axis])), 0, axis)
    wt = np.zeros(g.shape, dtype=int)
    for axis, f in enumerate(g.factors):
        shape = [1] * g.k
        shape[axis] = f.order
        wt = wt + (np.arange(f.order) != f.identity).reshape(shape)
    N = d.N
    power = np.abs(J) ** 2
    A = tuple(float(power[wt == j].sum() / N**2) for j in range(1, g.k + 1))
    records = tuple(
        CharacterRecord(
            i, "chi(" + ",".join(map(str, u)) + ")", hamming_weight(u, g), 1, complex(J[u]), complex(J[u] / g.order)
        )
        for i, u in enumerate(g.elements())
    )
    return GwlpReport(N, g.k, g.order, g.specs, records, A, _strength_from_A(A, tol), True, tol)


def parseval_residual(d: Design, report: GwlpReport | None = None) -> float:
    """Relative gap between ``sum |chi(D)|^2`` and ``|G| sum O(x)^2``."""
    report = report or gwlp(d)
    lhs = sum(abs(r.jchar) ** 2 for r in report.records)
    rhs = d.group.order * sum(m * m for m in d.counts.values())
    return abs(lhs - rhs) / rhs
