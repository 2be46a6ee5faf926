"""Generalized wordlength patterns and strength for designs whose factor
levels are indexed by finite groups, abelian or not."""

from pathlib import Path

from .characters import (
    Character,
    CharacterTable,
    ClassFunction,
    character_table,
    cyclic_characters,
    fourier_expand,
    generic_character_table,
    inner_product,
    kernel,
    product_characters,
    restrict_to_base,
    weight_and_base,
)
from .design import (
    Design,
    format_design,
    from_labels,
    from_runs,
    full_factorial,
    is_class_function,
    load_design,
    parse_design,
    project_design,
    to_class_function,
)
from .groups import (
    FactorGroup,
    FactorIndexSet,
    ProductGroup,
    conjugacy_classes,
    direct_product,
    factorial_complement,
    hamming_weight,
    make_cyclic,
    make_from_table,
    make_s3,
    parse_group_spec,
    project,
)
from .gwlp import (
    GwlpReport,
    abelian_gwlp_direct,
    gwlp,
    j_characteristic,
    strength_from_gwlp,
    strength_oracle,
    verify_projection_lemma,
    verify_theorem,
)

DATA_DIR = Path(__file__).parent / "data"


def fixture_path(name: str) -> Path:
    """Path of a bundled design or group file, e.g. ``example1.oa``."""
    return DATA_DIR / name


__all__ = [
    "abelian_gwlp_direct",
    "Character",
    "character_table",
    "CharacterTable",
    "ClassFunction",
    "conjugacy_classes",
    "cyclic_characters",
    "DATA_DIR",
    "Design",
    "direct_product",
    "FactorGroup",
    "factorial_complement",
    "FactorIndexSet",
    "fixture_path",
    "format_design",
    "fourier_expand",
    "from_labels",
    "from_runs",
    "full_factorial",
    "generic_character_table",
    "gwlp",
    "GwlpReport",
    "hamming_weight",
    "inner_product",
    "is_class_function",
    "j_characteristic",
    "kernel",
    "load_design",
    "make_cyclic",
    "make_from_table",
    "make_s3",
    "parse_design",
    "parse_group_spec",
    "product_characters",
    "ProductGroup",
    "project",
    "project_design",
    "restrict_to_base",
    "strength_from_gwlp",
    "strength_oracle",
    "to_class_function",
    "verify_projection_lemma",
    "verify_theorem",
    "weight_and_base",
]
