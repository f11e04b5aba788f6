"""Exact stable commutator length of rational chains in free products of two cyclic groups."""

from ._core import (
    ResourceLimitError,
    compute_scl,
    disk_generators,
    disk_region,
    enumerate_words,
    fit,
    formula_commutator,
    formula_product,
    formula_self_product,
    normalize,
    scan,
    suv_bruteforce,
    suv_formula,
    walker_reference,
    walker_word,
    word_exponent,
)


def scl(chain, order_a=0, order_b=0, gens=None):
    """scl as a Fraction, or None when it is infinite."""
    return compute_scl(chain, order_a, order_b, gens)["value"]


__all__ = [
    "ResourceLimitError",
    "compute_scl",
    "disk_generators",
    "disk_region",
    "enumerate_words",
    "fit",
    "formula_commutator",
    "formula_product",
    "formula_self_product",
    "normalize",
    "scan",
    "scl",
    "suv_bruteforce",
    "suv_formula",
    "walker_reference",
    "walker_word",
    "word_exponent",
]
