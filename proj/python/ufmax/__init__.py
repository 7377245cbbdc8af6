"""Exact search for sets of distinct unit fractions summing to a target.

Targets may be given as ``Fraction``, ``int`` or a ``"p/q"`` string. Reports
come back as dicts with the same layout as the ``ufmax`` command's JSON.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import _core

__version__ = _core.__version__

__all__ = [
    "analyze",
    "common_core",
    "frequency_table",
    "harmonic_window",
    "k_term_splits",
    "lcm_three_term_split",
    "reciprocal_sum",
    "residue_coefficient",
    "sieve",
    "solve",
    "solutions_digest",
    "two_term_splits",
    "verify_solution",
]

residue_coefficient = _core.residue_coefficient
two_term_splits = _core.two_term_splits
k_term_splits = _core.k_term_splits


def _target(t: Fraction | int | str) -> str:
    if isinstance(t, str):
        return t
    f = Fraction(t)
    return f"{f.numerator}/{f.denominator}"


def _lists(solutions: Iterable[Sequence[int]]) -> list[list[int]]:
    return [list(s) for s in solutions]


def reciprocal_sum(dens: Iterable[int]) -> Fraction:
    return Fraction(_core.reciprocal_sum(list(dens)))


def harmonic_window(hi: int, target: Fraction | int | str = 1) -> dict:
    return json.loads(_core.harmonic_window(hi, _target(target)))


def sieve(lo: int, hi: int, target: Fraction | int | str = 1, multi_term: bool = True) -> dict:
    return json.loads(_core.sieve(lo, hi, _target(target), multi_term))


def lcm_three_term_split(n: int, parts: Sequence[int]) -> tuple[int, int, int]:
    return tuple(_core.lcm_three_term_split(n, list(parts)))


def solve(
    lo: int,
    hi: int,
    terms: int | None = None,
    *,
    min_terms: int = 1,
    max_terms: int = 0,
    maximize: bool = False,
    target: Fraction | int | str = 1,
    mode: str = "dfs",
    candidates: Sequence[int] | None = None,
    threads: int = 1,
    residue_prune: bool = False,
    force_bigint: bool = False,
) -> dict:
    """Run the search. ``terms`` fixes the term count exactly."""
    if terms is not None:
        min_terms = max_terms = terms
    return json.loads(
        _core.solve(
            lo,
            hi,
            min_terms,
            max_terms,
            maximize,
            _target(target),
            mode,
            None if candidates is None else list(candidates),
            threads,
            residue_prune,
            force_bigint,
        )
    )


def verify_solution(
    dens: Sequence[int],
    target: Fraction | int | str = 1,
    range: tuple[int, int] | None = None,
) -> dict:
    return json.loads(_core.verify_solution(list(dens), _target(target), range))


def common_core(solutions: Iterable[Sequence[int]]) -> list[int]:
    return _core.common_core(_lists(solutions))


def frequency_table(solutions: Iterable[Sequence[int]]) -> dict[int, int]:
    return _core.frequency_table(_lists(solutions))


def analyze(solutions: Iterable[Sequence[int]]) -> dict:
    return json.loads(_core.analyze(_lists(solutions)))


def solutions_digest(solutions: Iterable[Sequence[int]]) -> str:
    """sha256 of the canonical text form, as used to compare runs."""
    return _core.sha256_hex(_core.canonical_solutions(_lists(solutions)))
