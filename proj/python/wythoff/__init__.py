"""Sprague-Grundy tables and exhaustive checks for Wythoff's game and its R/E variants."""

import json

from . import _core
from ._core import (
    GameRule,
    GrundyTable,
    TableTooLarge,
    beatty_a,
    beatty_b,
    build_strip,
    build_table,
    classify,
    find_additive_period,
    followers,
    is_p_position,
    run_cli,
    winning_moves,
)

__all__ = [
    "GameRule",
    "GrundyTable",
    "TableTooLarge",
    "beatty_a",
    "beatty_b",
    "build_strip",
    "build_table",
    "classify",
    "find_additive_period",
    "followers",
    "is_p_position",
    "run_cli",
    "winning_moves",
    "verify_p_positions",
    "verify_value1",
    "verify_bounds",
    "verify_small_rows",
    "verify_no_redundant_moves",
    "verify_row_existence",
    "verify_diagonal_uniqueness",
    "verify_golden_tables",
    "mine_additive_period",
    "check_conjecture_bw_upper2",
    "check_conjecture_ew_diagonals",
    "survey_value1",
]

# Reports come back as plain dicts with the same fields as the CLI's JSON output.


def verify_p_positions(rule, bound):
    return json.loads(_core._verify_p_positions(rule, bound))


def verify_value1(rule, bound):
    return json.loads(_core._verify_value1(rule, bound))


def verify_bounds(rule, bound):
    return json.loads(_core._verify_bounds(rule, bound))


def verify_small_rows(rule, b_max):
    return json.loads(_core._verify_small_rows(rule, b_max))


def verify_no_redundant_moves(k_max):
    return json.loads(_core._verify_no_redundant_moves(k_max))


def verify_row_existence(rule, a_max, c_max, b_budget):
    return json.loads(_core._verify_row_existence(rule, a_max, c_max, b_budget))


def verify_diagonal_uniqueness(a_max, c_max, b_budget):
    return json.loads(_core._verify_diagonal_uniqueness(a_max, c_max, b_budget))


def verify_golden_tables():
    return json.loads(_core._verify_golden_tables())


def mine_additive_period(rule, a, b_max):
    return json.loads(_core._mine_additive_period(rule, a, b_max))


def check_conjecture_bw_upper2(bound):
    return json.loads(_core._check_conjecture_bw_upper2(bound))


def check_conjecture_ew_diagonals(bound):
    return json.loads(_core._check_conjecture_ew_diagonals(bound))


def survey_value1(rule, bound):
    return json.loads(_core._survey_value1(rule, bound))
