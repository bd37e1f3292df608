import re

import pytest

from enigme.model import Dimension, PromptFormatError
from enigme.numeric import (
    DEFAULT_CONFIG,
    MASK_CHAR,
    NumericSpec,
    alpha_rank,
    generate_numeric,
    solve_from_prompt,
    solve_numeric,
)
from enigme.rng import make_rng


def spec(word, char, original, op, dim):
    return NumericSpec("t", ((word, char, original, MASK_CHAR),), op, Dimension(dim))


def test_solve_numeric_direct_cases():
    assert solve_numeric(spec(4, 1, "a", "none", 1)) == 4
    assert solve_numeric(spec(7, 3, "q", "none", 1)) == 7
    assert solve_numeric(spec(5, 2, "x", "product", 2)) == 10
    assert solve_numeric(spec(2, 3, "a", "sum", 3)) == 6
    assert solve_numeric(spec(2, 3, "c", "product", 3)) == 18


def test_alpha_rank():
    assert alpha_rank("a") == 1
    assert alpha_rank("z") == 26
    assert alpha_rank("M") == 13


def all_template_sentences():
    cfg = DEFAULT_CONFIG
    out = list(cfg.preambles + cfg.mask_sentences + cfg.scope_sentences + cfg.closings)
    for dim in (1, 2, 3):
        out.extend(cfg.count_sentences[dim])
    for pair in cfg.op_phrases:
        out.extend(pair)
    return out


def test_templates_never_contain_the_mask_character():
    for sentence in all_template_sentences():
        assert MASK_CHAR not in sentence


def test_operation_markers_are_exclusive():
    sum_marker = re.compile(r"\b(add|adding|added|sum)\b", re.IGNORECASE)
    product_marker = re.compile(r"\b(multiply|multiplying|multiplied|product)\b", re.IGNORECASE)
    cfg = DEFAULT_CONFIG
    neutral = list(cfg.preambles + cfg.mask_sentences + cfg.scope_sentences + cfg.closings)
    for dim in (1, 2, 3):
        neutral.extend(cfg.count_sentences[dim])
    for sentence in neutral:
        assert not sum_marker.search(sentence), sentence
        assert not product_marker.search(sentence), sentence
    for sum_text, product_text in cfg.op_phrases:
        assert sum_marker.search(sum_text) and not product_marker.search(sum_text)
        assert product_marker.search(product_text) and not sum_marker.search(product_text)


def test_axis_markers_are_exclusive():
    inside = re.compile(r"\binside\b", re.IGNORECASE)
    alphabet = re.compile(r"\balphabet\b", re.IGNORECASE)
    cfg = DEFAULT_CONFIG
    others = list(cfg.preambles + cfg.mask_sentences + cfg.scope_sentences + cfg.closings)
    others.extend(text for pair in cfg.op_phrases for text in pair)
    for sentence in others + list(cfg.count_sentences[1]):
        assert not inside.search(sentence), sentence
        assert not alphabet.search(sentence), sentence
    for sentence in cfg.count_sentences[2]:
        assert inside.search(sentence) and not alphabet.search(sentence)
    for sentence in cfg.count_sentences[3]:
        assert inside.search(sentence) and alphabet.search(sentence)


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_generated_prompt_has_exactly_one_mask(dim):
    for seed in range(50):
        puzzle = generate_numeric(Dimension(dim), make_rng(seed), seed=seed)
        assert puzzle.prompt.count(MASK_CHAR) == 1


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_oracle_agrees_with_embedded_solution(dim):
    for seed in range(200):
        puzzle = generate_numeric(Dimension(dim), make_rng(seed), seed=seed)
        assert solve_from_prompt(puzzle.prompt) == int(puzzle.solution), puzzle.prompt


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_meta_reconstructs_the_answer(dim):
    for seed in range(100):
        puzzle = generate_numeric(Dimension(dim), make_rng(seed), seed=seed)
        rebuilt = spec(
            int(puzzle.meta["word_index"]),
            int(puzzle.meta["char_index"]),
            puzzle.meta["original_char"],
            puzzle.meta["op"],
            dim,
        )
        assert str(solve_numeric(rebuilt)) == puzzle.solution
        # The masked token really is at the recorded position.
        token = puzzle.prompt.split()[int(puzzle.meta["word_index"]) - 1]
        assert token[int(puzzle.meta["char_index"]) - 1] == MASK_CHAR


def test_oracle_on_first_word():
    assert solve_from_prompt("C_unt the words.") == 1


def test_oracle_on_last_word():
    assert solve_from_prompt("count the last w_rd") == 4


def test_oracle_two_dimensional_sum():
    # Word 1, mask at character 2, stated sum: 1 + 2 = 3.
    assert solve_from_prompt("F_nd the underscore spot inside the word then add both.") == 3


def test_oracle_three_dimensional_product():
    prompt = (
        "Alphabet task: multiply the values for the w_rd here.\n"
        "Reference words: here, task, values, word."
    )
    # Word 8, character 2, missing letter o = 15: 8 * 2 * 15 = 240.
    assert solve_from_prompt(prompt) == 240


def test_oracle_requires_exactly_one_mask():
    with pytest.raises(PromptFormatError):
        solve_from_prompt("no mask anywhere here.")
    with pytest.raises(PromptFormatError):
        solve_from_prompt("t_o masked w_rds here.")


def test_oracle_requires_reference_list_for_3d():
    with pytest.raises(PromptFormatError):
        solve_from_prompt("alphabet rank inside the w_rd, add the parts.")


def test_oracle_requires_unambiguous_operation():
    with pytest.raises(PromptFormatError):
        solve_from_prompt("add then multiply the w_rd spot inside it.")


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_prompt_quantities_grow_with_dimension(dim):
    puzzle = generate_numeric(Dimension(dim), make_rng(31), seed=31)
    has_char_axis = "inside" in puzzle.prompt
    has_alpha_axis = "alphabet" in puzzle.prompt
    assert has_char_axis == (dim >= 2)
    assert has_alpha_axis == (dim == 3)


def test_three_dimensional_mask_is_recoverable_untainted():
    # The reference list never carries the mask and always contains the answer word.
    for seed in range(40):
        puzzle = generate_numeric(Dimension.THREE, make_rng(seed), seed=seed)
        reference_line = puzzle.prompt.split("\n")[1]
        assert reference_line.startswith("Reference words: ")
        assert MASK_CHAR not in reference_line


def test_generation_is_deterministic():
    a = generate_numeric(Dimension.TWO, make_rng(99), seed=99)
    b = generate_numeric(Dimension.TWO, make_rng(99), seed=99)
    assert a == b
