"""Self-referential numeric puzzles.

A prompt is assembled from pre-written sentence blocks, then exactly one
lowercase letter of one word is replaced by an underscore.  The task asks
for the masked word's position in the text (1d), additionally the
underscore's position inside the word (2d), and additionally the missing
letter's alphabet rank (3d), combined with a stated arithmetic operation.

At 3d the prompt carries a reference list of the text's words so the
missing letter is recoverable from the prompt alone; the generator only
masks positions whose completion is unique against that list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import (
    Category,
    ContractViolation,
    Dimension,
    GenerationError,
    PromptFormatError,
    Puzzle,
    build_puzzle,
)
from .rng import RngStream

MASK_CHAR = "_"
_TRAILING_PUNCT = ".,;:!?"

_PREAMBLES = (
    "Read the following short puzzle with great care.",
    "Here is a small text puzzle for you to examine.",
    "Consider carefully the text printed in this message.",
    "Study every part of this little word puzzle.",
    "Below is a compact puzzle written in plain language.",
    "Take a moment and look closely at this text.",
    "This brief passage forms a puzzle about itself.",
    "What follows is a self-referential text puzzle.",
)

_MASK_SENTENCES = (
    "Exactly one letter somewhere in these sentences has been replaced by an underscore.",
    "One single character of one word here has been swapped for an underscore.",
    "A lone underscore now stands where one letter used to be.",
    "Somewhere in this text a letter was overwritten with an underscore.",
    "Hidden in the text is one word in which a letter became an underscore.",
    "One of the words you are reading contains an underscore in place of a letter.",
    "An underscore marks the spot where a single letter was removed.",
    "Precisely one underscore appears in this text instead of a letter.",
)

_SCOPE_SENTENCES = (
    "Count every word of this entire text, starting from the very first word.",
    "When counting, treat each whitespace-separated word as one item, beginning at one.",
    "All words in this text matter for the count, and numbering starts at one.",
    "Word numbering begins with one at the first word of this text.",
    "For counting purposes the first word of this whole text is number one.",
    "Include every word of these instructions when you count, starting at one.",
)

_COUNT_SENTENCES = {
    1: (
        "Find the word that contains the underscore and report that word's position in the text.",
        "Locate the word holding the underscore and state which number word it is.",
        "Determine the position of the underscored word, counted from the start of the text.",
        "Identify which word carries the underscore and give its place in the word order.",
        "Work out the numeric position of the word in which the underscore occurs.",
        "Your task is to name the position of the word that has the underscore in it.",
    ),
    2: (
        "Find the word with the underscore, note its position in the text, and also note where the underscore sits inside that word, counting letters from one.",
        "Locate the underscored word and record two numbers, the word's place in the text and the place of the underscore inside the word.",
        "Determine the position of the word holding the underscore and the position of the underscore inside that word, both counted from one.",
        "Identify the word containing the underscore, then find its number in the text and the number of the underscore's spot inside the word.",
        "Work out which word has the underscore and where the underscore falls inside it, counting the word from the text start and the letter from the word start.",
        "Take the position of the underscored word in the text together with the position of the underscore inside the word itself.",
    ),
    3: (
        "Find the word with the underscore and take three numbers, the word's position in the text, the underscore's position inside the word, and the alphabet position of the missing letter, where a is one and z is twenty-six, whatever the letter case.",
        "Locate the underscored word, then determine its place in the text, the place of the underscore inside the word, and the place in the alphabet of the letter that was removed, counting a as one through z as twenty-six, ignoring case.",
        "Determine the position of the word holding the underscore, the position of the underscore inside that word, and the alphabet rank of the missing letter, with a being one and z being twenty-six regardless of case.",
        "Identify the underscored word and gather its word position in the text, the underscore's letter position inside the word, and the missing letter's position in the alphabet, where a equals one and z equals twenty-six, case ignored.",
        "Work out three values, the position of the word with the underscore, the position of the underscore inside the word, and the alphabet place of the absent letter, taking a as one up to z as twenty-six in either case.",
        "Recover the word's position in the text, the underscore's position inside the word, and the missing letter's number in the alphabet, where a counts as one and z counts as twenty-six, upper or lower case alike.",
    ),
}

# Parallel (sum wording, product wording) pairs; the operation is its own axis.
_OP_PHRASES = (
    ("Then add these numbers together and give the total.",
     "Then multiply these numbers together and give the result."),
    ("Now add the numbers you found to reach one final number.",
     "Now multiply the numbers you found to reach one final number."),
    ("Your answer is the sum of these numbers.",
     "Your answer is the product of these numbers."),
    ("Adding these numbers together produces the required answer.",
     "Multiplying these numbers together produces the required answer."),
)

_CLOSINGS = (
    "Respond with a single number and nothing else.",
    "Give only the final number as your answer.",
    "Your reply must be exactly one number.",
    "Write just the number, with no other words.",
    "Answer using one number alone.",
    "Provide the final number by itself.",
)

OPS = ("sum", "product")

_REFERENCE_PREFIX = "Reference words: "

_SUM_MARKERS = re.compile(r"\b(add|adding|added|sum)\b", re.IGNORECASE)
_PRODUCT_MARKERS = re.compile(r"\b(multiply|multiplying|multiplied|product)\b", re.IGNORECASE)
_CHAR_AXIS_MARKER = re.compile(r"\binside\b", re.IGNORECASE)
_ALPHA_AXIS_MARKER = re.compile(r"\balphabet\b", re.IGNORECASE)

# Words the instructions hinge on; masking one would leave the task itself
# ambiguous, so they are never mask targets.
_PROTECTED_WORDS = frozenset(
    "inside alphabet add adding added sum multiply multiplying multiplied product".split()
)


@dataclass(frozen=True)
class NumericConfig:
    """Active template blocks and operations of the numeric generator."""

    preambles: tuple[str, ...] = _PREAMBLES
    mask_sentences: tuple[str, ...] = _MASK_SENTENCES
    scope_sentences: tuple[str, ...] = _SCOPE_SENTENCES
    count_sentences: dict[int, tuple[str, ...]] = None  # type: ignore[assignment]
    op_phrases: tuple[tuple[str, str], ...] = _OP_PHRASES
    ops: tuple[str, ...] = OPS
    closings: tuple[str, ...] = _CLOSINGS

    def __post_init__(self):
        if self.count_sentences is None:
            object.__setattr__(self, "count_sentences", _COUNT_SENTENCES)


DEFAULT_CONFIG = NumericConfig()


@dataclass(frozen=True)
class NumericSpec:
    """Hidden parameters of one numeric puzzle."""

    template_id: str
    substitutions: tuple[tuple[int, int, str, str], ...]  # (word, char, original, mask)
    op: str  # "sum", "product" or "none" at 1d
    dimension: Dimension

    def __post_init__(self):
        if len(self.substitutions) != 1:
            raise ContractViolation("exactly one substitution is supported")
        word, char, original, mask = self.substitutions[0]
        if word < 1 or char < 1:
            raise ContractViolation("substitution indices are 1-based")
        if not ("a" <= original <= "z"):
            raise ContractViolation("original character must be a lowercase letter")
        if mask != MASK_CHAR:
            raise ContractViolation(f"mask character is fixed to {MASK_CHAR!r}")


def alpha_rank(letter: str) -> int:
    """a=1 ... z=26, case-insensitive."""
    ch = letter.lower()
    if not ("a" <= ch <= "z"):
        raise ContractViolation(f"not a letter: {letter!r}")
    return ord(ch) - ord("a") + 1


def _combine(op: str, values: list[int]) -> int:
    if op == "product":
        out = 1
        for v in values:
            out *= v
        return out
    out = 0
    for v in values:
        out += v
    return out


def solve_numeric(spec: NumericSpec) -> int:
    """Canonical answer from the hidden spec."""
    word, char, original, _ = spec.substitutions[0]
    if spec.dimension == Dimension.ONE:
        return word
    if spec.dimension == Dimension.TWO:
        return _combine(spec.op, [word, char])
    return _combine(spec.op, [word, char, alpha_rank(original)])


def _clean_word(token: str) -> str | None:
    """Strip trailing punctuation; None unless the remainder is purely alphabetic."""
    word = token.rstrip(_TRAILING_PUNCT)
    if word and word.isalpha() and word.isascii():
        return word
    return None


def _mask_slots(body: str) -> list[tuple[int, int]]:
    """(word_index, char_index) pairs, 1-based, at lowercase letters of clean words."""
    slots = []
    for w, token in enumerate(body.split(), start=1):
        word = _clean_word(token)
        if word is None or word.lower() in _PROTECTED_WORDS:
            continue
        for c, ch in enumerate(word, start=1):
            if "a" <= ch <= "z":
                slots.append((w, c))
    return slots


def _lexicon(body: str) -> list[str]:
    words = {w.lower() for t in body.split() if (w := _clean_word(t))}
    return sorted(words)


def _matches(pattern: str, words: list[str]) -> list[str]:
    """Lexicon words consistent with a one-wildcard lowercase pattern."""
    hole = pattern.index(MASK_CHAR)
    out = []
    for word in words:
        if len(word) == len(pattern):
            if word[:hole] == pattern[:hole] and word[hole + 1:] == pattern[hole + 1:]:
                out.append(word)
    return out


def _recoverable_slots(body: str, words: list[str]) -> list[tuple[int, int]]:
    """Slots whose masked word still has a unique completion in the word list."""
    slots = []
    tokens = body.split()
    for w, c in _mask_slots(body):
        word = _clean_word(tokens[w - 1])
        pattern = word.lower()[: c - 1] + MASK_CHAR + word.lower()[c:]
        if len(_matches(pattern, words)) == 1:
            slots.append((w, c))
    return slots


def _assemble(config: NumericConfig, dim: Dimension, parts: dict[str, int], op: str) -> str:
    sentences = [
        config.preambles[parts["preamble"]],
        config.mask_sentences[parts["mask"]],
        config.scope_sentences[parts["scope"]],
        config.count_sentences[int(dim)][parts["count"]],
    ]
    if dim >= Dimension.TWO:
        pair = config.op_phrases[parts["op_phrase"]]
        sentences.append(pair[0] if op == "sum" else pair[1])
    sentences.append(config.closings[parts["closing"]])
    return " ".join(sentences)


def generate_numeric(dim: Dimension, rng: RngStream, *, seed: int,
                     config: NumericConfig = DEFAULT_CONFIG) -> Puzzle:
    """Draw a template combination and a mask slot; emit prompt plus answer."""
    parts = {
        "preamble": rng.draw_range(0, len(config.preambles) - 1),
        "mask": rng.draw_range(0, len(config.mask_sentences) - 1),
        "scope": rng.draw_range(0, len(config.scope_sentences) - 1),
        "count": rng.draw_range(0, len(config.count_sentences[int(dim)]) - 1),
        "closing": rng.draw_range(0, len(config.closings) - 1),
    }
    if dim >= Dimension.TWO:
        parts["op_phrase"] = rng.draw_range(0, len(config.op_phrases) - 1)
        op = config.ops[rng.draw_range(0, len(config.ops) - 1)]
    else:
        op = "none"

    body = _assemble(config, dim, parts, op)
    if MASK_CHAR in body:
        raise GenerationError("template body may not contain the mask character")

    words = _lexicon(body)
    if dim == Dimension.THREE:
        slots = _recoverable_slots(body, words)
    else:
        slots = _mask_slots(body)
    if not slots:
        raise GenerationError("no maskable position in assembled template")
    word_idx, char_idx = slots[rng.draw_range(0, len(slots) - 1)]

    tokens = body.split()
    target = tokens[word_idx - 1]
    original = target[char_idx - 1]
    tokens[word_idx - 1] = target[: char_idx - 1] + MASK_CHAR + target[char_idx:]
    prompt = " ".join(tokens)
    if dim == Dimension.THREE:
        prompt += "\n" + _REFERENCE_PREFIX + ", ".join(words) + "."

    template_id = ".".join(
        f"{key[0]}{parts[key]}"
        for key in ("preamble", "mask", "scope", "count", "op_phrase", "closing")
        if key in parts
    )
    spec = NumericSpec(
        template_id=template_id,
        substitutions=((word_idx, char_idx, original, MASK_CHAR),),
        op=op,
        dimension=dim,
    )
    solution = str(solve_numeric(spec))
    meta = {
        "template_id": template_id,
        "op": op,
        "word_index": str(word_idx),
        "char_index": str(char_idx),
        "original_char": original,
        "mask_char": MASK_CHAR,
    }
    return build_puzzle(Category.NUMERIC, dim, seed, prompt, solution, meta)


def _detect_dimension(prompt: str) -> Dimension:
    if _ALPHA_AXIS_MARKER.search(prompt):
        return Dimension.THREE
    if _CHAR_AXIS_MARKER.search(prompt):
        return Dimension.TWO
    return Dimension.ONE


def _detect_op(prompt: str) -> str:
    is_sum = bool(_SUM_MARKERS.search(prompt))
    is_product = bool(_PRODUCT_MARKERS.search(prompt))
    if is_sum == is_product:
        raise PromptFormatError("cannot determine the arithmetic operation from the text")
    return "sum" if is_sum else "product"


def solve_from_prompt(prompt: str) -> int:
    """Re-derive the answer from the rendered text alone (no generator state).

    Tokenises on whitespace, locates the single masked word, reads the
    quantities the instructions name, and applies the stated operation.
    """
    if prompt.count(MASK_CHAR) != 1:
        raise PromptFormatError("prompt must contain exactly one mask character")
    tokens = prompt.split()
    masked = [(i, t) for i, t in enumerate(tokens, start=1) if MASK_CHAR in t]
    if len(masked) != 1:
        raise PromptFormatError("prompt must contain exactly one masked word")
    word_idx, token = masked[0]

    dim = _detect_dimension(prompt)
    if dim == Dimension.ONE:
        return word_idx
    char_idx = token.index(MASK_CHAR) + 1
    op = _detect_op(prompt)
    if dim == Dimension.TWO:
        return _combine(op, [word_idx, char_idx])

    # 3d: recover the missing letter through the embedded reference list.
    reference = None
    for line in prompt.split("\n"):
        if line.startswith(_REFERENCE_PREFIX):
            reference = [w.strip(_TRAILING_PUNCT) for w in line[len(_REFERENCE_PREFIX):].split(", ")]
            break
    if not reference:
        raise PromptFormatError("three-axis prompt lacks its reference word list")
    pattern = token.rstrip(_TRAILING_PUNCT).lower()
    if not pattern.replace(MASK_CHAR, "a", 1).isalpha():
        raise PromptFormatError("masked token is not a word")
    candidates = _matches(pattern, reference)
    if len(candidates) != 1:
        raise PromptFormatError("masked word has no unique completion in the reference list")
    letter = candidates[0][pattern.index(MASK_CHAR)]
    return _combine(op, [word_idx, char_idx, alpha_rank(letter)])


def _block_minimum(variants: tuple[str, ...], dim: Dimension, words: list[str]) -> int:
    if dim == Dimension.THREE:
        return min(len(_recoverable_slots(v, words)) for v in variants)
    return min(len(_mask_slots(v)) for v in variants)


def variation_axes(dim: Dimension, config: NumericConfig = DEFAULT_CONFIG) -> tuple[tuple[str, int], ...]:
    """Independent choice axes of the numeric generator at one dimension.

    The mask-position axis is the guaranteed minimum of maskable slots over
    every template combination; combined with the block axes the product is
    a certified lower bound on distinct prompts.
    """
    blocks: list[tuple[str, tuple[str, ...]]] = [
        ("template:preamble", config.preambles),
        ("template:mask", config.mask_sentences),
        ("template:scope", config.scope_sentences),
        ("template:count", config.count_sentences[int(dim)]),
    ]
    realized_ops: tuple[str, ...] = ()
    if dim >= Dimension.TWO:
        realized_ops = tuple(text for pair in config.op_phrases for text in pair)
        blocks.append(("template:operation-phrase", realized_ops))

    union_words = sorted({
        w
        for _, variants in blocks
        for variant in variants
        for w in _lexicon(variant)
    } | {w for v in config.closings for w in _lexicon(v)})

    positions = sum(
        _block_minimum(variants, dim, union_words) for _, variants in blocks
    ) + _block_minimum(config.closings, dim, union_words)

    axes = [(name, len(variants)) for name, variants in blocks if name != "template:operation-phrase"]
    if dim >= Dimension.TWO:
        axes.append(("template:operation-phrase", len(config.op_phrases)))
        axes.append(("operation", len(config.ops)))
    else:
        axes.append(("operation", 1))
    axes.append(("template:closing", len(config.closings)))
    axes.append(("mask_position", positions))
    return tuple(axes)
