import pytest

from enigme.model import ContractViolation
from enigme.rng import RngStream, draw_range, make_rng

# First outputs of splitmix64-seeded xoshiro256**, derived once from two
# independently written transliterations of the published algorithm.
GOLDEN_SEED0 = [
    0x99EC5F36CB75F2B4,
    0xBF6E1F784956452A,
    0x1A5F849D4933E6E0,
    0x6AA594F1262D2D2C,
    0xBBA5AD4A1F842E59,
]
GOLDEN_SEED7_FIRST = 0xB358FAF74EF9765A
GOLDEN_SEED8_FIRST = 0xD22F5048870C16BF


def test_golden_first_draws():
    assert [make_rng(0).next_u64() for _ in range(1)] == [GOLDEN_SEED0[0]]
    stream = make_rng(0)
    assert [stream.next_u64() for _ in range(5)] == GOLDEN_SEED0
    assert make_rng(7).next_u64() == GOLDEN_SEED7_FIRST
    assert make_rng(8).next_u64() == GOLDEN_SEED8_FIRST


def test_same_seed_same_sequence():
    a, b = make_rng(7), make_rng(7)
    assert [a.next_u64() for _ in range(1000)] == [b.next_u64() for _ in range(1000)]


def test_different_seeds_diverge_immediately():
    assert make_rng(7).next_u64() != make_rng(8).next_u64()


def test_draw_range_degenerate():
    assert make_rng(1).draw_range(1, 1) == 1
    assert make_rng(99).draw_range(3, 3) == 3


def test_draw_range_precondition():
    with pytest.raises(ContractViolation):
        make_rng(1).draw_range(5, 2)


def test_draw_range_covers_bounds_inclusively():
    stream = make_rng(3)
    seen = {stream.draw_range(-2, 2) for _ in range(500)}
    assert seen == {-2, -1, 0, 1, 2}


def test_draw_range_frequency():
    stream = make_rng(2024)
    n = 100_000
    ones = sum(stream.draw_range(0, 1) for _ in range(n))
    assert 0.49 <= ones / n <= 0.51


def test_functional_alias():
    a, b = make_rng(5), make_rng(5)
    assert draw_range(a, 0, 100) == b.draw_range(0, 100)


def test_choice_and_shuffle_deterministic():
    a, b = make_rng(11), make_rng(11)
    items_a = list(range(20))
    items_b = list(range(20))
    a.shuffle(items_a)
    b.shuffle(items_b)
    assert items_a == items_b
    assert sorted(items_a) == list(range(20))
    assert a.choice("XYZ") == b.choice("XYZ")


def test_sample_distinct():
    picks = make_rng(4).sample_distinct(0, 9, 10)
    assert sorted(picks) == list(range(10))
    with pytest.raises(ContractViolation):
        make_rng(4).sample_distinct(0, 3, 5)


def test_stream_is_mutable_value():
    stream = RngStream(42)
    first = stream.next_u64()
    assert stream.next_u64() != first  # the stream advanced
