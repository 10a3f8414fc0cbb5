import math

import numpy as np
import pytest
from scipy.stats import chisquare

from sqwt import DigitStream, DimensionMismatch, GridSpec, generate, next_value, train_frequency


class FixedDigits:
    """Stand-in stream feeding a scripted digit sequence."""

    def __init__(self, digits):
        self._digits = list(digits)
        self.consumed = 0

    def next_digit(self):
        self.consumed += 1
        return self._digits.pop(0)


class TestNextValue:
    @pytest.mark.parametrize(
        "digits,expected",
        [
            ((3, 6, 2, 1, 7, 3, 8, 7), -62.17387),
            ((9, 0, 0, 0, 0, 0, 0, 0), 0.0),
            ((0, 9, 9, 9, 9, 9, 9, 9), -99.99999),
            ((5, 0, 0, 0, 0, 0, 0, 1), 0.00001),
            ((4, 9, 9, 9, 9, 9, 9, 9), -99.99999),  # 4 is still the negative branch
            ((5, 9, 9, 9, 9, 9, 9, 9), 99.99999),
        ],
    )
    def test_digit_mapping(self, digits, expected):
        assert next_value(FixedDigits(digits)) == expected

    def test_consumes_exactly_eight_digits(self):
        stream = FixedDigits([1] * 20)
        next_value(stream)
        assert stream.consumed == 8

    def test_negative_zero_normalized(self):
        value = next_value(FixedDigits((2, 0, 0, 0, 0, 0, 0, 0)))
        assert value == 0.0
        assert math.copysign(1.0, value) == 1.0


class TestDigitStream:
    def test_seed_validation(self):
        DigitStream(0)
        DigitStream(2**64 - 1)
        for bad in (-1, 2**64, 1.5, "7"):
            with pytest.raises(ValueError):
                DigitStream(bad)

    def test_digits_in_range(self):
        stream = DigitStream(99)
        digits = [stream.next_digit() for _ in range(2000)]
        assert set(digits) <= set(range(10))

    def test_same_seed_same_sequence(self):
        a = DigitStream(1234)
        b = DigitStream(1234)
        assert [a.next_digit() for _ in range(500)] == [b.next_digit() for _ in range(500)]

    def test_different_seeds_diverge(self):
        a = DigitStream(1)
        b = DigitStream(2)
        assert [a.next_digit() for _ in range(100)] != [b.next_digit() for _ in range(100)]

    def test_digits_uniform_chi_square(self):
        # fixed seed, so this is a deterministic regression, not a flaky one
        stream = DigitStream(20240811)
        counts = np.zeros(10, dtype=np.int64)
        for _ in range(1_000_000):
            counts[stream.next_digit()] += 1
        assert chisquare(counts).pvalue > 0.001


class TestGenerate:
    def grid(self, n, f_s=2000.0):
        return GridSpec.from_sampling_rate(n, f_s)

    def test_deterministic(self):
        g = self.grid(300)
        first = generate(42, 300, g)
        second = generate(42, 300, g)
        assert np.array_equal(first.series.values, second.series.values)
        assert first.seed == 42

    def test_different_seeds_differ_early(self):
        g = self.grid(100)
        for s1, s2 in [(0, 1), (7, 8), (1000, 2000)]:
            a = generate(s1, 100, g).series.values
            b = generate(s2, 100, g).series.values
            assert not np.array_equal(a, b)

    def test_values_in_range_and_five_decimals(self):
        g = self.grid(10000)
        values = generate(42, 10000, g).series.values
        assert np.all(np.abs(values) <= 99.99999)
        scaled = values * 1e5
        assert np.max(np.abs(scaled - np.round(scaled))) < 1e-6

    def test_sign_balance(self):
        stream = DigitStream(77)
        negatives = sum(1 for _ in range(100_000) if next_value(stream) < 0)
        # binomial: 3 sigma around 50% of 1e5 draws; zeros count as positive,
        # which only nudges the negative side down by ~1 expected draw
        sigma = math.sqrt(100_000 * 0.25)
        assert abs(negatives - 50_000) <= 3 * sigma

    def test_grid_size_must_match(self):
        with pytest.raises(DimensionMismatch):
            generate(1, 5, self.grid(6))

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            generate(1, 0, self.grid(1))

    def test_single_value_grid_frequency(self):
        g = GridSpec.from_duration(1, 5.0)
        result = generate(9, 1, g)
        assert result.series.n == 1
        assert train_frequency(g, 1) == 0.1
