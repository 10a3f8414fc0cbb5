import math

import numpy as np
import pytest

from sqwt import (
    GridSpec,
    SignPattern,
    TrainDescriptor,
    half_wave_length,
    sample_train,
    sign_at,
    train_frequency,
)

from oracles import run_length_sign


class TestGridSpec:
    def test_consistent_grid_accepted(self):
        grid = GridSpec(8, 2.0, 4.0)
        assert (grid.n, grid.delta_t, grid.f_s) == (8, 2.0, 4.0)

    def test_from_duration_derives_rate(self):
        grid = GridSpec.from_duration(8, 2.0)
        assert grid.f_s == 4.0

    def test_from_sampling_rate_derives_duration(self):
        grid = GridSpec.from_sampling_rate(10000, 2000.0)
        assert grid.delta_t == 5.0

    def test_inconsistent_grid_rejected(self):
        with pytest.raises(ValueError, match="inconsistent"):
            GridSpec(8, 2.0, 4.1)

    def test_consistency_tolerance_boundary(self):
        GridSpec(10, 1.0, 10.0 * (1.0 + 5e-10))  # inside 1e-9 relative
        with pytest.raises(ValueError):
            GridSpec(10, 1.0, 10.0 * (1.0 + 3e-9))

    @pytest.mark.parametrize("n", [0, -1, 2.5])
    def test_bad_n_rejected(self, n):
        with pytest.raises(ValueError):
            GridSpec(n, 1.0, n if isinstance(n, int) else 2.5)

    @pytest.mark.parametrize("delta_t", [0.0, -2.0, math.inf, math.nan])
    def test_bad_delta_t_rejected(self, delta_t):
        with pytest.raises(ValueError):
            GridSpec.from_duration(4, delta_t)

    def test_bad_f_s_rejected(self):
        with pytest.raises(ValueError):
            GridSpec.from_sampling_rate(4, 0.0)


class TestHalfWaveLength:
    @pytest.mark.parametrize(
        "n,j,expected",
        [(8, 5, 4), (10, 10, 1), (10, 1, 10), (1, 1, 1)],
    )
    def test_examples(self, n, j, expected):
        assert half_wave_length(n, j) == expected

    @pytest.mark.parametrize("j", [0, 9, -3])
    def test_out_of_range(self, j):
        with pytest.raises(IndexError):
            half_wave_length(8, j)


class TestSignAt:
    @pytest.mark.parametrize(
        "n,i,j,expected",
        [
            (8, 1, 8, 1),   # last train starts positive
            (8, 4, 6, -1),
            (8, 8, 2, -1),
            (5, 3, 1, 1),   # first train never flips
        ],
    )
    def test_examples(self, n, i, j, expected):
        assert sign_at(n, i, j) == expected

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            sign_at(8, 0, 1)
        with pytest.raises(IndexError):
            sign_at(8, 1, 9)
        with pytest.raises(ValueError):
            sign_at(0, 1, 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 33, 64])
    def test_matches_run_length_oracle(self, n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert sign_at(n, i, j) == run_length_sign(n, i, j), (n, i, j)

    def test_known_8x8_row_and_column(self):
        # subinterval 6 across all trains, and train 7 down all subintervals
        row6 = [sign_at(8, 6, j) for j in range(1, 9)]
        assert row6 == [1, 1, 1, -1, -1, -1, 1, -1]
        col7 = [sign_at(8, i, 7) for i in range(1, 9)]
        assert col7 == [1, 1, -1, -1, 1, 1, -1, -1]

    def test_last_train_alternates_every_row(self):
        for n in (1, 2, 7, 16):
            for i in range(1, n + 1):
                assert sign_at(n, i, n) == (1 if i % 2 == 1 else -1)


class TestSignPattern:
    def test_requires_positive_n(self):
        with pytest.raises(ValueError):
            SignPattern(0)

    @pytest.mark.parametrize("n", [1, 2, 5, 9, 24])
    def test_row_and_column_match_scalar(self, n):
        pattern = SignPattern(n)
        for i in range(1, n + 1):
            assert list(pattern.row(i)) == [sign_at(n, i, j) for j in range(1, n + 1)]
        for j in range(1, n + 1):
            assert list(pattern.column(j)) == [sign_at(n, i, j) for i in range(1, n + 1)]

    @pytest.mark.parametrize("n", [1, 3, 8, 17, 40])
    def test_columns_are_alternating_runs(self, n):
        pattern = SignPattern(n)
        for j in range(1, n + 1):
            l = n - j + 1
            expected = []
            sign = 1
            while len(expected) < n:
                expected.extend([sign] * l)
                sign = -sign
            assert list(pattern.column(j)) == expected[:n]

    def test_first_column_all_positive(self):
        assert np.all(SignPattern(31).column(1) == 1)

    def test_index_checks(self):
        pattern = SignPattern(4)
        with pytest.raises(IndexError):
            pattern.column(5)
        with pytest.raises(IndexError):
            pattern.row(0)


class TestTrainFrequency:
    @pytest.mark.parametrize(
        "n,delta_t,i,expected,tol",
        [
            (8, 2.0, 8, 2.0, 0.0),
            (8, 2.0, 5, 0.5, 0.0),
            (8, 2.0, 1, 0.25, 0.0),
            (8, 2.0, 2, 2.0 / 7.0, 0.0),
            (10000, 5.0, 1, 0.100000, 5e-7),
            (10000, 5.0, 2, 0.100010, 5e-7),
            (10000, 5.0, 100, 0.101000, 5e-7),
        ],
    )
    def test_examples(self, n, delta_t, i, expected, tol):
        grid = GridSpec.from_duration(n, delta_t)
        assert train_frequency(grid, i) == pytest.approx(expected, abs=tol)

    @pytest.mark.parametrize("n,delta_t", [(1, 5.0), (8, 2.0), (100, 0.5), (777, 3.0)])
    def test_strictly_increasing_and_endpoints(self, n, delta_t):
        grid = GridSpec.from_duration(n, delta_t)
        freqs = [train_frequency(grid, i) for i in range(1, n + 1)]
        assert all(a < b for a, b in zip(freqs, freqs[1:]))
        assert freqs[-1] == grid.f_s / 2.0
        assert freqs[0] == pytest.approx(1.0 / (2.0 * delta_t), rel=1e-12)

    def test_lowest_frequency_exact_on_decimal_grids(self):
        grid = GridSpec.from_duration(10000, 5.0)
        assert train_frequency(grid, 1) == 0.1

    def test_out_of_range(self):
        grid = GridSpec.from_duration(4, 1.0)
        with pytest.raises(IndexError):
            train_frequency(grid, 5)


class TestSampleTrain:
    def test_examples(self):
        grid = GridSpec.from_duration(8, 2.0)
        assert sample_train(grid, 8, 118.0, 2) == -118.0
        assert sample_train(grid, 1, 170.5, 6) == 170.5
        assert sample_train(grid, 4, 0.0, 3) == 0.0

    def test_out_of_range(self):
        grid = GridSpec.from_duration(8, 2.0)
        with pytest.raises(IndexError):
            sample_train(grid, 1, 1.0, 9)
        with pytest.raises(IndexError):
            sample_train(grid, 0, 1.0, 1)


class TestTrainDescriptor:
    def test_from_grid(self):
        grid = GridSpec.from_duration(8, 2.0)
        d = TrainDescriptor.from_grid(grid, 5)
        assert d == TrainDescriptor(index=5, half_wave_length=4, frequency=0.5)

    def test_descriptors_cover_all_lengths(self):
        grid = GridSpec.from_duration(6, 3.0)
        descriptors = [TrainDescriptor.from_grid(grid, i) for i in range(1, 7)]
        assert [d.half_wave_length for d in descriptors] == [6, 5, 4, 3, 2, 1]
        assert descriptors[-1].frequency == grid.f_s / 2.0
