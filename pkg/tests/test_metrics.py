"""
Metrik Testleri

Korelasyonlar, batch bias, ensemble ayrışımı, entropi, gürültü sınırı
ve attention normalizasyonunu test eder.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from batch_evaluator.core.enums import ScoreFormat
from batch_evaluator.core.exceptions import (
    DegenerateInput,
    EmptyMetricInput,
    InvalidBinWidth,
    InvalidN,
    KeyMismatch,
    LengthMismatch,
    MetricError,
    NonCausalMatrix,
    SpanOutOfRange,
)
from batch_evaluator.metrics import (
    align,
    batch_bias,
    correlate_maps,
    decompose,
    default_bin_width,
    mean_decomposition,
    normalize_attention,
    pearson,
    score_entropy,
    score_histogram,
    simulate_rank_robustness,
    spearman,
    spearman_noise_bound,
)


class TestCorrelation:
    """Pearson / Spearman testleri"""

    def test_perfect(self):
        assert pearson([1, 2, 3, 4], [1, 2, 3, 4])[0] == pytest.approx(1.0)

    def test_anticorrelation(self):
        assert pearson([1, 2, 3], [3, 2, 1])[0] == pytest.approx(-1.0)

    def test_matches_direct_formula(self):
        """200 rastgele çift: kovaryans / (σx σy)"""
        rng = np.random.default_rng(0)
        x, y = rng.normal(size=200), rng.normal(size=200)
        xc, yc = x - x.mean(), y - y.mean()
        expected = float(np.sum(xc * yc) / math.sqrt(np.sum(xc ** 2) * np.sum(yc ** 2)))
        assert pearson(x, y)[0] == pytest.approx(expected, abs=1e-12)

    def test_spearman_swap(self):
        """1 - 6·2 / (4·15) = 0.8"""
        assert spearman([1, 2, 3, 4], [1, 2, 4, 3])[0] == pytest.approx(0.8)

    def test_spearman_monotone_transform(self):
        x = [0.3, 1.7, 2.2, 5.0, 9.1]
        assert spearman(x, [math.exp(v) for v in x])[0] == pytest.approx(1.0)

    def test_spearman_heavy_ties(self):
        x = [1, 1, 1, 2, 2, 3, 3, 3, 3]
        assert spearman(x, x)[0] == pytest.approx(1.0)

    def test_p_value_nan_for_two_points(self):
        r, p = pearson([1, 2], [2, 4])
        assert r == pytest.approx(1.0)
        assert math.isnan(p)

    def test_p_value_reported(self):
        rng = np.random.default_rng(1)
        x = rng.normal(size=50)
        _, p = pearson(x, x + rng.normal(scale=0.1, size=50))
        assert 0 <= p < 0.05

    def test_constant_vector(self):
        with pytest.raises(DegenerateInput):
            pearson([1, 1, 1], [1, 2, 3])
        with pytest.raises(DegenerateInput):
            spearman([1, 2, 3], [2, 2, 2])

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            pearson([1, 2, 3], [1, 2])

    def test_align_strict(self):
        with pytest.raises(KeyMismatch):
            align({"a": 1.0, "b": 2.0}, {"a": 1.0})
        x, y = align({"a": 1.0, "b": 2.0}, {"a": 3.0}, strict=False)
        assert (x, y) == ([1.0], [3.0])

    def test_correlate_maps_orders_by_id(self):
        report = correlate_maps({"b": 2.0, "a": 1.0, "c": 3.0}, {"c": 30.0, "a": 10.0, "b": 20.0})
        assert report.pearson == pytest.approx(1.0)
        assert report.n == 3


@given(
    data=st.lists(st.tuples(st.floats(-100, 100), st.floats(-100, 100)), min_size=3, max_size=40),
    scale=st.floats(0.1, 10),
    shift=st.floats(-10, 10),
)
@settings(max_examples=100, deadline=None)
def test_pearson_symmetric_and_affine_invariant(data, scale, shift):
    """Özellik: simetri ve pozitif afin dönüşüm değişmezliği"""
    x = np.array([d[0] for d in data])
    y = np.array([d[1] for d in data])
    if np.ptp(x) < 1e-3 or np.ptp(y) < 1e-3:
        return
    r = pearson(x, y)[0]
    assert pearson(y, x)[0] == pytest.approx(r, abs=1e-9)
    assert pearson(x * scale + shift, y)[0] == pytest.approx(r, abs=1e-6)
    assert spearman(x, y)[0] == pytest.approx(spearman(y, x)[0], abs=1e-9)


class TestBatchBias:
    """Batch bias testleri"""

    def test_zero_when_equal(self):
        scores = {"a": 2.0, "b": 1.5}
        assert batch_bias(scores, dict(scores)) == 0.0

    def test_example(self):
        assert batch_bias({"a": 2.0, "b": 3.0}, {"a": 1.5, "b": 2.5}) == pytest.approx(0.5)

    def test_offsetting_errors_cancel(self):
        assert batch_bias({"a": 2.5, "b": 1.5}, {"a": 2.0, "b": 2.0}) == pytest.approx(0.0)

    def test_key_mismatch(self):
        with pytest.raises(KeyMismatch):
            batch_bias({"a": 1.0}, {"b": 1.0})
        with pytest.raises(KeyMismatch):
            batch_bias({}, {})

    @given(st.lists(st.tuples(st.floats(1, 3), st.floats(1, 3)), min_size=1, max_size=20))
    @settings(max_examples=100, deadline=None)
    def test_non_negative(self, pairs):
        batch = {f"s{k}": a for k, (a, _) in enumerate(pairs)}
        ensemble = {f"s{k}": b for k, (_, b) in enumerate(pairs)}
        assert batch_bias(batch, ensemble) >= 0.0


class TestDecomposition:
    """Err(s̄,y) = Err(S,y) - Var(S) testleri"""

    def test_symmetric_case(self):
        d = decompose([1.0, 3.0], 2.0)
        assert (d.err_ensemble, d.err_mean, d.variance) == (0.0, 1.0, 1.0)

    def test_all_equal(self):
        d = decompose([2.0, 2.0, 2.0], 2.0)
        assert (d.err_ensemble, d.err_mean, d.variance) == (0.0, 0.0, 0.0)

    def test_identity_on_random_inputs(self):
        """1000 rastgele (S, y), |S| 1..50"""
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            size = int(rng.integers(1, 51))
            scores = rng.uniform(1, 3, size=size)
            y = float(rng.uniform(1, 3))
            d = decompose(scores, y)
            assert abs(d.err_ensemble - (d.err_mean - d.variance)) <= 1e-9

    def test_ensemble_error_never_above_mean_error(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            d = decompose(rng.uniform(1, 3, size=5), float(rng.uniform(1, 3)))
            assert d.err_ensemble <= d.err_mean + 1e-12

    def test_mean_decomposition_keeps_identity(self):
        items = [decompose([1.0, 2.0, 3.0], 2.5), decompose([2.0, 2.4], 1.0)]
        mean = mean_decomposition(items)
        assert mean.err_ensemble == pytest.approx(mean.err_mean - mean.variance, abs=1e-12)

    def test_empty(self):
        with pytest.raises(EmptyMetricInput):
            decompose([], 1.0)


class TestEntropy:
    """Skor entropisi testleri"""

    def test_four_bins_uniform(self):
        scores = [1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0, 4.0]
        assert score_entropy(scores, 1.0) == pytest.approx(2.0)

    def test_single_bin(self):
        assert score_entropy([2.0, 2.0, 2.0], 0.1) == 0.0

    def test_hand_computed_histogram(self):
        scores = [1.0, 1.1, 1.1, 1.3, 1.3, 1.3]
        p = np.array([1, 2, 3]) / 6
        expected = float(-np.sum(p * np.log2(p)))
        assert score_entropy(scores, 0.1, score_min=1.0) == pytest.approx(expected)
        assert score_histogram(scores, 0.1, score_min=1.0) == [(1.0, 1), (1.1, 2), (1.3, 3)]

    def test_uniform_histogram_maximizes(self):
        """Sabit örnek ve bin sayısında en yüksek entropi düzgün histogramda"""
        rng = np.random.default_rng(4)
        uniform = score_entropy(np.repeat([1.0, 2.0, 3.0, 4.0, 5.0], 20), 1.0)
        for _ in range(200):
            counts = rng.multinomial(100, rng.dirichlet(np.ones(5)))
            scores = np.repeat([1.0, 2.0, 3.0, 4.0, 5.0], counts)
            assert score_entropy(scores, 1.0) <= uniform + 1e-12

    def test_invalid_bin_width(self):
        with pytest.raises(InvalidBinWidth):
            score_entropy([1.0], 0.0)
        with pytest.raises(InvalidBinWidth):
            score_entropy([1.0], -0.1)

    def test_empty(self):
        with pytest.raises(EmptyMetricInput):
            score_entropy([], 0.1)

    def test_default_widths(self):
        assert default_bin_width(ScoreFormat.DECIMAL) == 0.1
        assert default_bin_width(ScoreFormat.INTEGER) == 1.0


class TestNoiseBound:
    """Spearman gürültü sınırı testleri"""

    def test_no_perturbation(self):
        assert spearman_noise_bound(0.0, 10) == 1.0

    def test_example(self):
        assert spearman_noise_bound(1.0, 7) == pytest.approx(0.875)

    def test_monotone(self):
        assert spearman_noise_bound(0.2, 50) > spearman_noise_bound(0.3, 50)
        assert spearman_noise_bound(0.2, 50) < spearman_noise_bound(0.2, 60)

    def test_invalid(self):
        with pytest.raises(InvalidN):
            spearman_noise_bound(0.1, 1)
        with pytest.raises(MetricError):
            spearman_noise_bound(-0.1, 10)

    def test_monte_carlo_uniform_reaches_bound(self):
        """n=100, λ=0.01, 1000 deneme: ölçüm sınırın 0.02 yakınında ve altında"""
        report = simulate_rank_robustness(100, 0.01, trials=1000, seed=0)
        assert report.mean_spearman <= report.bound + 0.02
        assert abs(report.gap) <= 0.02

    def test_monte_carlo_peaked_distribution(self):
        report = simulate_rank_robustness(100, 0.01, trials=200, distribution="beta", seed=1)
        assert report.mean_spearman <= report.bound + 0.02

    def test_monte_carlo_validation(self):
        with pytest.raises(InvalidN):
            simulate_rank_robustness(1, 0.1)
        with pytest.raises(MetricError):
            simulate_rank_robustness(10, 0.1, trials=0)
        with pytest.raises(MetricError):
            simulate_rank_robustness(10, 0.1, distribution="normal")


def causal_matrix(size, rng):
    att = np.tril(rng.uniform(0.01, 1.0, size=(size, size)))
    return att / att.sum(axis=1, keepdims=True)


def brute_force(att, spans):
    size = len(att)
    out = np.full((len(spans), len(spans)), np.nan)
    for a, (_, (sa, ea)) in enumerate(spans):
        for b, (_, (sb, eb)) in enumerate(spans):
            values = []
            for x in range(sa, ea):
                for y in range(sb, eb):
                    if y <= x < size:
                        values.append(att[x][y] * (x + 1))
            if values:
                out[a, b] = sum(values) / len(values)
    return out


class TestAttention:
    """Attention normalizasyonu testleri"""

    def test_uniform_gives_ones(self):
        size = 12
        att = np.tril(np.ones((size, size))) / np.arange(1, size + 1)[:, None]
        spans = [("task", (0, 4)), ("sample1", (4, 8)), ("sample2", (8, 12))]
        result = normalize_attention(att, spans)
        defined = ~np.isnan(result)
        assert np.allclose(result[defined], 1.0)
        # Alt üçgen ve köşegen tanımlı
        assert defined[np.tril_indices(3)].all()

    def test_single_token_spans(self):
        rng = np.random.default_rng(8)
        att = causal_matrix(5, rng)
        result = normalize_attention(att, [("a", (3, 4)), ("b", (1, 2))])
        assert result[0, 1] == pytest.approx(att[3, 1] * 4, abs=1e-12)
        assert math.isnan(result[1, 0])

    def test_matches_brute_force(self):
        """Rastgele nedensel matrisler, 3 rastgele span"""
        rng = np.random.default_rng(12)
        for _ in range(50):
            size = int(rng.integers(3, 65))
            cuts = sorted(rng.choice(np.arange(1, size), size=2, replace=False).tolist())
            bounds = [0] + cuts + [size]
            spans = [(f"s{k}", (bounds[k], bounds[k + 1])) for k in range(3)]
            att = causal_matrix(size, rng)
            expected = brute_force(att, spans)
            result = normalize_attention(att, spans)
            assert np.allclose(result, expected, atol=1e-12, equal_nan=True)

    def test_rejects_non_causal(self):
        with pytest.raises(NonCausalMatrix):
            normalize_attention(np.full((3, 3), 1 / 3), [("a", (0, 3))])
        with pytest.raises(NonCausalMatrix):
            normalize_attention(np.ones((2, 3)), [("a", (0, 2))])
        with pytest.raises(NonCausalMatrix):
            normalize_attention(np.tril(np.ones((3, 3))), [("a", (0, 3))])

    def test_rejects_bad_spans(self):
        att = np.tril(np.ones((4, 4))) / np.arange(1, 5)[:, None]
        with pytest.raises(SpanOutOfRange):
            normalize_attention(att, [("a", (0, 5))])
        with pytest.raises(SpanOutOfRange):
            normalize_attention(att, [("a", (0, 3)), ("b", (2, 4))])
        with pytest.raises(SpanOutOfRange):
            normalize_attention(att, [("a", (2, 2))])
