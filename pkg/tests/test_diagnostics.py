"""
Tanılama Testleri

diag raporu, CSV çıktıları, simülasyon taraması ve grafikleri test eder.
"""

import csv
import json
import math

import pytest

from batch_evaluator import RunConfig, run_batch_evaluation
from batch_evaluator.core.enums import ScoreFormat, Strategy
from batch_evaluator.core.exceptions import InvalidSweep, MissingArtifacts
from batch_evaluator.dataset import Dataset
from batch_evaluator.diagnostics import (
    SWEEP_COLUMNS,
    SweepSpec,
    build_report,
    plot_diag,
    run_cell,
    run_sweep,
    write_report,
    write_sweep_csv,
)
from batch_evaluator.engine import FILES

from conftest import make_samples, make_sim_judge


def finished_run(out_dir, criterion, n=21, bias_alpha=0.0, noise_sigma=0.0, rounds=5,
                 strategy=Strategy.HETEROGENEOUS):
    samples = make_samples(n)
    judge = make_sim_judge(criterion, samples, bias_alpha=bias_alpha, noise_sigma=noise_sigma, seed=1)
    config = RunConfig(rounds=rounds, batch_size=5, strategy=strategy, seed=1, log_level="WARNING")
    run_batch_evaluation(samples, criterion, None, config, judge, out_dir=out_dir)
    return Dataset(name="unit", samples=samples, criteria=[criterion])


class TestReport:
    """build_report testleri"""

    def test_oracle_judge(self, tmp_path, criterion):
        """Gürültüsüz, biassız hakem: r = 1, batch bias = 0"""
        dataset = finished_run(tmp_path, criterion)
        report = build_report(tmp_path, dataset)

        assert report.ensemble_correlation.pearson == pytest.approx(1.0)
        assert report.ensemble_correlation.spearman == pytest.approx(1.0)
        assert report.mean_batch_bias == pytest.approx(0.0, abs=1e-12)
        assert report.strategy == "heterogeneous"
        assert report.missing == []

    def test_decomposition_curve(self, tmp_path, criterion):
        dataset = finished_run(tmp_path, criterion, bias_alpha=0.5, noise_sigma=0.3)
        report = build_report(tmp_path, dataset)

        assert [p.round for p in report.decomposition] == [1, 2, 3, 4, 5]
        for point in report.decomposition:
            d = point.decomposition
            assert point.samples == 21
            assert d.err_ensemble == pytest.approx(d.err_mean - d.variance, abs=1e-9)
        assert report.decomposition[0].decomposition.variance == pytest.approx(0.0)

    def test_biased_judge_reports_bias(self, tmp_path, criterion):
        dataset = finished_run(tmp_path, criterion, bias_alpha=1.0, strategy=Strategy.HOMOGENEOUS)
        report = build_report(tmp_path, dataset)
        assert report.mean_batch_bias > 0.01
        assert len(report.round_batch_bias()) == 5

    def test_without_dataset(self, tmp_path, criterion):
        finished_run(tmp_path, criterion)
        report = build_report(tmp_path)
        assert report.ensemble_correlation is None
        assert report.decomposition == []
        assert not math.isnan(report.entropy)

    def test_missing_artifacts(self, tmp_path, criterion):
        finished_run(tmp_path, criterion)
        (tmp_path / FILES["ledger"]).unlink()
        with pytest.raises(MissingArtifacts) as info:
            build_report(tmp_path)
        assert info.value.missing == [FILES["ledger"]]

    def test_written_files(self, tmp_path, criterion):
        run_dir = tmp_path / "run"
        dataset = finished_run(run_dir, criterion, noise_sigma=0.2)
        out = write_report(build_report(run_dir, dataset), run_dir / "diag")

        data = json.loads((out / "diag_report.json").read_text(encoding="utf-8"))
        assert data["rounds"] == 5
        assert len(data["batch_bias"]["per_round"]) == 5
        assert data["entropy"]["bin_width"] == pytest.approx(0.1)

        with open(out / "histogram.csv", encoding="utf-8", newline="") as f:
            rows = list(csv.DictReader(f))
        assert sum(int(r["count"]) for r in rows) == 21 * 5

        with open(out / "correlations.csv", encoding="utf-8", newline="") as f:
            rows = list(csv.DictReader(f))
        assert rows[0]["round"] == "ensemble"
        assert len(rows) == 6

    def test_plot(self, tmp_path, criterion):
        pytest.importorskip("matplotlib")
        run_dir = tmp_path / "run"
        dataset = finished_run(run_dir, criterion, noise_sigma=0.2)
        diag = write_report(build_report(run_dir, dataset), run_dir / "diag")
        written = plot_diag(diag)
        assert written
        assert all(p.suffix == ".svg" and p.exists() for p in written)

    def test_plot_needs_csv(self, tmp_path):
        with pytest.raises(MissingArtifacts):
            plot_diag(tmp_path)


class TestSweep:
    """Simülasyon taraması testleri"""

    def test_single_cell(self, tmp_path):
        spec = SweepSpec(rounds=[2], n=30, seeds=[0])
        rows = run_sweep(spec)
        assert len(rows) == 1
        assert set(rows[0]) == set(SWEEP_COLUMNS)
        assert rows[0]["strategy"] == "heterogeneous"

        path = write_sweep_csv(rows, tmp_path / "out" / "sweep.csv")
        with open(path, encoding="utf-8", newline="") as f:
            assert len(list(csv.DictReader(f))) == 1

    def test_grid_size(self):
        spec = SweepSpec(
            strategies=["random", "fixed"], batch_sizes=[1, 5], rounds=[1],
            formats=["decimal", "integer"], n=10, seeds=[0, 1],
        )
        assert len(list(spec.cells())) == 8

    def test_run_cell_oracle(self):
        cell = run_cell(Strategy.RANDOM, 10, 2, 0.0, 0.0, ScoreFormat.DECIMAL, seed=4, n=50)
        assert cell.pearson > 0.99
        assert cell.batch_bias == pytest.approx(0.0, abs=1e-12)
        assert cell.variance == pytest.approx(0.0, abs=1e-12)

    def test_singleton_batches_agree_across_rounds(self):
        cell = run_cell(Strategy.RANDOM, 1, 2, 1.0, 0.0, ScoreFormat.DECIMAL, seed=0, n=20)
        assert cell.batch_bias == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("data", [
        {"unknown_axis": [1]},
        {"strategies": ["sideways"]},
        {"batch_sizes": []},
        {"batch_sizes": [0]},
        {"noise_sigmas": [-0.1]},
        {"n": 0},
    ])
    def test_invalid_sweep(self, data):
        with pytest.raises(InvalidSweep):
            SweepSpec.from_dict(data)
