"""
Veri Seti Testleri

Kanonik format okuma/yazma, şema doğrulaması ve sentetik üretici testleri.
"""

import json

import pytest
from scipy import stats

from batch_evaluator.core.exceptions import ConfigError, DatasetNotFound, EmptyDataset, SchemaViolation
from batch_evaluator.dataset import (
    SYNTH_FIELD,
    dump_dataset,
    load_dataset,
    parse_dataset,
    save_dataset,
    synth_dataset,
)

CRITERION = {
    "name": "Coherence",
    "definition": "Is the response coherent?",
    "anchors": [[1, "(no)"], [2, "(somewhat)"], [3, "(yes)"]],
    "score_min": 1,
    "score_max": 3,
    "format": "decimal",
}


def canonical(*records, header=None):
    header = header if header is not None else {"dataset": {"name": "mini", "criteria": [CRITERION]}}
    return "\n".join(json.dumps(r) for r in (header, *records)) + "\n"


class TestParse:
    """Kanonik metin ayrıştırma testleri"""

    def test_minimal_file(self):
        text = canonical(
            {"id": "a", "fields": {"Response": "hi"}, "human": {"Coherence": 2.5}},
            {"id": "b", "fields": {"Response": "bye"}},
        )
        dataset = parse_dataset(text)
        assert dataset.name == "mini"
        assert dataset.ids == ["a", "b"]
        assert dataset.human_scores("Coherence") == {"a": 2.5}
        assert dataset.criterion().name == "Coherence"

    def test_score_outside_range(self):
        text = canonical({"id": "a", "fields": {"Response": "hi"}, "human": {"Coherence": 4.2}})
        with pytest.raises(SchemaViolation) as info:
            parse_dataset(text)
        assert info.value.line == 2

    def test_duplicate_id_reports_line(self):
        text = canonical(
            {"id": "a", "fields": {"Response": "one"}},
            {"id": "b", "fields": {"Response": "two"}},
            {"id": "a", "fields": {"Response": "three"}},
        )
        with pytest.raises(SchemaViolation) as info:
            parse_dataset(text)
        assert info.value.line == 4

    def test_unknown_criterion(self):
        text = canonical({"id": "a", "fields": {"Response": "hi"}, "human": {"Fluency": 2}})
        with pytest.raises(SchemaViolation):
            parse_dataset(text)

    @pytest.mark.parametrize("line", [
        "not json",
        json.dumps([1, 2]),
        json.dumps({"fields": {"Response": "x"}}),
        json.dumps({"id": "a", "fields": {"Response": "   "}}),
    ])
    def test_bad_sample_line(self, line):
        text = canonical() + line + "\n"
        with pytest.raises(SchemaViolation) as info:
            parse_dataset(text)
        assert info.value.line == 2

    def test_header_after_samples(self):
        text = canonical({"id": "a", "fields": {"Response": "hi"}}) + json.dumps({"dataset": {}}) + "\n"
        with pytest.raises(SchemaViolation):
            parse_dataset(text)

    def test_header_only(self):
        with pytest.raises(EmptyDataset):
            parse_dataset(canonical())


class TestFiles:
    """Dosya okuma / yazma testleri"""

    def test_missing_file(self, tmp_path):
        path = tmp_path / "none.jsonl"
        with pytest.raises(DatasetNotFound) as info:
            load_dataset(path)
        assert info.value.code == "DST004"
        assert info.value.path == path
        assert str(path) in str(info.value)

    def test_save_then_load(self, tmp_path, criterion):
        original = synth_dataset(20, criterion, seed=3)
        path = save_dataset(original, tmp_path / "nested" / "synth.jsonl")
        loaded = load_dataset(path)

        assert loaded.name == original.name
        assert loaded.provenance == original.provenance
        assert loaded.criteria == original.criteria
        assert loaded.samples == original.samples
        assert loaded.raw_digest is not None
        assert original.raw_digest is None

    def test_digest_follows_file_bytes(self, tmp_path, criterion):
        dataset = synth_dataset(5, criterion)
        first = load_dataset(save_dataset(dataset, tmp_path / "a.jsonl"))
        second = load_dataset(save_dataset(dataset, tmp_path / "b.jsonl"))
        assert first.digest == second.digest

        (tmp_path / "c.jsonl").write_text(dump_dataset(dataset) + "\n", encoding="utf-8")
        assert load_dataset(tmp_path / "c.jsonl").digest != first.digest

    def test_name_from_file_stem(self, tmp_path):
        path = tmp_path / "unnamed.jsonl"
        path.write_text(canonical({"id": "a", "fields": {"Response": "hi"}}, header={"dataset": {}}),
                        encoding="utf-8")
        assert load_dataset(path).name == "unnamed"


class TestSynth:
    """Sentetik veri seti testleri"""

    def test_ids_and_fields(self, criterion):
        dataset = synth_dataset(3, criterion)
        assert dataset.ids == ["syn-00000", "syn-00001", "syn-00002"]
        assert all(SYNTH_FIELD in s.fields for s in dataset.samples)
        assert dataset.criteria == [criterion]

    def test_single_sample(self, criterion):
        dataset = synth_dataset(1, criterion)
        assert len(dataset) == 1
        assert criterion.contains(dataset.samples[0].human_score(criterion.name))

    def test_seed_determinism(self, criterion):
        assert synth_dataset(50, criterion, seed=9).samples == synth_dataset(50, criterion, seed=9).samples
        assert synth_dataset(50, criterion, seed=9).samples != synth_dataset(50, criterion, seed=10).samples

    def test_qualities_are_uniform(self, criterion):
        """n=10^4 için KS testi düzgün dağılımı reddetmez"""
        dataset = synth_dataset(10_000, criterion, seed=0)
        qualities = list(dataset.human_scores(criterion.name).values())
        width = criterion.score_max - criterion.score_min
        result = stats.kstest(qualities, "uniform", args=(criterion.score_min, width))
        assert result.pvalue > 0.01

    def test_wide_ids_stay_sortable(self, criterion):
        dataset = synth_dataset(120_000, criterion)
        assert dataset.ids[-1] == "syn-119999"
        assert dataset.ids == sorted(dataset.ids)

    def test_invalid_n(self, criterion):
        with pytest.raises(ConfigError) as info:
            synth_dataset(0, criterion)
        assert info.value.code == "CFG024"
