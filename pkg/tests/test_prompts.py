"""
Prompt Şablonu Testleri

Katalog araması, render ve şablon doğrulamasını test eder.
"""

import pytest

from batch_evaluator import Sample
from batch_evaluator.core.enums import Procedure, ScoreFormat
from batch_evaluator.core.exceptions import (
    EmptyBatch,
    FieldMissing,
    TemplateError,
    TemplateNotFound,
)
from batch_evaluator.prompts import (
    GENERIC_TASK,
    PromptTemplate,
    builtin_catalog,
    builtin_criterion,
    builtin_templates,
    count_samples,
    load_template_dir,
    lookup,
    render,
)


def fed_samples(n):
    return [
        Sample(id=f"fed-{k}", fields={"Conversation": f"User: hello {k}\nSystem: hi there {k}"})
        for k in range(n)
    ]


class TestLookup:
    """Katalog araması testleri"""

    def test_two_stage_decimal_criterion_block(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, "Coherence", task="topical_chat")
        assert template.criterion_block.startswith(
            "Coherence (floating point numbers within the interval [1,3])"
        )

    def test_two_stage_integer_criterion_block(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.INTEGER, "Coherence", task="topical_chat")
        assert template.criterion_block.startswith("Coherence (1-3)")
        assert "- A score of 1 (no)" in template.criterion_block

    def test_one_stage_instruction(self):
        template = lookup(Procedure.ONE_STAGE, ScoreFormat.DECIMAL, task="topical_chat")
        assert "give a suitable float score for each sample in order" in template.body

    def test_three_stage_ranking_instruction(self):
        template = lookup(Procedure.THREE_STAGE, ScoreFormat.DECIMAL, task="hanna")
        assert "rank all the samples according to the analysis" in template.body

    def test_integer_skeleton_keeps_original_heading(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.INTEGER, task="qags")
        assert "Evaluation Crieteria:" in template.body

    def test_every_builtin_template_is_valid(self):
        """Tüm görev x prosedür x format birleşimleri oluşturulabilir"""
        templates = builtin_templates()
        assert len(templates) == len(builtin_catalog().task_names()) * 3 * 2
        for template in templates:
            assert "{{Intro}}" not in template.body
            assert "{{Task}}" not in template.body

    def test_unknown_task(self):
        with pytest.raises(TemplateNotFound):
            lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, task="poetry")

    def test_unknown_criterion(self):
        with pytest.raises(TemplateNotFound):
            lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, "Fluency", task="fed")


class TestRender:
    """Render testleri"""

    def test_fed_ten_samples(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, "Coherent", task="fed")
        criterion = builtin_criterion("fed", "Coherent")
        prompt = render(template, fed_samples(10), criterion)

        assert "Float Scores: [Sample1:score of Sample1,...,Sample10:score of Sample10]" in prompt
        assert "a batch of 10 samples" in prompt
        assert prompt.rstrip().endswith("- Coherent:")
        assert count_samples(prompt) == 10

    def test_single_sample(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, task="fed")
        prompt = render(template, fed_samples(1), builtin_criterion("fed"))
        assert "a batch of 1 samples" in prompt
        assert "Sample 1:\nConversation:\n" in prompt
        assert "Sample 2:" not in prompt

    def test_sample_order_defines_numbers(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, task="fed")
        samples = fed_samples(3)
        prompt = render(template, list(reversed(samples)), builtin_criterion("fed"))
        assert prompt.index("hello 2") < prompt.index("hello 1") < prompt.index("hello 0")

    def test_placeholder_in_sample_text_untouched(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, task=GENERIC_TASK)
        sample = Sample(id="x", fields={"Text": "literal {{number}} and {{Metric}}"})
        prompt = render(template, [sample], builtin_criterion(GENERIC_TASK))
        assert "literal {{number}} and {{Metric}}" in prompt

    def test_criterion_block_generated_for_format(self):
        """Şablonda blok yoksa kriter şablon formatında yazılır"""
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.INTEGER, task=GENERIC_TASK)
        prompt = render(template, fed_samples(2), builtin_criterion(GENERIC_TASK))
        assert "Quality (1-3)" in prompt

    def test_empty_batch(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, task="fed")
        with pytest.raises(EmptyBatch):
            render(template, [], builtin_criterion("fed"))

    def test_missing_field(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, task="topical_chat")
        with pytest.raises(FieldMissing) as info:
            render(template, fed_samples(2), builtin_criterion("topical_chat"))
        assert info.value.field_name == "Response"


class TestPromptTemplate:
    """Şablon doğrulama ve kullanıcı klasörü testleri"""

    def test_decimal_template_must_request_float(self):
        with pytest.raises(TemplateError):
            PromptTemplate(name="t", procedure=Procedure.TWO_STAGE, format=ScoreFormat.DECIMAL,
                           body="{{number}} {{Data}} give a score")

    def test_template_needs_placeholders(self):
        with pytest.raises(TemplateError):
            PromptTemplate(name="t", procedure=Procedure.TWO_STAGE, format=ScoreFormat.INTEGER,
                           body="no placeholders here")

    def test_digest_changes_with_criterion_block(self):
        template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, task=GENERIC_TASK)
        changed = template.with_criterion_block("Custom block")
        assert template.digest != changed.digest

    def test_user_directory_overrides_task(self, tmp_path):
        body = (
            "Judge {{number}} items.\n\n{{Criterion}}\n\n{{Data}}\n\n"
            "Give a float score per item as \"Float Scores: [Sample1:x]\".\n\n- {{Metric}}:"
        )
        (tmp_path / "fed__two_stage__decimal.txt").write_text(body, encoding="utf-8")
        catalog = load_template_dir(tmp_path)
        template = catalog.template(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, "fed")
        assert template.body.startswith("Judge {{number}} items.")
        assert catalog.template(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, "hanna").body != template.body

    def test_bad_file_name(self, tmp_path):
        (tmp_path / "weird.txt").write_text("x", encoding="utf-8")
        with pytest.raises(TemplateError):
            load_template_dir(tmp_path)
