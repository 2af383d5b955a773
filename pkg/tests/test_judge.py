"""
Hakem Testleri

Simülasyon hakemi, maliyet defteri ve canlı API istemcisini
(sahte HTTP oturumu ile) test eder.
"""

from decimal import Decimal

import pytest
import requests

from batch_evaluator.config import JudgeConfig
from batch_evaluator.core.enums import Procedure, ScoreFormat
from batch_evaluator.core.exceptions import (
    AuthFailure,
    BudgetExceeded,
    ConfigError,
    JudgeTimeout,
    JudgeUnavailable,
    RateLimited,
    UnknownSample,
)
from batch_evaluator.judge import (
    ApiJudge,
    CostLedger,
    JudgeRequest,
    SimJudgeConfig,
    SimulatedJudge,
    simulate_judge,
    simulated_scores,
)
from batch_evaluator.parsing import parse_batch_scores
from batch_evaluator.prompts import GENERIC_TASK, builtin_criterion


def sim_config(quality, **kwargs):
    return SimJudgeConfig(true_quality=quality, **kwargs)


class TestSimulatedJudge:
    """Simülasyon hakemi testleri"""

    def test_identity_without_bias_and_noise(self):
        quality = {"a": 1.2, "b": 2.5, "c": 2.9}
        assert simulated_scores(["a", "b", "c"], sim_config(quality)) == [1.2, 2.5, 2.9]

    def test_bias_shifts_by_batch_mean(self):
        """alpha=1: her skor (batch ortalaması - genel ortalama) kadar kayar"""
        quality = {"lo1": 1.0, "lo2": 1.0, "hi1": 2.2, "hi2": 1.8}
        cfg = sim_config(quality, bias_alpha=1.0)
        # genel ortalama 1.5, batch ortalaması 2.0
        assert simulated_scores(["hi1", "hi2"], cfg) == [2.7, 2.3]
        assert simulated_scores(["lo1", "lo2"], cfg) == [1.0, 1.0]

    def test_scores_clipped_to_range(self):
        quality = {"a": 2.9, "b": 3.0, "c": 1.0, "d": 1.0}
        scores = simulated_scores(["a", "b"], sim_config(quality, bias_alpha=2.0))
        assert scores == [3.0, 3.0]

    def test_integer_rounding(self):
        cfg = sim_config({"a": 2.4, "b": 2.5}, format=ScoreFormat.INTEGER)
        assert simulated_scores(["a", "b"], cfg) == [2.0, 3.0]

    def test_noise_is_seeded(self):
        quality = {f"s{k}": 2.0 for k in range(10)}
        cfg = sim_config(quality, noise_sigma=0.3, seed=9)
        ids = list(quality)
        assert simulated_scores(ids, cfg, round_index=2) == simulated_scores(ids, cfg, round_index=2)
        assert simulated_scores(ids, cfg, round_index=2) != simulated_scores(ids, cfg, round_index=3)

    def test_noise_independent_of_batch_order(self):
        """Gürültü (seed, tur, id) ile belirlenir; batch sırası etkilemez"""
        quality = {f"s{k}": 2.0 for k in range(6)}
        cfg = sim_config(quality, noise_sigma=0.3, seed=4)
        forward = dict(zip(quality, simulated_scores(list(quality), cfg)))
        backward_ids = list(reversed(list(quality)))
        backward = dict(zip(backward_ids, simulated_scores(backward_ids, cfg)))
        assert forward == backward

    def test_unknown_sample(self):
        with pytest.raises(UnknownSample):
            simulated_scores(["zzz"], sim_config({"a": 2.0}))

    def test_quality_out_of_range(self):
        with pytest.raises(ConfigError):
            sim_config({"a": 3.5})

    @pytest.mark.parametrize("procedure", list(Procedure))
    def test_response_parses(self, procedure):
        criterion = builtin_criterion(GENERIC_TASK)
        quality = {"a": 1.3, "b": 2.2, "c": 2.8}
        text = simulate_judge(["a", "b", "c"], sim_config(quality), procedure=procedure)
        parsed = parse_batch_scores(text, 3, criterion, procedure)
        assert parsed.ordered() == [1.3, 2.2, 2.8]

    def test_complete_records_usage(self):
        ledger = CostLedger("0.03", "0.06")
        judge = SimulatedJudge(sim_config({"a": 2.0}), ledger)
        request = JudgeRequest(prompt="one two three", sample_ids=("a",))
        first = judge.complete(request)
        second = judge.complete(request)
        assert first.text == second.text
        assert ledger.calls == 2
        assert ledger.prompt_tokens == 6
        assert judge.get_status().metrics["calls"] == 2


class TestCostLedger:
    """Maliyet defteri testleri (Decimal kesinliği)"""

    def test_per_item_example(self):
        ledger = CostLedger("0.03", "0.06")
        ledger.record(1000, 500)
        ledger.set_items(10)
        assert ledger.total_cost == Decimal("0.06")
        assert ledger.per_item == Decimal("0.006")

    @pytest.mark.parametrize("prices, calls, items, total, per_item", [
        (("0.03", "0.06"), [(1000, 500)], 10, "0.06", "0.006"),
        (("0.0015", "0.002"), [(1234, 567), (800, 33)], 7, "0.0042510", "0.000607285714285714285714285714"),
        (("0.01", "0.03"), [(2500, 1000), (2500, 1000), (0, 0)], 4, "0.11", "0.0275"),
    ])
    def test_price_scenarios(self, prices, calls, items, total, per_item):
        """Elle hesaplanmış kâhin değerleri"""
        ledger = CostLedger(*prices)
        for prompt_tokens, completion_tokens in calls:
            ledger.record(prompt_tokens, completion_tokens)
        ledger.set_items(items)
        assert ledger.total_cost == Decimal(total)
        assert ledger.per_item == Decimal(total) / Decimal(items)
        assert ledger.per_item.quantize(Decimal("1e-12")) == Decimal(per_item).quantize(Decimal("1e-12"))

    def test_zero_items(self):
        ledger = CostLedger("0.03", "0.06")
        ledger.record(100, 100)
        assert ledger.per_item == Decimal("0")

    def test_items_never_decrease(self):
        ledger = CostLedger()
        ledger.set_items(10)
        ledger.set_items(3)
        assert ledger.items == 10

    def test_budget_cap(self):
        ledger = CostLedger("1", "1", budget_cap="0.5")
        ledger.record(400, 0)
        ledger.check_budget()
        ledger.record(200, 0)
        with pytest.raises(BudgetExceeded):
            ledger.check_budget()
        assert ledger.get_status().health == "unhealthy"

    def test_negative_tokens_rejected(self):
        with pytest.raises(ValueError):
            CostLedger().record(-1, 0)

    def test_to_dict_strings(self):
        ledger = CostLedger("0.03", "0.06")
        ledger.record(1000, 500)
        data = ledger.to_dict()
        assert data["total_cost"] == "0.06"
        assert data["calls"] == 1


class FakeResponse:
    def __init__(self, status_code, payload=None, text=""):
        self.status_code = status_code
        self._payload = payload
        self.text = text

    def json(self):
        if self._payload is None:
            raise ValueError("no json")
        return self._payload


class FakeSession:
    """Sırayla yanıt (veya exception) döndüren sahte requests.Session"""

    def __init__(self, responses):
        self.responses = list(responses)
        self.calls = []

    def post(self, url, json=None, headers=None, timeout=None):
        self.calls.append({"url": url, "json": json, "headers": headers, "timeout": timeout})
        item = self.responses.pop(0)
        if isinstance(item, Exception):
            raise item
        return item


def ok_body(text="Float Scores: [Sample1:2.0]", usage=None):
    body = {"choices": [{"message": {"content": text}}]}
    if usage is not None:
        body["usage"] = usage
    return FakeResponse(200, body)


class TestApiJudge:
    """Canlı API istemcisi testleri (ağ yok)"""

    @pytest.fixture(autouse=True)
    def api_key(self, monkeypatch):
        monkeypatch.setenv("JUDGE_API_KEY", "test-key")
        monkeypatch.delenv("JUDGE_API_BASE", raising=False)

    def make(self, responses, **config):
        sleeps = []
        session = FakeSession(responses)
        cfg = JudgeConfig(mode="api", max_retries=3, backoff_base=1.0, backoff_cap=3.0,
                          system_prompt="You are a judge.", **config)
        judge = ApiJudge(cfg, CostLedger("0.03", "0.06"), session=session, sleep=sleeps.append)
        return judge, session, sleeps

    def test_success_payload_and_usage(self):
        judge, session, _ = self.make([ok_body(usage={"prompt_tokens": 100, "completion_tokens": 20})])
        response = judge.complete(JudgeRequest(prompt="evaluate", temperature=0.2, max_output=256))

        assert response.text == "Float Scores: [Sample1:2.0]"
        call = session.calls[0]
        assert call["url"] == "https://api.openai.com/v1/chat/completions"
        assert call["headers"]["Authorization"] == "Bearer test-key"
        assert call["json"]["messages"][0] == {"role": "system", "content": "You are a judge."}
        assert call["json"]["messages"][1] == {"role": "user", "content": "evaluate"}
        assert call["json"]["temperature"] == 0.2
        assert call["json"]["max_tokens"] == 256
        assert judge.ledger.prompt_tokens == 100
        assert judge.ledger.total_cost == Decimal("0.0042")

    def test_usage_fallback_to_whitespace_tokens(self):
        judge, _, _ = self.make([ok_body(text="a b c")])
        judge.complete(JudgeRequest(prompt="one two"))
        assert judge.ledger.prompt_tokens == 2
        assert judge.ledger.completion_tokens == 3

    def test_retry_then_success_with_backoff(self):
        judge, session, sleeps = self.make([
            FakeResponse(429), FakeResponse(503), requests.ConnectionError("down"), ok_body(),
        ])
        judge.complete(JudgeRequest(prompt="x"))
        assert len(session.calls) == 4
        assert sleeps == [1.0, 2.0, 3.0]

    def test_rate_limited_after_retries(self):
        judge, session, _ = self.make([FakeResponse(429)] * 4)
        with pytest.raises(RateLimited):
            judge.complete(JudgeRequest(prompt="x"))
        assert len(session.calls) == 4

    def test_timeout_after_retries(self):
        judge, _, _ = self.make([requests.Timeout("slow")] * 4)
        with pytest.raises(JudgeTimeout):
            judge.complete(JudgeRequest(prompt="x"))

    def test_server_errors_exhaust(self):
        judge, _, _ = self.make([FakeResponse(500)] * 4)
        with pytest.raises(JudgeUnavailable):
            judge.complete(JudgeRequest(prompt="x"))
        assert judge.get_status().metrics["failures"] == 1

    def test_auth_failure_not_retried(self):
        judge, session, sleeps = self.make([FakeResponse(401)])
        with pytest.raises(AuthFailure):
            judge.complete(JudgeRequest(prompt="x"))
        assert len(session.calls) == 1
        assert sleeps == []

    def test_missing_key(self, monkeypatch):
        monkeypatch.delenv("JUDGE_API_KEY")
        judge, session, _ = self.make([ok_body()])
        with pytest.raises(AuthFailure):
            judge.complete(JudgeRequest(prompt="x"))
        assert session.calls == []

    def test_bad_body(self):
        judge, _, _ = self.make([FakeResponse(200, {"unexpected": True})])
        with pytest.raises(JudgeUnavailable):
            judge.complete(JudgeRequest(prompt="x"))

    def test_client_error_not_retried(self):
        judge, session, _ = self.make([FakeResponse(400, text="bad request")])
        with pytest.raises(JudgeUnavailable):
            judge.complete(JudgeRequest(prompt="x"))
        assert len(session.calls) == 1

    def test_budget_exceeded_after_recording(self):
        judge, _, _ = self.make(
            [ok_body(usage={"prompt_tokens": 1000, "completion_tokens": 1000})], budget_cap="0.05"
        )
        with pytest.raises(BudgetExceeded) as info:
            judge.complete(JudgeRequest(prompt="x"))
        assert judge.ledger.calls == 1
        assert info.value.usage.prompt_tokens == 1000

    def test_ledger_built_from_config(self):
        cfg = JudgeConfig(mode="api", max_retries=0, budget_cap="0.05")
        session = FakeSession([ok_body(usage={"prompt_tokens": 1000, "completion_tokens": 1000})])
        judge = ApiJudge(cfg, session=session, sleep=lambda _: None)
        assert judge.ledger.price_per_1k_prompt == Decimal("0.03")
        assert judge.ledger.budget_cap == Decimal("0.05")
        with pytest.raises(BudgetExceeded):
            judge.complete(JudgeRequest(prompt="x"))
        assert judge.ledger.total_cost == Decimal("0.09")

    def test_ledger_cap_kept_when_already_set(self):
        cfg = JudgeConfig(mode="api", budget_cap="0.05")
        ledger = CostLedger("0.03", "0.06", budget_cap="1.00")
        judge = ApiJudge(cfg, ledger, session=FakeSession([]), sleep=lambda _: None)
        assert judge.ledger is ledger
        assert ledger.budget_cap == Decimal("1.00")

    def test_api_base_from_environment(self, monkeypatch):
        monkeypatch.setenv("JUDGE_API_BASE", "http://localhost:9000/v1/")
        judge, session, _ = self.make([ok_body()])
        judge.complete(JudgeRequest(prompt="x"))
        assert session.calls[0]["url"] == "http://localhost:9000/v1/chat/completions"
