"""
BatchJob ve DispatchPool Testleri

Executor yerine basit fonksiyonlar kullanılır; hakem çağrılmaz.
"""

import pytest

from batch_evaluator.core.enums import JobStatus
from batch_evaluator.core.exceptions import EvaluatorError
from batch_evaluator.job.job import BatchJob
from batch_evaluator.job.outcome import BatchOutcome
from batch_evaluator.worker.pool import DispatchPool


def make_job(batch_index=0):
    return BatchJob.create(round_index=0, batch_index=batch_index,
                           sample_ids=["a", "b"], prompt="score these")


@pytest.fixture
def pool_factory():
    pools = []

    def factory(executor_func, max_threads=2):
        pool = DispatchPool(max_threads=max_threads, executor_func=executor_func)
        pool.start()
        pools.append(pool)
        return pool

    yield factory
    for pool in pools:
        pool.shutdown()


class TestBatchJob:
    """BatchJob testleri"""

    def test_create(self):
        job = make_job(batch_index=3)
        assert job.key == (0, 3)
        assert job.size == 2
        assert job.status == JobStatus.PENDING
        assert job.to_dict()["status"] == "pending"

    def test_empty_batch_rejected(self):
        with pytest.raises(ValueError):
            BatchJob.create(0, 0, [], "prompt")

    def test_empty_prompt_rejected(self):
        with pytest.raises(ValueError):
            BatchJob.create(0, 0, ["a"], "")


class TestDispatchPool:
    """DispatchPool testleri"""

    def test_job_status_follows_outcome(self, pool_factory):
        seen = []

        def execute(job):
            seen.append(job.status)
            if job.batch_index == 0:
                return BatchOutcome.success(job, {"a": 1.0, "b": 2.0}, [], [])
            return BatchOutcome.exhausted(job, [], "no scores")

        pool = pool_factory(execute)
        jobs = [make_job(0), make_job(1)]
        for job in jobs:
            pool.submit(job)
        outcomes = pool.collect(len(jobs), timeout=5.0)

        assert seen == [JobStatus.RUNNING, JobStatus.RUNNING]
        assert jobs[0].status == JobStatus.COMPLETED
        assert jobs[1].status == JobStatus.EXHAUSTED
        assert sorted(o.batch_index for o in outcomes) == [0, 1]

    def test_executor_exception_becomes_failed_outcome(self, pool_factory):
        def execute(job):
            raise RuntimeError("boom")

        pool = pool_factory(execute, max_threads=1)
        job = make_job()
        pool.submit(job)
        [outcome] = pool.collect(1, timeout=5.0)

        assert outcome.status == JobStatus.FAILED
        assert isinstance(outcome.exception, RuntimeError)
        assert job.status == JobStatus.FAILED
        assert pool.get_status().metrics["completed"] == 1

    def test_submit_before_start(self):
        pool = DispatchPool(max_threads=1, executor_func=lambda job: None)
        with pytest.raises(EvaluatorError) as info:
            pool.submit(make_job())
        assert info.value.code == "WRK001"

    def test_collect_timeout(self, pool_factory):
        pool = pool_factory(lambda job: None)
        with pytest.raises(EvaluatorError) as info:
            pool.collect(1, timeout=0.05)
        assert info.value.code == "WRK002"

    def test_invalid_thread_count(self):
        with pytest.raises(ValueError):
            DispatchPool(max_threads=0, executor_func=lambda job: None)
