"""
Dispatch Pool Modülü

Bir turun batch işlerini sabit sayıda thread ile eşzamanlı çalıştırır.
Her thread kuyruktan iş alır, executor ile çalıştırır ve sonucu
sonuç kuyruğuna koyar.

Kullanım:
    pool = DispatchPool(max_threads=4, executor_func=executor.execute)
    pool.start()
    for job in jobs:
        pool.submit(job)
    outcomes = pool.collect(len(jobs))
    pool.shutdown()
"""

import logging
import threading
from queue import Empty, Queue
from threading import Event
from typing import Callable, List, Optional

from ..core.enums import JobStatus
from ..core.exceptions import EvaluatorError
from ..job.job import BatchJob
from ..job.outcome import BatchOutcome
from ..status import ComponentStatus


class DispatchPool:
    """
    Dispatch Pool - thread yönetimi

    Özellikler:
    - Eşzamanlılık limiti: max_threads kadar batch aynı anda hakemde
    - None sentinel ile kapanma
    - Sonuçlar geliş sırasıyla toplanır; sıralama engine'in işidir
    """

    def __init__(self, max_threads: int, executor_func: Callable[[BatchJob], BatchOutcome]):
        if max_threads < 1:
            raise ValueError("max_threads en az 1 olmalı")
        self._max_threads = max_threads
        self._executor_func = executor_func
        self._logger = logging.getLogger("worker")

        self._job_queue: Queue = Queue()
        self._outcome_queue: Queue = Queue()
        self._threads: List[threading.Thread] = []
        self._shutdown_event = Event()
        self._lock = threading.Lock()
        self._active_count = 0
        self._completed_count = 0
        self._started = False

    def start(self):
        """Thread'leri başlat"""
        if self._started:
            return
        self._shutdown_event.clear()
        for i in range(self._max_threads):
            thread = threading.Thread(
                target=self._worker_loop,
                name=f"dispatch-{i}",
                daemon=True,
            )
            thread.start()
            self._threads.append(thread)
        self._started = True

    def submit(self, job: BatchJob):
        """İş gönder"""
        if not self._started:
            raise EvaluatorError("DispatchPool başlatılmamış", code="WRK001")
        self._job_queue.put(job)

    def collect(self, count: int, timeout: Optional[float] = None) -> List[BatchOutcome]:
        """
        count adet sonucu bekler

        Raises:
            EvaluatorError: timeout dolarsa
        """
        outcomes = []
        for _ in range(count):
            try:
                outcomes.append(self._outcome_queue.get(timeout=timeout))
            except Empty as e:
                raise EvaluatorError(
                    f"{count} sonuçtan {len(outcomes)} tanesi zamanında geldi", code="WRK002"
                ) from e
        return outcomes

    def shutdown(self):
        """Thread'leri kapat"""
        self._shutdown_event.set()
        # Queue'ya None ekle ki thread'ler çıksın
        for _ in self._threads:
            self._job_queue.put(None)
        for thread in self._threads:
            thread.join(timeout=5.0)
        self._threads = []
        self._started = False

    def _worker_loop(self):
        """Her thread bu döngüde çalışır"""
        while not self._shutdown_event.is_set():
            try:
                job = self._job_queue.get(timeout=0.1)
            except Empty:
                continue

            if job is None:  # Shutdown signal
                break

            job.status = JobStatus.RUNNING
            with self._lock:
                self._active_count += 1
            try:
                outcome = self._executor_func(job)
            except Exception as e:
                self._logger.exception(f"Executor hatası: {job.to_dict()}")
                outcome = BatchOutcome.failed(job, e)
            finally:
                with self._lock:
                    self._active_count -= 1
                    self._completed_count += 1
            job.status = outcome.status
            self._outcome_queue.put(outcome)

    def get_status(self) -> ComponentStatus:
        """Pool durumu"""
        with self._lock:
            metrics = {
                "threads": len(self._threads),
                "max_threads": self._max_threads,
                "active": self._active_count,
                "queued": self._job_queue.qsize(),
                "completed": self._completed_count,
            }
        health = "healthy" if self._started else "unhealthy"
        return ComponentStatus(name="dispatch_pool", health=health, metrics=metrics)
