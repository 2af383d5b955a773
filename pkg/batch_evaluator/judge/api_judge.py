"""
Canlı API Hakemi

Sağlayıcıdan bağımsız chat-completion istemcisi (requests).

İstek gövdesi:
    {"model", "messages": [system?, user], "temperature", "max_tokens"}

Hata eşlemesi:
    401 / 403                 -> AuthFailure (tekrar denenmez)
    429                       -> tekrar, tükenince RateLimited
    5xx, bağlantı hatası      -> tekrar, tükenince JudgeUnavailable
    zaman aşımı               -> tekrar, tükenince JudgeTimeout
    diğer 4xx, bozuk gövde    -> JudgeUnavailable

Bekleme süresi: min(backoff_cap, backoff_base * 2 ** deneme).
"""

import os
import time
from typing import Any, Callable, Dict, List, Optional

import requests

from ..config import JudgeConfig
from ..core.exceptions import AuthFailure, JudgeTimeout, JudgeUnavailable, RateLimited
from .gateway import JudgeGateway, JudgeRequest, JudgeResponse, TokenUsage, whitespace_tokens
from .ledger import CostLedger


class ApiJudge(JudgeGateway):
    """
    Chat-completion API hakemi

    Özellikler:
    - Bearer anahtar, JudgeConfig.api_key_env ortam değişkeninden
    - Üstel bekleme ile tekrar deneme (sleep enjekte edilebilir)
    - Sağlayıcının bildirdiği token kullanımı; yoksa boşluk tabanlı yaklaşım
    """

    name = "api_judge"

    def __init__(
        self,
        config: JudgeConfig,
        ledger: Optional[CostLedger] = None,
        session: Optional[requests.Session] = None,
        sleep: Callable[[float], None] = time.sleep,
    ):
        if ledger is None:
            ledger = CostLedger(
                config.price_per_1k_prompt, config.price_per_1k_completion, config.budget_cap
            )
        elif ledger.budget_cap is None and config.budget_cap is not None:
            ledger.budget_cap = config.budget_cap
        super().__init__(ledger)
        self._config = config
        self._session = session or requests.Session()
        self._sleep = sleep

    @property
    def endpoint(self) -> str:
        return f"{self._config.resolved_api_base.rstrip('/')}/chat/completions"

    def backoff_delay(self, attempt: int) -> float:
        return min(self._config.backoff_cap, self._config.backoff_base * (2 ** attempt))

    def _api_key(self) -> str:
        key = os.environ.get(self._config.api_key_env)
        if not key:
            raise AuthFailure(f"API anahtarı yok: {self._config.api_key_env} tanımlı değil")
        return key

    def _payload(self, request: JudgeRequest) -> Dict[str, Any]:
        messages: List[Dict[str, str]] = []
        if self._config.system_prompt:
            messages.append({"role": "system", "content": self._config.system_prompt})
        messages.append({"role": "user", "content": request.prompt})
        return {
            "model": self._config.model,
            "messages": messages,
            "temperature": request.temperature,
            "max_tokens": request.max_output,
        }

    def _complete(self, request: JudgeRequest) -> JudgeResponse:
        headers = {
            "Authorization": f"Bearer {self._api_key()}",
            "Content-Type": "application/json",
        }
        payload = self._payload(request)
        last_failure = "unavailable"
        last_detail = ""

        for attempt in range(self._config.max_retries + 1):
            try:
                response = self._session.post(
                    self.endpoint,
                    json=payload,
                    headers=headers,
                    timeout=self._config.request_timeout,
                )
            except requests.Timeout as e:
                last_failure, last_detail = "timeout", str(e)
            except requests.ConnectionError as e:
                last_failure, last_detail = "unavailable", str(e)
            else:
                status = response.status_code
                if status in (401, 403):
                    raise AuthFailure(f"Kimlik doğrulama reddedildi (HTTP {status})")
                if status == 429:
                    last_failure, last_detail = "rate_limited", "HTTP 429"
                elif status >= 500:
                    last_failure, last_detail = "unavailable", f"HTTP {status}"
                elif status >= 400:
                    raise JudgeUnavailable(f"İstek reddedildi (HTTP {status}): {response.text[:200]}")
                else:
                    return self._read_response(request, response)

            if attempt < self._config.max_retries:
                delay = self.backoff_delay(attempt)
                self._logger.warning(
                    f"Hakem çağrısı başarısız ({last_failure}: {last_detail}), "
                    f"{delay:.1f}s sonra tekrar denenecek ({attempt + 1}/{self._config.max_retries})"
                )
                self._sleep(delay)

        attempts = self._config.max_retries + 1
        self._logger.error(f"Hakem çağrısı {attempts} denemede başarısız: {last_failure}")
        if last_failure == "rate_limited":
            raise RateLimited(f"Oran limiti {attempts} denemede aşılamadı")
        if last_failure == "timeout":
            raise JudgeTimeout(f"İstek {attempts} denemede zaman aşımına uğradı: {last_detail}")
        raise JudgeUnavailable(f"Hakem {attempts} denemede yanıt vermedi: {last_detail}")

    def _read_response(self, request: JudgeRequest, response: requests.Response) -> JudgeResponse:
        try:
            data = response.json()
            text = data["choices"][0]["message"]["content"] or ""
        except (ValueError, KeyError, IndexError, TypeError) as e:
            raise JudgeUnavailable(f"Yanıt gövdesi anlaşılamadı: {e}") from e

        usage = data.get("usage") or {}
        return JudgeResponse(
            text=text,
            usage=TokenUsage(
                prompt_tokens=int(usage.get("prompt_tokens", whitespace_tokens(request.prompt))),
                completion_tokens=int(usage.get("completion_tokens", whitespace_tokens(text))),
            ),
        )

    def describe(self) -> Dict[str, Any]:
        return {"name": self.name, "model": self._config.model, "endpoint": self.endpoint}
