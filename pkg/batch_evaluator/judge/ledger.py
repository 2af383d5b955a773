"""
Maliyet Defteri

Token kullanımını ve para birimi maliyetini Decimal ile tutar.
Eşzamanlı batch gönderimlerinden güncellenir; tüm sayaçlar Lock altında artar.

Kullanım:
    ledger = CostLedger("0.03", "0.06")
    ledger.record(1000, 500)
    ledger.set_items(10)
    ledger.per_item  # Decimal("0.006")
"""

import threading
from decimal import Decimal
from typing import Any, Dict, Optional, Union

from ..core.exceptions import BudgetExceeded
from ..status import ComponentStatus

Money = Union[Decimal, str, int]

_THOUSAND = Decimal(1000)


class CostLedger:
    """
    Token ve maliyet defteri

    per_item = toplam maliyet / değerlendirilen örnek sayısı.
    Sayaçlar yalnızca artar.
    """

    def __init__(
        self,
        price_per_1k_prompt: Money = Decimal("0"),
        price_per_1k_completion: Money = Decimal("0"),
        budget_cap: Optional[Money] = None,
    ):
        self.price_per_1k_prompt = Decimal(str(price_per_1k_prompt))
        self.price_per_1k_completion = Decimal(str(price_per_1k_completion))
        self.budget_cap = None if budget_cap is None else Decimal(str(budget_cap))

        self._lock = threading.Lock()
        self._prompt_tokens = 0
        self._completion_tokens = 0
        self._calls = 0
        self._items = 0

    @property
    def prompt_tokens(self) -> int:
        return self._prompt_tokens

    @property
    def completion_tokens(self) -> int:
        return self._completion_tokens

    @property
    def calls(self) -> int:
        return self._calls

    @property
    def items(self) -> int:
        return self._items

    def record(self, prompt_tokens: int, completion_tokens: int) -> Decimal:
        """
        Bir hakem çağrısının kullanımını kaydeder

        Returns:
            Decimal: Güncel toplam maliyet
        """
        if prompt_tokens < 0 or completion_tokens < 0:
            raise ValueError("token sayıları negatif olamaz")
        with self._lock:
            self._prompt_tokens += prompt_tokens
            self._completion_tokens += completion_tokens
            self._calls += 1
            return self._total_cost_unlocked()

    def set_items(self, items: int) -> None:
        """Değerlendirilen örnek sayısı (per_item paydası); azaltılamaz"""
        with self._lock:
            self._items = max(self._items, int(items))

    def _total_cost_unlocked(self) -> Decimal:
        prompt = Decimal(self._prompt_tokens) * self.price_per_1k_prompt / _THOUSAND
        completion = Decimal(self._completion_tokens) * self.price_per_1k_completion / _THOUSAND
        return prompt + completion

    @property
    def prompt_cost(self) -> Decimal:
        return Decimal(self._prompt_tokens) * self.price_per_1k_prompt / _THOUSAND

    @property
    def completion_cost(self) -> Decimal:
        return Decimal(self._completion_tokens) * self.price_per_1k_completion / _THOUSAND

    @property
    def total_cost(self) -> Decimal:
        with self._lock:
            return self._total_cost_unlocked()

    @property
    def per_item(self) -> Decimal:
        with self._lock:
            if self._items == 0:
                return Decimal("0")
            return self._total_cost_unlocked() / Decimal(self._items)

    @property
    def over_budget(self) -> bool:
        return self.budget_cap is not None and self.total_cost > self.budget_cap

    def check_budget(self) -> None:
        """
        Raises:
            BudgetExceeded: Toplam maliyet limiti geçtiyse
        """
        if self.over_budget:
            raise BudgetExceeded(self.total_cost, self.budget_cap)

    def to_dict(self) -> Dict[str, Any]:
        """ledger.json içeriği (para değerleri string)"""
        return {
            "prompt_tokens": self._prompt_tokens,
            "completion_tokens": self._completion_tokens,
            "calls": self._calls,
            "items": self._items,
            "price_per_1k_prompt": str(self.price_per_1k_prompt),
            "price_per_1k_completion": str(self.price_per_1k_completion),
            "prompt_cost": str(self.prompt_cost),
            "completion_cost": str(self.completion_cost),
            "total_cost": str(self.total_cost),
            "per_item": str(self.per_item),
            "budget_cap": None if self.budget_cap is None else str(self.budget_cap),
        }

    def get_status(self) -> ComponentStatus:
        health = "unhealthy" if self.over_budget else "healthy"
        return ComponentStatus(name="cost_ledger", health=health, metrics=self.to_dict())
