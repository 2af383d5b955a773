"""Judge modülü - hakem geçidi, canlı API, simülasyon ve maliyet defteri"""

from .gateway import (
    JudgeGateway,
    JudgeRequest,
    JudgeResponse,
    JudgeTranscript,
    TokenUsage,
    whitespace_tokens,
)
from .ledger import CostLedger
from .api_judge import ApiJudge
from .simulated import SimJudgeConfig, SimulatedJudge, simulate_judge, simulated_scores

__all__ = [
    "JudgeGateway",
    "JudgeRequest",
    "JudgeResponse",
    "JudgeTranscript",
    "TokenUsage",
    "whitespace_tokens",
    "CostLedger",
    "ApiJudge",
    "SimJudgeConfig",
    "SimulatedJudge",
    "simulate_judge",
    "simulated_scores",
]
