"""
Değerlendirici Yapılandırması

Bu modül, bir değerlendirme koşusunun ve hakem bağlantısının tüm ayarlarını içerir.
Ayarlar iki dataclass'a ayrılır; AppConfig ikisini birlikte taşır.

Kullanım:
    run = RunConfig(rounds=5, batch_size=10, strategy="heterogeneous")
    judge = JudgeConfig(model="gpt-4", budget_cap="5.00")
    app = load_config_from_file("config.json")

Öncelik sırası: varsayılanlar < config dosyası < komut satırı argümanları.
"""

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..core.enums import Procedure, RepartitionBasis, Strategy, JudgeMode
from ..core.exceptions import ConfigError

CONFIG_DIR = Path(__file__).parent
DEFAULT_CONFIG_PATH = CONFIG_DIR / "config.json"

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
SEED_LIMIT = 2 ** 64


def _to_decimal(value: Any, name: str) -> Decimal:
    try:
        return Decimal(str(value))
    except (InvalidOperation, ValueError) as e:
        raise ConfigError(f"{name} para değeri olarak okunamadı: {value!r}") from e


def _to_enum(enum_cls, value: Any, name: str):
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(str(value).lower())
    except ValueError as e:
        valid = ", ".join(m.value for m in enum_cls)
        raise ConfigError(f"Geçersiz {name}: {value!r} (geçerli: {valid})") from e


@dataclass
class RunConfig:
    """
    Koşu yapılandırması

    Tur döngüsü, batch kompozisyonu, prompt prosedürü ve tekrar deneme ayarları.
    Varsayılanlar yayımlanmış ana deney ayarlarıdır: 5 tur, batch 10, sıcaklık 0.2.
    """
    # Döngü ayarları
    rounds: int = 5
    batch_size: int = 10
    strategy: Strategy = Strategy.HETEROGENEOUS
    procedure: Procedure = Procedure.TWO_STAGE
    repartition_on: RepartitionBasis = RepartitionBasis.RUNNING_MEAN

    # Hakem çağrısı ayarları
    temperature: float = 0.2
    seed: int = 0
    max_parse_retries: int = 3
    clamp_tolerance: float = 0.05
    max_in_flight: int = 4

    # Genel ayarlar
    log_level: str = "INFO"

    def __post_init__(self):
        """Değerleri doğrula ve normalize et"""
        self.strategy = _to_enum(Strategy, self.strategy, "strategy")
        self.procedure = _to_enum(Procedure, self.procedure, "procedure")
        self.repartition_on = _to_enum(RepartitionBasis, self.repartition_on, "repartition_on")

        if self.rounds < 1:
            raise ConfigError("rounds en az 1 olmalı", code="CFG002")
        if self.batch_size < 1:
            raise ConfigError("batch_size en az 1 olmalı", code="CFG003")
        if not 0.0 <= self.temperature <= 2.0:
            raise ConfigError("temperature 0 ile 2 arasında olmalı", code="CFG004")
        if not 0 <= self.seed < SEED_LIMIT:
            raise ConfigError("seed 64-bit işaretsiz tam sayı olmalı", code="CFG005")
        if self.max_parse_retries < 0:
            raise ConfigError("max_parse_retries negatif olamaz", code="CFG006")
        if self.clamp_tolerance < 0:
            raise ConfigError("clamp_tolerance negatif olamaz", code="CFG007")
        if self.max_in_flight < 1:
            raise ConfigError("max_in_flight en az 1 olmalı", code="CFG008")

        if self.log_level.upper() not in VALID_LOG_LEVELS:
            raise ConfigError(f"Geçersiz log_level: {self.log_level}", code="CFG009")
        self.log_level = self.log_level.upper()

    def to_dict(self) -> Dict[str, Any]:
        """JSON'a yazılabilir dict"""
        data = asdict(self)
        data["strategy"] = self.strategy.value
        data["procedure"] = self.procedure.value
        data["repartition_on"] = self.repartition_on.value
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"Bilinmeyen run ayarları: {sorted(unknown)}", code="CFG010")
        return cls(**data)


@dataclass
class JudgeConfig:
    """
    Hakem yapılandırması

    Canlı mod için endpoint, model, fiyat tablosu ve tekrar deneme politikası;
    simülasyon modu için bias ve gürültü parametreleri.

    API anahtarı config dosyasına yazılmaz, api_key_env ile adı verilen
    ortam değişkeninden okunur.
    """
    mode: JudgeMode = JudgeMode.SIM

    # Canlı API
    model: str = "gpt-4"
    api_base: str = "https://api.openai.com/v1"
    api_base_env: str = "JUDGE_API_BASE"
    api_key_env: str = "JUDGE_API_KEY"
    system_prompt: Optional[str] = None
    max_output_tokens: int = 1024
    request_timeout: float = 60.0

    # Tekrar deneme politikası (üstel bekleme)
    max_retries: int = 5
    backoff_base: float = 1.0
    backoff_cap: float = 30.0

    # Fiyat tablosu (1000 token başına)
    price_per_1k_prompt: Decimal = field(default_factory=lambda: Decimal("0.03"))
    price_per_1k_completion: Decimal = field(default_factory=lambda: Decimal("0.06"))
    budget_cap: Optional[Decimal] = None

    # Simülasyon hakemi
    sim_bias_alpha: float = 0.5
    sim_noise_sigma: float = 0.2

    def __post_init__(self):
        """Değerleri doğrula ve normalize et"""
        self.mode = _to_enum(JudgeMode, self.mode, "judge mode")
        self.price_per_1k_prompt = _to_decimal(self.price_per_1k_prompt, "price_per_1k_prompt")
        self.price_per_1k_completion = _to_decimal(
            self.price_per_1k_completion, "price_per_1k_completion"
        )
        if self.budget_cap is not None:
            self.budget_cap = _to_decimal(self.budget_cap, "budget_cap")

        if not self.model:
            raise ConfigError("model boş olamaz", code="CFG011")
        if self.max_output_tokens < 1:
            raise ConfigError("max_output_tokens en az 1 olmalı", code="CFG012")
        if self.request_timeout <= 0:
            raise ConfigError("request_timeout pozitif olmalı", code="CFG013")
        if self.max_retries < 0:
            raise ConfigError("max_retries negatif olamaz", code="CFG014")
        if self.backoff_base < 0 or self.backoff_cap < 0:
            raise ConfigError("backoff değerleri negatif olamaz", code="CFG015")
        if self.price_per_1k_prompt < 0 or self.price_per_1k_completion < 0:
            raise ConfigError("fiyatlar negatif olamaz", code="CFG016")
        if self.budget_cap is not None and self.budget_cap < 0:
            raise ConfigError("budget_cap negatif olamaz", code="CFG017")
        if self.sim_noise_sigma < 0:
            raise ConfigError("sim_noise_sigma negatif olamaz", code="CFG018")

    @property
    def resolved_api_base(self) -> str:
        """Ortam değişkeni tanımlıysa config'deki adresi ezer"""
        return os.environ.get(self.api_base_env) or self.api_base

    def to_dict(self) -> Dict[str, Any]:
        """JSON'a yazılabilir dict (Decimal'ler string olarak)"""
        data = asdict(self)
        data["mode"] = self.mode.value
        data["price_per_1k_prompt"] = str(self.price_per_1k_prompt)
        data["price_per_1k_completion"] = str(self.price_per_1k_completion)
        data["budget_cap"] = None if self.budget_cap is None else str(self.budget_cap)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "JudgeConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"Bilinmeyen judge ayarları: {sorted(unknown)}", code="CFG010")
        return cls(**data)


@dataclass
class AppConfig:
    """Config dosyasının tamamı: run + judge bölümleri"""
    run: RunConfig = field(default_factory=RunConfig)
    judge: JudgeConfig = field(default_factory=JudgeConfig)

    def to_dict(self) -> Dict[str, Any]:
        return {"run": self.run.to_dict(), "judge": self.judge.to_dict()}

    def with_overrides(self, run: Optional[Dict[str, Any]] = None,
                       judge: Optional[Dict[str, Any]] = None) -> "AppConfig":
        """
        None olmayan değerlerle yeni bir AppConfig döndürür

        dataclasses.replace __post_init__'i tekrar çalıştırır, böylece
        komut satırından gelen değerler de doğrulanır.
        """
        run_changes = {k: v for k, v in (run or {}).items() if v is not None}
        judge_changes = {k: v for k, v in (judge or {}).items() if v is not None}
        return AppConfig(
            run=replace(self.run, **run_changes),
            judge=replace(self.judge, **judge_changes),
        )


def _resolve_config_path(config_path: Union[str, Path]) -> Path:
    path = Path(config_path)
    if not path.is_absolute() and not path.exists():
        # Config klasöründe dene
        candidate = CONFIG_DIR / path
        if candidate.exists():
            return candidate
    return path


def load_config_from_file(config_path: Union[str, Path]) -> AppConfig:
    """
    JSON dosyasından config yükle

    Relative path önce çalışma dizininde, sonra paket içindeki config
    klasöründe aranır. Dosyada olmayan anahtarlar varsayılanı alır.

    Args:
        config_path: Config dosyası yolu

    Returns:
        AppConfig: Doğrulanmış yapılandırma

    Raises:
        ConfigError: Dosya okunamazsa veya değerler geçersizse
    """
    path = _resolve_config_path(config_path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError as e:
        raise ConfigError(f"Config dosyası bulunamadı: {path}", code="CFG019") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config dosyası JSON değil: {path} ({e})", code="CFG020") from e

    if not isinstance(data, dict):
        raise ConfigError(f"Config kökü bir obje olmalı: {path}", code="CFG020")

    try:
        run = RunConfig.from_dict(data.get("run", {}))
        judge = JudgeConfig.from_dict(data.get("judge", {}))
    except TypeError as e:
        raise ConfigError(f"Config değerleri okunamadı: {e}", code="CFG021") from e
    return AppConfig(run=run, judge=judge)


def create_default_config_file(path: Optional[Union[str, Path]] = None) -> Path:
    """
    Varsayılan config dosyası oluştur

    Args:
        path: Hedef dosya (varsayılan: paket içindeki config/config.json)

    Returns:
        Path: Yazılan dosyanın yolu
    """
    target = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8") as f:
        json.dump(AppConfig().to_dict(), f, indent=2)
        f.write("\n")
    return target


__all__ = [
    "RunConfig",
    "JudgeConfig",
    "AppConfig",
    "load_config_from_file",
    "create_default_config_file",
    "DEFAULT_CONFIG_PATH",
]
