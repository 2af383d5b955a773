"""
Girdi Bozma (Perturbation) Motoru

Dayanıklılık deneyleri için metin gürültüsü: boşluk ile token'lara ayrılan
metinde her token p_delete olasılıkla silinir, kalan ve sözlükte karşılığı
olan her token p_synonym olasılıkla rastgele bir eş anlamlı ile değiştirilir.
En az bir token her zaman kalır.

Kullanım:
    cfg = NoiseConfig(p_delete=0.05, p_synonym=0.05, lexicon=default_lexicon(), seed=7)
    noisy = perturb("the story was good", cfg)
    noisy_dataset = perturb_dataset(dataset, cfg)
"""

import logging
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

import numpy as np

from ..core.exceptions import ConfigError, KeyMismatch
from ..dataset.dataset import Dataset
from ..metrics.correlation import correlation_report
from ..sample.sample import Sample, stable_id_key

logger = logging.getLogger("noise")

LEXICON_PATH = Path(__file__).parent / "lexicon.tsv"

# Baştaki ve sondaki noktalama sözlük aramasına katılmaz
_TOKEN_EDGES = re.compile(r"^(\W*)(.*?)(\W*)$", re.DOTALL)


@dataclass
class NoiseConfig:
    """
    Gürültü ayarları

    - p_delete: Token silme olasılığı
    - p_synonym: Eş anlamlı ile değiştirme olasılığı
    - lexicon: küçük harf kelime -> eş anlamlılar
    """
    p_delete: float = 0.05
    p_synonym: float = 0.05
    lexicon: Dict[str, List[str]] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        for name in ("p_delete", "p_synonym"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} 0 ile 1 arasında olmalı: {value}", code="CFG027")
        for word, synonyms in self.lexicon.items():
            if not synonyms:
                raise ConfigError(f"Sözlükte '{word}' için eş anlamlı yok", code="CFG028")
        if self.seed < 0:
            raise ConfigError("seed negatif olamaz", code="CFG005")


def parse_lexicon(text: str) -> Dict[str, List[str]]:
    """
    "kelime<TAB>es1,es2,..." satırları; # ile başlayan ve boş satırlar atlanır

    Raises:
        ConfigError: Satır biçimi bozuksa
    """
    lexicon: Dict[str, List[str]] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        word, sep, rest = line.partition("\t")
        synonyms = [s.strip() for s in rest.split(",") if s.strip()]
        if not sep or not word.strip() or not synonyms:
            raise ConfigError(f"Sözlük satırı {number} bozuk: {line!r}", code="CFG029")
        lexicon[word.strip().lower()] = synonyms
    return lexicon


def load_lexicon(path: Union[str, Path]) -> Dict[str, List[str]]:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Sözlük dosyası bulunamadı: {path}", code="CFG030")
    return parse_lexicon(path.read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def _bundled_lexicon() -> Tuple[Tuple[str, Tuple[str, ...]], ...]:
    return tuple((w, tuple(s)) for w, s in load_lexicon(LEXICON_PATH).items())


def default_lexicon() -> Dict[str, List[str]]:
    """Paketle gelen küçük sözlüğün kopyası"""
    return {w: list(s) for w, s in _bundled_lexicon()}


def _match_case(original: str, replacement: str) -> str:
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def _split_edges(token: str) -> Tuple[str, str, str]:
    match = _TOKEN_EDGES.match(token)
    if match is None:
        return "", token, ""
    lead, word, trail = match.groups()
    return lead, word, trail


def perturb(text: str, cfg: NoiseConfig, rng: Optional[np.random.Generator] = None) -> str:
    """
    Args:
        text: Girdi metni
        cfg: Gürültü ayarları
        rng: Verilmezse cfg.seed ile oluşturulur

    Returns:
        str: Token'ları tek boşlukla birleştirilmiş bozulmuş metin
    """
    tokens = text.split()
    if not tokens:
        return text
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)

    keep = rng.random(len(tokens)) >= cfg.p_delete
    if not keep.any():
        keep[rng.integers(len(tokens))] = True
    substitute = rng.random(len(tokens)) < cfg.p_synonym

    result = []
    changed = False
    for token, kept, swap in zip(tokens, keep, substitute):
        if not kept:
            changed = True
            continue
        lead, word, trail = _split_edges(token)
        synonyms = cfg.lexicon.get(word.lower())
        if swap and synonyms:
            token = lead + _match_case(word, synonyms[int(rng.integers(len(synonyms)))]) + trail
            changed = True
        result.append(token)
    # Değişiklik yoksa orijinal boşluklar korunur
    return " ".join(result) if changed else text


def perturb_sample(sample: Sample, cfg: NoiseConfig) -> Sample:
    """Örnek başına seed: (cfg.seed, id anahtarı); alanlar sırayla bozulur"""
    rng = np.random.default_rng([cfg.seed, stable_id_key(sample.id)])
    fields = {name: perturb(text, cfg, rng) for name, text in sample.fields.items()}
    return replace(sample, fields=fields)


def perturb_dataset(dataset: Dataset, cfg: NoiseConfig) -> Dataset:
    """Bozulmuş kopya; id'ler ve insan skorları aynı kalır"""
    samples = [perturb_sample(s, cfg) for s in dataset.samples]
    logger.info(
        f"{dataset.name}: {len(samples)} örnek bozuldu "
        f"(p_delete={cfg.p_delete}, p_synonym={cfg.p_synonym}, seed={cfg.seed})"
    )
    return Dataset(
        name=f"{dataset.name}-noisy",
        samples=samples,
        criteria=list(dataset.criteria),
        provenance=(
            f"{dataset.provenance}; perturb(p_delete={cfg.p_delete}, "
            f"p_synonym={cfg.p_synonym}, seed={cfg.seed})"
        ).lstrip("; "),
    )


def robustness_delta(clean: Mapping[str, float], noisy: Mapping[str, float],
                     human: Mapping[str, float]) -> Tuple[float, float]:
    """
    Gürültü öncesi ve sonrası korelasyon farkı

    Returns:
        (Δr_p, Δr_s): korelasyon(clean, human) - korelasyon(noisy, human)

    Raises:
        KeyMismatch: clean ve noisy id'leri farklıysa veya insan skoru eksikse
    """
    if set(clean) != set(noisy):
        raise KeyMismatch("Temiz ve gürültülü koşuların id'leri farklı")
    missing = set(clean) - set(human)
    if missing:
        raise KeyMismatch(f"{len(missing)} id için insan skoru yok")
    ids = sorted(clean)
    y = [human[i] for i in ids]
    before = correlation_report([clean[i] for i in ids], y)
    after = correlation_report([noisy[i] for i in ids], y)
    return before.pearson - after.pearson, before.spearman - after.spearman
