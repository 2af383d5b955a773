"""
Yanıt Ayrıştırıcı

Hakem yanıtından örnek başına skorları çıkarır.

İki / üç aşamalı prosedür:
    Son "Float Scores: [...]" (tam sayı formatında "Scores: [...]") bloğu okunur.
    Girdiler virgül, noktalı virgül veya satır sonuyla ayrılır; her girdi
    "Sample3:2.4", "3: 2.4" veya "Sample 3 : 2.4." biçiminde olabilir.
Tek aşamalı prosedür:
    Her "Score of SampleK:[v]" satırı K. örneğin skorudur.

Kontrol sırası: tekrar eden numara, sayı / numara kümesi, tam sayılık, aralık.
Aralığın en fazla clamp_tolerance dışındaki skorlar sınıra çekilir ve
clamped kümesine yazılır; daha uzaktakiler OutOfRange ile reddedilir.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

from ..core.enums import ParseStatus, Procedure
from ..core.exceptions import (
    CountMismatch,
    DuplicateIndex,
    MarkerNotFound,
    NonIntegerScore,
    OutOfRange,
)
from ..sample.criterion import Criterion

DEFAULT_CLAMP_TOLERANCE = 0.05

_NUMBER = r"[-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"
_BLOCK_ANCHOR = re.compile(r"(?:Float\s+)?Scores\s*:\s*\[", re.IGNORECASE)
_ENTRY = re.compile(
    rf"^\s*(?:Sample\s*)?(\d+)\s*[:=]\s*\[?\s*({_NUMBER})\s*\]?\s*[.!]*\s*$", re.IGNORECASE
)
_BARE = re.compile(rf"^\s*({_NUMBER})\s*[.!]*\s*$")
_ONE_STAGE = re.compile(
    rf"Score\s+of\s+Sample\s*(\d+)\s*:\s*\[?\s*({_NUMBER})\s*\]?", re.IGNORECASE
)
_SEPARATORS = re.compile(r"[,;\n]")


@dataclass
class ParsedScores:
    """
    Ayrıştırma sonucu

    - scores: 1 tabanlı örnek numarası -> skor
    - raw_span: Eşleşen skor bloğunun yanıt içindeki (başlangıç, bitiş) ofsetleri
    - clamped: Aralığa çekilen örnek numaraları
    """
    scores: Dict[int, float]
    raw_span: Tuple[int, int]
    clamped: Set[int] = field(default_factory=set)

    @property
    def status(self) -> ParseStatus:
        return ParseStatus.CLAMPED if self.clamped else ParseStatus.OK

    def ordered(self) -> List[float]:
        """Sample1..SampleN sırasıyla skorlar"""
        return [self.scores[k] for k in sorted(self.scores)]


def _read_block(response: str) -> Tuple[List[Tuple[int, float]], Tuple[int, int]]:
    matches = list(_BLOCK_ANCHOR.finditer(response))
    if not matches:
        raise MarkerNotFound("Float Scores: [")
    last = matches[-1]
    close = response.find("]", last.end())
    end = len(response) if close == -1 else close
    content = response[last.end():end]
    span = (last.start(), end + 1 if close != -1 else end)

    indexed: List[Tuple[int, float]] = []
    bare: List[float] = []
    for entry in _SEPARATORS.split(content):
        if not entry.strip():
            continue
        m = _ENTRY.match(entry)
        if m:
            indexed.append((int(m.group(1)), float(m.group(2))))
            continue
        b = _BARE.match(entry)
        if b:
            bare.append(float(b.group(1)))

    # Numarasız liste ("[2.4, 1.8]"): sıra numara yerine geçer
    if not indexed and bare:
        indexed = [(k, v) for k, v in enumerate(bare, start=1)]
    return indexed, span


def _read_one_stage(response: str) -> Tuple[List[Tuple[int, float]], Tuple[int, int]]:
    matches = list(_ONE_STAGE.finditer(response))
    if not matches:
        raise MarkerNotFound("Score of Sample")
    pairs = [(int(m.group(1)), float(m.group(2))) for m in matches]
    return pairs, (matches[0].start(), matches[-1].end())


def parse_batch_scores(
    response: str,
    n: int,
    criterion: Criterion,
    procedure: Procedure,
    clamp_tolerance: float = DEFAULT_CLAMP_TOLERANCE,
) -> ParsedScores:
    """
    Yanıttan n skoru çıkarır

    Args:
        response: Hakem yanıtı
        n: Batch'teki örnek sayısı
        criterion: Aralık ve format için kriter
        procedure: Yanıtın prosedürü
        clamp_tolerance: Aralık dışında kabul edilen sapma

    Returns:
        ParsedScores: Tam olarak {1..n} numaralı skorlar

    Raises:
        MarkerNotFound, DuplicateIndex, CountMismatch, NonIntegerScore, OutOfRange
    """
    if n < 1:
        raise ValueError("n en az 1 olmalı")

    if procedure == Procedure.ONE_STAGE:
        pairs, span = _read_one_stage(response)
    else:
        pairs, span = _read_block(response)

    scores: Dict[int, float] = {}
    for index, value in pairs:
        if index in scores:
            raise DuplicateIndex(index)
        scores[index] = value

    expected = set(range(1, n + 1))
    if set(scores) != expected:
        raise CountMismatch(
            expected=n,
            found=len(scores),
            missing=sorted(expected - set(scores)),
            unexpected=sorted(set(scores) - expected),
        )

    clamped: Set[int] = set()
    for index in range(1, n + 1):
        value = scores[index]
        if criterion.is_integer and not float(value).is_integer():
            raise NonIntegerScore(index, value)
        if value < criterion.score_min - clamp_tolerance or value > criterion.score_max + clamp_tolerance:
            raise OutOfRange(index, value)
        if value < criterion.score_min:
            scores[index] = criterion.score_min
            clamped.add(index)
        elif value > criterion.score_max:
            scores[index] = criterion.score_max
            clamped.add(index)

    return ParsedScores(scores=scores, raw_span=span, clamped=clamped)

