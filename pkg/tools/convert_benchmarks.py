#!/usr/bin/env python3
"""
Benchmark Dönüştürücü

Dağıtılan ham benchmark dosyalarını kanonik veri seti formatına çevirir.
İnsan skoru, anotatör skorlarının ortalamasıdır.

Desteklenen formatlar:
    topical_chat  USR Topical-Chat JSON: [{"context", "responses": [{"response", "Maintains Context": [..]}]}]
    fed           FED JSON: [{"context", "response"?, "annotations": {"Coherent": [0..2]}}]  (0-2 -> 1-3)
    hanna         HANNA CSV: Story ID, Prompt, Story, Coherence (satır başına bir anotatör)
    qags          QAGS JSONL: {"article", "summary_sentences": [{"sentence", "responses": [{"response": "yes"|"no"}]}]}
                  (evet oranı p -> 1 + 2p)

Kullanım:
    python tools/convert_benchmarks.py topical_chat tc_usr_data.json --out data/topical_chat.jsonl
    python tools/convert_benchmarks.py hanna hanna_stories_annotations.csv --out data/hanna.jsonl
"""

import argparse
import csv
import json
import logging
import statistics
import sys
from collections import OrderedDict
from pathlib import Path
from typing import Callable, Dict, List, Optional

# Proje root'unu path'e ekle
sys.path.insert(0, str(Path(__file__).parent.parent))

from batch_evaluator.core.exceptions import DatasetError, EvaluatorError
from batch_evaluator.dataset import Dataset, save_dataset, validate_dataset
from batch_evaluator.prompts import builtin_catalog
from batch_evaluator.sample import Criterion, Sample

logger = logging.getLogger("convert")

# Ham anahtar -> kanonik kriter adı
TOPICAL_CHAT_KEY = "Maintains Context"
FED_KEY = "Coherent"
HANNA_KEY = "Coherence"


def _criterion(task: str) -> Criterion:
    return builtin_catalog().criterion(task)


def _mean(values: List[float]) -> Optional[float]:
    values = [float(v) for v in values if v is not None]
    return statistics.fmean(values) if values else None


def _read_json(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise DatasetError(f"{path} okunamadı: {e}", code="DST003") from e


def convert_topical_chat(path: Path) -> Dataset:
    criterion = _criterion("topical_chat")
    samples = []
    for c, entry in enumerate(_read_json(path)):
        for r, response in enumerate(entry.get("responses", [])):
            score = _mean(response.get(TOPICAL_CHAT_KEY, []))
            samples.append(Sample(
                id=f"tc-{c:03d}-{r}",
                fields={"Conversation": entry["context"].strip(), "Response": response["response"].strip()},
                human_scores={criterion.name: score} if score is not None else None,
            ))
    return Dataset(name="topical_chat", samples=samples, criteria=[criterion],
                   provenance=f"USR Topical-Chat ({path.name}), {TOPICAL_CHAT_KEY}")


def convert_fed(path: Path) -> Dataset:
    """Yalnızca diyalog düzeyi (response alanı olmayan) kayıtlar alınır"""
    criterion = _criterion("fed")
    samples = []
    skipped = 0
    for k, entry in enumerate(_read_json(path)):
        if entry.get("response"):
            skipped += 1
            continue
        score = _mean(entry.get("annotations", {}).get(FED_KEY, []))
        samples.append(Sample(
            id=f"fed-{k:04d}",
            fields={"Conversation": entry["context"].strip()},
            human_scores={criterion.name: score + 1.0} if score is not None else None,
        ))
    logger.info(f"FED: {skipped} tur düzeyi kayıt atlandı")
    return Dataset(name="fed", samples=samples, criteria=[criterion],
                   provenance=f"FED dialog-level ({path.name}), {FED_KEY} + 1")


def convert_hanna(path: Path) -> Dataset:
    criterion = _criterion("hanna")
    stories: "OrderedDict[str, Dict[str, object]]" = OrderedDict()
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            for row in csv.DictReader(f):
                story = stories.setdefault(row["Story ID"], {
                    "prompt": row["Prompt"].strip(),
                    "story": row["Story"].strip(),
                    "scores": [],
                })
                story["scores"].append(float(row[HANNA_KEY]))
    except (OSError, KeyError, ValueError) as e:
        raise DatasetError(f"{path} okunamadı: {e}", code="DST003") from e

    samples = [
        Sample(
            id=f"hanna-{story_id}",
            fields={"Prompt": story["prompt"], "Story": story["story"]},
            human_scores={criterion.name: _mean(story["scores"])},
        )
        for story_id, story in stories.items()
    ]
    return Dataset(name="hanna", samples=samples, criteria=[criterion],
                   provenance=f"HANNA ({path.name}), {HANNA_KEY}")


def convert_qags(path: Path) -> Dataset:
    criterion = _criterion("qags")
    samples = []
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise DatasetError(f"{path} okunamadı: {e}", code="DST003") from e
    for a, line in enumerate(raw for raw in lines if raw.strip()):
        entry = json.loads(line)
        for s, sentence in enumerate(entry.get("summary_sentences", [])):
            votes = [r["response"].strip().lower() == "yes" for r in sentence.get("responses", [])]
            score = 1.0 + 2.0 * sum(votes) / len(votes) if votes else None
            samples.append(Sample(
                id=f"qags-{a:04d}-{s}",
                fields={"Article": entry["article"].strip(), "Sentence": sentence["sentence"].strip()},
                human_scores={criterion.name: score} if score is not None else None,
            ))
    return Dataset(name=path.stem, samples=samples, criteria=[criterion],
                   provenance=f"QAGS ({path.name}), 1 + 2 * yes oranı")


CONVERTERS: Dict[str, Callable[[Path], Dataset]] = {
    "topical_chat": convert_topical_chat,
    "fed": convert_fed,
    "hanna": convert_hanna,
    "qags": convert_qags,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Ham benchmark dosyasını kanonik formata çevirir")
    parser.add_argument("format", choices=sorted(CONVERTERS))
    parser.add_argument("source", type=str, help="Ham benchmark dosyası")
    parser.add_argument("--out", type=str, required=True, help="Kanonik .jsonl çıktı")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO)

    try:
        dataset = CONVERTERS[args.format](Path(args.source))
        validate_dataset(dataset)
        path = save_dataset(dataset, args.out)
    except EvaluatorError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2
    scored = len(dataset.human_scores(dataset.criteria[0].name))
    print(f"✅ {path}: {len(dataset)} örnek ({scored} insan skorlu)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
