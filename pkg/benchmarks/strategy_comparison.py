#!/usr/bin/env python3
"""
Strateji Karşılaştırma Benchmark'ı

Simüle hakem ile random / homogeneous / heterogeneous / fixed stratejilerini
aynı seed'ler üzerinde çalıştırır; ortalama metrikleri ve seed bazında
sıralama tutarlılığını yazdırır.

Çalıştırma:
    python benchmarks/strategy_comparison.py
    python benchmarks/strategy_comparison.py --seeds 5 --n 200 --csv out/strategies.csv
"""

import argparse
import csv
import statistics
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List

# Proje root'unu path'e ekle
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np

from batch_evaluator.core.enums import ScoreFormat, Strategy
from batch_evaluator.diagnostics import CellResult, run_cell

METRICS = ["pearson", "spearman", "batch_bias", "entropy", "err_ensemble", "err_mean", "variance"]


def context_offset(cell: CellResult) -> float:
    """İlk tur sonrası batch'lerin gerçek kalite ortalamasının genel ortalamadan uzaklığı"""
    global_mean = float(np.mean(list(cell.truth.values())))
    offsets = [
        abs(float(np.mean([cell.truth[i] for i in batch])) - global_mean)
        for partition in cell.result.partitions[1:]
        for batch in partition.batches
    ]
    return float(np.mean(offsets)) if offsets else float("nan")


def run_comparison(seeds: int, n: int, batch_size: int, rounds: int,
                   bias_alpha: float, noise_sigma: float) -> Dict[int, Dict[Strategy, CellResult]]:
    """
    Her seed için tüm stratejileri çalıştırır

    Returns:
        Dict: seed -> strateji -> CellResult
    """
    results: Dict[int, Dict[Strategy, CellResult]] = {}
    for seed in range(seeds):
        results[seed] = {
            strategy: run_cell(strategy, batch_size, rounds, bias_alpha, noise_sigma,
                               ScoreFormat.DECIMAL, seed=seed, n=n)
            for strategy in Strategy
        }
        print(f"   seed {seed} tamamlandı")
    return results


def print_summary(results: Dict[int, Dict[Strategy, CellResult]]) -> List[Dict[str, object]]:
    """Strateji başına seed ortalamaları"""
    rows = []
    print(f"\n{'strateji':>14} " + " ".join(f"{m:>12}" for m in METRICS + ["context"]))
    for strategy in Strategy:
        cells = [by_strategy[strategy] for by_strategy in results.values()]
        row: Dict[str, object] = {"strategy": strategy.value}
        for metric in METRICS:
            row[metric] = statistics.fmean(getattr(c, metric) for c in cells)
        row["context"] = statistics.fmean(context_offset(c) for c in cells)
        rows.append(row)
        print(f"{strategy.value:>14} " + " ".join(f"{row[m]:>12.4f}" for m in METRICS + ["context"]))
    return rows


def print_orderings(results: Dict[int, Dict[Strategy, CellResult]]) -> None:
    """Seed bazında sıralama tutarlılığı"""
    het, rnd, hom, fix = Strategy.HETEROGENEOUS, Strategy.RANDOM, Strategy.HOMOGENEOUS, Strategy.FIXED
    checks: Dict[str, Callable[[Dict[Strategy, CellResult]], bool]] = {
        "context: het < random < hom": lambda s: context_offset(s[het]) < context_offset(s[rnd]) < context_offset(s[hom]),
        "batch bias: het < random": lambda s: s[het].batch_bias < s[rnd].batch_bias,
        "batch bias: hom < random": lambda s: s[hom].batch_bias < s[rnd].batch_bias,
        "pearson: het > hom": lambda s: s[het].pearson > s[hom].pearson,
        "pearson: het > random": lambda s: s[het].pearson > s[rnd].pearson,
        "Var(S): het > fixed": lambda s: s[het].variance > s[fix].variance,
    }
    print("\n🔎 Seed bazında sıralamalar:")
    for label, check in checks.items():
        wins = sum(1 for by_strategy in results.values() if check(by_strategy))
        print(f"   {label:<30} {wins}/{len(results)}")


def write_csv(rows: List[Dict[str, object]], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=["strategy"] + METRICS + ["context"])
        writer.writeheader()
        writer.writerows(rows)
    print(f"\n💾 Sonuçlar yazıldı: {path}")


def main():
    parser = argparse.ArgumentParser(description="Strateji karşılaştırma benchmark'ı")
    parser.add_argument("--seeds", type=int, default=20)
    parser.add_argument("--n", type=int, default=100)
    parser.add_argument("--batch-size", type=int, default=10)
    parser.add_argument("--rounds", type=int, default=5)
    parser.add_argument("--bias", type=float, default=0.5)
    parser.add_argument("--noise", type=float, default=0.2)
    parser.add_argument("--csv", type=str, help="Özet CSV dosyası")
    args = parser.parse_args()

    print("=" * 60)
    print("Strateji Karşılaştırma")
    print("=" * 60)
    print(f"n={args.n}, B={args.batch_size}, N={args.rounds}, "
          f"bias={args.bias}, noise={args.noise}, seeds={args.seeds}")

    start = time.time()
    results = run_comparison(args.seeds, args.n, args.batch_size, args.rounds, args.bias, args.noise)
    rows = print_summary(results)
    print_orderings(results)
    print(f"\n⏱️  Toplam süre: {time.time() - start:.1f} s")
    if args.csv:
        write_csv(rows, Path(args.csv))


if __name__ == "__main__":
    main()
