#!/usr/bin/env python3
"""
Gürültü Sınırı Benchmark'ı

Skorlara ±λ bozulma eklendiğinde Spearman korelasyonunun Monte-Carlo
ortalamasını analitik üst sınırla karşılaştırır. Düzgün ve tepeli (beta)
skor dağılımları için ölçüm ile sınır yan yana yazdırılır.

Çalıştırma:
    python benchmarks/noise_bound.py
    python benchmarks/noise_bound.py --n 50 --trials 2000
"""

import argparse
import sys
import time
from pathlib import Path

# Proje root'unu path'e ekle
sys.path.insert(0, str(Path(__file__).parent.parent))

from batch_evaluator.metrics import simulate_rank_robustness

LAMBDAS = [0.001, 0.005, 0.01, 0.02, 0.05]


def main():
    parser = argparse.ArgumentParser(description="Spearman gürültü sınırı benchmark'ı")
    parser.add_argument("--n", type=int, default=100)
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print("=" * 60)
    print(f"Spearman Gürültü Sınırı (n={args.n}, trials={args.trials})")
    print("=" * 60)
    print(f"{'dağılım':>8} {'λ':>7} {'ölçülen':>10} {'sınır':>10} {'fark':>10}")

    start = time.time()
    for distribution in ("uniform", "beta"):
        for lam in LAMBDAS:
            report = simulate_rank_robustness(args.n, lam, args.trials, distribution, args.seed)
            print(f"{distribution:>8} {lam:>7.3f} {report.mean_spearman:>10.5f} "
                  f"{report.bound:>10.5f} {report.gap:>10.5f}")
    print(f"\n⏱️  Toplam süre: {time.time() - start:.1f} s")


if __name__ == "__main__":
    main()
