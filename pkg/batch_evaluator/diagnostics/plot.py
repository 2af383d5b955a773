"""
Grafikler (plot)

diag klasöründeki CSV dosyalarından SVG üretir. matplotlib isteğe bağlıdır;
yalnızca bu modül çağrıldığında import edilir.
"""

import csv
import logging
from pathlib import Path
from typing import Dict, List, Union

from ..core.exceptions import DiagnosticsError, MissingArtifacts
from .report import BATCH_BIAS_CSV, DECOMPOSITION_CSV, HISTOGRAM_CSV

logger = logging.getLogger("diag")


def _read_csv(path: Path) -> List[Dict[str, str]]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


def _pyplot():
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError as e:
        raise DiagnosticsError("plot için matplotlib gerekli", code="DGN003") from e
    return plt


def plot_diag(diag_dir: Union[str, Path], out_dir: Union[str, Path, None] = None) -> List[Path]:
    """
    histogram.svg, decomposition.svg ve batch_bias.svg üretir

    Raises:
        MissingArtifacts: CSV dosyaları yoksa
        DiagnosticsError: matplotlib yüklü değilse
    """
    diag_dir = Path(diag_dir)
    out = Path(out_dir) if out_dir else diag_dir
    names = [HISTOGRAM_CSV, DECOMPOSITION_CSV, BATCH_BIAS_CSV]
    missing = [n for n in names if not (diag_dir / n).exists()]
    if missing:
        raise MissingArtifacts(missing)
    plt = _pyplot()
    out.mkdir(parents=True, exist_ok=True)
    written = []

    rows = _read_csv(diag_dir / HISTOGRAM_CSV)
    fig, ax = plt.subplots(figsize=(6, 4))
    centers = [float(r["bin_center"]) for r in rows]
    counts = [int(r["count"]) for r in rows]
    width = min((b - a for a, b in zip(centers, centers[1:])), default=1.0)
    ax.bar(centers, counts, width=width * 0.9)
    ax.set_xlabel("score")
    ax.set_ylabel("count")
    ax.set_title("Score distribution")
    written.append(_save(fig, out / "histogram.svg", plt))

    rows = _read_csv(diag_dir / DECOMPOSITION_CSV)
    fig, ax = plt.subplots(figsize=(6, 4))
    rounds = [int(r["round"]) for r in rows]
    for key, label in (("err_ensemble", "Err(s̄,y)"), ("err_mean", "Err(S,y)"), ("variance", "Var(S)")):
        ax.plot(rounds, [float(r[key]) for r in rows], marker="o", label=label)
    ax.set_xlabel("rounds")
    ax.legend()
    ax.set_title("Ensemble decomposition")
    written.append(_save(fig, out / "decomposition.svg", plt))

    rows = _read_csv(diag_dir / BATCH_BIAS_CSV)
    by_round: Dict[int, List[float]] = {}
    for r in rows:
        by_round.setdefault(int(r["round"]), []).append(float(r["bias"]))
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = sorted(by_round)
    ax.plot([x + 1 for x in xs], [sum(by_round[x]) / len(by_round[x]) for x in xs], marker="o")
    ax.set_xlabel("round")
    ax.set_ylabel("mean batch bias")
    ax.set_title("Batch bias")
    written.append(_save(fig, out / "batch_bias.svg", plt))
    return written


def _save(fig, path: Path, plt) -> Path:
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
    logger.info(f"{path.name} yazıldı")
    return path
