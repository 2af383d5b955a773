#!/usr/bin/env python3
"""
Batch Evaluator - Ana Giriş Noktası

Kullanım:
    python -m batch_evaluator.main run --dataset data.jsonl --out runs/r1
    python -m batch_evaluator.main run --synth 100 --judge sim --strategy homogeneous --out runs/h
    python -m batch_evaluator.main diag runs/r1 --dataset data.jsonl
    python -m batch_evaluator.main simulate --batch-sizes 1 2 5 10 --seeds 0 1 2 --out sweep.csv
    python -m batch_evaluator.main perturb data.jsonl --out data-noisy.jsonl
    python -m batch_evaluator.main validate data.jsonl
    python -m batch_evaluator.main plot runs/r1/diag

Çıkış kodları:
    0 başarılı, 2 yapılandırma / veri seti hatası, 3 hakem hatası,
    4 batch'lerin en az yarısında ayrıştırma denemeleri tükendi, 1 diğer
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from .config import DEFAULT_CONFIG_PATH, AppConfig, create_default_config_file, load_config_from_file
from .core.enums import JudgeMode, Procedure, RepartitionBasis, ScoreFormat, Strategy
from .core.exceptions import (
    ConfigError,
    DatasetError,
    DiagnosticsError,
    EvaluatorError,
    JudgeError,
    PartitionError,
    SampleError,
    TemplateError,
)
from .dataset import Dataset, load_dataset, save_dataset, synth_dataset
from .diagnostics import SweepSpec, build_report, plot_diag, run_sweep, write_report, write_sweep_csv
from .engine import run_batch_evaluation
from .judge import ApiJudge, CostLedger, JudgeGateway, SimJudgeConfig, SimulatedJudge
from .noise import NoiseConfig, default_lexicon, load_lexicon, perturb_dataset
from .prompts import (
    GENERIC_TASK,
    PromptTemplate,
    TemplateCatalog,
    builtin_catalog,
    load_criterion_block,
    load_template_dir,
)
from .sample import Criterion

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_CONFIG = 2
EXIT_JUDGE = 3
EXIT_PARSE = 4

PARSE_EXHAUSTION_LIMIT = 0.5
SYNTH_DATASET_FILE = "dataset.jsonl"


def exit_code_for(error: BaseException) -> Tuple[int, str]:
    """Hata ailesine göre (çıkış kodu, kategori)"""
    if isinstance(error, JudgeError):
        return EXIT_JUDGE, "hakem"
    if isinstance(error, (ConfigError, TemplateError, PartitionError)):
        return EXIT_CONFIG, "yapılandırma"
    if isinstance(error, (DatasetError, SampleError)):
        return EXIT_CONFIG, "veri seti"
    if isinstance(error, DiagnosticsError):
        return EXIT_OTHER, "tanılama"
    return EXIT_OTHER, "beklenmeyen"


def infer_task(catalog: TemplateCatalog, dataset: Dataset) -> str:
    """Örnek alanları bir görev ailesinin alanlarıyla birebir eşleşiyorsa o görev, değilse generic"""
    names = set(dataset.samples[0].fields)
    for task in catalog.task_names():
        fields = catalog.tasks[task].fields
        if fields and set(fields) == names:
            return task
    return GENERIC_TASK


class EvaluatorApp:
    """Ana uygulama sınıfı"""

    def __init__(self, config: Optional[AppConfig] = None):
        self.config = config or AppConfig()
        self._logger = logging.getLogger("cli")

    # ------------------------------------------------------------------
    # run
    # ------------------------------------------------------------------

    def build_judge(self, criterion: Criterion, dataset: Dataset) -> JudgeGateway:
        judge_cfg = self.config.judge
        ledger = CostLedger(
            judge_cfg.price_per_1k_prompt,
            judge_cfg.price_per_1k_completion,
            judge_cfg.budget_cap,
        )
        if judge_cfg.mode == JudgeMode.API:
            return ApiJudge(judge_cfg, ledger)

        truth = dataset.human_scores(criterion.name)
        if len(truth) != len(dataset):
            raise ConfigError(
                f"Simüle hakem her örnek için '{criterion.name}' insan skoru ister "
                f"({len(truth)}/{len(dataset)} mevcut)",
                code="CFG031",
            )
        sim_cfg = SimJudgeConfig.from_criterion(
            criterion, truth,
            bias_alpha=judge_cfg.sim_bias_alpha,
            noise_sigma=judge_cfg.sim_noise_sigma,
            seed=self.config.run.seed,
        )
        return SimulatedJudge(sim_cfg, ledger)

    def resolve_template(self, dataset: Dataset, criterion: Criterion, task: Optional[str],
                         template_dir: Optional[str], criterion_file: Optional[str]) -> PromptTemplate:
        catalog = load_template_dir(template_dir) if template_dir else builtin_catalog()
        task = task or infer_task(catalog, dataset)
        template = catalog.template(self.config.run.procedure, criterion.format, task)
        if criterion_file:
            return template.with_criterion_block(load_criterion_block(criterion_file))
        names = [c["name"] for c in catalog.criteria.get(task, [])]
        if criterion.name in names:
            return catalog.lookup(self.config.run.procedure, criterion.format, criterion.name, task)
        return template

    def cmd_run(self, args) -> int:
        if args.dataset:
            dataset = load_dataset(args.dataset)
        elif args.synth:
            criterion = builtin_catalog().criterion(GENERIC_TASK)
            dataset = synth_dataset(args.synth, criterion, seed=self.config.run.seed)
            save_dataset(dataset, Path(args.out) / SYNTH_DATASET_FILE)
        else:
            raise ConfigError("--dataset veya --synth gerekli", code="CFG032")
        if not dataset.criteria:
            raise ConfigError(f"{dataset.name}: veri setinde kriter tanımı yok", code="CFG033")

        try:
            criterion = dataset.criterion(args.criterion)
        except KeyError as e:
            raise ConfigError(str(e), code="CFG034") from e
        if args.format:
            criterion = criterion.with_format(ScoreFormat(args.format))

        template = self.resolve_template(dataset, criterion, args.task, args.template_dir, args.criterion_file)
        judge = self.build_judge(criterion, dataset)
        run_cfg = self.config.run

        print("🚀 Batch değerlendirme başlatılıyor...")
        print(f"   Veri seti: {dataset.name} ({len(dataset)} örnek), kriter: {criterion.name}")
        print(f"   Config: rounds={run_cfg.rounds}, batch_size={run_cfg.batch_size}, "
              f"strategy={run_cfg.strategy.value}, procedure={run_cfg.procedure.value}, "
              f"judge={self.config.judge.mode.value}")

        result = run_batch_evaluation(
            dataset.samples, criterion, template, run_cfg, judge,
            out_dir=args.out, dataset_digest=dataset.digest, dataset_name=dataset.name,
        )

        ledger = result.ledger
        print("✅ Koşu tamamlandı!")
        print(f"   Turlar: {result.table.rounds_completed}, "
              f"batch/tur: {len(result.partitions[0].batches) if result.partitions else 0}")
        print(f"   Maliyet: {ledger.total_cost} (örnek başına {ledger.per_item})")
        print(f"   Çıktılar: {args.out}")
        if result.missing:
            print(f"⚠️  {len(result.missing.sample_ids)} örnek hiç skor almadı", file=sys.stderr)
        if result.exhausted_fraction >= PARSE_EXHAUSTION_LIMIT:
            print(f"❌ [ayrıştırma] Batch'lerin %{result.exhausted_fraction * 100:.0f}'inde "
                  f"denemeler tükendi", file=sys.stderr)
            return EXIT_PARSE
        return EXIT_OK

    # ------------------------------------------------------------------
    # diag / simulate / plot
    # ------------------------------------------------------------------

    def cmd_diag(self, args) -> int:
        dataset_path = args.dataset
        if dataset_path is None and (Path(args.run_dir) / SYNTH_DATASET_FILE).exists():
            dataset_path = Path(args.run_dir) / SYNTH_DATASET_FILE
        dataset = load_dataset(dataset_path) if dataset_path else None
        report = build_report(args.run_dir, dataset, args.criterion, args.bin_width)
        out = write_report(report, args.out or Path(args.run_dir) / "diag")

        print("\n📊 Tanılama Raporu:")
        if report.ensemble_correlation:
            c = report.ensemble_correlation
            print(f"   Ensemble korelasyonu: r_p={c.pearson:.4f}, r_s={c.spearman:.4f} (n={c.n})")
        print(f"   Ortalama batch bias: {report.mean_batch_bias:.4f}")
        print(f"   Entropi: {report.entropy:.3f} bit (bin={report.bin_width})")
        for point in report.decomposition:
            d = point.decomposition
            print(f"   Tur {point.round}: Err(s̄,y)={d.err_ensemble:.4f} "
                  f"Err(S,y)={d.err_mean:.4f} Var(S)={d.variance:.4f}")
        print(f"✅ Rapor yazıldı: {out}")
        return EXIT_OK

    def cmd_simulate(self, args) -> int:
        if args.sweep:
            try:
                data = json.loads(Path(args.sweep).read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"Tarama dosyası okunamadı: {e}", code="CFG035") from e
        else:
            data = {}
        axes = {
            "strategies": args.strategies,
            "batch_sizes": args.batch_sizes,
            "rounds": args.rounds_list,
            "bias_alphas": args.bias,
            "noise_sigmas": args.noise,
            "formats": args.formats,
            "seeds": args.seeds,
            "n": args.n,
        }
        data.update({k: v for k, v in axes.items() if v is not None})
        spec = SweepSpec.from_dict(data)

        print("🎬 Simülasyon taraması çalışıyor...")
        rows = run_sweep(spec)
        path = write_sweep_csv(rows, args.out)
        for row in rows:
            print(f"   {row['strategy']:>13} B={row['batch_size']:<3} N={row['rounds']:<2} "
                  f"{row['format']:<7} r_p={row['pearson']:.4f} bias={row['batch_bias']:.4f} "
                  f"H={row['entropy']:.3f}")
        print(f"✅ {len(rows)} satır yazıldı: {path}")
        return EXIT_OK

    def cmd_plot(self, args) -> int:
        written = plot_diag(args.diag_dir, args.out)
        for path in written:
            print(f"   🖼️  {path}")
        return EXIT_OK

    # ------------------------------------------------------------------
    # perturb / validate
    # ------------------------------------------------------------------

    def cmd_perturb(self, args) -> int:
        dataset = load_dataset(args.dataset)
        lexicon = load_lexicon(args.lexicon) if args.lexicon else default_lexicon()
        cfg = NoiseConfig(p_delete=args.p_delete, p_synonym=args.p_synonym,
                          lexicon=lexicon, seed=args.seed)
        noisy = perturb_dataset(dataset, cfg)
        path = save_dataset(noisy, args.out)
        print(f"✅ Gürültülü kopya yazıldı: {path} ({len(noisy)} örnek)")
        return EXIT_OK

    def cmd_validate(self, args) -> int:
        dataset = load_dataset(args.path)
        print(f"✅ {args.path}: {len(dataset)} örnek, "
              f"kriterler: {', '.join(c.name for c in dataset.criteria) or '-'}")
        print(f"   digest: {dataset.digest}")
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="batch_evaluator",
        description="Batch Evaluator - LLM hakem ile batch'li metin değerlendirme",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Örnekler:
  # Sentetik veri ve simüle hakem ile koşu
  python -m batch_evaluator.main run --synth 100 --judge sim --out runs/demo

  # Canlı API (anahtar JUDGE_API_KEY ortam değişkeninden)
  python -m batch_evaluator.main run --dataset data/topical_chat.jsonl --judge api --out runs/tc

  # Tanılama raporu (sentetik koşularda veri seti çıktı klasöründedir)
  python -m batch_evaluator.main diag runs/demo

  # Varsayılan config dosyası oluştur
  python -m batch_evaluator.main --create-config
        """,
    )
    parser.add_argument('--config', '-c', type=str,
                        help='Config dosyası yolu (JSON). Varsayılan: config/config.json')
    parser.add_argument('--create-config', action='store_true',
                        help='Varsayılan config.json dosyası oluştur ve çık')
    parser.add_argument('--log-level', type=str,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='Log seviyesi (varsayılan: INFO)')

    sub = parser.add_subparsers(dest="command")

    run = sub.add_parser("run", help="Batch'li değerlendirme koşusu")
    source = run.add_mutually_exclusive_group()
    source.add_argument('--dataset', type=str, help='Kanonik .jsonl veri seti')
    source.add_argument('--synth', type=int, help='n örnekli sentetik veri seti üret')
    run.add_argument('--criterion', type=str, help='Kriter adı (varsayılan: veri setindeki ilk kriter)')
    run.add_argument('--task', type=str, help='Görev ailesi (varsayılan: alanlardan çıkarılır)')
    run.add_argument('--format', choices=[f.value for f in ScoreFormat], help='Skor formatı')
    run.add_argument('--template-dir', type=str, help='Şablon klasörü (yerleşik kataloğun üstüne)')
    run.add_argument('--criterion-file', type=str, help='Kriter bloğu metin dosyası')
    run.add_argument('--rounds', type=int, help='Tur sayısı N (varsayılan: 5)')
    run.add_argument('--batch-size', type=int, help='Batch boyutu B (varsayılan: 10)')
    run.add_argument('--strategy', choices=[s.value for s in Strategy], help='Batch stratejisi')
    run.add_argument('--procedure', choices=[p.value for p in Procedure], help='Değerlendirme prosedürü')
    run.add_argument('--repartition-on', choices=[r.value for r in RepartitionBasis],
                     help='Yeniden bölüm skoru (varsayılan: running_mean)')
    run.add_argument('--temperature', type=float, help='Sıcaklık (varsayılan: 0.2)')
    run.add_argument('--seed', type=int, help='Seed')
    run.add_argument('--max-parse-retries', type=int, help='Ayrıştırma tekrar sayısı (varsayılan: 3)')
    run.add_argument('--max-in-flight', type=int, help='Eşzamanlı batch sayısı (varsayılan: 4)')
    run.add_argument('--judge', choices=[m.value for m in JudgeMode], help='Hakem modu')
    run.add_argument('--model', type=str, help='Canlı hakem modeli')
    run.add_argument('--budget-cap', type=str, help='Maliyet limiti')
    run.add_argument('--sim-bias', type=float, help='Simüle hakem bias gücü')
    run.add_argument('--sim-noise', type=float, help='Simüle hakem gürültü std')
    run.add_argument('--out', type=str, required=True, help='Çıktı klasörü')

    diag = sub.add_parser("diag", help="Tamamlanmış koşunun tanılama raporu")
    diag.add_argument('run_dir', type=str)
    diag.add_argument('--dataset', type=str,
                      help='İnsan skorları için veri seti (varsayılan: <run_dir>/dataset.jsonl varsa)')
    diag.add_argument('--criterion', type=str, help='İnsan skoru kriteri (varsayılan: koşunun kriteri)')
    diag.add_argument('--bin-width', type=float, help='Entropi bin genişliği')
    diag.add_argument('--out', type=str, help='Rapor klasörü (varsayılan: <run_dir>/diag)')

    sim = sub.add_parser("simulate", help="Simüle hakem ile parametre taraması")
    sim.add_argument('--sweep', type=str, help='Tarama JSON dosyası')
    sim.add_argument('--strategies', nargs='+', choices=[s.value for s in Strategy])
    sim.add_argument('--batch-sizes', nargs='+', type=int)
    sim.add_argument('--rounds', dest='rounds_list', nargs='+', type=int)
    sim.add_argument('--bias', nargs='+', type=float)
    sim.add_argument('--noise', nargs='+', type=float)
    sim.add_argument('--formats', nargs='+', choices=[f.value for f in ScoreFormat])
    sim.add_argument('--seeds', nargs='+', type=int)
    sim.add_argument('--n', type=int, help='Sentetik örnek sayısı (varsayılan: 100)')
    sim.add_argument('--out', type=str, default='sweep.csv', help='CSV çıktı dosyası')

    pert = sub.add_parser("perturb", help="Veri setinin gürültülü kopyası")
    pert.add_argument('dataset', type=str)
    pert.add_argument('--out', type=str, required=True)
    pert.add_argument('--p-delete', type=float, default=0.05)
    pert.add_argument('--p-synonym', type=float, default=0.05)
    pert.add_argument('--lexicon', type=str, help='word<TAB>syn1,syn2 sözlük dosyası')
    pert.add_argument('--seed', type=int, default=0)

    val = sub.add_parser("validate", help="Veri setini doğrula")
    val.add_argument('path', type=str)

    plot = sub.add_parser("plot", help="diag CSV'lerinden SVG grafikler")
    plot.add_argument('diag_dir', type=str)
    plot.add_argument('--out', type=str, help='Grafik klasörü (varsayılan: diag_dir)')
    return parser


def resolve_config(args) -> AppConfig:
    """
    Öncelik: komut satırı > config dosyası > varsayılanlar
    """
    if args.config:
        config = load_config_from_file(args.config)
    elif DEFAULT_CONFIG_PATH.exists():
        config = load_config_from_file(DEFAULT_CONFIG_PATH)
    else:
        config = AppConfig()

    run_overrides = {"log_level": args.log_level}
    judge_overrides = {}
    if args.command == "run":
        run_overrides.update({
            "rounds": args.rounds,
            "batch_size": args.batch_size,
            "strategy": args.strategy,
            "procedure": args.procedure,
            "repartition_on": args.repartition_on,
            "temperature": args.temperature,
            "seed": args.seed,
            "max_parse_retries": args.max_parse_retries,
            "max_in_flight": args.max_in_flight,
        })
        judge_overrides.update({
            "mode": args.judge,
            "model": args.model,
            "budget_cap": args.budget_cap,
            "sim_bias_alpha": args.sim_bias,
            "sim_noise_sigma": args.sim_noise,
        })
    return config.with_overrides(run=run_overrides, judge=judge_overrides)


def main(argv: Optional[List[str]] = None) -> int:
    """Ana fonksiyon"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.create_config:
        path = create_default_config_file()
        print(f"✅ Varsayılan config dosyası oluşturuldu: {path}")
        return EXIT_OK
    if not args.command:
        parser.print_help()
        return EXIT_CONFIG

    try:
        config = resolve_config(args)
        logging.basicConfig(level=getattr(logging, config.run.log_level))
        app = EvaluatorApp(config)
        handler = {
            "run": app.cmd_run,
            "diag": app.cmd_diag,
            "simulate": app.cmd_simulate,
            "perturb": app.cmd_perturb,
            "validate": app.cmd_validate,
            "plot": app.cmd_plot,
        }[args.command]
        return handler(args)
    except EvaluatorError as e:
        code, category = exit_code_for(e)
        print(f"❌ [{category}] {e}", file=sys.stderr)
        return code
    except Exception as e:
        logging.getLogger("cli").exception("Beklenmeyen hata")
        print(f"❌ [beklenmeyen] {e}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
