"""
Prompt Şablonları

Batch prompt'ları, metin dosyası olarak saklanan şablonlardan üretilir.

Şablon dosyaları (templates/ klasörü):
    {procedure}__{format}.txt          Prosedür + format iskeleti
    {task}__{procedure}__{format}.txt  Göreve özel tam şablon (iskeleti ezer)
    tasks.json                         Görev ailesi cümleleri ve zorunlu alanlar
    criteria.json                      Görev ailesine göre kriter tanımları

Yer tutucular:
    {{number}}       Batch'teki örnek sayısı
    {{Data}}         Örnek blokları ("Sample k:" + alanlar)
    {{Criterion}}    Kriter bloğu (tanım + anchor'lar), dosyadan değiştirilebilir
    {{Metric}}       Kriter adı (son satır "- Coherence:")
    {{Intro}}, {{Task}}, {{DataHeading}}  Görev ailesi cümleleri (katalogda doldurulur)

Kullanım:
    template = lookup(Procedure.TWO_STAGE, ScoreFormat.DECIMAL, "Coherence", task="topical_chat")
    prompt = render(template, samples, criterion)
"""

import hashlib
import json
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..core.enums import Procedure, ScoreFormat
from ..core.exceptions import EmptyBatch, FieldMissing, TemplateError, TemplateNotFound
from ..sample.criterion import Criterion
from ..sample.sample import Sample

TEMPLATE_DIR = Path(__file__).parent / "templates"
DEFAULT_TASK = "topical_chat"
GENERIC_TASK = "generic"

NUMBER = "{{number}}"
DATA = "{{Data}}"
CRITERION = "{{Criterion}}"
METRIC = "{{Metric}}"

_SAMPLE_HEADER = re.compile(r"^Sample (\d+):$", re.MULTILINE)

Key = Tuple[Procedure, ScoreFormat]


@dataclass(frozen=True)
class PromptTemplate:
    """
    Prompt şablonu

    - name: "{task}/{procedure}/{format}"
    - body: {{number}}, {{Data}}, {{Criterion}}, {{Metric}} içeren metin
    - required_fields: Her örnekte bulunması gereken alanlar
    - criterion_block: Verilirse kriterden üretilen blok yerine kullanılır
    """
    name: str
    procedure: Procedure
    format: ScoreFormat
    body: str
    task: str = DEFAULT_TASK
    required_fields: Tuple[str, ...] = ()
    criterion_block: Optional[str] = None

    def __post_init__(self):
        if NUMBER not in self.body or DATA not in self.body:
            raise TemplateError(
                f"{self.name}: şablon {NUMBER} ve {DATA} içermeli", code="TPL004"
            )
        requests_float = "float score" in self.body
        if self.format == ScoreFormat.DECIMAL and not requests_float:
            raise TemplateError(f"{self.name}: ondalık şablon float skor istemeli", code="TPL005")
        if self.format == ScoreFormat.INTEGER and requests_float:
            raise TemplateError(f"{self.name}: tam sayı şablonu float skor isteyemez", code="TPL005")

    def with_criterion_block(self, text: str) -> "PromptTemplate":
        """Kriter bloğu değiştirilmiş kopya (insan / model yazımı kriterler için)"""
        return replace(self, criterion_block=text.strip("\n"))

    @property
    def digest(self) -> str:
        """Gövde + kriter bloğunun sha256 özeti (manifest için)"""
        h = hashlib.sha256(self.body.encode("utf-8"))
        if self.criterion_block is not None:
            h.update(b"\x00")
            h.update(self.criterion_block.encode("utf-8"))
        return h.hexdigest()


@dataclass(frozen=True)
class TaskFamily:
    """Görev ailesinin şablona giren cümleleri"""
    name: str
    intro: str
    task: Dict[str, str]
    data_heading: str
    fields: Tuple[str, ...] = ()


def _read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8").replace("\r\n", "\n").rstrip("\n")


@dataclass
class TemplateCatalog:
    """
    Şablon kataloğu

    İskeletler, görev aileleri, kriterler ve göreve özel tam şablonları tutar.
    Kullanıcı klasörleri merged() ile yerleşik kataloğun üstüne eklenir.
    """
    skeletons: Dict[Key, str] = field(default_factory=dict)
    tasks: Dict[str, TaskFamily] = field(default_factory=dict)
    criteria: Dict[str, List[dict]] = field(default_factory=dict)
    overrides: Dict[Tuple[str, Procedure, ScoreFormat], str] = field(default_factory=dict)

    @classmethod
    def from_directory(cls, directory: Union[str, Path]) -> "TemplateCatalog":
        """
        Klasördeki şablon dosyalarını okur

        Raises:
            TemplateNotFound: Klasör yoksa
            TemplateError: Dosya adı veya JSON geçersizse
        """
        directory = Path(directory)
        if not directory.is_dir():
            raise TemplateNotFound(f"Şablon klasörü bulunamadı: {directory}")

        catalog = cls()
        for path in sorted(directory.glob("*.txt")):
            parts = path.stem.split("__")
            try:
                if len(parts) == 2:
                    key = (Procedure(parts[0]), ScoreFormat(parts[1]))
                    catalog.skeletons[key] = _read_text(path)
                elif len(parts) == 3:
                    catalog.overrides[(parts[0], Procedure(parts[1]), ScoreFormat(parts[2]))] = _read_text(path)
                else:
                    raise ValueError(path.name)
            except ValueError as e:
                raise TemplateError(f"Şablon dosya adı anlaşılamadı: {path.name}", code="TPL006") from e

        tasks_path = directory / "tasks.json"
        if tasks_path.exists():
            for name, data in _load_json(tasks_path).items():
                catalog.tasks[name] = TaskFamily(
                    name=name,
                    intro=data["intro"],
                    task=dict(data["task"]),
                    data_heading=data["data_heading"],
                    fields=tuple(data.get("fields", [])),
                )

        criteria_path = directory / "criteria.json"
        if criteria_path.exists():
            for task, entries in _load_json(criteria_path).items():
                catalog.criteria[task] = list(entries)
        return catalog

    def merged(self, other: "TemplateCatalog") -> "TemplateCatalog":
        """other'daki girdiler bu katalogdakileri ezer"""
        criteria = {k: list(v) for k, v in self.criteria.items()}
        for task, entries in other.criteria.items():
            names = {e["name"] for e in entries}
            criteria[task] = [e for e in criteria.get(task, []) if e["name"] not in names] + list(entries)
        return TemplateCatalog(
            skeletons={**self.skeletons, **other.skeletons},
            tasks={**self.tasks, **other.tasks},
            criteria=criteria,
            overrides={**self.overrides, **other.overrides},
        )

    def task_names(self) -> List[str]:
        return sorted(self.tasks)

    def template(self, procedure: Procedure, fmt: ScoreFormat,
                 task: str = DEFAULT_TASK) -> PromptTemplate:
        """
        Görev + prosedür + format için şablon

        Raises:
            TemplateNotFound: Görev veya iskelet yoksa
        """
        family = self.tasks.get(task)
        if family is None:
            raise TemplateNotFound(f"Bilinmeyen görev ailesi: {task}")

        body = self.overrides.get((task, procedure, fmt))
        if body is None:
            body = self.skeletons.get((procedure, fmt))
        if body is None:
            raise TemplateNotFound(f"Şablon yok: {procedure.value}/{fmt.value}")

        body = (
            body.replace("{{Intro}}", family.intro)
            .replace("{{Task}}", family.task.get(fmt.value, family.task.get("decimal", "")))
            .replace("{{DataHeading}}", family.data_heading)
        )
        return PromptTemplate(
            name=f"{task}/{procedure.value}/{fmt.value}",
            procedure=procedure,
            format=fmt,
            body=body,
            task=task,
            required_fields=family.fields,
        )

    def criterion(self, task: str = DEFAULT_TASK, name: Optional[str] = None,
                  fmt: ScoreFormat = ScoreFormat.DECIMAL) -> Criterion:
        """
        Görev ailesinin kriteri (name None ise ilki)

        Raises:
            TemplateNotFound: Kriter yoksa
        """
        entries = self.criteria.get(task, [])
        for entry in entries:
            if name is None or entry["name"] == name:
                return Criterion.from_dict({**entry, "format": fmt.value})
        raise TemplateNotFound(f"Kriter bulunamadı: {task}/{name}")

    def lookup(self, procedure: Procedure, fmt: ScoreFormat, criterion_name: Optional[str] = None,
               task: str = DEFAULT_TASK) -> PromptTemplate:
        """Şablonu, kriter adı verilirse kriter bloğu doldurulmuş olarak döndürür"""
        template = self.template(procedure, fmt, task)
        if criterion_name is None:
            return template
        criterion = self.criterion(task, criterion_name, fmt)
        return template.with_criterion_block(criterion.block_text())

    def templates(self) -> List[PromptTemplate]:
        result = []
        for task in self.task_names():
            for procedure in Procedure:
                for fmt in ScoreFormat:
                    result.append(self.template(procedure, fmt, task))
        return result


def _load_json(path: Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise TemplateError(f"{path.name} okunamadı: {e}", code="TPL007") from e


@lru_cache(maxsize=1)
def builtin_catalog() -> TemplateCatalog:
    """Paketle gelen katalog (bir kez okunur)"""
    return TemplateCatalog.from_directory(TEMPLATE_DIR)


def builtin_templates() -> List[PromptTemplate]:
    """Tüm görev aileleri x prosedürler x formatlar"""
    return builtin_catalog().templates()


def lookup(procedure: Procedure, fmt: ScoreFormat, criterion_name: Optional[str] = None,
           task: str = DEFAULT_TASK) -> PromptTemplate:
    return builtin_catalog().lookup(procedure, fmt, criterion_name, task)


def builtin_criterion(task: str = DEFAULT_TASK, name: Optional[str] = None,
                      fmt: ScoreFormat = ScoreFormat.DECIMAL) -> Criterion:
    return builtin_catalog().criterion(task, name, fmt)


def load_template_dir(directory: Union[str, Path]) -> TemplateCatalog:
    """Kullanıcı klasörünü yerleşik kataloğun üstüne bindirir"""
    return builtin_catalog().merged(TemplateCatalog.from_directory(directory))


def load_criterion_block(path: Union[str, Path]) -> str:
    """Kriter bloğunu metin dosyasından okur"""
    path = Path(path)
    if not path.exists():
        raise TemplateNotFound(f"Kriter dosyası bulunamadı: {path}")
    return _read_text(path)


def format_data_block(samples: Sequence[Sample]) -> str:
    """
    {{Data}} açılımı

    Her örnek "Sample k:" başlığı ve ardından boş satırla ayrılmış
    "<Alan>:\\n<metin>" bloklarıdır; örnekler de boş satırla ayrılır.
    """
    sections = []
    for k, sample in enumerate(samples, start=1):
        blocks = [f"{name}:\n{text}" for name, text in sample.fields.items()]
        sections.append(f"Sample {k}:\n" + "\n\n".join(blocks))
    return "\n\n".join(sections)


def render(template: PromptTemplate, samples: Sequence[Sample], criterion: Criterion) -> str:
    """
    Batch prompt'unu üretir

    Args:
        template: Prompt şablonu
        samples: Batch'teki örnekler (sırası Sample k numarasını belirler)
        criterion: Değerlendirme kriteri

    Returns:
        str: Hakeme gönderilecek prompt

    Raises:
        EmptyBatch: samples boşsa
        FieldMissing: Örnekte zorunlu alan yoksa
    """
    if not samples:
        raise EmptyBatch()
    for sample in samples:
        for name in template.required_fields:
            if name not in sample.fields:
                raise FieldMissing(sample.id, name)

    if template.criterion_block is not None:
        block = template.criterion_block
    else:
        block = criterion.with_format(template.format).block_text()

    # {{Data}} en son: örnek metinleri yer tutucu içerse bile dokunulmaz
    text = (
        template.body.replace(CRITERION, block)
        .replace(METRIC, criterion.name)
        .replace(NUMBER, str(len(samples)))
    )
    return text.replace(DATA, format_data_block(samples))


def count_samples(prompt: str) -> int:
    """Prompt'taki "Sample k:" başlıklarından örnek sayısını geri okur"""
    return len(_SAMPLE_HEADER.findall(prompt))

