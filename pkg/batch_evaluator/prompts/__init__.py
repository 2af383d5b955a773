"""Prompts modülü - şablon kataloğu ve render"""

from .template import (
    PromptTemplate,
    TaskFamily,
    TemplateCatalog,
    builtin_catalog,
    builtin_templates,
    builtin_criterion,
    lookup,
    load_template_dir,
    load_criterion_block,
    format_data_block,
    render,
    count_samples,
    DEFAULT_TASK,
    GENERIC_TASK,
)

__all__ = [
    "PromptTemplate",
    "TaskFamily",
    "TemplateCatalog",
    "builtin_catalog",
    "builtin_templates",
    "builtin_criterion",
    "lookup",
    "load_template_dir",
    "load_criterion_block",
    "format_data_block",
    "render",
    "count_samples",
    "DEFAULT_TASK",
    "GENERIC_TASK",
]
