"""Loading singularity corpora from files or the bundled dataset."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .invariants import SingularityInput
from .parsing import CorpusEntry, parse_corpus

BUNDLED_NAME = "classical.corpus"


def load_corpus(path) -> list:
    text = Path(path).read_text(encoding="utf-8")
    return parse_corpus(text)


def bundled_corpus() -> list:
    text = (
        resources.files("germlab.data").joinpath(BUNDLED_NAME).read_text(encoding="utf-8")
    )
    return parse_corpus(text)


def entry_input(entry: CorpusEntry, field=None) -> SingularityInput:
    ctx, polys = entry.build_polys(field)
    return SingularityInput(ctx, polys)
