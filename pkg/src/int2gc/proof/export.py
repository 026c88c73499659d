"""Write the corpus to JSON files (used to refresh the shipped data)."""

from __future__ import annotations

from pathlib import Path

from ..jsonio import dumps, proof_to_json
from .derivations import script_corpus


def export_corpus(directory) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, script in script_corpus().items():
        p = out / f"{name}.json"
        p.write_text(dumps(proof_to_json(script)), encoding="utf-8")
        written.append(p)
    return written
