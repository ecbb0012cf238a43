"""Batch generation report: delimited QAP output plus summary figures."""

from __future__ import annotations

import json
import time
from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .db import TsspDb
from .errors import QapgenError
from .generator import generate_from_tagged
from .lexicon import Lexicon
from .preprocess import normalize


def _pronoun_of(db: TsspDb, entry_id: int) -> str:
    for entry in db:
        if entry.id == entry_id:
            for ts in entry.y:
                if ts.is_pronoun:
                    return ts.pronoun
    return "other"


def run_report(
    sentences: list[str],
    db: TsspDb,
    lex: Lexicon,
    tagger,
    out_dir: str | Path,
) -> dict:
    """Generate over a corpus, writing ``qaps.jsonl`` and PNG figures.

    Returns a summary dict (also written as ``summary.json``).
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    rows = []
    core_ms: list[float] = []
    pronouns: Counter[str] = Counter()
    classes: Counter[str] = Counter()
    failures = 0
    for sentence in sentences:
        try:
            source = normalize(sentence, lex)
            tagged = tagger.tag(source)
        except QapgenError:
            failures += 1
            continue
        t0 = time.perf_counter()
        qaps, prompts = generate_from_tagged(tagged, source, db, lex)
        core_ms.append((time.perf_counter() - t0) * 1000.0)
        for qap in qaps:
            rows.append(qap.to_record())
            pronouns[_pronoun_of(db, qap.entry_id)] += 1
            classes[qap.match_class] += 1
        for prompt in prompts:
            classes[f"teach:{prompt.match_class}"] += 1

    with open(out_dir / "qaps.jsonl", "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")

    figures = []

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(core_ms or [0.0], bins=20, color="#4878cf", edgecolor="white")
    ax.set_xlabel("core generation latency (ms)")
    ax.set_ylabel("sentences")
    ax.set_title("Per-sentence core latency")
    fig.tight_layout()
    path = out_dir / "latency_hist.png"
    fig.savefig(path)
    plt.close(fig)
    figures.append(str(path))

    fig, ax = plt.subplots(figsize=(6, 4))
    labels = sorted(pronouns) or ["none"]
    ax.bar(labels, [pronouns.get(k, 0) for k in labels], color="#6acc65")
    ax.set_ylabel("QAPs")
    ax.set_title("QAPs by interrogative pronoun")
    fig.tight_layout()
    path = out_dir / "qaps_by_pronoun.png"
    fig.savefig(path)
    plt.close(fig)
    figures.append(str(path))

    fig, ax = plt.subplots(figsize=(6, 4))
    labels = sorted(classes) or ["none"]
    ax.bar(labels, [classes.get(k, 0) for k in labels], color="#d65f5f")
    ax.set_ylabel("count")
    ax.set_title("Match outcomes")
    ax.tick_params(axis="x", rotation=30)
    fig.tight_layout()
    path = out_dir / "match_classes.png"
    fig.savefig(path)
    plt.close(fig)
    figures.append(str(path))

    summary = {
        "sentences": len(sentences),
        "failures": failures,
        "qaps": len(rows),
        "mean_core_ms": round(sum(core_ms) / len(core_ms), 3) if core_ms else None,
        "max_core_ms": round(max(core_ms), 3) if core_ms else None,
        "qaps_by_pronoun": dict(pronouns),
        "figures": figures,
    }
    with open(out_dir / "summary.json", "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2)
    return summary
