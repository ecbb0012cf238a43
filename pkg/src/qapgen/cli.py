"""Command-line interface: learn, generate, teach, serve, report.

Exit codes: 0 ok, 1 partial failures, 2 fatal.  The TSS_DB environment
variable overrides --db wherever a database path is taken.
"""

from __future__ import annotations

import json
import os
import sys
import time
from pathlib import Path

import click

from .db import TsspDb, open_or_create
from .errors import QapgenError, SchemaViolation, TaggerUnavailable, UnmergeableSentence
from .generator import generate, generate_from_tagged
from .lexicon import Lexicon
from .preprocess import normalize
from .service import create_app, default_queue_path
from .tagging import FixtureTagger, HttpTagger
from .teach import TeachQueue


def _db_path(value: str) -> str:
    return os.environ.get("TSS_DB") or value


def _make_tagger(spec: str):
    if spec == "fixture":
        return FixtureTagger()
    if spec.startswith("fixture:"):
        return FixtureTagger(path=spec[len("fixture:") :])
    if spec.startswith("external:"):
        return HttpTagger(spec[len("external:") :])
    raise click.BadParameter(f"unknown tagger {spec!r}; use fixture:FILE or external:URL")


def _read_sentences(input_path: str | None) -> list[str]:
    if input_path in (None, "-"):
        data = sys.stdin.read()
    else:
        data = Path(input_path).read_text(encoding="utf-8")
    return [line.strip() for line in data.splitlines() if line.strip()]


@click.group()
@click.version_option(package_name="qapgen")
def main() -> None:
    """Learn sentence patterns and generate question-answer pairs."""


@main.command()
@click.argument("seed", type=click.Path(exists=True, dir_okay=False))
@click.option("--db", "db_path", default="patterns.db", show_default=True, help="Pattern database file.")
@click.option("--tagger", "tagger_spec", default="fixture", show_default=True)
def learn(seed: str, db_path: str, tagger_spec: str) -> None:
    """Import a seed file of declarative/interrogative sentence pairs."""
    db_path = _db_path(db_path)
    lex = Lexicon.load_default()
    tagger = _make_tagger(tagger_spec)
    db = open_or_create(db_path)
    counts = db.import_seed(seed, tagger, lex)
    db.save(db_path)
    click.echo(
        f"added {counts['added']}  duplicates {counts['duplicates']}  failed {counts['failed']}"
    )
    sys.exit(0 if counts["failed"] == 0 else 1)


@main.command(name="generate")
@click.argument("input_path", required=False)
@click.option("--db", "db_path", default="patterns.db", show_default=True)
@click.option("--tagger", "tagger_spec", default="fixture", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="Write QAP records here instead of stdout.")
@click.option("--queue", "queue_path", type=click.Path(dir_okay=False), help="Teach queue file (default: next to the database).")
@click.option("--timing", is_flag=True, help="Measure and report per-sentence core latency.")
@click.option("--pretty", is_flag=True, help="Human-readable table instead of JSON lines.")
def generate_cmd(
    input_path: str | None,
    db_path: str,
    tagger_spec: str,
    out_path: str | None,
    queue_path: str | None,
    timing: bool,
    pretty: bool,
) -> None:
    """Generate QAPs for each input sentence (one per line, or stdin)."""
    db_path = _db_path(db_path)
    if not Path(db_path).exists():
        click.echo(f"error: database {db_path} does not exist; run learn first", err=True)
        sys.exit(2)
    db = TsspDb.load(db_path)
    lex = Lexicon.load_default()
    tagger = _make_tagger(tagger_spec)
    queue = TeachQueue(queue_path or default_queue_path(db_path))
    sentences = _read_sentences(input_path)

    out = open(out_path, "w", encoding="utf-8") if out_path else sys.stdout
    failures = 0
    core_ms: list[float] = []
    try:
        for sentence in sentences:
            try:
                source = normalize(sentence, lex)
                tagged = tagger.tag(source)
            except (TaggerUnavailable, SchemaViolation) as exc:
                click.echo(f"error: {sentence!r}: {exc}", err=True)
                failures += 1
                continue
            t0 = time.perf_counter()
            qaps, prompts = generate_from_tagged(tagged, source, db, lex)
            core_ms.append((time.perf_counter() - t0) * 1000.0)
            for prompt in prompts:
                queue.add(prompt.sentence_text, prompt.built_sequence, prompt.match_class)
            for qap in qaps:
                if pretty:
                    out.write(f"Q: {qap.question}\nA: {qap.answer}\n   [{qap.source_sentence}]\n")
                else:
                    out.write(json.dumps(qap.to_record(), ensure_ascii=False) + "\n")
    finally:
        if out_path:
            out.close()
    if timing and core_ms:
        mean = sum(core_ms) / len(core_ms)
        click.echo(
            f"timing: mean core latency {mean:.3f} ms over {len(core_ms)} sentences"
            f" (max {max(core_ms):.3f} ms)",
            err=True,
        )
    sys.exit(0 if failures == 0 else 1)


@main.command()
@click.option("--db", "db_path", default="patterns.db", show_default=True)
@click.option("--tagger", "tagger_spec", default="fixture", show_default=True)
@click.option("--queue", "queue_path", type=click.Path(dir_okay=False))
@click.option("--sentence", "ad_hoc", help="Teach this sentence directly instead of the queue.")
def teach(db_path: str, tagger_spec: str, queue_path: str | None, ad_hoc: str | None) -> None:
    """Interactive loop: supply interrogatives for unmatched sentences."""
    db_path = _db_path(db_path)
    lex = Lexicon.load_default()
    tagger = _make_tagger(tagger_spec)
    db = open_or_create(db_path)
    queue = TeachQueue(queue_path or default_queue_path(db_path))

    if ad_hoc:
        request = queue.add(normalize(ad_hoc, lex), [], "unsuccessful")
        pending = [request]
    else:
        pending = queue.open_requests()
    if not pending:
        click.echo("teach queue is empty")
        return

    for request in pending:
        click.echo(f"\nsentence: {request.sentence_text}")
        if request.built_sequence:
            click.echo(f"pattern:  {' '.join(request.built_sequence)}")
        line = click.prompt("interrogative (empty to skip)", default="", show_default=False)
        if not line.strip():
            click.echo("skipped")
            continue
        try:
            entry, created = db.learn_pair(request.sentence_text, line.strip(), tagger, lex)
        except (UnmergeableSentence, TaggerUnavailable) as exc:
            click.echo(f"could not learn: {exc}", err=True)
            continue
        if not created:
            click.echo(f"duplicate of entry {entry.id}; nothing added")
            continue
        db.save(db_path)
        queue.resolve(request.id, entry.id)
        click.echo(f"learned entry {entry.id}:")
        click.echo(f"  X: {entry.x.render()}")
        click.echo(f"  Y: {entry.y.render()}")
        qaps, _ = generate(request.sentence_text, db, lex, tagger)
        for qap in qaps:
            click.echo(f"  Q: {qap.question}")
            click.echo(f"  A: {qap.answer}")


@main.command()
@click.option("--db", "db_path", default="patterns.db", show_default=True)
@click.option("--tagger", "tagger_spec", default="fixture", show_default=True)
@click.option("--queue", "queue_path", type=click.Path(dir_okay=False))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8204, show_default=True)
def serve(db_path: str, tagger_spec: str, queue_path: str | None, host: str, port: int) -> None:
    """Run the local HTTP service backing the teach UI."""
    import uvicorn

    db_path = _db_path(db_path)
    app = create_app(db_path, queue_path, _make_tagger(tagger_spec))
    uvicorn.run(app, host=host, port=port, log_level="info")


@main.command()
@click.argument("input_path")
@click.option("--db", "db_path", default="patterns.db", show_default=True)
@click.option("--tagger", "tagger_spec", default="fixture", show_default=True)
@click.option("--out-dir", default="report", show_default=True)
def report(input_path: str, db_path: str, tagger_spec: str, out_dir: str) -> None:
    """Generate over a corpus and render summary figures."""
    from .report import run_report

    db_path = _db_path(db_path)
    if not Path(db_path).exists():
        click.echo(f"error: database {db_path} does not exist; run learn first", err=True)
        sys.exit(2)
    db = TsspDb.load(db_path)
    lex = Lexicon.load_default()
    tagger = _make_tagger(tagger_spec)
    sentences = _read_sentences(input_path)
    summary = run_report(sentences, db, lex, tagger, out_dir)
    click.echo(json.dumps(summary, indent=2))
    sys.exit(0 if summary["failures"] == 0 else 1)


if __name__ == "__main__":
    main()
