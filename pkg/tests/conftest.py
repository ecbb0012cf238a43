from __future__ import annotations

from importlib import resources
from pathlib import Path

import pytest

from qapgen.db import TsspDb
from qapgen.lexicon import Lexicon
from qapgen.tagging import FixtureTagger, load_fixture_corpus


def data_path(name: str) -> Path:
    with resources.as_file(resources.files("qapgen").joinpath("data")) as root:
        return Path(root) / name


@pytest.fixture(scope="session")
def lex() -> Lexicon:
    return Lexicon.load_default()


@pytest.fixture(scope="session")
def core_corpus():
    return load_fixture_corpus(data_path("fixtures/core_sentences.jsonl"))


@pytest.fixture(scope="session")
def timing_corpus():
    return load_fixture_corpus(data_path("fixtures/timing_sentences.jsonl"))


@pytest.fixture(scope="session")
def tagger(core_corpus) -> FixtureTagger:
    return FixtureTagger(corpus=core_corpus)


@pytest.fixture(scope="session")
def full_tagger(core_corpus, timing_corpus) -> FixtureTagger:
    return FixtureTagger(corpus=list(core_corpus) + list(timing_corpus))


@pytest.fixture(scope="session")
def seed_path() -> Path:
    return data_path("seed_pairs.jsonl")


@pytest.fixture(scope="session")
def _seeded_db(seed_path, tagger, lex) -> TsspDb:
    db = TsspDb()
    counts = db.import_seed(seed_path, tagger, lex)
    assert counts["failed"] == 0
    return db


@pytest.fixture()
def seeded_db(_seeded_db) -> TsspDb:
    # entries are immutable; a shallow copy isolates mutation between tests
    return TsspDb(list(_seeded_db.entries))


@pytest.fixture()
def john_pair_db(tagger, lex) -> TsspDb:
    db = TsspDb()
    db.learn_pair(
        "John traveled to Boston last week.",
        "Where did John travel to last week?",
        tagger,
        lex,
    )
    return db
