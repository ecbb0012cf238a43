#!/usr/bin/env python3
"""Compose the bundled hand-annotated corpora and verify them end to end.

Each sentence is written as space-separated ``word/POS/NER/SRL`` tokens with
empty slots left blank.  The script expands those specs into the tagged
wire format, derives the seed training pairs, and refuses to write anything
unless every pair is self-consistent under the real pipeline (its own
declarative regenerates its own interrogative exactly) and all learned
patterns are pairwise distinct.

Regenerates:
    src/qapgen/data/fixtures/core_sentences.jsonl
    src/qapgen/data/fixtures/timing_sentences.jsonl
    src/qapgen/data/fixtures/timing_sentences.txt
    src/qapgen/data/seed_pairs.jsonl

Run from the repository root:  python3 scripts/build_corpus.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from qapgen.db import TsspDb  # noqa: E402
from qapgen.generator import generate  # noqa: E402
from qapgen.lexicon import Lexicon  # noqa: E402
from qapgen.tagging import FixtureTagger, parse_record  # noqa: E402

DATA = ROOT / "src" / "qapgen" / "data"
FIXTURES = DATA / "fixtures"

NO_SPACE_BEFORE = set(",.;:!?")


def sent(spec: str, frames: int = 1) -> dict:
    tokens = []
    words = []
    for tok in spec.split():
        parts = tok.split("/")
        assert len(parts) == 4, f"bad token spec: {tok!r}"
        w, pos, ner, srl = parts
        tokens.append({"t": w, "pos": pos, "ner": ner or None, "srl": [srl or None]})
        words.append(w)
    text = ""
    for w in words:
        if text and not (len(w) == 1 and w in NO_SPACE_BEFORE):
            text += " "
        text += w
    return {"text": text, "tokens": tokens, "frames": frames}


# ---------------------------------------------------------------------------
# Seed pairs: (declarative spec, interrogative spec, question, answer)
# The question/answer columns are what generation must reproduce from the
# pair's own declarative with a single-entry database.
# ---------------------------------------------------------------------------

PAIRS = [
    # -------------------------------------------------- where
    (
        "John/NNP/PER/ARG0 traveled/VBD//V to/IN//ARG1 Boston/NNP/LOC/ARG1 last/NN//TMP week/NN//TMP",
        "Where/WRB// did/VBD//V John/NNP/PER/ARG0 travel/VB//V to/IN//ARG1 last/NN//TMP week/NN//TMP",
        "Where did John travel to last week?",
        "Boston",
    ),
    (
        "Maria/NNP/PER/ARG1 is/VBZ//V in/IN//ARG2 Madrid/NNP/LOC/ARG2",
        "Where/WRB// is/VBZ//V Maria/NNP/PER/ARG1",
        "Where is Maria?",
        "in Madrid",
    ),
    (
        "The/DT//ARG0 boys/NNS//ARG0 walked/VBD//V to/IN//ARG1 school/NN//ARG1 yesterday/NN//TMP",
        "Where/WRB// did/VBD//V the/DT//ARG0 boys/NNS//ARG0 walk/VB//V to/IN//ARG1 yesterday/NN//TMP",
        "Where did the boys walk to yesterday?",
        "school",
    ),
    (
        "The/DT//ARG0 chef/NN//ARG0 cooks/VBZ//V dinner/NN//ARG1 in/IN//LOC the/DT//LOC kitchen/NN//LOC",
        "Where/WRB// does/VBZ//V the/DT//ARG0 chef/NN//ARG0 cook/VB//V dinner/NN//ARG1",
        "Where does the chef cook dinner?",
        "in the kitchen",
    ),
    (
        "The/DT//ARG0 birds/NNS//ARG0 fly/VBP//V to/IN//ARG1 Africa/NNP/LOC/ARG1 every/DT//TMP winter/NN//TMP",
        "Where/WRB// do/VBP//V the/DT//ARG0 birds/NNS//ARG0 fly/VB//V to/IN//ARG1 every/DT//TMP winter/NN//TMP",
        "Where do the birds fly to every winter?",
        "Africa",
    ),
    (
        "Nora/NNP/PER/ARG0 moved/VBD//V to/IN//ARG1 Berlin/NNP/LOC/ARG1 in/IN//TMP 2019/CD/DATE/TMP",
        "Where/WRB// did/VBD//V Nora/NNP/PER/ARG0 move/VB//V to/IN//ARG1 in/IN//TMP 2019/CD/DATE/TMP",
        "Where did Nora move to in 2019?",
        "Berlin",
    ),
    # -------------------------------------------------- who
    (
        "Abraham/NNP/PER/ARG1 Lincoln/NNP/PER/ARG1 was/VBZ//V the/DT//ARG2 16th/JJ//ARG2 president/NN//ARG2"
        " of/IN//ARG2 the/DT//ARG2 United/NNP/LOC/ARG2 States/NNP/LOC/ARG2",
        "Who/WP// was/VBZ//V the/DT//ARG2 16th/JJ//ARG2 president/NN//ARG2 of/IN//ARG2 the/DT//ARG2"
        " United/NNP/LOC/ARG2 States/NNP/LOC/ARG2",
        "Who was the 16th president of the United States?",
        "Abraham Lincoln",
    ),
    (
        "Marie/NNP/PER/ARG0 Curie/NNP/PER/ARG0 discovered/VBD//V radium/NN//ARG1",
        "Who/WP// discovered/VBD//V radium/NN//ARG1",
        "Who discovered radium?",
        "Marie Curie",
    ),
    (
        "Mary/NNP/PER/ARG0 met/VBD//V John/NNP/PER/ARG1 yesterday/NN//TMP",
        "Who/WP// did/VBD//V Mary/NNP/PER/ARG0 meet/VB//V yesterday/NN//TMP",
        "Who did Mary meet yesterday?",
        "John",
    ),
    (
        "The/DT//ARG0 teacher/NN//ARG0 helped/VBD//V the/DT//ARG1 students/NNS//ARG1",
        "Who/WP// helped/VBD//V the/DT//ARG1 students/NNS//ARG1",
        "Who helped the students?",
        "the teacher",
    ),
    (
        "Albert/NNP/PER/ARG2 Einstein/NNP/PER/ARG2 was/VBD//V awarded/VBN//V the/DT//ARG1 Nobel/NNP//ARG1"
        " Prize/NNP//ARG1 in/IN//TMP 1921/CD/DATE/TMP",
        "Who/WP// was/VBD//V awarded/VBN//V the/DT//ARG1 Nobel/NNP//ARG1 Prize/NNP//ARG1 in/IN//TMP 1921/CD/DATE/TMP",
        "Who was awarded the Nobel Prize in 1921?",
        "Albert Einstein",
    ),
    (
        "The/DT//ARG0 orchestra/NN//ARG0 is/VBZ//V going/VBG//V to/TO//V perform/VB//V the/DT//ARG1"
        " symphony/NN//ARG1 tonight/NN//TMP",
        "Who/WP// is/VBZ//V going/VBG//V to/TO//V perform/VB//V the/DT//ARG1 symphony/NN//ARG1 tonight/NN//TMP",
        "Who is going to perform the symphony tonight?",
        "the orchestra",
    ),
    # -------------------------------------------------- what
    (
        "My/PRP$//ARG0 mother/NN//ARG0 bought/VBD//V the/DT//ARG1 beautiful/JJ//ARG1 basket/NN//ARG1",
        "What/WP// did/VBD//V my/PRP$//ARG0 mother/NN//ARG0 buy/VB//V",
        "What did my mother buy?",
        "the beautiful basket",
    ),
    (
        "The/DT//ARG1 Mona/NNP//ARG1 Lisa/NNP//ARG1 was/VBD//V painted/VBN//V by/IN//ARG0"
        " Leonardo/NNP/PER/ARG0 da/NNP/PER/ARG0 Vinci/NNP/PER/ARG0",
        "What/WP// was/VBD//V painted/VBN//V by/IN//ARG0 Leonardo/NNP/PER/ARG0 da/NNP/PER/ARG0 Vinci/NNP/PER/ARG0",
        "What was painted by Leonardo da Vinci?",
        "the Mona Lisa",
    ),
    (
        "John/NNP/PER/ARG0 plays/VBZ//V soccer/NN//ARG1",
        "What/WP// does/VBZ//V John/NNP/PER/ARG0 play/VB//V",
        "What does John play?",
        "soccer",
    ),
    (
        "The/DT//ARG0 boys/NNS//ARG0 play/VBP//V soccer/NN//ARG1 after/IN//TMP school/NN//TMP",
        "What/WP// do/VBP//V the/DT//ARG0 boys/NNS//ARG0 play/VB//V after/IN//TMP school/NN//TMP",
        "What do the boys play after school?",
        "soccer",
    ),
    (
        "The/DT//ARG0 company/NN//ARG0 sold/VBD//V a/DT//ARG1 new/JJ//ARG1 phone/NN//ARG1 in/IN//TMP"
        " March/NNP/DATE/TMP",
        "What/WP// did/VBD//V the/DT//ARG0 company/NN//ARG0 sell/VB//V in/IN//TMP March/NNP/DATE/TMP",
        "What did the company sell in March?",
        "a new phone",
    ),
    (
        "Alexander/NNP/PER/ARG0 Fleming/NNP/PER/ARG0 discovered/VBD//V penicillin/NN//ARG1 in/IN//TMP"
        " 1928/CD/DATE/TMP",
        "What/WP// did/VBD//V Alexander/NNP/PER/ARG0 Fleming/NNP/PER/ARG0 discover/VB//V in/IN//TMP 1928/CD/DATE/TMP",
        "What did Alexander Fleming discover in 1928?",
        "penicillin",
    ),
    (
        "The/DT//ARG1 document/NN//ARG1 was/VBD//V signed/VBN//V by/IN//ARG0 the/DT//ARG0 king/NN//ARG0"
        " in/IN//TMP 1215/CD/DATE/TMP",
        "What/WP// was/VBD//V signed/VBN//V by/IN//ARG0 the/DT//ARG0 king/NN//ARG0 in/IN//TMP 1215/CD/DATE/TMP",
        "What was signed by the king in 1215?",
        "the document",
    ),
    # -------------------------------------------------- when
    (
        "On/IN//TMP December/NNP/DATE/TMP 17/CD/DATE/TMP ,/,// 1903/CD/DATE/TMP ,/,//"
        " Orville/NNP/PER/ARG0 Wright/NNP/PER/ARG0 flew/VBD//V the/DT//ARG1 first/JJ//ARG1 airplane/NN//ARG1",
        "When/WRB// did/VBD//V Orville/NNP/PER/ARG0 Wright/NNP/PER/ARG0 fly/VB//V the/DT//ARG1 first/JJ//ARG1"
        " airplane/NN//ARG1",
        "When did Orville Wright fly the first airplane?",
        "on December 17, 1903",
    ),
    (
        "The/DT//ARG0 museum/NN//ARG0 opens/VBZ//V its/PRP$//ARG1 doors/NNS//ARG1 at/IN//TMP nine/CD/TIME/TMP",
        "When/WRB// does/VBZ//V the/DT//ARG0 museum/NN//ARG0 open/VB//V its/PRP$//ARG1 doors/NNS//ARG1",
        "When does the museum open its doors?",
        "at nine",
    ),
    (
        "The/DT//ARG0 Titanic/NNP//ARG0 struck/VBD//V an/DT//ARG1 iceberg/NN//ARG1 in/IN//TMP 1912/CD/DATE/TMP",
        "When/WRB// did/VBD//V the/DT//ARG0 Titanic/NNP//ARG0 strike/VB//V an/DT//ARG1 iceberg/NN//ARG1",
        "When did the Titanic strike an iceberg?",
        "in 1912",
    ),
    (
        "NASA/NNP/ORG/ARG0 launched/VBD//V the/DT//ARG1 space/NN//ARG1 telescope/NN//ARG1 in/IN//TMP"
        " April/NNP/DATE/TMP",
        "When/WRB// did/VBD//V NASA/NNP/ORG/ARG0 launch/VB//V the/DT//ARG1 space/NN//ARG1 telescope/NN//ARG1",
        "When did NASA launch the space telescope?",
        "in April",
    ),
    (
        "The/DT//ARG0 students/NNS//ARG0 take/VBP//V exams/NNS//ARG1 in/IN//TMP June/NNP/DATE/TMP",
        "When/WRB// do/VBP//V the/DT//ARG0 students/NNS//ARG0 take/VB//V exams/NNS//ARG1",
        "When do the students take exams?",
        "in June",
    ),
    # -------------------------------------------------- why
    (
        "John/NNP/PER/ARG0 stayed/VBD//V home/NN//ARG1 because/IN//CAU he/PRP//CAU was/VBD//CAU sick/JJ//CAU",
        "Why/WRB// did/VBD//V John/NNP/PER/ARG0 stay/VB//V home/NN//ARG1",
        "Why did John stay home?",
        "because he was sick",
    ),
    (
        "The/DT//ARG0 city/NN//ARG0 built/VBD//V a/DT//ARG1 new/JJ//ARG1 stadium/NN//ARG1 because/IN//CAU"
        " the/DT//CAU team/NN//CAU won/VBD//CAU the/DT//CAU championship/NN//CAU",
        "Why/WRB// did/VBD//V the/DT//ARG0 city/NN//ARG0 build/VB//V a/DT//ARG1 new/JJ//ARG1 stadium/NN//ARG1",
        "Why did the city build a new stadium?",
        "because the team won the championship",
    ),
    (
        "Maria/NNP/PER/ARG0 studies/VBZ//V biology/NN//ARG1 because/IN//CAU she/PRP//CAU loves/VBZ//CAU"
        " animals/NNS//CAU",
        "Why/WRB// does/VBZ//V Maria/NNP/PER/ARG0 study/VB//V biology/NN//ARG1",
        "Why does Maria study biology?",
        "because she loves animals",
    ),
    (
        "The/DT//ARG0 farmers/NNS//ARG0 sell/VBP//V vegetables/NNS//ARG1 because/IN//CAU the/DT//CAU"
        " market/NN//CAU pays/VBZ//CAU well/RB//CAU",
        "Why/WRB// do/VBP//V the/DT//ARG0 farmers/NNS//ARG0 sell/VB//V vegetables/NNS//ARG1",
        "Why do the farmers sell vegetables?",
        "because the market pays well",
    ),
    # -------------------------------------------------- how many
    (
        "Twenty/CD//ARG0 students/NNS//ARG0 attended/VBD//V the/DT//ARG1 lecture/NN//ARG1",
        "How/WRB// many/JJ// attended/VBD//V the/DT//ARG1 lecture/NN//ARG1",
        "How many attended the lecture?",
        "twenty students",
    ),
    (
        "John/NNP/PER/ARG0 bought/VBD//V five/CD//ARG1 apples/NNS//ARG1",
        "How/WRB// many/JJ// did/VBD//V John/NNP/PER/ARG0 buy/VB//V",
        "How many did John buy?",
        "five apples",
    ),
    (
        "The/DT//ARG0 museum/NN//ARG0 displays/VBZ//V three/CD//ARG1 hundred/CD//ARG1 paintings/NNS//ARG1",
        "How/WRB// many/JJ// does/VBZ//V the/DT//ARG0 museum/NN//ARG0 display/VB//V",
        "How many does the museum display?",
        "three hundred paintings",
    ),
    (
        "Three/CD//ARG0 ships/NNS//ARG0 sailed/VBD//V to/IN//ARG1 America/NNP/LOC/ARG1 in/IN//TMP"
        " 1492/CD/DATE/TMP",
        "How/WRB// many/JJ// sailed/VBD//V to/IN//ARG1 America/NNP/LOC/ARG1 in/IN//TMP 1492/CD/DATE/TMP",
        "How many sailed to America in 1492?",
        "three ships",
    ),
]

# Input-only sentences exercised by tests and demos.
EXTRA_SENTENCES = [
    # the worked generation example
    "Mary/NNP/PER/ARG0 flew/VBD//V to/IN//ARG1 London/NNP/LOC/ARG1 last/NN//TMP month/NN//TMP",
    # leading discourse word outside the frame, date answer with inner commas
    "However/RB// ,/,// on/IN//TMP September/NNP/DATE/TMP 12/CD/DATE/TMP ,/,// 1933/CD/DATE/TMP ,/,//"
    " physicist/NN//ARG0 Leo/NNP/PER/ARG0 Szilard/NNP/PER/ARG0 invented/VBD//V the/DT//ARG1"
    " neutron-induced/JJ//ARG1 nuclear/JJ//ARG1 chain/NN//ARG1 reaction/NN//ARG1",
    # plural do-support fixture, plus interrogatives used by teach flows
    "The/DT//ARG0 boys/NNS//ARG0 walked/VBD//V home/NN//ARG1",
    "Who/WP// walked/VBD//V home/NN//ARG1",
    "Who/WP// did/VBD//V Alice/NNP/PER/ARG0 meet/VB//V yesterday/NN//TMP",
    # frame with a verb and only a time modifier: dropped by the filter
    "It/PRP// rained/VBD//V yesterday/NN//TMP",
    # leading conjunction labeled as a discourse tag inside the frame
    "But/CC//DIS John/NNP/PER/ARG0 visited/VBD//V the/DT//ARG1 castle/NN//ARG1",
]


def two_frame_record() -> dict:
    words = [
        ("John", "NNP", "PER", ["ARG0", None]),
        ("visited", "VBD", None, ["V", None]),
        ("the", "DT", None, ["ARG1", None]),
        ("museum", "NN", None, ["ARG1", None]),
        ("and", "CC", None, [None, None]),
        ("Mary", "NNP", "PER", [None, "ARG0"]),
        ("bought", "VBD", None, [None, "V"]),
        ("a", "DT", None, [None, "ARG1"]),
        ("souvenir", "NN", None, [None, "ARG1"]),
    ]
    return {
        "text": " ".join(w for w, *_ in words),
        "tokens": [{"t": w, "pos": pos, "ner": ner, "srl": srl} for w, pos, ner, srl in words],
        "frames": 2,
    }


TIMING_NAMES = ["Alice", "David", "Emma", "Frank", "Grace", "Henry", "Irene", "Kevin", "Laura", "Oscar"]
TIMING_PLACES = ["Paris", "Rome", "Tokyo", "Oslo", "Cairo", "Sydney", "Lisbon", "Dublin", "Athens", "Prague"]
TIMING_TIMES = ["week", "month", "year", "spring", "summer", "autumn", "winter", "weekend", "night", "season"]
TIMING_VERBS = ["traveled", "flew", "moved", "drove", "returned"]
TIMING_COUNTS = ["four", "five", "six", "seven", "eight"]
TIMING_OBJECTS = ["apples", "oranges", "melons", "lemons", "plums"]


def timing_records() -> list[dict]:
    records = []
    for i in range(60):
        name = TIMING_NAMES[i % 10]
        place = TIMING_PLACES[(i * 3 + i // 10) % 10]
        when = TIMING_TIMES[i % 10]
        verb = TIMING_VERBS[i % 5]
        records.append(
            sent(
                f"{name}/NNP/PER/ARG0 {verb}/VBD//V to/IN//ARG1 {place}/NNP/LOC/ARG1"
                f" last/NN//TMP {when}/NN//TMP"
            )
        )
    for i in range(20):
        name = TIMING_NAMES[(i * 7) % 10]
        count = TIMING_COUNTS[i % 5]
        obj = TIMING_OBJECTS[(i // 5) % 5]
        records.append(sent(f"{name}/NNP/PER/ARG0 bought/VBD//V {count}/CD//ARG1 {obj}/NNS//ARG1"))
    for i in range(20):
        a = TIMING_NAMES[i % 10]
        b = TIMING_NAMES[(i + 3) % 10]
        records.append(sent(f"{a}/NNP/PER/ARG0 met/VBD//V {b}/NNP/PER/ARG1 yesterday/NN//TMP"))
    return records


def main() -> int:
    lex = Lexicon.load_default()

    core_records = []
    seed_rows = []
    for decl_spec, interr_spec, question, answer in PAIRS:
        decl = sent(decl_spec)
        interr = sent(interr_spec)
        core_records.extend([decl, interr])
        seed_rows.append(
            {"declarative": decl["text"] + ".", "interrogative": interr["text"] + "?"}
        )
    for spec in EXTRA_SENTENCES:
        core_records.append(sent(spec))
    core_records.append(two_frame_record())

    timing = timing_records()

    # schema sanity for every record
    for record in core_records + timing:
        parse_record(record)

    tagger = FixtureTagger(corpus=[parse_record(r) for r in core_records + timing])

    # self-consistency pair by pair
    for row, (_, _, question, answer) in zip(seed_rows, PAIRS):
        db = TsspDb()
        entry, created = db.learn_pair(row["declarative"], row["interrogative"], tagger, lex)
        assert created, f"seed pair is a self-duplicate: {row}"
        qaps, _ = generate(row["declarative"], db, lex, tagger)
        got = [(q.question, q.answer) for q in qaps]
        assert (question, answer) in got, (
            f"self-consistency failed for {row['declarative']!r}:"
            f" expected {(question, answer)!r}, got {got!r}"
        )
        assert qaps[0].question == row["interrogative"], (
            f"{qaps[0].question!r} != {row['interrogative']!r}"
        )

    # pairwise distinct patterns so a full import adds every pair
    full_db = TsspDb()
    for row in seed_rows:
        entry, created = full_db.learn_pair(row["declarative"], row["interrogative"], tagger, lex)
        assert created, f"duplicate learned pattern for {row['declarative']!r}"

    # worked generation example against the single travel pair
    single = TsspDb()
    single.learn_pair(seed_rows[0]["declarative"], seed_rows[0]["interrogative"], tagger, lex)
    qaps, _ = generate("Mary flew to London last month.", single, lex, tagger)
    assert [(q.question, q.answer) for q in qaps] == [
        ("Where did Mary fly to last month?", "London")
    ], qaps

    # date-answer example against the full database
    sent_text = (
        "However, on September 12, 1933, physicist Leo Szilard invented"
        " the neutron-induced nuclear chain reaction."
    )
    qaps, _ = generate(sent_text, full_db, lex, tagger)
    expected = (
        "When did physicist Leo Szilard invent the neutron-induced nuclear chain reaction?",
        "on September 12, 1933",
    )
    assert expected in [(q.question, q.answer) for q in qaps], qaps

    # every timing sentence generates and never reveals its answer
    for record in timing:
        qaps, _ = generate(record["text"] + ".", full_db, lex, tagger)
        assert qaps, f"timing sentence unmatched: {record['text']!r}"
        for q in qaps:
            assert q.answer.lower() not in q.question.lower()

    FIXTURES.mkdir(parents=True, exist_ok=True)
    with open(FIXTURES / "core_sentences.jsonl", "w", encoding="utf-8") as fh:
        for record in core_records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    with open(FIXTURES / "timing_sentences.jsonl", "w", encoding="utf-8") as fh:
        for record in timing:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    with open(FIXTURES / "timing_sentences.txt", "w", encoding="utf-8") as fh:
        for record in timing:
            fh.write(record["text"] + ".\n")
    with open(DATA / "seed_pairs.jsonl", "w", encoding="utf-8") as fh:
        for row in seed_rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")

    print(f"wrote {len(core_records)} core records, {len(timing)} timing records, {len(seed_rows)} seed pairs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
