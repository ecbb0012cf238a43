import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from conftest import data_path
from qapgen.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def seeded_db_file(tmp_path, seeded_db) -> Path:
    path = tmp_path / "patterns.db"
    seeded_db.save(path)
    return path


def _write_lines(path: Path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


class TestLearn:
    def test_import_counts(self, runner, tmp_path, seed_path):
        db = tmp_path / "p.db"
        result = runner.invoke(main, ["learn", str(seed_path), "--db", str(db)])
        assert result.exit_code == 0, result.output
        assert "added 32" in result.output
        assert db.exists()

    def test_second_run_all_duplicates(self, runner, tmp_path, seed_path):
        db = tmp_path / "p.db"
        runner.invoke(main, ["learn", str(seed_path), "--db", str(db)])
        result = runner.invoke(main, ["learn", str(seed_path), "--db", str(db)])
        assert result.exit_code == 0
        assert "added 0" in result.output and "duplicates 32" in result.output

    def test_missing_file_is_fatal(self, runner, tmp_path):
        result = runner.invoke(main, ["learn", str(tmp_path / "nope.jsonl")])
        assert result.exit_code == 2

    def test_partial_failure_exit_code(self, runner, tmp_path):
        seed = tmp_path / "seed.jsonl"
        _write_lines(
            seed,
            [
                json.dumps(
                    {
                        "declarative": "John traveled to Boston last week.",
                        "interrogative": "Where did John travel to last week?",
                    }
                ),
                json.dumps({"declarative": "Unknown text.", "interrogative": "Why?"}),
            ],
        )
        result = runner.invoke(main, ["learn", str(seed), "--db", str(tmp_path / "p.db")])
        assert result.exit_code == 1
        assert "failed 1" in result.output


class TestGenerate:
    def test_worked_example_record(self, runner, tmp_path, seeded_db_file):
        inp = tmp_path / "in.txt"
        _write_lines(inp, ["Mary flew to London last month."])
        result = runner.invoke(
            main, ["generate", str(inp), "--db", str(seeded_db_file)]
        )
        assert result.exit_code == 0, result.output
        record = json.loads(result.output.strip().splitlines()[0])
        assert record == {
            "question": "Where did Mary fly to last month?",
            "answer": "London",
            "source": "Mary flew to London last month.",
            "entry_id": 1,
        }

    def test_empty_input(self, runner, tmp_path, seeded_db_file):
        inp = tmp_path / "in.txt"
        inp.write_text("", encoding="utf-8")
        result = runner.invoke(main, ["generate", str(inp), "--db", str(seeded_db_file)])
        assert result.exit_code == 0
        assert result.output.strip() == ""

    def test_stdin_input(self, runner, seeded_db_file):
        result = runner.invoke(
            main,
            ["generate", "--db", str(seeded_db_file)],
            input="Mary flew to London last month.\n",
        )
        assert result.exit_code == 0
        assert "Where did Mary fly to last month?" in result.output

    def test_missing_db_is_fatal(self, runner, tmp_path):
        result = runner.invoke(
            main, ["generate", "--db", str(tmp_path / "nope.db")], input=""
        )
        assert result.exit_code == 2

    def test_tagger_failures_continue(self, runner, tmp_path, seeded_db_file):
        inp = tmp_path / "in.txt"
        _write_lines(inp, ["Totally unknown sentence.", "Mary flew to London last month."])
        result = runner.invoke(main, ["generate", str(inp), "--db", str(seeded_db_file)])
        assert result.exit_code == 1
        assert "Where did Mary fly to last month?" in result.output

    def test_out_file_and_queue(self, runner, tmp_path, john_pair_db):
        db_path = tmp_path / "single.db"
        john_pair_db.save(db_path)
        inp = tmp_path / "in.txt"
        # shares only the verb tag set with the single learned pattern
        _write_lines(inp, ["The Titanic struck an iceberg in 1912."])
        out = tmp_path / "qaps.jsonl"
        queue = tmp_path / "queue.teach"
        result = runner.invoke(
            main,
            [
                "generate", str(inp), "--db", str(db_path),
                "--out", str(out), "--queue", str(queue),
            ],
        )
        assert result.exit_code == 0, result.output
        assert out.read_text() == ""
        from qapgen.teach import TeachQueue

        requests = TeachQueue(queue).open_requests()
        assert [r.sentence_text for r in requests] == ["The Titanic struck an iceberg in 1912."]
        assert requests[0].best_match_class == "unsuccessful"

    def test_timing_flag(self, runner, tmp_path, seeded_db_file):
        inp = tmp_path / "in.txt"
        _write_lines(inp, ["Mary flew to London last month."])
        result = runner.invoke(
            main, ["generate", str(inp), "--db", str(seeded_db_file), "--timing"]
        )
        assert result.exit_code == 0
        assert "mean core latency" in result.output

    def test_pretty_output(self, runner, tmp_path, seeded_db_file):
        inp = tmp_path / "in.txt"
        _write_lines(inp, ["Mary flew to London last month."])
        result = runner.invoke(
            main, ["generate", str(inp), "--db", str(seeded_db_file), "--pretty"]
        )
        assert "Q: Where did Mary fly to last month?" in result.output
        assert "A: London" in result.output

    def test_env_var_overrides_db_option(self, runner, tmp_path, seeded_db_file):
        inp = tmp_path / "in.txt"
        _write_lines(inp, ["Mary flew to London last month."])
        result = runner.invoke(
            main,
            ["generate", str(inp), "--db", str(tmp_path / "bogus.db")],
            env={"TSS_DB": str(seeded_db_file)},
        )
        assert result.exit_code == 0
        assert "Where did Mary fly to last month?" in result.output


class TestTeach:
    def test_teach_ad_hoc_sentence(self, runner, tmp_path):
        db = tmp_path / "p.db"
        result = runner.invoke(
            main,
            ["teach", "--db", str(db), "--sentence", "The boys walked home."],
            input="Who walked home?\n",
        )
        assert result.exit_code == 0, result.output
        assert "learned entry 1" in result.output
        assert "Q: Who walked home?" in result.output
        assert "A: the boys" in result.output

    def test_empty_line_skips(self, runner, tmp_path):
        db = tmp_path / "p.db"
        result = runner.invoke(
            main,
            ["teach", "--db", str(db), "--sentence", "The boys walked home."],
            input="\n",
        )
        assert result.exit_code == 0
        assert "skipped" in result.output
        assert not db.exists()

    def test_duplicate_pattern_notice(self, runner, tmp_path):
        db = tmp_path / "p.db"
        queue = tmp_path / "q.teach"
        runner.invoke(
            main,
            ["teach", "--db", str(db), "--queue", str(queue),
             "--sentence", "The boys walked home."],
            input="Who walked home?\n",
        )
        result = runner.invoke(
            main,
            ["teach", "--db", str(db), "--queue", str(queue),
             "--sentence", "The teacher helped the students."],
            input="Who walked home?\n",
        )
        assert "could not learn" not in result.output
        # helped-pattern differs, so this actually learns; now a true duplicate:
        result = runner.invoke(
            main,
            ["teach", "--db", str(db), "--queue", str(queue),
             "--sentence", "The boys walked home."],
            input="Who walked home?\n",
        )
        assert "duplicate of entry" in result.output

    def test_unmergeable_interrogative_keeps_request_open(self, runner, tmp_path):
        db = tmp_path / "p.db"
        queue = tmp_path / "q.teach"
        result = runner.invoke(
            main,
            ["teach", "--db", str(db), "--queue", str(queue),
             "--sentence", "The boys walked home."],
            input="Totally unknown sentence?\n",
        )
        assert result.exit_code == 0
        assert "could not learn" in result.output
        from qapgen.teach import TeachQueue

        assert len(TeachQueue(queue).open_requests()) == 1

    def test_empty_queue_message(self, runner, tmp_path):
        result = runner.invoke(
            main, ["teach", "--db", str(tmp_path / "p.db"), "--queue", str(tmp_path / "q")]
        )
        assert result.exit_code == 0
        assert "teach queue is empty" in result.output


class TestReport:
    def test_report_writes_output_and_figures(self, runner, tmp_path, seeded_db_file):
        inp = data_path("fixtures/timing_sentences.txt")
        out_dir = tmp_path / "report"
        result = runner.invoke(
            main,
            [
                "report", str(inp), "--db", str(seeded_db_file),
                "--tagger", f"fixture:{data_path('fixtures/timing_sentences.jsonl')}",
                "--out-dir", str(out_dir),
            ],
        )
        assert result.exit_code == 0, result.output
        assert (out_dir / "qaps.jsonl").exists()
        assert (out_dir / "latency_hist.png").stat().st_size > 0
        assert (out_dir / "qaps_by_pronoun.png").stat().st_size > 0
        assert (out_dir / "match_classes.png").stat().st_size > 0
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary["sentences"] == 100
        assert summary["qaps"] >= 100
        assert summary["failures"] == 0
        rows = [
            json.loads(line)
            for line in (out_dir / "qaps.jsonl").read_text().splitlines()
        ]
        assert all({"question", "answer", "source", "entry_id"} == set(r) for r in rows)
