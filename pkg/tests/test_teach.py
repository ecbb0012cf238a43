from qapgen.teach import OPEN, RESOLVED, SKIPPED, TeachQueue


def test_add_and_list(tmp_path):
    q = TeachQueue(tmp_path / "q.teach")
    r = q.add("A sentence.", ["[ARG0/NN//]"], "unsuccessful")
    assert r.id == 1 and r.status == OPEN
    assert [x.id for x in q.open_requests()] == [1]


def test_open_requests_deduplicate_by_sentence(tmp_path):
    q = TeachQueue(tmp_path / "q.teach")
    a = q.add("Same sentence.", [], "unsuccessful")
    b = q.add("Same sentence.", [], "unsuccessful")
    assert a is b
    assert len(q.open_requests()) == 1


def test_resolve_and_skip(tmp_path):
    q = TeachQueue(tmp_path / "q.teach")
    a = q.add("One.", [], "unsuccessful")
    b = q.add("Two.", [], "successful")
    q.resolve(a.id, entry_id=7)
    q.skip(b.id)
    assert q.get(a.id).status == RESOLVED
    assert q.get(a.id).entry_id == 7
    assert q.get(b.id).status == SKIPPED
    assert q.open_requests() == []


def test_replay_from_log(tmp_path):
    path = tmp_path / "q.teach"
    q = TeachQueue(path)
    a = q.add("One.", ["[V/VBD//]"], "unsuccessful")
    b = q.add("Two.", [], "successful")
    q.resolve(a.id, entry_id=3)

    replayed = TeachQueue(path)
    assert replayed.get(a.id).status == RESOLVED
    assert replayed.get(a.id).entry_id == 3
    assert replayed.get(b.id).status == OPEN
    assert replayed.get(b.id).built_sequence == []
    c = replayed.add("Three.", [], "unsuccessful")
    assert c.id == b.id + 1


def test_skipped_sentence_can_be_requeued(tmp_path):
    q = TeachQueue(tmp_path / "q.teach")
    a = q.add("One.", [], "unsuccessful")
    q.skip(a.id)
    b = q.add("One.", [], "unsuccessful")
    assert b.id != a.id
    assert [x.id for x in q.open_requests()] == [b.id]
