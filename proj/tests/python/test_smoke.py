import gaoforge


def test_constants():
    assert gaoforge.gao(12) == 15
    assert gaoforge.davenport(12) == 4
    assert gaoforge.davenport(7, weights="1") == 7


def test_sequences():
    assert gaoforge.parse_sequence(8, "1,2,4,0x7") == [1, 2, 4] + [0] * 7
    assert gaoforge.format_sequence(8, [1, 2, 4] + [0] * 7) == "1,2,4,0x7"
    assert gaoforge.canonical_profile(8, "3,6,4,0x7") == [1, 2, 4] + [8] * 7
    assert "Star" in gaoforge.classify(8, "1,2,4,0x7")


def test_parse_error():
    try:
        gaoforge.parse_sequence(8, "9")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_run():
    report, code = gaoforge.run("extremal", n="8")
    assert code == 0
    assert report["schema_version"] == gaoforge.SCHEMA_VERSION
    assert len(report["results"][0]["classes"]) == 4
    report, code = gaoforge.run("constants", n="1")
    assert code == 3
    assert report["status"]


def test_budget():
    _, code = gaoforge.run("constants", n="24", budget_nodes=5)
    assert code == 2
