import json
from importlib import resources

import pytest

from birealize.cli import main

CAT_DOC = {
    "kind": "S",
    "lang": "en",
    "children": [
        {"kind": "NP", "children": [
            {"kind": "D", "lemma": "the"},
            {"kind": "N", "lemma": "cat"},
            {"kind": "A", "lemma": "small"},
        ]},
        {"kind": "VP", "children": [
            {"kind": "V", "lemma": "jump", "options": {"t": "ps"}},
            {"kind": "PP", "children": [
                {"kind": "P", "lemma": "on"},
                {"kind": "NP", "children": [
                    {"kind": "D", "lemma": "the"},
                    {"kind": "N", "lemma": "mat"},
                    {"kind": "A", "lemma": "green"},
                ]},
            ]},
        ]},
    ],
}


def test_realize_file(tmp_path, capsys):
    tree = tmp_path / "cat_en.tree.json"
    tree.write_text(json.dumps(CAT_DOC), encoding="utf-8")
    assert main(["realize", str(tree)]) == 0
    out = capsys.readouterr()
    assert out.out.strip() == "The small cat jumped on the green mat."
    assert out.err == ""


def test_realize_reports_warnings_on_stderr(tmp_path, capsys):
    doc = {"kind": "NP", "lang": "en",
           "children": [{"kind": "D", "lemma": "the"}, {"kind": "N", "lemma": "frobble"}]}
    tree = tmp_path / "warn.tree.json"
    tree.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["realize", str(tree)]) == 0
    out = capsys.readouterr()
    assert "frobble" in out.out
    assert "MissingLemma" in out.err


def test_realize_missing_file(capsys):
    assert main(["realize", "no-such-file.json"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_realize_bad_document(tmp_path, capsys):
    tree = tmp_path / "bad.json"
    tree.write_text('{"kind": "XP", "lang": "en"}', encoding="utf-8")
    assert main(["realize", str(tree)]) == 2
    assert "$.kind" in capsys.readouterr().err


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["report", "--style", "baroque", "--date", "x", "--today", "y"])
    assert err.value.code == 1


def test_report_golden(capsys):
    code = main(["report", "--date", "2023-09-25T17:00", "--today", "2023-09-26T17:00",
                 "--participants", "Alice:f"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "Alice (one person) was present at an assembly on Monday, September 25, 2023 at 5 p.m."
    assert out[1] == "Alice (une personne) fut présente à une réunion le lundi 25 septembre 2023 à 17 h."


def test_report_single_language_interface(capsys):
    code = main(["report", "--date", "2023-09-28T14:00", "--today", "2023-09-29T14:00",
                 "--participants", "Alice:f", "--style", "interface", "--lang", "en"])
    assert code == 0
    out = capsys.readouterr().out.strip()
    assert out == "Alice (one person) attended the assembly on Thursday, September 28, 2023 at 2 p.m."


def test_report_bad_date(capsys):
    assert main(["report", "--date", "not-a-date", "--today", "2023-09-26"]) == 2


def test_drill_loop_seeded(capsys, monkeypatch):
    answers = iter(["whatever", "end"])
    monkeypatch.setattr("builtins.input", lambda prompt="": next(answers))
    assert main(["drill", "--source", "en", "--target", "fr",
                 "--level", "1", "--seed", "42"]) == 0
    first = capsys.readouterr().out
    answers = iter(["whatever", "end"])
    assert main(["drill", "--source", "en", "--target", "fr",
                 "--level", "1", "--seed", "42"]) == 0
    assert capsys.readouterr().out == first
    assert ":KO" in first


def test_drill_same_languages_rejected(capsys):
    assert main(["drill", "--source", "en", "--target", "en"]) == 1


def test_lexicon_check(tmp_path, capsys):
    data = resources.files("birealize").joinpath("data")
    code = main(["lexicon", "check",
                 str(data / "en.lexicon.json"), str(data / "en.rules.json"), "--lang", "en"])
    assert code == 0
    out = capsys.readouterr().out
    assert "entries" in out and "tables" in out

    broken = tmp_path / "broken.json"
    broken.write_text('{"zorp": {"V": {"tab": "vXX"}}}', encoding="utf-8")
    assert main(["lexicon", "check", str(broken), str(data / "en.rules.json")]) == 2
    assert "invalid lexicon" in capsys.readouterr().err
