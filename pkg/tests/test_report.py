import datetime
from datetime import timedelta

import pytest

from birealize import ReportSpec, add_participants, generate_report, tense_for
from birealize.report import EnglishRealizer, FrenchRealizer, word_table_sentence


def day(*args):
    return datetime.datetime(*args)


def test_tense_for():
    assert tense_for(day(2023, 9, 26), day(2023, 9, 26)) == "p"
    assert tense_for(day(2023, 9, 27), day(2023, 9, 26)) == "f"
    assert tense_for(day(2023, 9, 25), day(2023, 9, 26)) == "ps"
    # same day, different clock, still present
    assert tense_for(day(2023, 9, 26, 23), day(2023, 9, 26, 1)) == "p"


def _spec(participants, date, today):
    return ReportSpec("assembly", "réunion", participants, date, today)


def test_interface_copula_variant_matches_word_table(engine):
    today = day(2023, 9, 26, 17, 0)
    for i, date in ((1, today - timedelta(days=1)), (2, today), (3, today + timedelta(days=1))):
        spec = _spec(["Alice", "Eve", "Bob"][:i], date, today)
        table_text = generate_report(engine, spec, "word-table", "en")
        copula = EnglishRealizer(engine, phrasing="copula")
        interface_text = copula.report(spec.event_en, spec.participants, spec.date, spec.today)
        assert table_text == interface_text


def test_gender_cascade(engine):
    today = day(2023, 9, 26, 17, 0)
    all_female = _spec(["Alice", "Eve"], today, today)
    assert generate_report(engine, all_female, "word-table", "fr").count("présentes") == 1
    with_male = _spec(["Alice", "Eve", "Bob"], today, today)
    text = generate_report(engine, with_male, "word-table", "fr")
    assert "présents" in text and "présentes" not in text


def test_interface_styles_use_their_own_words(engine):
    today = day(2023, 9, 29, 14, 0)
    spec = _spec(["Alice"], today, today)
    en = generate_report(engine, spec, "interface", "en")
    fr = generate_report(engine, spec, "interface", "fr")
    assert "attends the assembly" in en
    assert "individu" in fr and "personne" not in fr
    word_table_fr = generate_report(engine, spec, "word-table", "fr")
    assert "personne" in word_table_fr


def test_subclasses_share_the_operation_set(engine):
    ops = {"conjunction", "individual", "meeting", "attend"}
    for cls in (EnglishRealizer, FrenchRealizer):
        assert ops <= set(dir(cls))
    # abstract base cannot be instantiated directly
    from birealize.report import LanguageRealizer
    with pytest.raises(TypeError):
        LanguageRealizer(engine)


def test_missing_participant_warns_not_fails(engine):
    spec = _spec(["Zorblatt"], day(2023, 9, 26), day(2023, 9, 26))
    tree = word_table_sentence(engine, spec, "en")
    result = engine.realize(tree)
    assert "Zorblatt" in result.text
    assert any(w.code == "MissingLemma" for w in result.warnings)


def test_unknown_style_rejected(engine):
    with pytest.raises(ValueError):
        generate_report(engine, _spec(["Alice"], day(2023, 1, 1), day(2023, 1, 1)),
                        style="florid", language="en")
