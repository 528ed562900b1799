import pytest

from fractconvex import parse, chord_check, hermite_hadamard, jensen
from fractconvex.database import FracDB, FracDBOrm, FracDBReports
from fractconvex.exc import FracDBExc


@pytest.fixture
def frac_db(tmp_path) -> FracDB:
    return FracDB(url=f"sqlite:///{tmp_path / 'reports.db'}")


def test_engine_arguments():
    with pytest.raises(ValueError):
        FracDB()

    with pytest.raises(FracDBExc):
        FracDB(url="not a url")


def test_archive_and_select(frac_db):
    hh = hermite_hadamard(parse("x^(3a)"), 0.0, 1.0, 0.5)
    chord = chord_check(parse("-x^(2a)"), (0.0, 2.0), 0.5)

    @frac_db.orm_decorator()
    def save(orm: FracDBOrm) -> list[FracDBReports]:
        return [orm.add_report(hh), orm.add_report(chord)]

    rows = save()

    assert rows[0].check == "hh"
    assert rows[0].margin2 == pytest.approx(hh.margins[1])
    assert rows[1].lhs is None
    assert rows[1].satisfied is False

    with FracDBOrm(frac_db.session) as orm:
        selected = orm.select_reports("hh", mode="real")

        assert len(selected) == 1
        assert FracDBOrm.payload(selected[0]) == hh.to_dict()
        assert orm.select_reports("hh", mode="fractal") == []
        assert FracDBOrm.payload(orm.select_reports("convexity.chord")[0])["grid"]["verdict"] == "nonconvex"


def test_select_latest_by_key(frac_db):
    e = parse("x^(2a)")
    first = jensen(e, [1.0, 3.0], [0.5, 0.5], 1.0)
    second = jensen(e, [1.0, 2.0], [0.5, 0.5], 1.0)

    @frac_db.orm_decorator()
    def save(orm: FracDBOrm) -> None:
        orm.add_report(first)
        orm.add_report(second)

    save()

    with FracDBOrm(frac_db.session) as orm:
        row = orm.select_report_by_key("jensen", "x^(2a)", 1.0, "real")

        assert FracDBOrm.payload(row)["grid"]["xs"] == [1.0, 2.0]
        assert orm.select_report_by_key("jensen", "x^(2a)", 0.5, "real") is None


def test_setup_twice(frac_db):
    frac_db.setup_db()
    frac_db.setup_db()

    with FracDBOrm(frac_db.session) as orm:
        assert orm.select_reports("jensen") == []
