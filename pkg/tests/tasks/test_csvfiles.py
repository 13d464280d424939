"""
Tests for CSV output
"""
from collections import OrderedDict
from fractions import Fraction


def test_format_value():
    from mvlab.utils.csvfiles import format_value

    assert format_value(None) == ""
    assert format_value(True) == "true"
    assert format_value(Fraction(-3, 6)) == "-1/2"
    assert format_value(Fraction(4)) == "4"
    assert format_value(153) == "153"
    assert format_value(0.1) == "0.1"
    assert format_value((0, 1, 2)) == "0-1-2"
    assert format_value("all-ones") == "all-ones"


def test_write_and_read(tmp_path):
    from mvlab.utils.csvfiles import read_csv, write_csv

    from ..utils import read_rows

    path = str(tmp_path / "nested" / "out.csv")
    config = OrderedDict([("command", "mv-padic"), ("p", 3), ("sigma", "0,1")])
    write_csv(path, ["r", "value"], [(4.0, 15.0), (2, None)], config)
    comment, header, lines = read_rows(path)
    assert comment == "# command=mv-padic; p=3; sigma=0,1"
    assert header == ["r", "value"]
    assert lines == ["4.0,15.0", "2,"]
    assert read_csv(path) == [{"r": "4.0", "value": "15.0"}, {"r": "2", "value": ""}]


def test_write_without_comment(tmp_path):
    from mvlab.utils.csvfiles import write_csv

    path = str(tmp_path / "plain.csv")
    write_csv(path, ["kappa", "trace"], [(0, 3)])
    with open(path, encoding="utf-8") as csvfile:
        assert csvfile.read() == "kappa,trace\n0,3\n"
