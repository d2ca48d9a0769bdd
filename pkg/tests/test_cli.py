import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from declab.cli import EXIT_BAD_SPACE, SCHEMA_PATH, main
from declab.dsl import ParseError, parse_space, parse_space_canonical
from declab.runner import CHECKS, exit_code, run
from declab.sset import boundary, horn, parse_sset, product, simplex

jsonschema = pytest.importorskip("jsonschema")
SCHEMA = json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


def validate(text):
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    return doc


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestDSL:
    def test_builders(self):
        assert parse_space("simplex(2)").level(0) == simplex(2).level(0)
        assert len(parse_space("boundary(3)").nondegenerate(2)) == 4
        assert len(parse_space("horn(2,1)").nondegenerate(1)) == 2
        assert len(parse_space("product(simplex(1),simplex(1))").nondegenerate(2)) == 2
        assert len(parse_space("quotient(simplex(1),boundary(1))").level(0)) == 1
        assert len(parse_space("disjoint(simplex(0),simplex(1))").level(0)) == 3

    def test_canonical_strips_whitespace(self):
        _, canon = parse_space_canonical(" product( simplex(1) ,\thorn(2, 0) ) ")
        assert canon == "product(simplex(1),horn(2,0))"

    def test_same_cells_as_builders(self):
        assert parse_space("horn(3,2)").cells == horn(3, 2).cells
        assert parse_space("product(boundary(2),simplex(1))").level(2) == product(boundary(2), simplex(1)).level(2)

    @pytest.mark.parametrize(
        "text,pos",
        [
            ("", 0),
            ("simplex", 7),
            ("simplex(1", 9),
            ("simplex(1))", 10),
            ("cube(2)", 0),
            ("horn(2,3)", 0),
            ("boundary(0)", 0),
            ("simplex(-1)", 8),
            ("product(simplex(1))", 18),
            ("  simplex(1) x", 13),
        ],
    )
    def test_errors(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_space(text)
        assert info.value.pos == pos

    @given(st.text(alphabet="simplexboundaryhornproductquotientdisjoint(),0123 ", max_size=30))
    def test_never_crashes(self, text):
        try:
            parse_space_canonical(text)
        except ParseError:
            pass
        except ValueError as exc:
            # quotient of non-subcomplexes is rejected by the builder
            assert "quotient" in text, exc


class TestRunner:
    def test_exit_codes(self):
        assert exit_code([]) == 0
        assert exit_code(["pass", "pass"]) == 0
        assert exit_code(["pass", "inconclusive"]) == 2
        assert exit_code(["inconclusive", "fail"]) == 1

    def test_unknown_check(self):
        with pytest.raises(KeyError):
            run("nope", "simplex(0)")

    def test_inconclusive(self):
        e = run("comparison", "boundary(2)", levels=2, max_maps=5)
        assert e.status == "inconclusive"
        assert "cutoff" in e.witness

    @pytest.mark.parametrize("name", sorted(CHECKS))
    def test_every_check_passes_on_interval(self, name):
        e = run(name, "simplex(1)", levels=2, degree=1)
        assert e.status == "pass", e.witness


class TestCommands:
    def test_check_text(self, capsys):
        code, out, _ = run_cli(capsys, "check", "counit", "pi0-ident", "--space", "boundary(2)", "--levels", "3")
        assert code == 0
        assert out.splitlines()[0].startswith("PASS")
        assert len(out.splitlines()) == 2

    def test_check_json(self, capsys):
        code, out, _ = run_cli(capsys, "check", "split-fork", "--space", "horn(2, 1)", "--levels", "3", "--json")
        doc = validate(out)
        assert code == 0
        (entry,) = doc["results"]
        assert entry["object"] == "horn(2,1)"
        assert entry["cutoff"] == {"levels": 3, "degree": 2}
        assert entry["status"] == "pass"

    def test_json_is_reproducible(self, capsys):
        argv = ["check", "two-route-sigma", "retraction", "--space", "quotient(simplex(1),boundary(1))", "--levels", "2", "--json"]
        first = run_cli(capsys, *argv)[1]
        second = run_cli(capsys, *argv)[1]
        assert first == second
        validate(first)

    def test_inconclusive_exit(self, capsys):
        code, out, _ = run_cli(capsys, "check", "comparison", "--space", "boundary(2)", "--levels", "2", "--max-maps", "5", "--json")
        assert code == 2
        assert validate(out)["results"][0]["status"] == "inconclusive"

    def test_bad_space(self, capsys):
        code, _, err = run_cli(capsys, "check", "counit", "--space", "simplex(")
        assert code == EXIT_BAD_SPACE
        assert "bad space expression" in err

    def test_bad_cutoff(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["check", "counit", "--levels", "-1"])
        assert info.value.code == 2

    def test_print_round_trip(self, capsys, tmp_path):
        out_file = tmp_path / "b.sset"
        assert main(["print", "--space", "boundary(3)", "--out", str(out_file)]) == 0
        X = parse_sset(out_file.read_text(encoding="utf-8"))
        assert X.cells == boundary(3).cells

    def test_homology_text(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "--space", "boundary(3)")
        assert code == 0
        assert out == "H_0 = Z\nH_1 = 0\nH_2 = Z\n"

    def test_homology_json(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "--space", "quotient(simplex(1),boundary(1))", "--degree", "1", "--json")
        doc = validate(out)
        assert [g["rank"] for g in doc["results"]] == [1, 1]

    def test_unit_homology_circle(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "unit-homology", "--space", "quotient(simplex(1),boundary(1))", "--degree", "1", "--json"
        )
        assert code == 0
        entry = validate(out)["results"][0]
        assert entry["status"] == "pass"
        assert [g["rank"] for g in entry["stats"]["source"]] == [1, 1]

    def test_console_script(self):
        out = subprocess.run(
            [sys.executable, "-m", "declab.cli", "homology", "--space", "simplex(0)", "--degree", "0"],
            capture_output=True,
            text=True,
            check=True,
        )
        assert out.stdout == "H_0 = Z\n"
