import json

import pytest

from detres.cli import main
from detres.polyring import Polynomial


@pytest.fixture
def spec_file(tmp_path):
    def write(name, spec):
        p = tmp_path / name
        p.write_text(json.dumps(spec))
        return str(p)

    return write


SYLVESTER = {"m": 2, "n": 1, "r": 0, "d": [3, 5], "k": [0]}
SYL11 = {"m": 2, "n": 1, "r": 0, "d": [1, 1], "k": [0]}
BAD = {"m": 2, "n": 1, "r": 0, "d": [1, 1], "k": [1]}


def phi_json(rows):
    return [[p.to_json() for p in row] for row in rows]


def make_phi(entries):
    """entries: list of rows of (coeff_x, coeff_y) linear forms."""
    from detres.polyring import VarSet

    vs = VarSet(("x0", "x1"))
    return [
        [Polynomial(vs, {(1, 0): a, (0, 1): b}) for a, b in row]
        for row in entries
    ]


class TestDegree:
    def test_sylvester_json(self, spec_file, capsys):
        path = spec_file("s.json", SYLVESTER)
        assert main(["degree", "--spec", path, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["schema"] == "detres/1"
        assert data["multidegree"] == [5, 3]
        assert data["total_degree"] == 8

    def test_text_mode(self, spec_file, capsys):
        path = spec_file("s.json", SYLVESTER)
        assert main(["degree", "--spec", path]) == 0
        out = capsys.readouterr().out
        assert "multidegree: [5, 3]" in out

    def test_existence_failure(self, spec_file, capsys):
        path = spec_file("bad.json", BAD)
        assert main(["degree", "--spec", path]) == 3

    def test_missing_file(self, capsys):
        assert main(["degree", "--spec", "/nonexistent/x.json"]) == 2

    def test_byte_determinism(self, spec_file, capsys):
        path = spec_file("s.json", SYLVESTER)
        main(["degree", "--spec", path, "--json"])
        first = capsys.readouterr().out
        main(["degree", "--spec", path, "--json"])
        second = capsys.readouterr().out
        assert first == second


class TestMatrix:
    def test_generic_json_round_trip(self, spec_file, capsys):
        path = spec_file("s.json", SYL11)
        assert main(["matrix", "--spec", path, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["schema"] == "detres/1"
        assert len(data["row_basis"]) == 2
        for row in data["entries"]:
            for cell in row:
                Polynomial.from_json(cell)  # parses back

    def test_concrete(self, spec_file, tmp_path, capsys):
        path = spec_file("s.json", SYL11)
        phi = tmp_path / "phi.json"
        phi.write_text(json.dumps(phi_json(make_phi([[(1, 0), (0, 1)]]))))
        assert main(
            ["matrix", "--spec", path, "--phi", str(phi), "--json"]
        ) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["symbolic"] is False


class TestResultant:
    def test_sylvester(self, spec_file, capsys):
        path = spec_file("s.json", SYL11)
        assert main(["resultant", "--spec", path, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["confirmed"] is True
        assert data["block_degrees"] == [1, 1]
        poly = Polynomial.from_json(data["polynomial"])
        assert poly.degree == 2


class TestVanishTest:
    def test_nonvanishing_exit_zero(self, spec_file, tmp_path, capsys):
        path = spec_file("s.json", SYL11)
        phi = tmp_path / "phi.json"
        phi.write_text(json.dumps(phi_json(make_phi([[(1, 0), (0, 1)]]))))
        assert main(["test", "--spec", path, "--phi", str(phi)]) == 0

    def test_vanishing_exit_ten(self, spec_file, tmp_path, capsys):
        path = spec_file("s.json", SYL11)
        phi = tmp_path / "phi.json"
        phi.write_text(json.dumps(phi_json(make_phi([[(1, 0), (1, 0)]]))))
        assert main(["test", "--spec", path, "--phi", str(phi)]) == 10

    def test_bad_phi(self, spec_file, tmp_path, capsys):
        path = spec_file("s.json", SYL11)
        phi = tmp_path / "phi.json"
        phi.write_text("not json")
        assert main(["test", "--spec", path, "--phi", str(phi)]) == 2


class TestChow:
    def test_matrix_only(self, capsys):
        assert main(["chow", "--scroll", "2,1", "--matrix-only", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["matrix"]["row_basis"]) == 5
        assert len(data["matrix"]["col_basis"]) == 6

    def test_bad_scroll(self, capsys):
        assert main(["chow", "--scroll", "2,x", "--matrix-only"]) == 2
        assert main(["chow", "--scroll", "2,0", "--matrix-only"]) == 2


class TestChowTest:
    def test_meeting_plane(self, tmp_path, capsys):
        plane = tmp_path / "plane.json"
        plane.write_text(
            json.dumps(
                [
                    ["1", "-1", "0", "0", "0"],
                    ["0", "1", "-1", "0", "0"],
                    ["0", "0", "0", "1", "-1"],
                ]
            )
        )
        assert main(["chow-test", "--scroll", "2,1", "--plane", str(plane)]) == 10

    def test_missing_plane(self, capsys):
        assert main(["chow-test", "--scroll", "2,1", "--plane", "/no.json"]) == 2


class TestComplex:
    def test_minus_one_line(self, spec_file, capsys):
        path = spec_file("s.json", SYLVESTER)
        assert main(["complex", "--spec", path, "-p", "-1"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "p=-1 I=(1,) I'=(1,) n(I)=0"

    def test_json_round_trip(self, spec_file, capsys):
        path = spec_file("s.json", SYLVESTER)
        assert main(["complex", "--spec", path, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["schema"] == "detres/1"
        assert {t["p"] for t in data["terms"]} == {-2, -1, 0}
