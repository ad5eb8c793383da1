import json

import pytest

from sympcoh import (
    ModelFile,
    ModelFileError,
    corpus,
    corpus_model,
    corpus_names,
    load_model,
    parse_model_text,
    run_compute,
)
from sympcoh.models import FLAG_COMPLETELY_SOLVABLE, FLAG_LATTICE
from sympcoh.report import CAVEAT_LATTICE_UNIMODULAR, CAVEAT_LOWER_BOUND


MODEL_TEXT = """\
# a comment
name = demo
dim = 6
structure = 0,0,0,12,14-23,15+34
omega = 16+35+24

flag = assert-lattice
form.psi = 136+125
"""


class TestModelFiles:
    def test_parse_full(self):
        model = parse_model_text(MODEL_TEXT)
        assert model.name == "demo"
        assert model.dim == 6
        assert model.structure == "0,0,0,12,14-23,15+34"
        assert model.omega == "16+35+24"
        assert model.flags == frozenset({"assert-lattice"})
        assert model.extra_forms == (("psi", "136+125"),)

    def test_missing_structure(self):
        with pytest.raises(ModelFileError):
            parse_model_text("name = x\n")

    def test_unknown_key(self):
        with pytest.raises(ModelFileError):
            parse_model_text("structure = 0,0\nshape = round\n")

    def test_unknown_flag(self):
        with pytest.raises(ModelFileError):
            parse_model_text("structure = 0,0\nflag = assert-anything\n")

    def test_duplicate_key(self):
        with pytest.raises(ModelFileError):
            parse_model_text("structure = 0,0\nstructure = 0,0\n")

    def test_bad_line(self):
        with pytest.raises(ModelFileError):
            parse_model_text("structure 0,0\n")

    def test_load_model_uses_stem_as_default_name(self, tmp_path):
        path = tmp_path / "flatland.model"
        path.write_text("structure = 0,0\nomega = 12\n")
        model = load_model(path)
        assert model.name == "flatland"


class TestCorpus:
    def test_names(self):
        assert corpus_names() == (
            "torus6",
            "example1",
            "example2",
            "example3",
            "example4",
        )

    def test_contents(self):
        by_name = {model.name: model for model in corpus()}
        assert by_name["torus6"].structure == "0^6"
        assert by_name["torus6"].omega == "14+25+36"
        assert by_name["example1"].structure == "0,0,0,12,14-23,15+34"
        assert by_name["example1"].omega == "16+35+24"
        assert by_name["example2"].structure == "-13,23,0,-56,46,0"
        assert by_name["example2"].omega == "12+36+45"
        assert by_name["example3"].structure == "-23,0,0,-46,56,0"
        assert by_name["example3"].omega == "12+36+45"
        assert FLAG_COMPLETELY_SOLVABLE in by_name["example3"].flags
        assert by_name["example4"].structure == "0,12-45,-13+46,0,15-24,-16+34"
        assert by_name["example4"].omega == "14+35+62"
        assert by_name["example4"].extra_forms == (("re_psi", "136+125+234-456"),)

    def test_unknown_corpus_model(self):
        from sympcoh import InputError

        with pytest.raises(InputError):
            corpus_model("example9")


@pytest.fixture(scope="module")
def report1():
    return run_compute(corpus_model("example1"))


@pytest.fixture(scope="module")
def report4():
    return run_compute(corpus_model("example4"))


class TestReports:
    def test_json_round_trip_byte_identical(self, report1):
        text = report1.to_json()
        parsed = json.loads(text)
        assert json.dumps(parsed, indent=2) + "\n" == text

    def test_deterministic(self):
        a = run_compute(corpus_model("example2")).to_json()
        b = run_compute(corpus_model("example2")).to_json()
        assert a == b

    def test_example1_content(self, report1):
        data = report1.to_json_dict()
        assert data["betti"] == [1, 3, 4, 4, 4, 3, 1]
        assert data["hlc"]["overall"] is False
        assert data["dd_lambda_lemma"] is False
        deg2 = next(e for e in data["decompositions"] if e["degree"] == 2)
        assert deg2["full"] and deg2["direct"]
        deg3 = next(e for e in data["decompositions"] if e["degree"] == 3)
        assert not deg3["full"] and not deg3["direct"]
        assert data["caveats"] == []

    def test_caveats(self):
        reports = {name: run_compute(corpus_model(name)) for name in corpus_names()}
        for name in ("torus6", "example1", "example3"):
            assert CAVEAT_LOWER_BOUND not in reports[name].data["caveats"], name
        for name in ("example2", "example4"):
            assert CAVEAT_LOWER_BOUND in reports[name].data["caveats"], name

    def test_example4_extra_form_checks(self, report4):
        checks = report4.data["extra_form_checks"]
        assert len(checks) == 1
        entry = checks[0]
        assert entry["name"] == "re_psi"
        assert entry["degree"] == 3
        assert entry["d_closed"] is True
        assert entry["primitive"] is True
        assert entry["class_in_h0s"] is True

    def test_example4_hlc_reported(self, report4):
        hlc = report4.data["hlc"]
        assert len(hlc["per_degree"]) == 4
        assert all(isinstance(item["isomorphism"], bool) for item in hlc["per_degree"])

    def test_degree_filter(self, report1):
        data = report1.to_json_dict(degree=2)
        assert all(e["degree"] == 2 for e in data["hrs"])
        assert all(e["degree"] == 2 for e in data["decompositions"])
        assert all(e["degree"] == 2 for e in data["cohomology"]["de_rham"])
        full = report1.to_json_dict()
        assert len(full["decompositions"]) == 7

    def test_text_report_mentions_key_facts(self, report1):
        text = report1.to_text()
        assert "betti: [1, 3, 4, 4, 4, 3, 1]" in text
        assert "hard Lefschetz: False" in text

    def test_rationals_serialize_as_strings(self, report1):
        reps3 = next(
            e for e in report1.data["cohomology"]["de_rham"] if e["degree"] == 3
        )["representatives"]
        assert "e146+1/2*e236+1/2*e345" in reps3

    def test_model_without_omega(self):
        model = ModelFile(name="bare", structure="0,0,0,12")
        report = run_compute(model)
        data = report.to_json_dict()
        assert data["betti"] == [1, 3, 4, 3, 1]
        assert data["hlc"] is None
        assert data["cohomology"]["d_lambda"] is None
        assert data["hrs"] is None

    def test_lattice_flag_on_non_unimodular_gets_caveat(self):
        model = ModelFile(
            name="bad-lattice",
            structure="12,0",
            omega="12",
            flags=frozenset({FLAG_LATTICE}),
        )
        report = run_compute(model)
        assert CAVEAT_LATTICE_UNIMODULAR in report.data["caveats"]
        assert CAVEAT_LOWER_BOUND in report.data["caveats"]
