"""
Unit tests for body documents, report rendering and settings
"""

import json
from pathlib import Path

import pytest

from app.config import (
    DevelopmentSettings,
    ProductionSettings,
    Settings,
    TestingSettings,
    get_config_summary,
    get_settings,
)
from app.report import format_number, render
from app.serialization import load_body, parse_body, serialize_body
from core.errors import DocumentError
from evidence.joins import product_join
from evidence.validation import make_frame, validate_body
from explorer.search import canonical_counterexample

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


class TestDocuments:
    @pytest.mark.parametrize("name", ["diagonal_joint.json", "certainty.json", "bayesian8.json", "vacuous4.json"])
    def test_canonical_round_trip(self, name):
        """Test canonical round trip"""
        text = (SAMPLES / name).read_text(encoding="utf-8")
        assert serialize_body(parse_body(text)) == text

    def test_diagonal_joint_is_the_canonical_counterexample(self):
        """Test diagonal joint is the canonical counterexample"""
        assert load_body(SAMPLES / "diagonal_joint.json") == canonical_counterexample()

    def test_yaml_is_normalised(self):
        """Test yaml is normalised"""
        body = load_body(SAMPLES / "conflicting.yaml")
        document = json.loads(serialize_body(body))
        assert document["universe"] == ["red", "green", "blue"]
        assert [entry["set"] for entry in document["masses"]] == [["red"], ["red", "green"], ["blue"]]
        assert "product_of" not in document

    def test_product_join_serializes_factors(self):
        """Test product join serializes factors"""
        x = validate_body(make_frame(["a", "b"]), [(["a"], 1.0)])
        y = validate_body(make_frame(["u", "v"]), [(["u", "v"], 1.0)])
        document = json.loads(serialize_body(product_join(x, y)))
        assert document["product_of"] == [["a", "b"], ["u", "v"]]
        assert document["masses"] == [{"set": ["a|u", "a|v"], "mass": 1.0}]

    def test_product_universe_must_match(self):
        """Test product universe must match"""
        text = json.dumps({
            "universe": ["a|u", "b|u"],
            "product_of": [["a", "b"], ["u"]],
            "masses": [{"set": ["a|u"], "mass": 1.0}],
        })
        assert parse_body(text).frame.is_product
        swapped = text.replace('["a|u", "b|u"]', '["b|u", "a|u"]')
        with pytest.raises(DocumentError):
            parse_body(swapped)

    @pytest.mark.parametrize("text", [
        "[1, 2]",
        "universe: [a\n",
        '{"universe": ["a"], "masses": [{"set": ["a"], "mass": "lots"}]}',
        '{"universe": ["a"], "masses": [{"set": [], "mass": 1.0}]}',
        '{"universe": ["a"], "masses": [{"set": ["a"], "mass": 1.0, "weight": 2}]}',
        '{"masses": [{"set": ["a"], "mass": 1.0}]}',
    ])
    def test_malformed_documents(self, text):
        """Test malformed documents"""
        with pytest.raises(DocumentError):
            parse_body(text)

    @pytest.mark.parametrize("mass", ["true", "\"1.0\""])
    def test_masses_must_be_numbers(self, mass):
        """Test that booleans and numeric strings are not read as masses"""
        with pytest.raises(DocumentError) as exc_info:
            parse_body('{"universe": ["a"], "masses": [{"set": ["a"], "mass": ' + mass + "}]}")
        assert "masses" in str(exc_info.value.context)

    def test_integer_mass_is_accepted(self):
        """Test that an integer mass of 1 is a valid document"""
        body = parse_body('{"universe": ["a", "b"], "masses": [{"set": ["a"], "mass": 1}]}')
        assert body.masses == (1.0,)


class TestRendering:
    def setup_method(self):
        self.payload = {
            "rows": [{"n": 2, "value": 0.123456789, "argmax": [1.0, 0.5], "ok": True, "body": {"k": 1}}],
            "summary": {"trials": 10, "best": None},
        }

    def test_negative_zero_is_printed_as_zero(self):
        """Test negative zero is printed as zero"""
        assert format_number(-0.0, 3) == "0.000"
        assert format_number(-1e-17, 6) == "0.000000"
        assert format_number(-0.25, 2) == "-0.25"

    def test_table(self):
        """Test table"""
        text = render(self.payload, "table", 3)
        lines = text.splitlines()
        assert lines[0].split() == ["n", "value", "argmax", "ok"]
        assert lines[2].split() == ["2", "0.123", "1.000", "0.500", "yes"]
        assert lines[-1].split() == ["best", "-"]

    def test_tsv(self):
        """Test tsv"""
        lines = render(self.payload, "tsv", 2).splitlines()
        assert lines[0] == "n\tvalue\targmax\tok"
        assert lines[1] == "2\t0.12\t1.00 0.50\tyes"
        assert lines[2] == "# trials\t10"

    def test_json_rounds_values_not_bodies(self):
        """Test json rounds values not bodies"""
        document = json.loads(render(self.payload, "json", 4))
        row = document["rows"][0]
        assert row["value"] == 0.1235
        assert row["argmax"] == [1.0, 0.5]
        assert row["body"] == {"k": 1}
        assert document["summary"] == {"trials": 10, "best": None}

    def test_json_is_stable(self):
        """Test json is stable"""
        assert render(self.payload, "json", 6) == render(self.payload, "json", 6)


class TestSettings:
    def test_profiles(self, monkeypatch):
        """Test settings profiles"""
        monkeypatch.setenv("ENVIRONMENT", "production")
        assert isinstance(get_settings(), ProductionSettings)
        monkeypatch.setenv("ENVIRONMENT", "testing")
        assert isinstance(get_settings(), TestingSettings)
        monkeypatch.setenv("ENVIRONMENT", "anything")
        assert isinstance(get_settings(), DevelopmentSettings)

    def test_environment_overrides(self, monkeypatch):
        """Test environment overrides"""
        monkeypatch.setenv("EVIDENCE_STRIFE_CEILING", "0.95")
        monkeypatch.setenv("EVIDENCE_SEARCH_WORKERS", "3")
        current = Settings()
        assert current.strife_ceiling == 0.95
        assert current.search_workers == 3

    @pytest.mark.parametrize("name, value", [
        ("EVIDENCE_NORMALIZATION_TOLERANCE", "0"),
        ("EVIDENCE_DEFAULT_PRECISION", "16"),
        ("EVIDENCE_DEFAULT_RESOLUTION", "0.5"),
        ("EVIDENCE_RESTART_COUNT", "0"),
    ])
    def test_validation(self, monkeypatch, name, value):
        """Test settings validators"""
        monkeypatch.setenv(name, value)
        with pytest.raises(ValueError):
            Settings()

    def test_summary(self):
        """Test summary"""
        summary = get_config_summary(Settings())
        assert summary["default_precision"] == 6
        assert summary["default_resolution"] == 1e-4
