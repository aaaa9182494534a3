"""
Unit tests for the uncertainty measures
"""

import json
import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from core.errors import NotAFocalSet
from evidence.joins import FIRST_AXIS, SECOND_AXIS, marginalize, relabel
from evidence.measures import (
    conflict_con,
    _check_ns_range,
    conflict_CON,
    discord,
    discord_from_conflict,
    k_term,
    measure_report,
    nonspecificity,
    shannon_if_bayesian,
    strife,
    strife_from_conflict,
    total_NS,
    total_T,
)
from evidence.models import FocalSet
from evidence.validation import (
    certainty_body,
    make_frame,
    uniform_bayesian_body,
    vacuous_body,
    validate_body,
)
from explorer.sampling import random_bayesian_body, random_body
from explorer.search import canonical_counterexample

DIAGONAL_STRIFE = 0.5 * (math.log2(4) - math.log2(3))


def corpus(count=1000, max_size=6, max_focal=10):
    """Seeded bodies with 1..max_size elements and up to max_focal focal sets"""
    bodies = []
    for seed in range(count):
        n = 1 + seed % max_size
        limit = min(max_focal, (1 << n) - 1)
        focal_count = 1 + (seed * 7) % limit
        frame = make_frame([f"e{i}" for i in range(n)])
        bodies.append(random_body(frame, focal_count, seed))
    return bodies


class TestWorkedExamples:
    def setup_method(self):
        self.frame = make_frame(["a", "b", "c"])

    def test_nonspecificity(self):
        """Test nonspecificity"""
        body = validate_body(self.frame, [(["a", "b"], 0.5), (["a", "b", "c"], 0.5)])
        assert nonspecificity(body) == pytest.approx(0.5 + 0.5 * math.log2(3), abs=1e-12)

    def test_bayesian_collapse(self):
        """Test bayesian collapse"""
        body = validate_body(self.frame, [(["a"], 0.5), (["b"], 0.25), (["c"], 0.25)])
        assert discord(body) == pytest.approx(1.5, abs=1e-12)
        assert strife(body) == pytest.approx(1.5, abs=1e-12)
        assert shannon_if_bayesian(body) == pytest.approx(1.5, abs=1e-12)
        assert nonspecificity(body) == 0.0

    def test_conflict_scales_differ(self):
        """Test conflict scales differ"""
        body = validate_body(self.frame, [(["a"], 0.5), (["a", "b", "c"], 0.5)])
        singleton = FocalSet(bits=0b001)
        full = FocalSet(bits=0b111)
        # |B - A| / |B| against |A - B| / |A|
        assert conflict_con(body, singleton) == pytest.approx(0.5 * 2 / 3)
        assert conflict_CON(body, singleton) == 0.0
        assert conflict_con(body, full) == 0.0
        assert conflict_CON(body, full) == pytest.approx(0.5 * 2 / 3)

    def test_conflict_needs_focal_set(self):
        """Test conflict needs focal set"""
        body = vacuous_body(self.frame)
        with pytest.raises(NotAFocalSet):
            conflict_con(body, FocalSet(bits=0b001))
        with pytest.raises(NotAFocalSet):
            conflict_CON(body, FocalSet(bits=0b011))

    def test_shannon_only_for_bayesian(self):
        """Test shannon only for bayesian"""
        assert shannon_if_bayesian(vacuous_body(self.frame)) is None

    def test_diagonal_counterexample(self):
        """Test diagonal counterexample"""
        joint = canonical_counterexample()
        assert strife(joint) == pytest.approx(DIAGONAL_STRIFE, abs=1e-9)
        assert nonspecificity(joint) == pytest.approx(1.5, abs=1e-12)
        assert total_NS(joint) == pytest.approx(1.5 + DIAGONAL_STRIFE, abs=1e-9)
        assert strife(marginalize(joint, FIRST_AXIS)) == 0.0
        assert strife(marginalize(joint, SECOND_AXIS)) == 0.0


class TestEndpoints:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_certainty_is_zero(self, n):
        """Test certainty is zero"""
        frame = make_frame([f"x{i}" for i in range(n)])
        report = measure_report(certainty_body(frame, "x0"))
        for value in (report.nonspecificity, report.discord, report.strife, report.total_T, report.total_NS):
            assert abs(value) <= 1e-12
        assert report.shannon == 0.0

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_vacuous(self, n):
        """Test the vacuous body over n elements"""
        frame = make_frame([f"x{i}" for i in range(n)])
        report = measure_report(vacuous_body(frame))
        assert report.nonspecificity == pytest.approx(math.log2(n), abs=1e-12)
        assert abs(report.strife) <= 1e-12
        assert abs(report.discord) <= 1e-12
        assert report.total_NS == pytest.approx(math.log2(n), abs=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_uniform_bayesian(self, n):
        """Test uniform bayesian"""
        frame = make_frame([f"x{i}" for i in range(n)])
        report = measure_report(uniform_bayesian_body(frame))
        assert report.nonspecificity == 0.0
        for value in (report.discord, report.strife, report.total_T, report.total_NS, report.shannon):
            assert value == pytest.approx(math.log2(n), abs=1e-12)


class TestReport:
    def test_identities(self):
        """Test the identities carried in a measure report"""
        frame = make_frame(["a", "b", "c", "d"])
        body = validate_body(frame, [(["a", "b"], 0.4), (["b", "c", "d"], 0.35), (["d"], 0.25)])
        report = measure_report(body)
        assert report.strife == pytest.approx(report.nonspecificity - report.k_term, abs=1e-12)
        assert report.total_NS == pytest.approx(2 * report.nonspecificity - k_term(body), abs=1e-12)
        assert report.total_T == pytest.approx(total_T(body), abs=1e-15)
        assert not report.is_bayesian
        assert report.shannon is None


@pytest.mark.slow
class TestCorpus:
    def setup_method(self):
        self.bodies = corpus()

    def test_shannon_collapse(self):
        """Test shannon collapse"""
        for seed in range(1000):
            n = 1 + seed % 8
            body = random_bayesian_body(make_frame([f"e{i}" for i in range(n)]), seed)
            entropy = shannon_if_bayesian(body)
            assert abs(strife(body) - entropy) <= 1e-10
            assert abs(discord(body) - entropy) <= 1e-10

    def test_identity_suite(self):
        """Test identity suite"""
        for body in self.bodies:
            n = nonspecificity(body)
            k = k_term(body)
            assert abs(strife(body) - (n - k)) <= 1e-12
            assert abs(total_NS(body) - (2 * n - k)) <= 1e-12
            assert abs(discord(body) - discord_from_conflict(body)) <= 1e-12
            assert abs(strife(body) - strife_from_conflict(body)) <= 1e-12

    def test_ranges(self):
        """Test ranges"""
        for body in self.bodies:
            ceiling = math.log2(body.frame.size) + 1e-12
            for measure in (nonspecificity, discord, strife, total_T):
                value = measure(body)
                assert -1e-12 <= value <= ceiling

    def test_conflicts_lie_in_unit_interval(self):
        """Test conflicts lie in unit interval"""
        for body in self.bodies[:200]:
            for focal_set in body.focal_sets:
                assert -1e-12 <= conflict_con(body, focal_set) <= 1 + 1e-12
                assert -1e-12 <= conflict_CON(body, focal_set) <= 1 + 1e-12

    def test_conflict_scale_is_monotone(self):
        """Test that -log2(1 - CON) rises with CON across the focal sets of a body"""
        for body in self.bodies:
            scale = sorted(
                (con, -math.log2(1 - con))
                for con in (conflict_CON(body, focal_set) for focal_set in body.focal_sets)
            )
            for (low, low_scaled), (high, high_scaled) in zip(scale, scale[1:]):
                assert high_scaled >= low_scaled
                if high - low > 1e-12:
                    assert high_scaled > low_scaled

    def test_permutation_invariance(self):
        """Test permutation invariance"""
        rng = np.random.Generator(np.random.PCG64(11))
        for body in self.bodies[:300]:
            permutation = rng.permutation(body.frame.size).tolist()
            moved = relabel(body, permutation)
            for measure in (nonspecificity, discord, strife, k_term):
                assert measure(moved) == measure(body)


class TestProperties:
    @hypothesis_settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.tuples(st.integers(min_value=1, max_value=15), st.floats(min_value=0.01, max_value=1.0)),
            min_size=1,
            max_size=8,
        )
    )
    def test_ranges_on_four_elements(self, entries):
        """Test ranges on four elements"""
        frame = make_frame(["a", "b", "c", "d"])
        body = validate_body(frame, entries, renormalize=True)
        assert -1e-12 <= strife(body) <= 2 + 1e-12
        assert -1e-12 <= discord(body) <= 2 + 1e-12
        assert abs(strife(body) - strife_from_conflict(body)) <= 1e-12


class TestSoftChecks:
    def test_ns_above_range_is_logged(self, package_log):
        """Test that an NS value above log2 n is logged and not raised"""
        caplog = package_log("evidence")
        body = vacuous_body(make_frame(["a", "b", "c", "d"]))
        _check_ns_range(body, math.log2(4) + 1)
        events = [json.loads(r.getMessage()) for r in caplog.records if r.name == "evidence.measures"]
        assert any(e["event"] == "ns_range_violation" and e["ceiling"] == 2.0 for e in events)
        assert all(r.levelno == logging.WARNING for r in caplog.records if r.name == "evidence.measures")

    def test_ns_in_range_is_quiet(self, package_log):
        """Test that an NS value inside [0, log2 n] logs nothing"""
        caplog = package_log("evidence")
        body = vacuous_body(make_frame(["a", "b"]))
        _check_ns_range(body, 1.0)
        assert not [r for r in caplog.records if r.name == "evidence.measures"]
