"""Tests for verification jobs and the reproduction suite."""

from collections import Counter

import pytest

from centralizer import suite
from centralizer.errors import InconclusiveError, SpinCapError, SpinError
from centralizer.models import CheckResult, RunConfig, SuiteReport
from centralizer.suite import JOBS, paper_tasks, parse_triple, run_job, run_tasks


class TestParseTriple:
    """Test spin triple parsing."""

    def test_valid(self):
        """Test three spins parse in order."""
        assert [str(j) for j in parse_triple(["1", "1/2", "3/2"])] == ["1", "1/2", "3/2"]

    def test_wrong_length(self):
        """Test exactly three spins are required."""
        with pytest.raises(ValueError):
            parse_triple(["1/2", "1/2"])

    def test_malformed(self):
        """Test malformed spins are rejected."""
        with pytest.raises(SpinError):
            parse_triple(["1/3", "1", "1"])

    def test_cap(self):
        """Test the cap applies to every spin."""
        with pytest.raises(SpinCapError):
            parse_triple(["1/2", "1/2", "5/2"], cap=4)


class TestJobs:
    """Test individual jobs."""

    def test_bratteli(self):
        """Test the diagram job reports the dimension and drawing."""
        result = run_job(("bratteli", {"spins": ["1/2", "1/2", "1/2"]}))

        assert result.verified
        assert result.detail["centralizer_dim"] == 5
        assert result.detail["lines"][0].startswith("top:")
        assert result.detail["summary"] == "dim = 5"

    def test_dim_expected(self):
        """Test expected dimensions are compared."""
        assert run_job(("dim", {"spins": ["1", "1", "1"], "expected": 15})).verified
        assert not run_job(("dim", {"spins": ["1", "1", "1"], "expected": 14})).verified

    def test_dim_with_matrix_span(self):
        """Test the span of the Casimir matrices matches the dimension."""
        result = run_job(("dim", {"spins": ["1/2", "1/2", "1/2"], "with_matrix": True}))

        assert result.verified
        assert result.detail["span_dimension"] == 5

    def test_coupling(self):
        """Test set comparison ignores order and notation."""
        expected = {"M123": ["3/4", "7/4", "-5/4"]}
        result = run_job(("coupling", {"spins": ["1/2", "1/2", "1/2"], "expected": expected}))

        assert result.verified
        assert result.detail["mismatched"] == []

    def test_coupling_mismatch(self):
        """Test a wrong set is reported by name."""
        expected = {"M231": ["0"]}
        result = run_job(("coupling", {"spins": ["1/2", "1/2", "1/2"], "expected": expected}))

        assert not result.verified
        assert result.detail["mismatched"] == ["M231"]

    def test_conjecture(self):
        """Test the conjecture job on (1/2)^3."""
        result = run_job(("conjecture", {"spins": ["1/2", "1/2", "1/2"], "lmin": 4, "lmax": 10}))

        assert result.verified
        assert not result.inconclusive
        assert "elapsed" not in result.detail
        assert result.detail["status"] == "verified"

    def test_iso_temperley_lieb(self):
        """Test the TL3 identification."""
        result = run_job(("iso", {"algebra": "tl"}))

        assert result.verified
        assert result.name == "iso tl"

    def test_excluded_hjk(self):
        """Test an expected exclusion counts as verified."""
        task = ("hjk", {"j": "1/2", "k": "1/2", "c": "2", "lmin": 4, "lmax": 10, "expect_excluded": True})

        assert run_job(task).verified

    def test_identities(self):
        """Test the TL3 identities hold."""
        result = run_job(("identities", {"case": "tl-simplified"}))

        assert result.verified
        assert result.detail["identities"]


class TestRunJob:
    """Test error handling around jobs."""

    def test_library_error_is_a_failure(self):
        """Test a malformed spin gives a failed result."""
        result = run_job(("dim", {"spins": ["1/2", "x", "1"]}))

        assert not result.verified
        assert not result.inconclusive
        assert "error" in result.detail
        assert result.name == "dim 1/2 x 1"

    def test_unexpected_exclusion_is_a_failure(self):
        """Test an excluded case without expect_excluded fails."""
        result = run_job(("hjk", {"j": "1/2", "k": "1/2", "c": "2", "lmin": 4, "lmax": 10}))

        assert not result.verified
        assert result.name == "hjk 1/2 1/2 2"

    def test_unknown_algebra(self):
        """Test ValueError from a job becomes a failure."""
        assert not run_job(("iso", {"algebra": "temperley"})).verified

    def test_inconclusive(self, monkeypatch):
        """Test InconclusiveError gives an inconclusive result."""

        def never_closes(**kwargs):
            raise InconclusiveError("no closure by degree 4", degree=4)

        monkeypatch.setitem(suite.JOBS, "dim", never_closes)
        result = run_job(("dim", {"spins": ["1", "1", "1"]}))

        assert result.inconclusive
        assert not result.verified
        assert result.detail["error"] == "no closure by degree 4"

    def test_run_tasks_keeps_order(self):
        """Test results come back in input order."""
        tasks = [("dim", {"spins": s}) for s in (["1", "1", "1"], ["1/2", "1/2", "1/2"])]
        results = run_tasks(tasks)

        assert [r.detail["dimension"] for r in results] == [15, 5]


class TestPaperTasks:
    """Test the reproduction suite contents."""

    @pytest.fixture(scope="class")
    def tasks(self):
        """Suite tasks with default degrees."""
        return paper_tasks()

    def test_every_job_exists(self, tasks):
        """Test every task names a registered job."""
        assert {name for name, _ in tasks} <= set(JOBS)

    def test_counts(self, tasks):
        """Test the number of checks per job."""
        counts = Counter(name for name, _ in tasks)

        assert counts["kernel"] == 35
        assert counts["dim"] == 8
        assert counts["conjecture"] == 10
        assert counts["iso"] == 6
        assert counts["identities"] == 7
        assert counts["hjk"] == 13

    def test_degrees_are_passed(self):
        """Test the truncation degrees reach the jobs."""
        tasks = paper_tasks(lmin=5, lmax=9)
        conjectures = [kwargs for name, kwargs in tasks if name == "conjecture"]

        assert all(k["lmin"] == 5 and k["lmax"] == 9 for k in conjectures)

    def test_closed_form_sets(self, tasks):
        """Test the closed-form coupling checks pass."""
        closed = [t for t in tasks if t[0] == "coupling" and t[1]["spins"][1:] == ["1/2", "1/2"]]

        assert len(closed) == 3
        assert all(run_job(t).verified for t in closed)


class TestSuiteReport:
    """Test the exit code and digest of the report envelope."""

    @pytest.fixture
    def results(self):
        """One verified, one failed and one inconclusive result."""
        return [
            CheckResult(name="ok", verified=True),
            CheckResult(name="bad", verified=False),
            CheckResult(name="unsure", verified=False, inconclusive=True),
        ]

    def test_failure_outranks_inconclusive(self, results):
        """Test a definite failure exits 1 even next to an inconclusive check."""
        report = SuiteReport.collect("paper-suite", {}, results)

        assert report.inconclusive == ["unsure"]
        assert report.exit_code == 1
        assert SuiteReport.collect("paper-suite", {}, [results[0], results[2]]).exit_code == 2

    def test_digest_ignores_execution_options(self, results):
        """Test parallel mode, workers and output format leave the digest unchanged."""
        serial = RunConfig(command="paper-suite")
        parallel = RunConfig(command="paper-suite", parallel=True, workers=4, output="json")

        first = SuiteReport.collect("paper-suite", serial.canonical_inputs(), results)
        second = SuiteReport.collect("paper-suite", parallel.canonical_inputs(), results)

        assert first.digest == second.digest
        assert first.canonical_json() == second.canonical_json()
        assert not {"parallel", "workers", "output"} & set(first.inputs)

    def test_digest_tracks_degrees(self, results):
        """Test inputs that change the computation change the digest."""
        low = RunConfig(command="paper-suite", lmax=8).canonical_inputs()
        high = RunConfig(command="paper-suite", lmax=10).canonical_inputs()

        assert (
            SuiteReport.collect("paper-suite", low, results).digest
            != SuiteReport.collect("paper-suite", high, results).digest
        )
