"""
Unit tests for the decoding service and specification files

Tests the dictionary-returning operations, their error reporting and the
CodeSpecFile model.
"""

import json
import pytest
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from pydantic import ValidationError

from gabidulin import service as service_module
from gabidulin.errors import DecodingGuardError, DependentElementsError
from gabidulin.service import BENCH_COLUMNS, DecodingService
from gabidulin.specfile import CodeSpecFile

EXAMPLE_SPEC = project_root / "data" / "gf8_example.json"


def write_spec(tmp_path, **params):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(params), encoding="utf-8")
    return path


class TestCodeSpecFile:
    """Test suite for specification file parsing."""

    def test_load_example(self):
        """The bundled example describes the worked GF(8) code."""
        spec = CodeSpecFile.load(EXAMPLE_SPEC)
        code = spec.to_code()
        assert (code.n, code.k, code.generators) == (3, 2, (1, 2, 4))
        assert code.field.modulus == (1, 1, 0, 1)

    def test_modulus_optional(self, tmp_path):
        """Without a modulus the default rule applies."""
        path = write_spec(tmp_path, q=2, m=4, n=4, k=2, generators=[1, 2, 4, 8])
        code = CodeSpecFile.load(path).to_code()
        assert code.field.modulus == (1, 1, 0, 0, 1)

    def test_generator_count_mismatch(self, tmp_path):
        """The generator list must have n entries."""
        path = write_spec(tmp_path, q=2, m=3, n=3, k=2, generators=[1, 2])
        with pytest.raises(ValidationError):
            CodeSpecFile.load(path)

    def test_missing_key(self, tmp_path):
        """Every required key must be present."""
        path = write_spec(tmp_path, q=2, m=3, n=3, generators=[1, 2, 4])
        with pytest.raises(ValidationError):
            CodeSpecFile.load(path)

    def test_malformed_json(self, tmp_path):
        """Broken JSON is a validation error."""
        path = tmp_path / "broken.json"
        path.write_text("{q: 2", encoding="utf-8")
        with pytest.raises(ValidationError):
            CodeSpecFile.load(path)

    def test_algebraic_invariants_checked_on_build(self):
        """Shape-valid but dependent generators fail when the code is built."""
        spec = CodeSpecFile(q=2, m=3, n=3, k=2, generators=[1, 2, 3])
        with pytest.raises(DependentElementsError):
            spec.to_code()

    def test_round_trip(self):
        """A code dumped to a file reloads unchanged."""
        code = CodeSpecFile.load(EXAMPLE_SPEC).to_code()
        text = CodeSpecFile.from_code(code).dump()
        assert CodeSpecFile.model_validate_json(text).to_code() == code


class TestDecodingService:
    """Test suite for the service operations."""

    @pytest.fixture
    def service(self):
        """Create a service instance for testing."""
        return DecodingService()

    def test_encode(self, service):
        """Encoding the worked-example message."""
        result = service.encode(EXAMPLE_SPEC, [2, 1])
        assert result == {"message": [2, 1], "word": [3, 0, 5]}

    def test_encode_too_many_coefficients(self, service):
        """Oversize messages are usage errors."""
        result = service.encode(EXAMPLE_SPEC, [1, 2, 3])
        assert result["error_kind"] == "usage"
        assert "error" in result

    def test_missing_spec_file(self, service, tmp_path):
        """Unreadable files are usage errors."""
        result = service.encode(tmp_path / "missing.json", [1])
        assert result["error_kind"] == "usage"

    def test_invariant_violation(self, service, tmp_path):
        """Reducible moduli are invariant violations."""
        path = write_spec(tmp_path, q=2, m=3, modulus=[1, 0, 0, 1], n=3, k=2, generators=[1, 2, 4])
        result = service.encode(path, [1])
        assert result["error_kind"] == "invariant"

    def test_corrupt_zero_rank(self, service):
        """A rank-0 error leaves the word unchanged."""
        result = service.corrupt(EXAMPLE_SPEC, [3, 0, 5], 0, seed=1)
        assert result["word"] == [3, 0, 5]

    def test_corrupt_rank(self, service):
        """The added error has the requested rank."""
        code = service.load_code(EXAMPLE_SPEC)
        result = service.corrupt(EXAMPLE_SPEC, [3, 0, 5], 2, seed=9)
        assert code.rank_distance(result["word"], [3, 0, 5]) == 2
        assert result == service.corrupt(EXAMPLE_SPEC, [3, 0, 5], 2, seed=9)

    def test_corrupt_out_of_range(self, service):
        """Ranks beyond min(m, n) are usage errors."""
        result = service.corrupt(EXAMPLE_SPEC, [3, 0, 5], 4)
        assert result["error_kind"] == "usage"

    def test_decode(self, service):
        """Decoding the worked example returns seven messages."""
        result = service.decode(EXAMPLE_SPEC, [3, 0, 2])
        assert len(result["messages"]) == 7
        assert result["t"] == 1
        assert result["counters"]["search"]["symbolic_divisions"] == 8

    def test_decode_bad_basis(self, service):
        """Unknown basis algorithms are usage errors."""
        result = service.decode(EXAMPLE_SPEC, [3, 0, 2], basis="lll")
        assert result["error_kind"] == "usage"

    def test_decode_guard(self, service, monkeypatch):
        """Loop-bound failures are reported as guard errors."""

        def failing(*args, **kwargs):
            raise DecodingGuardError("bound exceeded")

        monkeypatch.setattr(service_module, "decode_closest", failing)
        result = service.decode(EXAMPLE_SPEC, [3, 0, 2])
        assert result == {"error": "bound exceeded", "error_kind": "guard"}

    def test_selftest_passes(self, service):
        """The golden example matches and runs quickly once warm."""
        assert service.selftest()["passed"]
        result = service.selftest()
        assert result["passed"]
        assert all(check["passed"] for check in result["checks"])
        assert result["elapsed_s"] < 1.0

    def test_selftest_tampered_modulus(self, service):
        """A different (irreducible) modulus fails with the mismatches listed."""
        result = service.selftest(modulus=[1, 0, 1, 1])
        assert not result["passed"]
        failed = [check for check in result["checks"] if not check["passed"]]
        assert failed[0]["name"] == "encode"
        assert failed[0]["expected"] == [3, 0, 5]
        assert failed[0]["actual"] == [3, 0, 2]

    def test_selftest_reducible_modulus(self, service):
        """A reducible modulus is an invariant violation."""
        assert service.selftest(modulus=[1, 0, 0, 1])["error_kind"] == "invariant"

    def test_bench(self, service):
        """Benchmark rows for all decoders with one cheapest per length."""
        result = service.bench([3], t=1, trials=2, seed=3, m=3, k=2)
        rows = result["rows"]
        assert [row["algorithm"] for row in rows] == ["param", "chase", "exhaustive"]
        assert sum(row["cheapest"] for row in rows) == 1
        assert result["csv"].splitlines()[0] == ",".join(BENCH_COLUMNS)
        assert len(result["csv"].splitlines()) == 4

    def test_bench_is_deterministic(self, service):
        """Equal seeds give equal counts."""
        first = service.bench([4], t=1, trials=2, seed=5, algorithms=("param",))
        second = service.bench([4], t=1, trials=2, seed=5, algorithms=("param",))
        assert first["rows"][0]["mean_field_mults"] == second["rows"][0]["mean_field_mults"]

    def test_bench_skips_infeasible(self, service):
        """Oversize exhaustive searches are skipped."""
        result = service.bench([8], t=1, trials=1, seed=1, algorithms=("param", "exhaustive"))
        assert [row["algorithm"] for row in result["rows"]] == ["param"]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
