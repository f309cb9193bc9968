#!/usr/bin/env python3
"""Test script to verify the centralizer setup."""

import sys
from pathlib import Path

# Add src to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))


def test_imports():
    """Test that all modules can be imported."""
    from centralizer import __version__, get_logger  # noqa: F401
    from centralizer.bratteli import build_bratteli, centralizer_dim  # noqa: F401
    from centralizer.diagalg import DiagramAlgebra, verify_tl_iso  # noqa: F401
    from centralizer.exact import Matrix, SparseEchelon  # noqa: F401
    from centralizer.main import app  # noqa: F401
    from centralizer.ncalg import Presentation, certified_dimension  # noqa: F401
    from centralizer.racah import build_quotient, verify_conjecture  # noqa: F401
    from centralizer.suite import paper_tasks, run_tasks  # noqa: F401

    print("✅ All imports successful")


def test_logger():
    """Test logger configuration."""
    from centralizer.logger import LogConfig, LogLevel, get_logger

    config = LogConfig(level=LogLevel.INFO)
    assert config.level == LogLevel.INFO
    assert config.colorize is True
    assert get_logger("test") is not None

    print("✅ Logger configuration successful")


def test_yaml_config():
    """Test the bundled YAML configuration file exists and is valid."""
    import yaml

    config_path = Path(__file__).parent.parent / "src" / "centralizer" / "config" / "centralizer.yaml"
    assert config_path.exists(), "centralizer.yaml not found"

    with open(config_path, "r") as f:
        config_data = yaml.safe_load(f)

    assert "centralizer" in config_data, "No 'centralizer' section in YAML"
    data = config_data["centralizer"]
    assert data["lmin"] <= data["lmax"], "lmin should not exceed lmax"
    assert data["output"] in ("text", "json"), "output should be text or json"

    print("✅ YAML configuration file valid")


def test_bundled_presentations():
    """Test every bundled presentation declares generators and relations."""
    import yaml

    presentations = Path(__file__).parent.parent / "src" / "centralizer" / "config" / "presentations"
    files = sorted(presentations.glob("*.yaml"))
    assert files, "no bundled presentations"

    for path in files:
        with open(path, "r") as f:
            data = yaml.safe_load(f)
        assert data.get("generators"), f"{path.name} has no generators"
        assert data.get("relations"), f"{path.name} has no relations"

    print(f"✅ {len(files)} bundled presentations valid")


def main():
    """Run all tests."""
    print("🧪 Testing centralizer setup...\n")

    tests = [
        test_imports,
        test_logger,
        test_yaml_config,
        test_bundled_presentations,
    ]

    passed = 0
    total = len(tests)

    for test in tests:
        try:
            test()
            passed += 1
        except Exception as e:
            print(f"❌ {test.__name__} error: {e}")
        print()

    print(f"📊 Results: {passed}/{total} tests passed")

    if passed == total:
        print("🎉 All tests passed! Centralizer setup is working correctly.")
        return 0
    else:
        print("❌ Some tests failed. Please check the errors above.")
        return 1


if __name__ == "__main__":
    sys.exit(main())
