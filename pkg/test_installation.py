"""
Installation and Configuration Test Script

Run this to verify your setup before using AW Forge.
"""

import sys
from pathlib import Path

print("="*70)
print("AW Forge - Installation Test")
print("="*70)
print()

# Test 1: Python version
print("Test 1: Python Version")
print(f"  Python: {sys.version}")
if sys.version_info >= (3, 11):
    print("  ✅ Python 3.11+ detected")
else:
    print("  ❌ Python 3.11+ required")
    print(f"  Current version: {sys.version_info.major}.{sys.version_info.minor}")
print()

# Test 2: Required packages
print("Test 2: Required Packages")
required_packages = ['numpy', 'pandas', 'pydantic', 'dotenv', 'pytest', 'hypothesis']

all_installed = True
for package in required_packages:
    try:
        __import__(package)
        print(f"  ✅ {package}")
    except ImportError:
        print(f"  ❌ {package} - NOT INSTALLED")
        all_installed = False

if not all_installed:
    print()
    print("  Fix: pip install -r requirements.txt")
print()

# Test 3: .env file (optional)
print("Test 3: Configuration File")
env_file = Path(__file__).parent / ".env"
if env_file.exists():
    print("  ✅ .env file exists")
    content = env_file.read_text()
    for key in ("AW_FORGE_MODE", "AW_FORGE_THREADS", "AW_FORGE_DRAWS", "AW_FORGE_SEED"):
        if key in content:
            print(f"  ✅ {key} set")
else:
    print("  ℹ️  no .env file; built-in defaults apply (exact mode, 1 thread)")
print()

# Test 4: Module imports
print("Test 4: Module Imports")
modules = [
    ("config", "load_config"),
    ("AW_Forge.scalars.series", "hyp_series"),
    ("AW_Forge.reps.builder", "build_rep"),
    ("AW_Forge.realizations.factory", "build_realization"),
    ("AW_Forge.algcheck.residuals", "relation_residuals"),
    ("AW_Forge.recurrence.engine", "extract"),
    ("AW_Forge.families.verification", "verify_family"),
    ("AW_Forge.storage.report_store", "ReportStore"),
]
for module, name in modules:
    try:
        getattr(__import__(module, fromlist=[name]), name)
        print(f"  ✅ {module}")
    except Exception as e:
        print(f"  ❌ {module} - {e}")
print()

# Test 5: Configuration loading
print("Test 5: Configuration Loading")
try:
    from config import load_config, validate_config
    config = load_config()
    validate_config(config)
    print("  ✅ Configuration loaded successfully")
    print(f"  Mode: {config.default_mode}")
    print(f"  Threads: {config.threads}")
except Exception as e:
    print(f"  ❌ Configuration failed: {e}")
print()

# Test 6: Exact Racah realization on the spin-1/2 representation
print("Test 6: Racah Relations (j=1/2, a=1/2, b=1, c=2)")
try:
    from fractions import Fraction
    from AW_Forge.algcheck.constants import expected_constants
    from AW_Forge.algcheck.residuals import relation_residuals
    from AW_Forge.realizations.factory import build_realization
    from AW_Forge.reps.models import RepSpec

    spec = RepSpec(algebra="su2", label=Fraction(1, 2))
    pair = build_realization("racah", {"a": Fraction(1, 2), "b": 1, "c": 2}, spec)
    report = relation_residuals(pair, expected_constants(pair.kind, spec))
    if report.passed:
        print("  ✅ Both relations hold exactly")
    else:
        print(f"  ❌ Relations fail: {report.to_dict()}")
except Exception as e:
    print(f"  ❌ Realization check failed: {e}")
print()

# Summary
print("="*70)
print("Summary")
print("="*70)
print()
print("If all tests passed (✅), you're ready to run:")
print()
print("  python AW_Forge/aw_forge.py verify --realization racah --algebra su2 --j 2 --a 7 --b 1/3 --c 1/5")
print()
print("If any tests failed (❌), fix the issues above before proceeding.")
print()
print("Need help? Check README.md")
print("="*70)
