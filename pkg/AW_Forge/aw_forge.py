"""
AW Forge - Main CLI Entry Point

Builds realizations of the Racah and Askey-Wilson algebras, verifies their
relations, prints recurrence tables and spectra, and checks polynomial
identifications on seeded parameter sweeps.

Usage:
    python aw_forge.py verify --realization racah --algebra su2 --j 2 --a 7 --b 1/3 --c 1/5
    python aw_forge.py recurrence --realization oscillator --algebra osc --trunc 5 --b 1/2 --format csv
    python aw_forge.py spectrum --realization lie_type --algebra su2 --j 1/2 --b 0
    python aw_forge.py family-check --family q_racah --j 2 --draws 10 --seed 7
"""

import argparse
import logging
import re
import sys
import time
from pathlib import Path
from typing import Dict, Optional

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import load_config, validate_config
from AW_Forge.algcheck.constants import expected_constants
from AW_Forge.algcheck.residuals import bracket_form_matches, relation_residuals
from AW_Forge.errors import AWForgeError, PreconditionError
from AW_Forge.families.registry import FAMILY_MAPS, get_family
from AW_Forge.families.verification import verify_family
from AW_Forge.realizations.assembly import check_exchange_relations
from AW_Forge.realizations.factory import build_realization
from AW_Forge.realizations.models import PARAMETER_NAMES, parse_tag
from AW_Forge.recurrence.engine import characteristic_value, extract, run, spectrum_float
from AW_Forge.reps.builder import build_rep, casimir_commutes, check_algebra_relations
from AW_Forge.reps.models import Algebra, RepSpec
from AW_Forge.scalars.numbers import ScalarMode, format_scalar, parse_scalar
from AW_Forge.storage.report_store import Report, ReportStore
from AW_Forge.utils.logging_config import setup_from_config, setup_logging

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PRECONDITION = 2
EXIT_INTERRUPTED = 130

# Flags that carry a scalar parameter, shared by realizations and families
SCALAR_FLAGS = ("a", "b", "c", "alpha", "beta", "mu", "nu", "p", "phi", "d", "eps")

DEFAULT_Q = "2"
DEFAULT_FAMILY_J = "2"
DEFAULT_FAMILY_L = "1"

# A value such as -23/3 that argparse would take for an option
NEGATIVE_VALUE = re.compile(r"^-\.?\d")


def _attach_negative_values(argv):
    """Rewrite `--flag -23/3` as `--flag=-23/3`."""
    joined = []
    for token in argv:
        previous = joined[-1] if joined else ""
        if NEGATIVE_VALUE.match(token) and previous.startswith("--") and "=" not in previous:
            joined[-1] = f"{previous}={token}"
        else:
            joined.append(token)
    return joined


def _add_representation_flags(parser: argparse.ArgumentParser, algebra_required: bool):
    parser.add_argument(
        '--algebra',
        choices=[a.value for a in Algebra],
        required=algebra_required,
        help='Algebra of the representation'
    )
    parser.add_argument('--j', help='Spin label of su2 / uq_su2 (p or p/q)')
    parser.add_argument('--l', help='Lowest weight of su11 / uq_su11 (p or p/q)')
    parser.add_argument('--q', help='Deformation parameter of the quantum algebras')
    parser.add_argument(
        '--trunc',
        type=int,
        default=8,
        help='Truncation size of infinite-dimensional representations (default: 8)'
    )


def _add_common_flags(parser: argparse.ArgumentParser):
    parser.add_argument(
        '--mode',
        choices=[m.value for m in ScalarMode],
        help='Arithmetic mode (default: AW_FORGE_MODE or exact)'
    )
    for name in SCALAR_FLAGS:
        parser.add_argument(f'--{name}', help=f'Parameter {name} (p or p/q; decimals need --mode float)')
    parser.add_argument('--out', help='Write the report to this path instead of stdout (relative paths go under AW_FORGE_REPORT_DIR)')
    parser.add_argument('--pretty', action='store_true', help='Indent JSON output')
    parser.add_argument('--timing', action='store_true', help='Record elapsed time in the report')
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')


def parse_arguments(argv=None):
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        description="AW Forge - Racah and Askey-Wilson algebra realizations as exact matrices",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python aw_forge.py verify --realization racah --algebra su2 --j 2 --a 7 --b 1/3 --c 1/5
  python aw_forge.py verify --realization aw --algebra uq_su2 --j 3/2 --q 2 --a -3 --b 1/7 --c 2/9
  python aw_forge.py recurrence --realization dual_hahn --algebra su2 --j 1 --mu 1/2 --nu 1/3
  python aw_forge.py spectrum --realization lie_type --algebra su2 --j 1/2 --b 0
  python aw_forge.py family-check --family racah --j 2 --draws 20 --seed 7
  python aw_forge.py family-check --list

Output:
  Reports are printed to stdout as JSON (CSV for recurrence --format csv).
  Logs are printed to stderr (can be redirected separately).

Exit codes:
  0 all checks pass, 1 a mathematical check fails, 2 invalid input or precondition.
        """
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    verify = subparsers.add_parser('verify', help='Verify the algebra relations of a realization')
    verify.add_argument('--realization', required=True, help='Realization name, e.g. racah or aw')
    _add_representation_flags(verify, algebra_required=True)
    verify.add_argument(
        '--perturb',
        help='Shift one structure constant by 1 (negative control), e.g. omega'
    )
    _add_common_flags(verify)

    recurrence = subparsers.add_parser('recurrence', help='Print the recurrence coefficients of Y')
    recurrence.add_argument('--realization', required=True, help='Realization name')
    _add_representation_flags(recurrence, algebra_required=True)
    recurrence.add_argument('--format', choices=['json', 'csv'], default='json', help='Output format (default: json)')
    recurrence.add_argument('--lam', help='Also iterate the recurrence at this eigenvalue')
    _add_common_flags(recurrence)

    spectrum = subparsers.add_parser('spectrum', help='Float eigenvalues of Y')
    spectrum.add_argument('--realization', required=True, help='Realization name')
    _add_representation_flags(spectrum, algebra_required=True)
    _add_common_flags(spectrum)

    family = subparsers.add_parser('family-check', help='Check a polynomial identification on random draws')
    family.add_argument('--family', help='Family name, e.g. racah, q_racah, wilson')
    family.add_argument('--list', action='store_true', help='List the recorded identifications')
    _add_representation_flags(family, algebra_required=False)
    family.add_argument('--draws', type=int, help='Accepted parameter draws (default: AW_FORGE_DRAWS or 20)')
    family.add_argument('--seed', type=int, help='Seed of the parameter stream (default: AW_FORGE_SEED or 7)')
    family.add_argument('--window', type=int, help='Largest n checked')
    _add_common_flags(family)

    argv = sys.argv[1:] if argv is None else list(argv)
    return parser.parse_args(_attach_negative_values(argv))


def _scalar_flags(args, mode: ScalarMode) -> Dict:
    values = {}
    for name in SCALAR_FLAGS:
        raw = getattr(args, name, None)
        if raw is not None:
            values[name] = parse_scalar(raw, mode)
    return values


def _representation(args, algebra: Algebra, mode: ScalarMode) -> RepSpec:
    label_text = args.j if args.j is not None else args.l
    q_text = args.q
    if q_text is None and algebra.is_quantum:
        q_text = DEFAULT_Q
    return RepSpec(
        algebra=algebra,
        label=None if label_text is None else parse_scalar(label_text, mode),
        q=None if q_text is None else parse_scalar(q_text, mode),
        trunc=args.trunc,
        mode=mode,
    )


def _build(args, mode: ScalarMode):
    tag = parse_tag(args.realization)
    spec = _representation(args, Algebra(args.algebra), mode)
    rep = build_rep(spec)
    params = _scalar_flags(args, mode)
    ignored = sorted(set(params) - set(PARAMETER_NAMES[tag]))
    if ignored:
        logger.warning(f"Flags {ignored} are not parameters of {tag.value}; ignored")
    pair = build_realization(tag, params, spec, rep)
    return tag, spec, rep, pair


def _echo(args) -> Dict:
    return {k: v for k, v in sorted(vars(args).items()) if v is not None and v is not False}


def cmd_verify(args, mode: ScalarMode, tolerance: float) -> Report:
    """Algebra relations, exchange identities and both structure relations of a pair."""
    tag, spec, rep, pair = _build(args, mode)
    checks = [c.to_dict() for c in check_algebra_relations(rep, spec, tolerance).values()]

    sc = expected_constants(pair.kind, spec)
    if args.perturb:
        sc = sc.perturbed(args.perturb)
        logger.info(f"Perturbed {args.perturb} by 1 (negative control)")
    residuals = relation_residuals(pair, sc, tolerance)
    checks.extend(c.to_dict() for c in residuals.checks)

    exchange = check_exchange_relations(pair, rep)
    result = {
        "constants": sc.to_dict(),
        "exchange": exchange,
        "casimir_commutes": casimir_commutes(rep, spec),
        "window": residuals.window,
        "truncated": residuals.truncated,
    }
    if not tag.is_quantum:
        result["bracket_form"] = bracket_form_matches(pair, tolerance)

    passed = all(c["passed"] for c in checks) and all(exchange.values()) and result["casimir_commutes"]
    return Report(
        command="verify",
        arguments=_echo(args),
        mode=mode.value,
        status="pass" if passed else "fail",
        realization=pair.describe(),
        representation=spec.describe(),
        checks=checks,
        result=result,
    )


def cmd_recurrence(args, mode: ScalarMode) -> Report:
    """Recurrence coefficients of Y, optionally iterated at one eigenvalue."""
    _, spec, _, pair = _build(args, mode)
    rec = extract(pair)
    result = {"table": rec.table(), "finite": rec.finite}
    if args.lam is not None:
        lam = parse_scalar(args.lam, mode)
        result["lam"] = format_scalar(lam)
        result["p"] = [format_scalar(v) for v in run(rec, lam)]
        if rec.finite:
            result["characteristic_value"] = format_scalar(characteristic_value(rec, lam))
    return Report(
        command="recurrence",
        arguments=_echo(args),
        mode=mode.value,
        status="pass",
        realization=pair.describe(),
        representation=spec.describe(),
        result=result,
    )


def cmd_spectrum(args, mode: ScalarMode, tolerance: float) -> Report:
    """
    Float eigenvalues of Y and the closing value p_N at each of them.

    p_N is monic of degree N, so its value at an eigenvalue is compared
    against tolerance after dividing by max(1, |lambda|)^N.
    """
    _, spec, _, pair = _build(args, mode)
    eigenvalues = spectrum_float(pair)
    result = {"eigenvalues": [[round(v.real, 12), round(v.imag, 12)] for v in eigenvalues]}
    status = "pass"
    if spec.is_finite:
        rec = extract(pair)
        closing = [abs(complex(characteristic_value(rec, v))) for v in eigenvalues]
        relative = [c / max(1.0, abs(v)) ** rec.size for c, v in zip(closing, eigenvalues)]
        result["characteristic_max_abs"] = max(closing, default=0.0)
        result["characteristic_relative"] = max(relative, default=0.0)
        if result["characteristic_relative"] > tolerance:
            logger.warning(f"p_N does not vanish on the computed spectrum: {result['characteristic_relative']:.3e}")
            status = "fail"
    return Report(
        command="spectrum",
        arguments=_echo(args),
        mode=mode.value,
        status=status,
        realization=pair.describe(),
        representation=spec.describe(),
        result=result,
    )


def cmd_family_check(args, config, mode: Optional[ScalarMode]) -> Report:
    """Seeded sweep of one identification, or the list of identifications."""
    if args.list or not args.family:
        families = [fmap.describe() for fmap in FAMILY_MAPS.values()]
        return Report(
            command="family-check",
            arguments=_echo(args),
            mode=(mode or ScalarMode(config.default_mode)).value,
            status="pass",
            result={"families": families},
        )

    fmap = get_family(args.family)
    if mode is None:
        mode = fmap.preferred_mode
    if args.algebra and Algebra(args.algebra) is not fmap.algebra:
        logger.warning(f"{fmap.family} lives on {fmap.algebra.value}; --algebra {args.algebra} ignored")
    if args.j is None and args.l is None and fmap.algebra is not Algebra.OSC:
        # label_of families overwrite this from the drawn parameters
        if fmap.algebra.is_finite:
            args.j = DEFAULT_FAMILY_J
        else:
            args.l = DEFAULT_FAMILY_L
    spec = _representation(args, fmap.algebra, mode)
    fixed = {k: v for k, v in _scalar_flags(args, mode).items() if k in fmap.parameters}

    report = verify_family(
        fmap,
        spec,
        draws=args.draws or config.default_draws,
        window=args.window,
        seed=config.default_seed if args.seed is None else args.seed,
        tolerance=config.float_tolerance,
        threads=config.threads,
        fixed=fixed,
    )
    return Report(
        command="family-check",
        arguments=_echo(args),
        mode=mode.value,
        status="pass" if report.passed else "fail",
        representation=spec.describe(),
        result=report.to_dict(),
    )


def main(argv=None):
    """
    Main execution flow.

    Steps:
    1. Load configuration
    2. Build the requested representation and realization
    3. Run the command's checks
    4. Output the report (JSON, or CSV for recurrence tables)
    """
    args = parse_arguments(argv)
    setup_logging(debug=args.debug)
    started = time.perf_counter()
    store = ReportStore(pretty=args.pretty)
    target = args.out

    try:
        config = load_config()
        validate_config(config)
        target = _output_target(args.out, config)
        if args.debug or config.log_level.upper() != "INFO" or config.log_file:
            setup_from_config(config, debug=args.debug)

        mode = ScalarMode(args.mode) if args.mode else None
        logger.info(f"AW Forge {args.command}")

        if args.command == 'family-check':
            report = cmd_family_check(args, config, mode)
        else:
            mode = mode or ScalarMode(config.default_mode)
            if args.command == 'verify':
                report = cmd_verify(args, mode, config.float_tolerance)
            elif args.command == 'recurrence':
                report = cmd_recurrence(args, mode)
            else:
                report = cmd_spectrum(args, mode, config.spectrum_tolerance)

        if args.timing:
            report.timing = {"seconds": time.perf_counter() - started}

        if args.command == 'recurrence' and args.format == 'csv':
            store.write_csv(report.result["table"], target)
        else:
            store.write_json(report, target)

        logger.info(f"{args.command}: {report.status}")
        return EXIT_PASS if report.passed else EXIT_FAIL

    except KeyboardInterrupt:
        logger.warning("Execution interrupted by user")
        return EXIT_INTERRUPTED

    except PreconditionError as e:
        logger.error(f"Precondition failed: {e}")
        store.write_json(_error_report(args, e), target)
        return EXIT_PRECONDITION

    except ValueError as e:
        # Configuration errors and malformed parameter names
        logger.error(f"Invalid input: {e}")
        return EXIT_PRECONDITION

    except AWForgeError as e:
        logger.error(f"{args.command} failed: {e}")
        store.write_json(_error_report(args, e), target)
        return EXIT_FAIL


def _output_target(out: Optional[str], config) -> Optional[Path]:
    """Relative report paths land in the configured report directory."""
    if out is None or out == "-":
        return None
    path = Path(out)
    if path.is_absolute():
        return path
    config.ensure_directories()
    return config.report_dir / path


def _error_report(args, error: AWForgeError) -> Report:
    return Report(
        command=args.command,
        arguments=_echo(args),
        mode=args.mode or "exact",
        status="error",
        error=error.to_dict(),
    )


if __name__ == "__main__":
    sys.exit(main())
