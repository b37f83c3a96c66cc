from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

from fairmas import constants
from fairmas.adapters.config_adapter import config_from_mapping, load_config
from fairmas.core.types import SimulationConfig
from fairmas.errors import ConfigError, FairmasError
from fairmas.metrics.types import METRIC_KINDS
from fairmas.response import error_from_exception, error_response, success_response
from fairmas.services import metrics_service, optimization_service, simulation_service


logger = logging.getLogger(__name__)

_ON_OFF = ("on", "off")
_CONDITION_FLAGS = {"on": "FairnessOn", "off": "FairnessOff"}


class _Parser(argparse.ArgumentParser):
	def error(self, message: str) -> None:  # type: ignore[override]
		raise ConfigError(f"{self.prog}: {message}")


def _env_int(name: str, default: int, minimum: int = 1) -> int:
	raw = os.getenv(name)
	if raw is None or not raw.strip():
		return default
	try:
		value = int(raw)
	except ValueError as exc:
		raise ConfigError(f"{name} must be an integer.", evidence=[f"{name}={raw!r}"]) from exc
	if value < minimum:
		raise ConfigError(f"{name} must be >= {minimum}.", evidence=[f"{name}={raw!r}"])
	return value


def _configure_logging(level_name: str) -> None:
	level = logging.getLevelName(level_name.upper())
	if not isinstance(level, int):
		raise ConfigError(f"Unknown log level {level_name!r}.")
	logging.basicConfig(
		level=level,
		format="%(asctime)s %(levelname)s %(name)s: %(message)s",
		stream=sys.stderr,
	)


def _add_simulation_flags(parser: argparse.ArgumentParser, *, seeds: bool, fairness: bool) -> None:
	parser.add_argument("--config", default=None, help="Config file with key = value lines.")
	parser.add_argument("--seed", type=int, default=None, help="Seed (base seed for multi-seed commands).")
	if seeds:
		parser.add_argument("--seeds", type=int, default=constants.DEFAULT_BATCH_SEEDS, help="Number of seeds.")
		parser.add_argument("--workers", type=int, default=None, help="Worker threads (default FAIRMAS_WORKERS or 4).")
	if fairness:
		parser.add_argument("--fairness", choices=_ON_OFF, default=None)
	parser.add_argument("--propagation", choices=_ON_OFF, default=None)
	parser.add_argument("--interventions", default=None, help="Comma-separated: median, incentive, redistribute.")
	parser.add_argument("--out", default=None, help="Output directory (default FAIRMAS_OUT or ./output).")


def _build_parser() -> argparse.ArgumentParser:
	parser = _Parser(prog="fairmas", description="Fairness-aware multi-agent reward simulation.")
	parser.add_argument(
		"--log-level",
		default=os.getenv(constants.ENV_LOG_LEVEL, constants.DEFAULT_LOG_LEVEL),
		help="Logging level (default FAIRMAS_LOG_LEVEL or WARNING).",
	)
	commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

	run = commands.add_parser("run", help="Run one simulation and write rounds.csv and summary.json.")
	_add_simulation_flags(run, seeds=False, fairness=True)

	reproduce = commands.add_parser("reproduce", help="Compare fairness on and off over a seed set.")
	_add_simulation_flags(reproduce, seeds=True, fairness=False)
	reproduce.add_argument("--no-pdf", action="store_true", help="Skip figure.pdf.")

	batch = commands.add_parser("batch", help="Run conditions over many seeds and write batch.json.")
	_add_simulation_flags(batch, seeds=True, fairness=True)

	metrics = commands.add_parser("metrics", help="Audit an outcome CSV; exit 3 when the gap exceeds delta.")
	metrics.add_argument("csv", help="CSV with header y_hat,y,attribute.")
	metrics.add_argument("--metric", choices=METRIC_KINDS, default="demographic_parity")
	metrics.add_argument("--delta", type=float, default=constants.DEFAULT_BIAS_PENALTY_THRESHOLD)

	optimize = commands.add_parser("optimize", help="Solve a problem file.")
	optimize.add_argument("problem", help="Problem definition JSON.")
	optimize.add_argument("--method", choices=("bruteforce", "localsearch"), default="bruteforce")
	optimize.add_argument("--seed", type=int, default=constants.DEFAULT_SEED)
	optimize.add_argument("--max-iters", type=int, default=constants.DEFAULT_LOCALSEARCH_ITERS)
	optimize.add_argument("--cap", type=int, default=constants.DEFAULT_PROFILE_CAP)
	optimize.add_argument("--workers", type=int, default=1)
	optimize.add_argument("--nash", action="store_true", help="Also list pure Nash equilibria.")
	return parser


def _simulation_config(args: argparse.Namespace) -> SimulationConfig:
	base = load_config(args.config) if args.config else SimulationConfig()
	overrides: Dict[str, Any] = {}
	if args.seed is not None:
		overrides["seed"] = args.seed
	if getattr(args, "fairness", None) is not None and args.command == "run":
		overrides["fairness_enabled"] = args.fairness == "on"
	if args.propagation is not None:
		overrides["propagation_enabled"] = args.propagation == "on"
	if args.interventions is not None:
		overrides["interventions"] = [item.strip() for item in args.interventions.split(",") if item.strip()]
	return config_from_mapping(overrides, base)


def _out_dir(args: argparse.Namespace) -> str:
	return args.out or os.getenv(constants.ENV_OUT_DIR) or constants.DEFAULT_OUT_DIR


def _workers(args: argparse.Namespace) -> int:
	if args.workers is not None:
		if args.workers < 1:
			raise ConfigError("--workers must be >= 1.", evidence=[f"workers={args.workers}"])
		return args.workers
	return _env_int(constants.ENV_WORKERS, constants.DEFAULT_WORKERS)


def _emit(payload: Dict[str, Any]) -> None:
	print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_run(args: argparse.Namespace) -> int:
	config = _simulation_config(args)
	summary, artifacts = simulation_service.run_to_directory(config, _out_dir(args))
	_emit(success_response(data={"summary": summary.model_dump(), "artifacts": artifacts}))
	return constants.EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
	config = _simulation_config(args)
	report = simulation_service.reproduce(config, args.seeds, _out_dir(args), workers=_workers(args), pdf=not args.no_pdf)
	for line in report.lines():
		print(line)
	for name, path in sorted(report.artifacts.items()):
		print(f"{name}: {path}")
	return constants.EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
	config = _simulation_config(args)
	conditions = [_CONDITION_FLAGS[args.fairness]] if args.fairness else list(simulation_service.CONDITIONS)
	report, path = simulation_service.batch_to_directory(
		config, args.seeds, _out_dir(args), conditions, workers=_workers(args)
	)
	data = {
		"batch_json": path,
		"summaries": [
			{
				"condition": summary.condition,
				"n_seeds": summary.n_seeds,
				"mean_gap": summary.mean_gap,
				"median_gap": summary.median_gap,
				"gap_reduction_ratio": summary.gap_reduction_ratio,
			}
			for summary in report.summaries
		],
	}
	_emit(success_response(data=data))
	return constants.EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> int:
	report = metrics_service.audit_outcomes(args.csv, args.metric, args.delta)
	_emit(success_response(report=metrics_service.report_payload(report)))
	return constants.EXIT_AUDIT_VIOLATION if report.violated else constants.EXIT_OK


def cmd_optimize(args: argparse.Namespace) -> int:
	payload = optimization_service.optimize_file(
		args.problem,
		args.method,
		nash=args.nash,
		seed=args.seed,
		max_iters=args.max_iters,
		cap=args.cap,
		workers=max(1, args.workers),
	)
	_emit(success_response(data=payload))
	return constants.EXIT_OK


_COMMANDS = {
	"run": cmd_run,
	"reproduce": cmd_reproduce,
	"batch": cmd_batch,
	"metrics": cmd_metrics,
	"optimize": cmd_optimize,
}


def _fail(payload: Dict[str, Any], exit_code: int) -> int:
	print(json.dumps(payload, indent=2, sort_keys=True), file=sys.stderr)
	return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
	try:
		args = _build_parser().parse_args(list(argv) if argv is not None else None)
		_configure_logging(args.log_level)
		return _COMMANDS[args.command](args)
	except FairmasError as exc:
		logger.debug("command failed: %s", exc.message)
		return _fail(error_from_exception(exc), exc.exit_code)
	except OSError as exc:
		return _fail(error_response(code="io_error", message=str(exc)), constants.EXIT_IO_ERROR)


def run(argv: Optional[List[str]] = None) -> None:
	raise SystemExit(main(argv))
