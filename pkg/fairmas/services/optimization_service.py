from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Sequence, Union

from fairmas import constants
from fairmas.adapters.problem_adapter import load_problem
from fairmas.core.types import AgentState, SimulationConfig
from fairmas.optimizer.binding import round_problem
from fairmas.optimizer.games import find_pure_nash, game_from_problem
from fairmas.optimizer.search import solve_bruteforce, solve_localsearch
from fairmas.optimizer.types import OptimizationProblem, SolveResult


logger = logging.getLogger(__name__)

Method = Literal["bruteforce", "localsearch"]


def solve(
	problem: OptimizationProblem,
	method: Method = "bruteforce",
	*,
	seed: int = constants.DEFAULT_SEED,
	max_iters: int = constants.DEFAULT_LOCALSEARCH_ITERS,
	cap: int = constants.DEFAULT_PROFILE_CAP,
	workers: int = 1,
) -> SolveResult:
	if method == "localsearch":
		return solve_localsearch(problem, seed, max_iters)
	return solve_bruteforce(problem, cap=cap, workers=workers)


def optimize_problem(
	problem: OptimizationProblem,
	method: Method = "bruteforce",
	*,
	nash: bool = False,
	seed: int = constants.DEFAULT_SEED,
	max_iters: int = constants.DEFAULT_LOCALSEARCH_ITERS,
	cap: int = constants.DEFAULT_PROFILE_CAP,
	workers: int = 1,
) -> Dict[str, Any]:
	result = solve(problem, method, seed=seed, max_iters=max_iters, cap=cap, workers=workers)
	payload: Dict[str, Any] = {"solution": result.as_dict(), "space_size": problem.space_size}
	if nash:
		game = game_from_problem(problem)
		equilibria = find_pure_nash(game, cap=cap)
		payload["pure_nash"] = [{"profile": list(profile), "labels": game.labels(profile)} for profile in equilibria]
	logger.info("optimize method=%s feasible=%s value=%s", method, result.feasible, result.value)
	return payload


def optimize_file(path: Union[str, Path], method: Method = "bruteforce", **options: Any) -> Dict[str, Any]:
	return optimize_problem(load_problem(path), method, **options)


def optimize_round(
	agents: Sequence[AgentState],
	config: SimulationConfig,
	*,
	delta: Optional[float] = None,
	nash: bool = False,
) -> Dict[str, Any]:
	"""Best joint cooperate/compete choice for one round of a population."""
	return optimize_problem(round_problem(agents, config, delta=delta), "bruteforce", nash=nash)
