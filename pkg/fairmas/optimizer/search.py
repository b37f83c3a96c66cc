"""Exhaustive and local search over joint action profiles.

Profiles are tuples of action indices. Among profiles with equal aggregate
utility the lexicographically smallest one wins, in both solvers.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional, Tuple

from fairmas import constants
from fairmas.core.random_stream import RandomStream
from fairmas.errors import OptimizerError, SearchSpaceTooLarge
from fairmas.optimizer.types import OptimizationProblem, Profile, SolveResult
from fairmas.optimizer.utility import aggregate_utility, feasible


logger = logging.getLogger(__name__)

_Best = Tuple[Optional[Profile], Optional[float], int]


def _better(value: float, profile: Profile, best_value: Optional[float], best_profile: Optional[Profile]) -> bool:
	if best_value is None or best_profile is None:
		return True
	if value != best_value:
		return value > best_value
	return profile < best_profile


def _scan(problem: OptimizationProblem, profiles: Iterable[Profile]) -> _Best:
	best_profile: Optional[Profile] = None
	best_value: Optional[float] = None
	evaluated = 0
	for profile in profiles:
		evaluated += 1
		if not feasible(problem, profile):
			continue
		value = aggregate_utility(problem, profile)
		if _better(value, profile, best_value, best_profile):
			best_profile, best_value = profile, value
	return best_profile, best_value, evaluated


def _partition(problem: OptimizationProblem, first_action: int) -> Iterable[Profile]:
	tails = itertools.product(*(range(len(actions)) for actions in problem.action_sets[1:]))
	return ((first_action,) + tail for tail in tails)


def solve_bruteforce(
	problem: OptimizationProblem,
	*,
	cap: int = constants.DEFAULT_PROFILE_CAP,
	workers: int = 1,
) -> SolveResult:
	size = problem.space_size
	if size > cap:
		raise SearchSpaceTooLarge(size, cap)

	first_actions = range(len(problem.action_sets[0]))
	if workers > 1 and len(first_actions) > 1:
		with ThreadPoolExecutor(max_workers=workers) as executor:
			partials = list(executor.map(lambda action: _scan(problem, _partition(problem, action)), first_actions))
	else:
		partials = [_scan(problem, _partition(problem, action)) for action in first_actions]

	best_profile: Optional[Profile] = None
	best_value: Optional[float] = None
	evaluated = 0
	for profile, value, count in partials:
		evaluated += count
		if profile is not None and value is not None and _better(value, profile, best_value, best_profile):
			best_profile, best_value = profile, value

	if best_profile is None:
		logger.info("bruteforce: no feasible profile among %d", evaluated)
		return SolveResult(method="bruteforce", profile=None, value=None, feasible=False, evaluated=evaluated)
	return SolveResult(
		method="bruteforce",
		profile=best_profile,
		value=best_value,
		feasible=True,
		evaluated=evaluated,
		labels=problem.labels(best_profile),
	)


def _random_profile(problem: OptimizationProblem, rng: RandomStream) -> Profile:
	return tuple(rng.integer(len(actions)) for actions in problem.action_sets)


def _sample_feasible(problem: OptimizationProblem, rng: RandomStream, attempts: int) -> Tuple[Optional[Profile], int]:
	for attempt in range(1, attempts + 1):
		profile = _random_profile(problem, rng)
		if feasible(problem, profile):
			return profile, attempt
	return None, attempts


def _neighbours(problem: OptimizationProblem, profile: Profile) -> Iterable[Profile]:
	for agent, actions in enumerate(problem.action_sets):
		for action in range(len(actions)):
			if action != profile[agent]:
				yield profile[:agent] + (action,) + profile[agent + 1 :]


def solve_localsearch(
	problem: OptimizationProblem,
	seed: int,
	max_iters: int = constants.DEFAULT_LOCALSEARCH_ITERS,
	*,
	restarts: int = constants.DEFAULT_LOCALSEARCH_RESTARTS,
	sample_attempts: int = constants.DEFAULT_SAMPLE_ATTEMPTS,
) -> SolveResult:
	"""Random-restart steepest-ascent hill climbing over single-agent action swaps.

	Each iteration scans every feasible neighbour and moves to the best strictly
	improving one. With ``max_iters == 0`` the first feasible sample is returned.
	"""
	if max_iters < 0 or restarts < 1 or sample_attempts < 1:
		raise OptimizerError(
			"Local search needs max_iters >= 0, restarts >= 1 and sample_attempts >= 1.",
			evidence=[f"max_iters={max_iters}", f"restarts={restarts}", f"sample_attempts={sample_attempts}"],
		)
	rng = RandomStream(seed)
	best_profile: Optional[Profile] = None
	best_value: Optional[float] = None
	evaluated = 0

	for _ in range(restarts):
		current, sampled = _sample_feasible(problem, rng, sample_attempts)
		evaluated += sampled
		if current is None:
			continue
		value = aggregate_utility(problem, current)
		if max_iters == 0:
			return SolveResult(
				method="localsearch",
				profile=current,
				value=value,
				feasible=True,
				evaluated=evaluated,
				labels=problem.labels(current),
			)
		for _ in range(max_iters):
			step_profile: Optional[Profile] = None
			step_value = value
			for candidate in _neighbours(problem, current):
				evaluated += 1
				if not feasible(problem, candidate):
					continue
				candidate_value = aggregate_utility(problem, candidate)
				if candidate_value > step_value or (
					step_profile is not None and candidate_value == step_value and candidate < step_profile
				):
					step_profile, step_value = candidate, candidate_value
			if step_profile is None:
				break
			current, value = step_profile, step_value
		if _better(value, current, best_value, best_profile):
			best_profile, best_value = current, value

	if best_profile is None:
		logger.info("localsearch: no feasible profile found in %d restarts", restarts)
		return SolveResult(method="localsearch", profile=None, value=None, feasible=False, evaluated=evaluated)
	return SolveResult(
		method="localsearch",
		profile=best_profile,
		value=best_value,
		feasible=True,
		evaluated=evaluated,
		labels=problem.labels(best_profile),
	)
