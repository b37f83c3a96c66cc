from __future__ import annotations

import itertools
from typing import List, Optional, Sequence, Tuple

from fairmas import constants
from fairmas.errors import OptimizerError, SearchSpaceTooLarge
from fairmas.optimizer.types import NormalFormGame, OptimizationProblem, Profile
from fairmas.optimizer.utility import utility


def _payoffs(game: NormalFormGame, profile: Profile) -> List[float]:
	values = [float(value) for value in game.payoff(profile)]
	if len(values) != game.n_players:
		raise OptimizerError(
			"Payoff must return one utility per player.",
			evidence=[f"profile={list(profile)}", f"payoffs={values}"],
		)
	return values


def improving_deviation(game: NormalFormGame, profile: Sequence[int]) -> Optional[Tuple[int, int]]:
	"""First (player, strategy) that strictly beats the profile, or None."""
	profile = tuple(profile)
	current = _payoffs(game, profile)
	for player, strategies in enumerate(game.strategy_sets):
		for strategy in range(len(strategies)):
			if strategy == profile[player]:
				continue
			deviated = profile[:player] + (strategy,) + profile[player + 1 :]
			if _payoffs(game, deviated)[player] > current[player]:
				return player, strategy
	return None


def is_nash_equilibrium(game: NormalFormGame, profile: Sequence[int]) -> bool:
	return improving_deviation(game, profile) is None


def best_responses(game: NormalFormGame, profile: Sequence[int], player: int) -> List[int]:
	profile = tuple(profile)
	values = []
	for strategy in range(len(game.strategy_sets[player])):
		deviated = profile[:player] + (strategy,) + profile[player + 1 :]
		values.append(_payoffs(game, deviated)[player])
	top = max(values)
	return [strategy for strategy, value in enumerate(values) if value == top]


def find_pure_nash(game: NormalFormGame, *, cap: int = constants.DEFAULT_PROFILE_CAP) -> List[Profile]:
	size = game.space_size
	if size > cap:
		raise SearchSpaceTooLarge(size, cap)
	profiles = itertools.product(*(range(len(strategies)) for strategies in game.strategy_sets))
	return [profile for profile in profiles if is_nash_equilibrium(game, profile)]


def game_from_problem(problem: OptimizationProblem) -> NormalFormGame:
	"""Each agent's payoff is its own utility under the joint profile."""
	return NormalFormGame(
		strategy_sets=problem.action_sets,
		payoff=lambda profile: [utility(problem, profile, agent) for agent in range(problem.n_agents)],
	)


def bimatrix_game(
	strategies: Tuple[Tuple[str, ...], Tuple[str, ...]],
	row_payoffs: Sequence[Sequence[float]],
	column_payoffs: Sequence[Sequence[float]],
) -> NormalFormGame:
	rows = [list(row) for row in row_payoffs]
	columns = [list(row) for row in column_payoffs]
	return NormalFormGame(
		strategy_sets=strategies,
		payoff=lambda profile: [rows[profile[0]][profile[1]], columns[profile[0]][profile[1]]],
	)


def prisoners_dilemma(
	temptation: float = 5.0,
	reward: float = 3.0,
	punishment: float = 1.0,
	sucker: float = 0.0,
) -> NormalFormGame:
	labels = ("Cooperate", "Defect")
	row = [[reward, sucker], [temptation, punishment]]
	column = [[reward, temptation], [sucker, punishment]]
	return bimatrix_game((labels, labels), row, column)


def matching_pennies() -> NormalFormGame:
	labels = ("Heads", "Tails")
	row = [[1.0, -1.0], [-1.0, 1.0]]
	column = [[-1.0, 1.0], [1.0, -1.0]]
	return bimatrix_game((labels, labels), row, column)
