from __future__ import annotations

from dataclasses import replace
from typing import List, Sequence

from fairmas.core.types import AgentState
from fairmas.errors import ConfigError
from fairmas.metrics.bias import system_bias


def propagate_bias(agents: Sequence[AgentState], rate: float) -> List[AgentState]:
	"""Synchronous pull of every bias toward the pre-step system bias."""
	if not 0.0 <= rate <= 1.0:
		raise ConfigError("Propagation rate must lie in [0, 1].", evidence=[f"rate={rate!r}"])
	target = system_bias(agents).total
	return [
		replace(agent, bias=min(1.0, max(0.0, agent.bias + rate * (target - agent.bias))))
		for agent in agents
	]
