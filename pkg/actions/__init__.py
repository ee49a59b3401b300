"""Coset actions and induced actions."""

from actions.action_space import ActionSpace, coset_action, induced_action

__all__ = ["ActionSpace", "coset_action", "induced_action"]
