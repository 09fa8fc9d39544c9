"""Reductions of ideals in local rings at the origin over prime fields."""
