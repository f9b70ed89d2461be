"""Exact computations around the center of the twisted Heisenberg category."""
