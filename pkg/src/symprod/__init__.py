"""Exact computations around symmetric products of curves."""
