"""JSON helpers for complex-valued data."""
