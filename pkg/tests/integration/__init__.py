"""Integration tests for JacobiLie."""
