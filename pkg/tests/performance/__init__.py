"""Property and long-running tests for JacobiLie."""
