"""Unit tests for JacobiLie."""
