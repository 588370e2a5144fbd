"""Test suite for JacobiLie."""
