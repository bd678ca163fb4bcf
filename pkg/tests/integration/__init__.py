"""Integration tests for castle-codes."""
