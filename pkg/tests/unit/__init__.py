"""Unit tests for castle-codes."""
