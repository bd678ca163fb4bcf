"""Test package for castle-codes."""
