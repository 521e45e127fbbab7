"""Integration tests for rivercross."""
