"""Functional tests for rivercross."""
