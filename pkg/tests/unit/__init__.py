"""Unit tests for rivercross."""
