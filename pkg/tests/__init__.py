"""Tests for mvcolor."""
