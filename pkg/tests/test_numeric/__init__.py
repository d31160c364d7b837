"""Tests for the numeric module."""
