"""Tests for the activations module."""
