"""Tests for the network module."""
