"""
Test suite for the swagnet package.
"""
