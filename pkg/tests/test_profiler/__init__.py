"""
Test suite for the swagnet.profiler module.
"""
