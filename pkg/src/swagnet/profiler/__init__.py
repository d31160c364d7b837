"""
Profiler module for swagnet.

Collects CPU call statistics and memory samples of a training run.
"""

from swagnet.profiler.run_profiler import RunProfiler, get_memory_usage

__all__ = ['RunProfiler', 'get_memory_usage']
