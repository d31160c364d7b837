"""
Run profiling for training commands.

This module wraps cProfile for function call statistics and the
memory_profiler package for resident memory samples, and writes both
as a single JSON document next to the other run artifacts.
"""

import cProfile
import logging
import pstats
import time
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional

import memory_profiler

from swagnet.utils.io import save_json

logger = logging.getLogger(__name__)


def get_memory_usage() -> float:
    """Current resident memory of this process in MB."""
    return float(memory_profiler.memory_usage(-1, interval=0.01, timeout=None)[0])


class RunProfiler:
    """
    CPU and memory profile of one run.

    Memory is sampled at ``start``, at every ``sample`` call (the training
    commands call it once per epoch) and at ``stop``.
    """

    def __init__(self,
                 sort_by: str = 'cumulative',
                 top_n: int = 25,
                 strip_dirs: bool = True):
        """
        Initialize the run profiler.

        Args:
            sort_by: pstats sort key for the function table
            top_n: Number of functions kept in the report
            strip_dirs: Whether to strip directory paths from file names
        """
        self.sort_by = sort_by
        self.top_n = top_n
        self.strip_dirs = strip_dirs
        self.profiler = cProfile.Profile()
        self.results: Optional[pstats.Stats] = None
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None
        self._samples: List[Dict[str, Any]] = []

    def start(self) -> None:
        """Start profiling."""
        self._samples = []
        self.start_time = time.perf_counter()
        self.sample("start")
        self.profiler.enable()

    def sample(self, label: str) -> float:
        """Record the current memory usage under ``label``."""
        mb = get_memory_usage()
        elapsed = time.perf_counter() - self.start_time if self.start_time is not None else 0.0
        self._samples.append({'label': label, 'elapsed': elapsed, 'memory_mb': mb})
        return mb

    def stop(self) -> None:
        """Stop profiling and store the call statistics."""
        self.profiler.disable()
        self.end_time = time.perf_counter()
        self.sample("stop")
        stats = pstats.Stats(self.profiler)
        if self.strip_dirs:
            stats.strip_dirs()
        self.results = stats.sort_stats(self.sort_by)

    def profile_func(self, func: Callable, *args, **kwargs) -> Any:
        """
        Profile a function execution.

        Returns:
            The return value of the profiled function
        """
        self.start()
        try:
            return func(*args, **kwargs)
        finally:
            self.stop()

    def get_top_functions(self) -> List[Dict]:
        """Top ``top_n`` functions in ``sort_by`` order."""
        if self.results is None:
            return []
        functions = []
        for key in self.results.fcn_list[:self.top_n]:
            primitive_calls, ncalls, tottime, cumtime, _ = self.results.stats[key]
            functions.append({
                'function': pstats.func_std_string(key),
                'ncalls': ncalls,
                'primitive_calls': primitive_calls,
                'tottime': tottime,
                'cumtime': cumtime,
            })
        return functions

    def get_stats(self) -> Dict:
        """
        Get profiling statistics.

        Returns:
            A dictionary with wall time, memory samples and the top functions;
            empty if no profile has been taken
        """
        if self.results is None:
            return {}
        memory = [s['memory_mb'] for s in self._samples]
        return {
            'wall_seconds': self.end_time - self.start_time,
            'memory': {
                'baseline_mb': memory[0],
                'peak_mb': max(memory),
                'final_mb': memory[-1],
                'samples': list(self._samples),
            },
            'functions': self.get_top_functions(),
            'timestamp': datetime.now().isoformat(),
        }

    def save(self, filename: str) -> str:
        """Write ``get_stats()`` as JSON and return the path."""
        path = save_json(self.get_stats(), filename)
        logger.info("profile written to %s", path)
        return path
