"""
Tests for the run profiler.
"""

import json
import os
import tempfile
import unittest

from swagnet.profiler import RunProfiler, get_memory_usage


class TestRunProfiler(unittest.TestCase):
    """Test cases for the RunProfiler class."""

    def setUp(self):
        self.profiler = RunProfiler(top_n=5)

    def test_empty_before_profiling(self):
        self.assertEqual(self.profiler.get_stats(), {})
        self.assertEqual(self.profiler.get_top_functions(), [])

    def test_profile_func(self):
        def fibonacci(n):
            if n <= 1:
                return n
            return fibonacci(n - 1) + fibonacci(n - 2)

        result = self.profiler.profile_func(fibonacci, 18)
        self.assertEqual(result, 2584)

        stats = self.profiler.get_stats()
        self.assertGreater(stats['wall_seconds'], 0)
        self.assertLessEqual(len(stats['functions']), 5)
        self.assertTrue(any('fibonacci' in f['function'] for f in stats['functions']))

    def test_memory_samples(self):
        self.profiler.start()
        self.profiler.sample("epoch 1")
        self.profiler.stop()

        memory = self.profiler.get_stats()['memory']
        labels = [s['label'] for s in memory['samples']]
        self.assertEqual(labels, ['start', 'epoch 1', 'stop'])
        self.assertGreaterEqual(memory['peak_mb'], memory['baseline_mb'])
        self.assertGreater(get_memory_usage(), 0)

    def test_profile_survives_exception(self):
        def fail():
            raise RuntimeError("boom")

        with self.assertRaises(RuntimeError):
            self.profiler.profile_func(fail)
        self.assertIn('functions', self.profiler.get_stats())

    def test_save(self):
        self.profiler.profile_func(sum, range(1000))
        with tempfile.TemporaryDirectory() as tmp:
            path = self.profiler.save(os.path.join(tmp, 'profile.json'))
            with open(path) as f:
                data = json.load(f)
        self.assertIn('memory', data)
        self.assertIn('timestamp', data)


if __name__ == '__main__':
    unittest.main()
