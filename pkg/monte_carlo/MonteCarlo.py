from typing import Callable, Dict, Any, List, Optional
import logging
import random
import time
from collections import defaultdict


logger = logging.getLogger(__name__)

SEED_BITS = 32


class MonteCarlo:
    """
    A framework for running seeded sampling trials.

    Every trial gets its own integer seed, drawn from a master generator
    seeded with ``random_seed``, and receives a fresh ``random.Random``
    built from that seed. A trial can therefore be replayed on its own
    with :meth:`replay`.
    """

    def __init__(self, random_seed: int = 0):
        """
        Initialize a new trial runner.

        Args:
            random_seed (int): Master seed. Defaults to 0.
        """
        self.random_seed = random_seed

    def trial_seeds(self, num_iterations: int) -> List[int]:
        """Return the per-trial seeds of a run of ``num_iterations`` trials."""
        master = random.Random(self.random_seed)
        return [master.getrandbits(SEED_BITS) for _ in range(num_iterations)]

    @staticmethod
    def replay(
        simulation_func: Callable[[random.Random], Dict[str, Any]], trial_seed: int
    ) -> Dict[str, Any]:
        """Run one trial from its recorded seed."""
        return simulation_func(random.Random(trial_seed))

    def run_simulation(
        self,
        simulation_func: Callable[[random.Random], Dict[str, Any]],
        num_iterations: int,
        progress_interval: int = 50,
    ) -> Dict[str, Any]:
        """
        Run a trial function many times and gather statistics.

        A trial returns a dictionary of results. Numeric and boolean values
        are totalled and counted; a truthy ``"failure"`` entry marks the trial
        as failed and is recorded with the trial's seed.

        Args:
            simulation_func (Callable[[random.Random], Dict[str, Any]]):
                Function that runs one trial with the given generator.
            num_iterations (int): Number of trials to run.
            progress_interval (int, optional): How often to log progress.
                Defaults to 50.

        Returns:
            Dict[str, Any]: Aggregate statistics and the failing trials.
        """
        results = defaultdict(list)
        failures = []

        start_time = time.time()

        for i, trial_seed in enumerate(self.trial_seeds(num_iterations)):
            if i % progress_interval == 0 and i > 0:
                elapsed = time.time() - start_time
                logger.info(
                    "completed %d/%d trials, est. %.2fs remaining",
                    i,
                    num_iterations,
                    elapsed / i * (num_iterations - i),
                )

            outcome = self.replay(simulation_func, trial_seed)

            failure = outcome.pop("failure", None)
            if failure:
                failures.append({"seed": trial_seed, **failure})

            for key, value in outcome.items():
                results[key].append(value)

        stats: Dict[str, Any] = {}
        for key, values in results.items():
            if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in values):
                stats[f"{key}_total"] = sum(values)
                stats[f"{key}_mean"] = sum(values) / len(values)

            if all(isinstance(v, (str, bool, int)) for v in values):
                value_counts = defaultdict(int)
                for value in values:
                    value_counts[value] += 1
                stats[f"{key}_counts"] = dict(sorted(value_counts.items(), key=str))

        stats["total_iterations"] = num_iterations
        stats["failures"] = failures

        logger.info(
            "%d trials in %.2fs, %d failed", num_iterations, time.time() - start_time, len(failures)
        )
        return stats
