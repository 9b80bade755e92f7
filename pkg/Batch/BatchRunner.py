import logging
import os
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor, as_completed

from jetbound import error_handler
from Morse.MorseController import MorseController
from Morse.MorseReport import MorseReport

# One pipeline run; weights is a tuple of ints so jobs pickle cheaply.
Job = namedtuple("Job", ["n", "k", "geometry", "weights"])


def run_job(job):
    """Worker entry point: the report JSON of one pipeline run."""
    controller = MorseController(n=job.n, k=job.k, geometry=job.geometry, weights=job.weights)
    return controller.run().dump()


class BatchRunner(object):
    """
    Runs pipeline jobs, serving what it can from the report cache and
    computing the rest in a process pool (inline with one worker). Reports
    come back in job order whatever the scheduling.
    """

    def __init__(self, cache=None, threads=None):
        self.handler = error_handler
        self._cache = cache
        self._threads = threads or os.cpu_count() or 1

    @property
    def threads(self):
        return self._threads

    def run(self, jobs):
        self.handler.module = "BatchRunner"
        self.handler.method = "run"
        _jobs = list(jobs)
        reports = [None] * len(_jobs)
        pending = []
        for i, job in enumerate(_jobs):
            cached = self._cache.fetch(job.n, job.k, job.geometry, job.weights) if self._cache else None
            if cached is not None:
                reports[i] = MorseReport.load(cached)
            else:
                pending.append(i)

        self.handler.log(
            message="{} jobs: {} cached, {} to compute on {} workers".format(
                len(_jobs), len(_jobs) - len(pending), len(pending), self._threads
            ),
            logger=logging.info
        )

        if self._threads == 1 or len(pending) < 2:
            for i in pending:
                reports[i] = self._finish(run_job(_jobs[i]))
        else:
            with ProcessPoolExecutor(max_workers=min(self._threads, len(pending))) as ex:
                futures = {ex.submit(run_job, _jobs[i]): i for i in pending}
                for future in as_completed(futures):
                    reports[futures[future]] = self._finish(future.result())
        return reports

    def _finish(self, jsonstr):
        report = MorseReport.load(jsonstr)
        if self._cache:
            self._cache.store(report)
        return report
