# Base of the command controllers. Each controller turns a RunConfig into a
# Response (exit status plus the body main prints); exceptions escaping
# execute() are mapped to exit statuses here so every command reports
# failures the same way.
import abc
import logging

from jetbound import error_handler, settings
from Batch.BatchRunner import BatchRunner
from Persistence.ReportCache import ReportCache


class CommandController(abc.ABC):
    def __init__(self):
        self.handler = error_handler
        self.handler.module = type(self).__name__
        self.handler.method = "__init__"

        # Persistence engine chosen by the Configurator (see jetbound/Configurator.py).
        self.persistence_engine = settings.get("PERSISTER", None)
        if self.persistence_engine is not None:
            self.handler.log(
                message="Persistence engine {} with parameters: {}".format(
                    self.persistence_engine.engine_name,
                    self.persistence_engine.parameters
                ),
                logger=logging.debug
            )

    def cache(self, cfg):
        persister = self.persistence_engine.persister if self.persistence_engine else None
        return ReportCache(persister=persister, enabled=cfg.cache_enabled)

    def runner(self, cfg):
        return BatchRunner(cache=self.cache(cfg), threads=cfg.threads)

    def dispatch(self, cfg):
        self.handler.module = type(self).__name__
        self.handler.method = "dispatch"
        try:
            return self.execute(cfg)
        except (ValueError, TypeError, RuntimeError, ArithmeticError) as e:
            return self.handler.failure(e)

    @abc.abstractmethod
    def execute(self, cfg):
        raise NotImplementedError
