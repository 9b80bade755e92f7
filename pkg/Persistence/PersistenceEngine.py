import importlib
import logging
import os

import PersistenceExtensions
from cli_helpers.ErrorHandler import ErrorHandler
from Persistence.AbstractPersister import AbstractPersister


class PersistenceEngine(object):
    """
    Chooses a persister from the PersistenceExtensions package by name
    (case-insensitive, e.g. "file" or "redis") and instantiates it with the
    given parameters.
    """

    def __init__(self, **kwargs):
        self.handler = ErrorHandler(
            module="PersistenceEngine",
            method="__init__"
        )

        self.handler.log(message="Getting persistence engine arguments", logger=logging.debug)
        engine_name = kwargs.get('engine_name', None)
        parameters = kwargs.get('parameters', None)

        if not engine_name:
            raise ValueError(
                "'engine_name' must be defined for the persistence engine"
            )
        if not isinstance(parameters, dict):
            raise TypeError(
                "'parameters' must be a dictionary of objects"
            )

        self._engine_name = engine_name
        self._parameters = parameters
        self._persister = None

        extension_path = os.path.dirname(PersistenceExtensions.__file__)
        persisters = [
            filefound[:-3] for filefound in sorted(os.listdir(extension_path))
            if filefound.endswith(".py") and not filefound.startswith("_")
        ]
        validators = [filefound.lower() for filefound in persisters]
        self.handler.log(message="Persisters: {}".format(persisters), logger=logging.debug)

        try:
            self._engine_name = persisters[validators.index(str(self._engine_name).lower())]
        except ValueError:
            raise TypeError("Persister {} not available.".format(self._engine_name))

        self.handler.log(message="Importing Persister from {}".format(self._engine_name), logger=logging.debug)
        module = importlib.import_module("PersistenceExtensions.{}".format(self._engine_name))

        if not issubclass(getattr(module, "Persister", object), AbstractPersister):
            raise TypeError("The persister must be a subclass of an AbstractPersister!")

        self.handler.log(message="Instantiating Persister", logger=logging.debug)
        self._persister = module.Persister(**self._parameters)

    @property
    def engine_name(self):
        return self._engine_name

    @property
    def parameters(self):
        return self._parameters

    @property
    def persister(self):
        return self._persister

    def __repr__(self):
        return "<persister>{}".format(self._engine_name)
