import json
import logging

from jsonschema import ValidationError

from jetbound import error_handler
from cli_helpers.build_response import validate_report
from Persistence.CacheEntry import CacheEntry


class ReportCache(object):
    """
    Looks reports up in, and writes them to, the configured persister.
    A back end failure or a corrupt entry is logged and treated as a miss so
    a run never fails because of its cache.
    """

    def __init__(self, persister=None, enabled=True):
        self.handler = error_handler
        self._persister = persister
        self._enabled = bool(enabled) and persister is not None

    @property
    def enabled(self):
        return self._enabled

    def fetch(self, dim, order, geometry, weights):
        """Return the cached report JSON for the run, or None."""
        if not self._enabled:
            return None
        self.handler.module = "ReportCache"
        self.handler.method = "fetch"
        entry = CacheEntry(dim=dim, order=order, geometry=geometry, weights=weights)
        try:
            jsonstr = self._persister.load(key=entry.key)
        except KeyError as ke:
            self.handler.log(message="Cache miss for {}: {}".format(entry.identity, str(ke)), logger=logging.debug)
            return None

        try:
            validate_report(json.loads(jsonstr))
        except (ValueError, ValidationError) as e:
            self.handler.log(
                message="Ignoring corrupt cache entry {}: {}".format(entry.key, str(e)),
                logger=logging.warning
            )
            return None

        self.handler.log(message="Cache hit for {}".format(entry.identity), logger=logging.debug)
        return jsonstr

    def store(self, report):
        if not self._enabled:
            return None
        self.handler.module = "ReportCache"
        self.handler.method = "store"
        entry = CacheEntry.for_report(report)
        try:
            self._persister.save(key=entry.key, jsonstr=entry.value)
        except KeyError as ke:
            self.handler.log(
                message="Report not cached ({}); continuing uncached".format(str(ke)),
                logger=logging.warning
            )
            return None
        return entry
