import logging
import os
import tempfile

from Persistence.AbstractPersister import AbstractPersister


class Persister(AbstractPersister):
    """Stores each key as <cache_dir>/<key>.json; writes are atomic."""

    def __init__(
        self,
        cache_dir=".jetbound-cache"
    ):
        super(Persister, self).__init__()

        self.handler.module = "File Persister"
        if not cache_dir:
            raise ValueError("A cache directory must be given to the File persister")
        self._cache_dir = str(cache_dir)
        self.handler.log(message="Cache directory: {}".format(self._cache_dir), logger=logging.debug)

    @property
    def cache_dir(self):
        return self._cache_dir

    def filename(self, key):
        return os.path.join(self._cache_dir, "{}.json".format(key))

    def save(self, key=None, jsonstr=None):
        super(Persister, self).save(key=key, jsonstr=jsonstr)

        filename = self.filename(key)
        self.handler.log(message="Writing key {} to file: {}".format(key, filename), logger=logging.debug)
        temp_name = None
        try:
            os.makedirs(self._cache_dir, exist_ok=True)
            fd, temp_name = tempfile.mkstemp(dir=self._cache_dir, prefix=".", suffix=".tmp")
            with os.fdopen(fd, 'w') as f:
                f.write(jsonstr)
            os.replace(temp_name, filename)
        except OSError as ose:
            if temp_name and os.path.exists(temp_name):
                os.remove(temp_name)
            raise KeyError("Unable to write to the key file: {} ({})".format(filename, str(ose)))
        self.handler.log(message="Key set.", logger=logging.debug)

    def load(self, key=None):
        super(Persister, self).load(key=key)

        filename = self.filename(key)
        self.handler.log(message="Reading key {} from file: {}".format(key, filename), logger=logging.debug)
        try:
            with open(filename, 'r') as f:
                return f.read()
        except OSError:
            raise KeyError("Unable to open the key file: {}".format(filename))
