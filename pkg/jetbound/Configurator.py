import json
import logging
import os
import sys

from cli_helpers.ErrorHandler import ErrorHandler
from cli_helpers.check_kwargs import check_kwargs
from Persistence.PersistenceEngine import PersistenceEngine


class Configurator(object):
    """
    Provides a configuration control to enable jetbound to execute_load its
    configuration from a set of environment variables or from a JSON
    configuration file named by JETBOUND_CONFIG.
    """

    def __init__(self):
        self.settings = None
        self.configuration = {}
        self.error_handler = None
        default_config_file = os.path.join(os.path.dirname(__file__), "defaults.config")
        self.env_vars = self._load_defaults(default_config_file)

    def execute_load(self, settings):
        if settings is None:
            raise ValueError("A settings dictionary must be passed to the Configurator")
        if not isinstance(settings, dict):
            raise TypeError("Expected a dict for settings, received {0}".format(type(settings)))

        self.settings = settings
        self.settings["PYTHON_VERSION_MAJOR"] = sys.version_info[0]

        self.settings["LOGGING_FORMAT"] = os.getenv(
            "logging_format",
            os.getenv("LOGGING_FORMAT", "%(asctime)s %(levelname)s: %(message)s")
        )
        self.settings["LOGGING_LEVEL"] = os.getenv(
            "logging_level",
            os.getenv("LOGGING_LEVEL", logging.INFO)
        )

        self.error_handler = ErrorHandler(
            module="Configurator",
            method="__init__",
            level=self.settings["LOGGING_LEVEL"],
            format=self.settings["LOGGING_FORMAT"]
        )

        self.error_handler.log(
            message="Initialized logging (level: {}, format: {})"
                .format(
                    self.settings["LOGGING_LEVEL"],
                    self.settings["LOGGING_FORMAT"]
                ),
            logger=logging.debug
        )

        config_file = self._set_config(
            source=os.getenv,
            name="JETBOUND_CONFIG"
        )

        self.error_handler.log(
            message="Loading configuration from: {}".format(
                config_file if config_file else "environment variables"
            )
        )

        source = {}
        if config_file:
            source = self._load_from_json(config_file)
            if not isinstance(source, dict):
                raise ValueError("The configuration file {} must hold a JSON object".format(config_file))

        self.load_variables(source=source)

    def get_variables(self):
        return [
                   ("LOGGING_LEVEL", "An integer representing the Python "
                                     "logging level (e.g. 10 for debug, 20 for info, etc.)"),
                   ("LOGGING_FORMAT", "The format for logs. The default is >> "
                                      "%(asctime)s %(levelname)s: %(message)s"),
                   ("JETBOUND_CONFIG", "A path and filename of a JSON configuration file "
                                       "used to set variables, e.g. /path/to/jetbound.json")
               ]\
               + [(i["name"], i["description"]) for i in self.env_vars]

    def dump_variables(self):
        return [
                   ("LOGGING_LEVEL", self.settings["LOGGING_LEVEL"]),
                   ("LOGGING_FORMAT", self.settings["LOGGING_FORMAT"]),
                   ("JETBOUND_CONFIG", self.settings["JETBOUND_CONFIG"])
               ] \
               + \
               [(i["name"], self.settings[i["name"]]) for i in self.env_vars]

    def print_variables(self, stream=None):
        out = stream or sys.stderr
        print('', file=out)
        print('=' * 80, file=out)
        print('=', ' '*30, 'CONFIGURATION', ' '*31, '=', file=out)
        print('=' * 80, file=out)
        print('The following environment variables may be set to configure jetbound.', file=out)
        print('Alternately, these can be defined in a file and passed using the env.', file=out)
        print('var. JETBOUND_CONFIG. Please note, the file must be a JSON data object.', file=out)
        print('', file=out)
        print('Please note: Env. Var. names can be *ALL* lowercase or *ALL* uppercase.', file=out)
        print('', file=out)
        print('-' * 80, file=out)
        print('| Current configuration set:', file=out)
        print('-' * 80, file=out)
        for name, val in self.dump_variables():
            print("| {:24s} | {}".format(name, val), file=out)
        print('-' * 80, file=out)
        print('', file=out)

    def load_variables(self, source=None):
        if source:
            _fetch = source.get
        else:
            _fetch = os.getenv

        for item in self.env_vars:
            if not isinstance(item, dict):
                raise TypeError("Unexpected item in configuration: {}, type: {}".format(item, type(item)))
            self.error_handler.log(
                method="load_variables",
                message="Processing {}".format(item.get("name", "no name provided")),
                logger=logging.debug
            )
            self._set_config(
                source=_fetch,
                **item
            )

    def _load_defaults(
            self,
            source
    ):
        if not source:
            raise ValueError("Source for _load_defaults is None!")

        try:
            with open(source, 'r') as f:
                _defaults = json.load(f)
        except IOError:
            raise IOError("The source file for _load_defaults was not found!")

        _cache = {
            "name": "JETBOUND_CACHE",
            "description": "Directory holding cached reports. Default is .jetbound-cache "
                           "under the working directory",
            "required": False,
            "default": _defaults["cache_dir"]
        }
        _cache_enabled = {
            "name": "JETBOUND_CACHE_ENABLED",
            "description": "Set to false to always recompute and never write the cache.",
            "required": False,
            "default": _defaults["cache_enabled"],
            "caster": bool
        }
        _persister = {
            "name": "PERSISTER",
            "description": "The cache persistence engine, as JSON: "
                           "{\"engine_name\": \"file\"|\"redis\", \"parameters\": {...}}",
            "required": False,
            "default": json.dumps({
                "engine_name": _defaults["persister_engine"],
                "parameters": {}
            }),
            "caster": PersistenceEngine
        }
        _threads = {
            "name": "JETBOUND_THREADS",
            "description": "Worker processes used by table and sweep. Default is the CPU count.",
            "required": False,
            "default": _defaults["threads"],
            "caster": int
        }
        _sweep_budget = {
            "name": "JETBOUND_SWEEP_BUDGET",
            "description": "Largest number of weight vectors a sweep evaluates.",
            "required": False,
            "default": _defaults["sweep_budget"],
            "caster": int
        }
        _sweep_max_total = {
            "name": "JETBOUND_SWEEP_MAX_TOTAL",
            "description": "Largest |a| a sweep enumerates. Default is 8 times the smallest "
                           "admissible |a| for the order.",
            "required": False,
            "default": None,
            "caster": int
        }
        _dry_run = {
            "name": "JETBOUND_DRY_RUN",
            "description": "Do not compute anything, simply report the configuration that would "
                           "be used.",
            "required": False,
            "default": False,
            "caster": bool
        }
        self._redis_defaults = {
            "host": _defaults["redis_host"],
            "port": _defaults["redis_port"]
        }

        return [
            _cache,
            _cache_enabled,
            _persister,
            _threads,
            _sweep_budget,
            _sweep_max_total,
            _dry_run
        ]

    def _set_config(
            self,
            **kwargs
    ):
        check_kwargs(
            parameter_list=["source", "name", "description", "required", "default", "errmsg", "caster", "choices"],
            caller="Configurator-_set_config",
            **kwargs
        )
        source = kwargs.get("source", None)
        name = kwargs.get("name", None)
        required = kwargs.get("required", None)
        default = kwargs.get("default", None)
        errmsg = kwargs.get("errmsg", None)
        caster = kwargs.get("caster", None)
        choices = kwargs.get("choices", None)

        value = source(
            name.lower(),
            source(name.upper(), None)
        )

        if required and value is None and default is None:
            raise ValueError(
                errmsg or
                "Problem fetching config item: "
                "{}. It is required and was not found or the value was None.".format(name)
            )

        self.error_handler.log(
            method="_set_config",
            message="Before casting {}: {}".format(name, value),
            logger=logging.debug
        )

        if value is None:
            value = default

        if caster and value is not None:
            if caster == PersistenceEngine:
                value = caster(**self._persister_arguments(value))
            elif caster == bool and isinstance(value, str):
                value = value.lower() not in ("false", "0", "no", "")
            else:
                value = caster(value)

        if choices and value not in choices:
            raise ValueError(
                errmsg or
                "The configuration value for {}({}) is not in the list of choices: {}".format(
                    name,
                    value,
                    choices
                )
            )

        self.settings[name] = value
        self.error_handler.log(
            method="_set_config",
            message="Set settings[{}] = {}".format(name, value),
            logger=logging.debug
        )
        return value

    def _persister_arguments(self, value):
        if not isinstance(value, dict):
            value = json.loads(str(value).replace("'", "\""))
        arguments = dict(value)
        parameters = dict(arguments.get("parameters") or {})
        engine_name = str(arguments.get("engine_name", "")).lower()
        if engine_name == "file":
            parameters.setdefault("cache_dir", self.settings.get("JETBOUND_CACHE"))
        elif engine_name == "redis":
            for key, default in self._redis_defaults.items():
                parameters.setdefault(key, default)
        arguments["parameters"] = parameters
        return arguments

    def _load_from_json(self, json_file_name):
        if not json_file_name:
            return None

        try:
            with open(json_file_name, 'r') as f:
                return json.load(f)
        except Exception as e:
            self.error_handler.error(
                module="Configurator.py",
                method="_load_from_json",
                status=2,
                exception=repr(e),
                message="An exception occurred!"
            )
            raise IOError(
                "A JSON file ({}) cannot be loaded. Exception: {}".format(
                    json_file_name,
                    repr(e)
                )
            )
