import io
import json
import os
import shutil
import tempfile
from unittest import TestCase, mock

from jetbound.Configurator import Configurator
from PersistenceExtensions.File import Persister


class TestConfigurator(TestCase):
    def setUp(self):
        self.c = Configurator()
        self.settings = {}
        self.temp_dir = tempfile.mkdtemp(prefix="jetbound-config-")

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def config_file(self, content):
        name = os.path.join(self.temp_dir, "jetbound.json")
        with open(name, "w") as f:
            f.write(content)
        return name

    def test_co_init(self):
        c = Configurator()
        self.assertIsInstance(c, Configurator)

    def test_co_execute_load(self):
        self.c.execute_load(self.settings)
        self.assertEqual(self.settings["JETBOUND_SWEEP_BUDGET"], 40)
        self.assertTrue(self.settings["JETBOUND_CACHE_ENABLED"])
        self.assertIsInstance(self.settings["PERSISTER"].persister, Persister)

    def test_co_nosettings_execute_load(self):
        with self.assertRaises(ValueError):
            self.c.execute_load(None)

    def test_co_badtype_execute_load(self):
        with self.assertRaises(TypeError):
            self.c.execute_load('settings')

    def test_co_get_variables(self):
        ret = self.c.get_variables()
        self.assertIsInstance(ret, list)
        self.assertIn("JETBOUND_THREADS", [name for name, _ in ret])

    def test_co_badtype_get_variables(self):
        with self.assertRaises(TypeError):
            self.c.get_variables('foobar')

    def test_co_badvalue_load_defaults(self):
        with self.assertRaises(ValueError):
            self.c._load_defaults('')

    def test_co_badtype_load_defaults(self):
        with self.assertRaises(TypeError):
            self.c._load_defaults()

    def test_co_badfile_load_defaults(self):
        with self.assertRaises(IOError):
            self.c._load_defaults('foo.bar')

    def test_co_load_variables(self):
        self.c.execute_load(self.settings)
        self.c.load_variables({"JETBOUND_SWEEP_BUDGET": 7})
        values_set = dict(self.c.dump_variables())
        self.assertEqual(values_set["JETBOUND_SWEEP_BUDGET"], 7)

    def test_co_badattr_load_variables(self):
        self.c.execute_load(self.settings)
        with self.assertRaises(AttributeError):
            self.c.load_variables("JETBOUND_SWEEP_BUDGET")

    def test_co_environment(self):
        with mock.patch.dict(os.environ, {"JETBOUND_THREADS": "3", "jetbound_cache_enabled": "false"}):
            self.c.execute_load(self.settings)
        self.assertEqual(self.settings["JETBOUND_THREADS"], 3)
        self.assertFalse(self.settings["JETBOUND_CACHE_ENABLED"])

    def test_co_config_file(self):
        name = self.config_file(json.dumps({"JETBOUND_SWEEP_BUDGET": 11, "JETBOUND_CACHE": self.temp_dir}))
        with mock.patch.dict(os.environ, {"JETBOUND_CONFIG": name}):
            self.c.execute_load(self.settings)
        self.assertEqual(self.settings["JETBOUND_SWEEP_BUDGET"], 11)
        self.assertEqual(self.settings["PERSISTER"].persister.cache_dir, self.temp_dir)

    def test_co_config_file_not_object(self):
        name = self.config_file("[1, 2, 3]")
        with mock.patch.dict(os.environ, {"JETBOUND_CONFIG": name}):
            with self.assertRaises(ValueError):
                self.c.execute_load(self.settings)

    def test_co_config_file_missing(self):
        with mock.patch.dict(os.environ, {"JETBOUND_CONFIG": os.path.join(self.temp_dir, "absent.json")}):
            with self.assertRaises(IOError):
                self.c.execute_load(self.settings)

    def test_co_persister(self):
        persister = json.dumps({"engine_name": "file", "parameters": {"cache_dir": self.temp_dir}})
        with mock.patch.dict(os.environ, {"PERSISTER": persister}):
            self.c.execute_load(self.settings)
        self.assertEqual(self.settings["PERSISTER"].engine_name, "File")
        self.assertEqual(self.settings["PERSISTER"].persister.cache_dir, self.temp_dir)

    def test_co_bad_persister(self):
        with mock.patch.dict(os.environ, {"PERSISTER": json.dumps({"engine_name": "mongodb", "parameters": {}})}):
            with self.assertRaises(TypeError):
                self.c.execute_load(self.settings)

    def test_co_print_variables(self):
        self.c.execute_load(self.settings)
        out = io.StringIO()
        self.c.print_variables(stream=out)
        self.assertIn("CONFIGURATION", out.getvalue())
        self.assertIn("JETBOUND_SWEEP_BUDGET", out.getvalue())
