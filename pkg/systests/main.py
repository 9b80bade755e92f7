import unittest
from TestErrorHandler import TestErrorHandler
from TestConfigurator import TestConfigurator
from TestProperties import TestProperties
from TestTable import TestTable
from TestCli import TestCli

if __name__ == '__main__':
    import xmlrunner
    unittest.main(testRunner=xmlrunner.XMLTestRunner(output='systest-reports'))
