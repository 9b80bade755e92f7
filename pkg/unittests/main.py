import unittest
import logging
from TestPolynomial import TestPolynomial
from TestVariableTable import TestVariableTable
from TestRelationSet import TestRelationSet
from TestTowerController import TestTowerController
from TestGeometrySpec import TestGeometrySpec, TestEvaluatedClass
from TestWeightVector import TestWeightVector
from TestThreshold import TestThreshold
from TestMorseController import TestMorseController
from TestMorseReport import TestMorseReport
from TestLemmaSuite import TestLemmaSuite
from TestHelpers import TestHelpers
from TestPersister import TestPersister
from TestPersisterRedis import TestPersisterRedis
from TestReportCache import TestReportCache
from TestRunConfig import TestRunConfig
from TestBatchRunner import TestBatchRunner
from TestCommands import TestCommands

logging.disable(logging.CRITICAL)

if __name__ == '__main__':
    import xmlrunner
    unittest.main(testRunner=xmlrunner.XMLTestRunner(output='unittest-reports'))
