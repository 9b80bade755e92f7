# Initialization code. Placed in a separate Python package from the
# command line entry point, this code allows the settings and the shared
# error handler to be imported into any other package, module, or method.

import logging          # Import standard logging - for levels only

from jetbound.Configurator import Configurator

# Bumped whenever an algorithmic change alters any computed report; it is
# part of every cache key.
ENGINE_VERSION = "1.0.0"

# Settings shared by the controllers, filled by the configurator.
settings = {}

# Instantiate a configurator object
c = Configurator()

# Load the configuration
c.execute_load(settings)

# Grab the error handler from the configuration object
error_handler = c.error_handler

error_handler.log(
    method="__init__",
    module="jetbound",
    message="c.execute_load has been run; logging enabled (engine {}).".format(ENGINE_VERSION),
    logger=logging.debug
)
