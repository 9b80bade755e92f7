import argparse

from cli_helpers.ErrorHandler import ErrorHandler
from cli_helpers.build_response import FORMATS


#############################################################################
# jetbound sub-commands                                                     #
#############################################################################

class CommandSet(object):
    def __init__(self, error_handler=None, parser=None):
        if not isinstance(error_handler, ErrorHandler):
            raise TypeError("Expected an ErrorHandler to be passed!")
        if not isinstance(parser, argparse.ArgumentParser):
            raise ValueError("An ArgumentParser must be passed to the command set!")

        self.parser = parser
        self.subparsers = parser.add_subparsers(dest="command", metavar="command")
        self.subparsers.required = True

        self.error_handler = error_handler
        self.error_handler.module = "CommandSet"
        self.error_handler.method = "__init__"
        self.error_handler.log(message="Initialized the command set")

    def bound(self, controller=None):
        # Degree threshold for one tower and weight vector.
        self.error_handler.method = "bound"
        self.error_handler.log(message="Adding command: bound")
        sub = self._add("bound", controller, "Effective degree threshold for one (dim, order, geometry, weights)")
        self._tower_arguments(sub, required=True)
        sub.add_argument("--weights", help="Comma separated admissible weights a1,..,ak (default 2*3^(k-2),..,2,1)")

    def table(self, controller=None):
        # Thresholds for 2 <= n <= k <= 5 (or the given limits).
        self.error_handler.method = "table"
        self.error_handler.log(message="Adding command: table")
        sub = self._add("table", controller, "Thresholds for every 2 <= dim <= order <= 5, default weights")
        self._tower_arguments(sub, required=False)

    def poly(self, controller=None):
        self.error_handler.method = "poly"
        self.error_handler.log(message="Adding command: poly")
        sub = self._add("poly", controller, "The Morse polynomial P(d)")
        self._tower_arguments(sub, required=True)
        sub.add_argument("--weights", help="Comma separated admissible weights a1,..,ak")
        sub.add_argument(
            "--integrated", action="store_true",
            help="Also print the integrated class in c1..cn, h before evaluation"
        )

    def sweep(self, controller=None):
        self.error_handler.method = "sweep"
        self.error_handler.log(message="Adding command: sweep")
        sub = self._add("sweep", controller, "Search admissible weights for the lowest threshold")
        self._tower_arguments(sub, required=True)
        sub.add_argument("--budget", type=int, help="Largest number of weight vectors to evaluate")
        sub.add_argument("--max-total", type=int, dest="max_total", help="Largest |a| to enumerate")

    def verify(self, controller=None):
        self.error_handler.method = "verify"
        self.error_handler.log(message="Adding command: verify")
        sub = self._add("verify", controller, "Run the lemma suites and print a pass/fail matrix")
        sub.add_argument("--dim", type=int, help="Largest dimension checked (default 3)")
        self._output_arguments(sub)

    #
    # 'private' methods
    #
    def _add(self, name, controller, description):
        if controller is None:
            raise ValueError("A controller must be given for the {} command".format(name))
        sub = self.subparsers.add_parser(name, help=description, description=description)
        sub.set_defaults(controller=controller)
        return sub

    def _tower_arguments(self, sub, required):
        sub.add_argument("--dim", type=int, required=required, help="Base dimension n")
        sub.add_argument("--order", type=int, required=required, help="Jet order k")
        sub.add_argument("--geometry", choices=["log", "compact"], default="log", help="Base geometry (default log)")
        self._output_arguments(sub)
        sub.add_argument("--threads", type=int, help="Worker processes (default JETBOUND_THREADS or the CPU count)")

    def _output_arguments(self, sub):
        sub.add_argument("--format", choices=FORMATS, default="text", dest="response_format", help="Output format")
        sub.add_argument("--no-cache", action="store_true", dest="no_cache", help="Neither read nor write the cache")
