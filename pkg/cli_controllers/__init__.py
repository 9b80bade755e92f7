from .BoundController import BoundController
from .TableController import TableController
from .PolyController import PolyController
from .SweepController import SweepController
from .VerifyController import VerifyController
