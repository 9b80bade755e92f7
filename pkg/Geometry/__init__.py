from .EvaluatedClass import EvaluatedClass
from .GeometrySpec import GeometrySpec
