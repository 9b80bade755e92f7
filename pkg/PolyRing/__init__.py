from .VariableTable import VariableTable, VariableId
from .Polynomial import Polynomial, Monomial, DEGREE_OF_ZERO
