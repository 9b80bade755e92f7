from .build_response import build_response, validate_report, Response
from .check_kwargs import check_kwargs
from .ErrorHandler import ErrorHandler
