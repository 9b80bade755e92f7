import csv
import io
import json
import os

import jsonschema

# Process exit statuses shared by every command.
EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NO_THRESHOLD = 3
EXIT_INTERNAL = 4

FORMATS = ("text", "json", "csv")

_schema_file = os.path.join(os.path.dirname(__file__), "report_schema.json")
with open(_schema_file, "r") as _f:
    REPORT_SCHEMA = json.load(_f)


class Response(object):
    """What a command hands back to main: an exit status and the body to print."""

    def __init__(self, status=EXIT_OK, body="", mimetype="text/plain", error=False):
        self.status = status
        self.body = body
        self.mimetype = mimetype
        self.error = error

    def __repr__(self):
        return "<Response status={} mimetype={}>".format(self.status, self.mimetype)


def validate_report(report_dict):
    """Raise jsonschema.ValidationError when a report dict drifts from the schema."""
    jsonschema.validate(instance=report_dict, schema=REPORT_SCHEMA)
    return report_dict


def build_response(
    exit_status=None,
    response_data=None,
    response_format=None,
    columns=None
):
    """
    Render response_data (a dict, or a list of dicts for tabular commands) in
    the requested format.

    :param exit_status: process exit status, defaults to EXIT_OK.
    :param response_data: dict, list of dicts or str.
    :param response_format: one of text, json, csv (default json).
    :param columns: column order for csv/text rendering of row lists.
    :return: Response
    """
    _exit_status = EXIT_OK if exit_status is None else exit_status
    if not isinstance(_exit_status, int) or isinstance(_exit_status, bool):
        raise TypeError("Exit status must be an integer")
    if _exit_status < 0:
        raise ValueError("Exit status cannot be negative!")

    _format = response_format or "json"
    if _format not in FORMATS:
        raise ValueError("Unknown format {}; expected one of {}".format(_format, FORMATS))

    _data = response_data if response_data is not None else {}
    if isinstance(_data, str) and _format == "text":
        return Response(status=_exit_status, body=_data, mimetype="text/plain")
    if isinstance(_data, str):
        _data = {"result": _data}

    if _format == "json":
        return Response(
            status=_exit_status,
            body=json.dumps(_data, indent=2, sort_keys=False),
            mimetype="application/json"
        )

    rows = _data if isinstance(_data, list) else [_data]
    _columns = columns or (list(rows[0].keys()) if rows else [])

    if _format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(_columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(column)) for column in _columns])
        return Response(status=_exit_status, body=buffer.getvalue().rstrip("\n"), mimetype="text/csv")

    lines = []
    if isinstance(_data, list):
        widths = {
            column: max([len(column)] + [len(_text_cell(row.get(column))) for row in rows])
            for column in _columns
        }
        lines.append("  ".join(column.rjust(widths[column]) for column in _columns))
        for row in rows:
            lines.append("  ".join(_text_cell(row.get(column)).rjust(widths[column]) for column in _columns))
    else:
        width = max([len(key) for key in _columns] or [0])
        for key in _columns:
            lines.append("{}: {}".format(key.ljust(width), _text_cell(_data.get(key))))
    return Response(status=_exit_status, body="\n".join(lines), mimetype="text/plain")


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if value is None:
        return ""
    return value


def _text_cell(value):
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    if value is None:
        return "-"
    return str(value)
