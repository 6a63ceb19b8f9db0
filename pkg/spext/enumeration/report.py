"""CSV and JSON rendering of class reports."""
import csv
import json
from typing import Iterable, TextIO

from ..schemas import ClassReportSchema
from .models import ClassReport


def write_csv(reports: Iterable[ClassReport], stream: TextIO) -> None:
    """Header n,class,iso_classes,max_rho,argmax,unique,runtime_ms; argmax is quoted JSON."""
    writer = csv.writer(stream, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(ClassReport.CSV_HEADER)
    for report in reports:
        writer.writerow(report.to_csv_row())


def reports_to_json(reports: Iterable[ClassReport], indent: int = 2) -> str:
    payload = [ClassReportSchema.model_validate(r.to_dict()).model_dump() for r in reports]
    return json.dumps(payload, indent=indent)
