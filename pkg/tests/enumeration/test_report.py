"""
Unit Tests for Class Report Rendering
"""

import csv
import io
import json

from spext.enumeration import ClassReport, GraphClass, reports_to_json, write_csv
from spext.families import h_n

REPORT = ClassReport(
    class_name=GraphClass.CACTUS,
    n=5,
    iso_class_count=9,
    max_rho=2.5615528128088303,
    argmax_canonical=h_n(5),
    unique_argmax=True,
    runtime_ms=12.34,
)

EMPTY = ClassReport(GraphClass.TREE, 3, 0, 0.0, None, False, 0.0)


class TestWriteCsv:
    """Tests for write_csv"""

    def test_header_and_row(self):
        stream = io.StringIO()
        write_csv([REPORT], stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == "n,class,iso_classes,max_rho,argmax,unique,runtime_ms"
        assert lines[1].startswith('5,cactus,9,2.561552812809,"[[0,1],[0,2]')
        assert lines[1].endswith(",true,12.3")

    def test_argmax_parses_back(self):
        stream = io.StringIO()
        write_csv([REPORT, EMPTY], stream)
        rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
        assert json.loads(rows[0]["argmax"]) == h_n(5).edge_list()
        assert rows[1]["argmax"] == "[]"
        assert rows[1]["unique"] == "false"


class TestReportsToJson:
    """Tests for reports_to_json"""

    def test_payload(self):
        payload = json.loads(reports_to_json([REPORT, EMPTY]))
        assert payload[0]["class_name"] == "cactus"
        assert payload[0]["argmax_canonical"] == {"n": 5, "edges": h_n(5).edge_list()}
        assert payload[1]["argmax_canonical"] is None
        assert payload[1]["iso_class_count"] == 0
