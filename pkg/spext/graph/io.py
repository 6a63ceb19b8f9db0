"""
Graph text formats

Edge-list format: line 1 is "n m", followed by m lines "u v" (0-based
endpoints separated by one space). Lines starting with '#' are comments and
blank lines are skipped. Output is canonical: edges sorted lexicographically.

graph6 is supported for interchange with standard graph tools (n <= 62).
"""
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .models import Graph, InvalidGraphError, make_graph

logger = logging.getLogger(__name__)


class EdgeListFormatError(ValueError):
    """Raised when edge-list or graph6 text is malformed"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"Line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    result = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        result.append((line_number, stripped))
    return result


def _parse_pair(line_number: int, line: str) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise EdgeListFormatError(f"Expected two integers, got {line!r}", line_number)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListFormatError(f"Expected two integers, got {line!r}", line_number)


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a canonical Graph."""
    lines = _content_lines(text)
    if not lines:
        raise EdgeListFormatError("Missing header line 'n m'")

    header_line, header = lines[0]
    n, m = _parse_pair(header_line, header)
    if n < 0 or m < 0:
        raise EdgeListFormatError(
            f"Header values must be non-negative, got {header!r}", header_line
        )

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise EdgeListFormatError(f"Header announces {m} edges, found {len(body)}", last)

    pairs = []
    seen = {}
    for line_number, line in body:
        u, v = _parse_pair(line_number, line)
        if u == v:
            raise EdgeListFormatError(f"Self-loop ({u},{v})", line_number)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListFormatError(f"Endpoint out of range in ({u},{v}) for n={n}", line_number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListFormatError(
                f"Duplicate edge ({u},{v}), first seen on line {seen[key]}", line_number
            )
        seen[key] = line_number
        pairs.append((u, v))

    return make_graph(n, pairs)


def format_edge_list(graph: Graph) -> str:
    """Canonical edge-list text (trailing newline included)."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def to_graph6(graph: Graph) -> str:
    """Encode as graph6 (orders up to 62)."""
    if graph.n > 62:
        raise InvalidGraphError(f"graph6 encoding here supports n <= 62, got {graph.n}")
    bits = []
    for j in range(1, graph.n):
        for i in range(j):
            bits.append(1 if graph.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(graph.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode a single graph6 string (orders up to 62)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise EdgeListFormatError("Empty graph6 string")
    codes = [ord(c) - 63 for c in data]
    if any(c < 0 or c > 63 for c in codes):
        raise EdgeListFormatError(f"Invalid graph6 character in {data!r}")
    n = codes[0]
    if n == 63:
        raise EdgeListFormatError("graph6 orders above 62 are not supported")

    needed = n * (n - 1) // 2
    bits = []
    for code in codes[1:]:
        bits.extend((code >> shift) & 1 for shift in range(5, -1, -1))
    if len(bits) < needed or len(codes) - 1 != (needed + 5) // 6:
        raise EdgeListFormatError(f"graph6 body has wrong length for n={n}")

    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return make_graph(n, pairs)


def parse_graph(text: str) -> Graph:
    """Parse either format: a single non-comment line that is not "n m" is graph6."""
    lines = _content_lines(text)
    if len(lines) == 1 and len(lines[0][1].split()) == 1:
        try:
            return from_graph6(lines[0][1])
        except EdgeListFormatError as e:
            raise EdgeListFormatError(str(e), lines[0][0])
    return parse_edge_list(text)


def read_graph(source: Union[str, Path]) -> Graph:
    """Read a graph from a path, or from standard input when source is '-'."""
    if str(source) == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    return parse_graph(text)


def write_graph(graph: Graph, target: Union[str, Path], graph6: bool = False) -> None:
    """Write a graph to a path, or to standard output when target is '-'."""
    text = to_graph6(graph) + "\n" if graph6 else format_edge_list(graph)
    if str(target) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(target).write_text(text, encoding="utf-8")
        logger.debug(f"Wrote graph n={graph.n} m={graph.m} to {target}")
