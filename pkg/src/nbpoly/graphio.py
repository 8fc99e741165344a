"""graph6 and edge-list serialization, family expressions, corpus files."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import CapacityError, GraphError, ParseError
from .graph import MAX_ORDER, Graph, family, from_edge_list

GRAPH6_HEADER = b">>graph6<<"


def _to_bytes(data: bytes | str) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("graph6 input is not ASCII", exc.start) from None
    return bytes(data)


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header, trailing newline allowed)."""
    data = _to_bytes(line).rstrip(b"\r\n")
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise ParseError("empty graph6 string", base)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 character {chr(b)!r}", base + i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) > 1 and data[1] == 126:
            raise CapacityError(f"graph6 eight-byte size form exceeds order {MAX_ORDER}")
        if len(data) < 4:
            raise ParseError("truncated graph6 size prefix", base + len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise ParseError(f"non-canonical long size prefix for order {n}", base + 1)
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise ParseError(f"truncated graph6 bit stream: need {need} bytes, got {len(body)}",
                         base + len(data))
    if len(body) > need:
        raise ParseError("trailing bytes after graph6 bit stream", base + pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need:
        pad = 6 * need - nbits
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise ParseError("nonzero graph6 padding bits", base + pos + need - 1)
    return Graph(n, adj)


def write_graph6(G: Graph) -> bytes:
    """Encode without header or newline."""
    n = G.n
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    acc = nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (G.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``. Blank lines are ignored."""
    rows = [(i + 1, line.split()) for i, line in enumerate(text.splitlines()) if line.strip()]
    if not rows:
        raise ParseError("empty edge list", 1)

    def ints(lineno: int, fields: list[str]) -> tuple[int, int]:
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {' '.join(fields)!r}", lineno)
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {' '.join(fields)!r}", lineno) from None

    lineno, head = rows[0]
    n, m = ints(lineno, head)
    if n < 0 or m < 0:
        raise ParseError("negative vertex or edge count", lineno)
    edges = [ints(no, fields) for no, fields in rows[1:]]
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", lineno)
    try:
        return from_edge_list(n, edges)
    except CapacityError:
        raise
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def write_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "".join([f"{G.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_family(expr: str) -> Graph:
    """Parse ``name:arg[,arg...]`` (an optional ``family:`` prefix is accepted)."""
    body = expr[len("family:"):] if expr.startswith("family:") else expr
    name, _, args = body.partition(":")
    params: list[int | float] = []
    for raw in filter(None, args.split(",")):
        raw = raw.strip()
        try:
            params.append(int(raw))
        except ValueError:
            try:
                params.append(float(raw))
            except ValueError:
                raise GraphError(f"family {name}: cannot parse parameter {raw!r}") from None
    return family(name, *params)


@dataclass(frozen=True)
class GraphDocument:
    format: str  # "graph6" | "edge-list" | "family"
    graph: Graph
    source: str


def _looks_like_edge_list(text: str) -> bool:
    first = next((line for line in text.splitlines() if line.strip()), "")
    return len(first.split()) == 2 and all(t.lstrip("-").isdigit() for t in first.split())


def load_graph(spec: str) -> GraphDocument:
    """Load a single graph from a ``family:`` expression or a file path."""
    if spec.startswith("family:"):
        return GraphDocument("family", parse_family(spec), spec)
    path = Path(spec)
    try:
        text = path.read_text(encoding="ascii")
    except OSError as exc:
        raise ParseError(f"cannot read {spec}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise ParseError(f"{spec} is not ASCII text", exc.start) from None
    if path.suffix in (".g6", ".graph6") or not _looks_like_edge_list(text):
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise ParseError(f"{spec}: expected exactly one graph6 line, found {len(lines)}")
        return GraphDocument("graph6", parse_graph6(lines[0]), lines[0])
    return GraphDocument("edge-list", parse_edge_list(text), text)


def iter_graph6_file(path: str | Path) -> Iterator[tuple[str, Graph]]:
    """Yield ``(line, graph)`` for every non-blank line of a graph6 corpus file."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    for lineno, line in enumerate(data.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            G = parse_graph6(line)
        except ParseError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from None
        yield line.decode("ascii"), G
