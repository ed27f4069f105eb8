"""graph6, DIMACS ``p edge`` and plain edge-list I/O.

Emitters produce a canonical form (graph6 without header, DIMACS edges in
ascending order with no comments), so ``emit(parse(text)) == text`` holds
bit-exactly for canonical input and ``parse(emit(g)) == g`` for every graph.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, build_graph


class FormatError(ValueError):
    """Base class for parse failures; carries a byte offset or line number."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif offset is not None:
            where = f" (byte {offset})"
        super().__init__(message + where)
        self.offset = offset
        self.line = line


class EmptyInput(FormatError):
    pass


class MalformedHeader(FormatError):
    pass


class TruncatedData(FormatError):
    pass


class TrailingJunk(FormatError):
    pass


class EdgeCountMismatch(FormatError):
    pass


class MalformedLine(FormatError):
    pass


GRAPH6_HEADER = ">>graph6<<"


def _g6_size(data: str, pos: int) -> tuple[int, int]:
    def val(i: int) -> int:
        if i >= len(data):
            raise MalformedHeader("size prefix cut short", offset=i)
        c = ord(data[i]) - 63
        if not 0 <= c < 64:
            raise MalformedHeader(f"invalid character {data[i]!r} in size prefix", offset=i)
        return c

    if pos >= len(data):
        raise EmptyInput("empty graph6 input", offset=pos)
    first = ord(data[pos]) - 63
    if not 0 <= first <= 63:
        raise MalformedHeader(f"invalid character {data[pos]!r} in size prefix", offset=pos)
    if first < 63:
        return first, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == "~":
        n = 0
        for i in range(pos + 2, pos + 8):
            n = (n << 6) | val(i)
        return n, pos + 8
    n = 0
    for i in range(pos + 1, pos + 4):
        n = (n << 6) | val(i)
    return n, pos + 4


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise EmptyInput("empty graph6 input", offset=0)
    pos = 0
    if text.startswith(">>"):
        if not text.startswith(GRAPH6_HEADER):
            raise MalformedHeader("unrecognised '>>' header", offset=0)
        pos = len(GRAPH6_HEADER)
    n, pos = _g6_size(text, pos)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = text[pos : pos + nchars]
    if len(body) < nchars:
        raise TruncatedData(f"expected {nchars} data bytes for n={n}, found {len(body)}",
                            offset=pos + len(body))
    if len(text) > pos + nchars:
        raise TrailingJunk(f"{len(text) - pos - nchars} unexpected trailing bytes",
                           offset=pos + nchars)
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for ci, ch in enumerate(body):
        c = ord(ch) - 63
        if not 0 <= c < 64:
            raise MalformedLine(f"invalid data character {ch!r}", offset=pos + ci)
        for shift in range(5, -1, -1):
            b = c >> shift & 1
            if k < nbits:
                if b:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif b:
                raise TrailingJunk("non-zero padding bits", offset=pos + ci)
            k += 1
    return Graph(n, tuple(adj))


def _g6_size_bytes(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    out = [_g6_size_bytes(g.n)]
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(63 + acc))
                acc = nacc = 0
    if nacc:
        out.append(chr(63 + (acc << (6 - nacc))))
    return "".join(out)


def parse_dimacs(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    if not text.strip():
        raise EmptyInput("empty DIMACS input", line=1)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise MalformedHeader("duplicate problem line", line=lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise MalformedHeader(f"expected 'p edge <n> <m>', got {line!r}", line=lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise MalformedHeader(f"non-integer counts in {line!r}", line=lineno) from None
            if n < 0 or m < 0:
                raise MalformedHeader("negative counts", line=lineno)
        elif fields[0] == "e":
            if n is None:
                raise MalformedHeader("edge line before problem line", line=lineno)
            if len(fields) != 3:
                raise MalformedLine(f"expected 'e <u> <v>', got {line!r}", line=lineno)
            try:
                u, v = int(fields[1]) - 1, int(fields[2]) - 1
            except ValueError:
                raise MalformedLine(f"non-integer endpoint in {line!r}", line=lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedLine(f"endpoint out of range 1..{n} in {line!r}", line=lineno)
            if u == v:
                raise MalformedLine(f"self-loop in {line!r}", line=lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise MalformedLine(f"duplicate edge in {line!r}", line=lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise MalformedLine(f"unknown line type {fields[0]!r}", line=lineno)
    if n is None:
        raise MalformedHeader("missing 'p edge' problem line", line=1)
    if len(edges) != m:
        raise EdgeCountMismatch(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def emit_dimacs(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """One ``u v`` pair per line, 0-indexed. A ``# n <count>`` comment fixes
    the vertex count (needed for isolated vertices); otherwise it is max id + 1."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "n":
                try:
                    n = int(fields[1])
                except ValueError:
                    raise MalformedHeader(f"bad vertex count in {line!r}", line=lineno) from None
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedLine(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedLine(f"non-integer endpoint in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise MalformedLine(f"negative vertex id in {line!r}", line=lineno)
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise MalformedLine(str(exc)) from None


def emit_edgelist(g: Graph) -> str:
    lines = [f"# n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


FORMATS = ("graph6", "dimacs", "edgelist")
_EXTENSIONS = {".g6": "graph6", ".graph6": "graph6", ".col": "dimacs", ".dimacs": "dimacs",
               ".txt": "edgelist", ".edges": "edgelist", ".edgelist": "edgelist"}


def infer_format(path: str | Path) -> str:
    fmt = _EXTENSIONS.get(Path(path).suffix.lower())
    if fmt is None:
        raise FormatError(f"cannot infer format from {str(path)!r}; pass --format")
    return fmt


def parse(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise FormatError(f"unknown format {fmt!r}")


def emit(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "dimacs":
        return emit_dimacs(g)
    if fmt == "edgelist":
        return emit_edgelist(g)
    raise FormatError(f"unknown format {fmt!r}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = fmt or infer_format(path)
    return parse(Path(path).read_text(), fmt)
