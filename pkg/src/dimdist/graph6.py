"""graph6 encoding of labeled graphs (as used by nauty's ``geng``/``showg``).

Only the plain graph6 body is handled: no ``>>graph6<<`` header, no sparse6.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_N, Graph


class Graph6Error(ValueError):
    pass


class EmptyInput(Graph6Error):
    pass


class MalformedHeader(Graph6Error):
    pass


class InvalidCharacter(Graph6Error):
    pass


class TruncatedBody(Graph6Error):
    pass


class TrailingGarbage(Graph6Error):
    pass


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    word = nbits = 0
    for i, j in _pairs(n):
        word = word << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(word + 63))
            word = nbits = 0
    if nbits:
        out.append(chr((word << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.rstrip("\n")
    if not s:
        raise EmptyInput("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise InvalidCharacter(f"byte {ord(ch)} at position {pos} is outside 63..126")
    if s[0] != "~":
        n, body = ord(s[0]) - 63, s[1:]
    else:
        if len(s) < 4 or s[1] == "~":
            raise MalformedHeader(f"unsupported or short extended header in {s[:8]!r}")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        if n <= 62:
            raise MalformedHeader(f"extended header encodes small n={n}")
        body = s[4:]
    if n > MAX_N:
        raise MalformedHeader(f"n={n} exceeds the supported width {MAX_N}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) < need:
        raise TruncatedBody(f"body has {len(body)} bytes, n={n} needs {need}")
    if len(body) > need:
        raise TrailingGarbage(f"{len(body) - need} unexpected bytes after the body")
    stream = 0
    for ch in body:
        stream = stream << 6 | (ord(ch) - 63)
    pad = 6 * need - nbits
    if stream & ((1 << pad) - 1):
        raise TrailingGarbage("non-zero padding bits")
    stream >>= pad
    adj = [0] * n
    k = nbits
    for i, j in _pairs(n):
        k -= 1
        if stream >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def read_file(path: str | Path) -> Iterator[Graph]:
    """Yield graphs from a graph6 file; blank lines are skipped."""
    with open(path, encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield decode(line)
            except Graph6Error as exc:
                raise type(exc)(f"{path}:{lineno}: {exc}") from None


def write_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(encode(g) + "\n")
            count += 1
    return count
