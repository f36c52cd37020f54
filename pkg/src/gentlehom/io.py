"""Text format for presentations and JSON helpers.

The format is line oriented::

    # comment
    vertex 1 2 3
    arrow a 1 2
    arrow b 2 3
    rel a b

Identifiers match ``[A-Za-z0-9_']+`` and must be declared before use.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from .presentation import (
    GentlePresentation,
    PresentationError,
    is_connected,
    validate_gentle,
)

__all__ = ["ParseError", "DisconnectedError", "parse", "parse_text", "serialize"]

_ID = re.compile(r"^[A-Za-z0-9_']+$")


class ParseError(PresentationError):
    """Syntax or declaration error, tagged with a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DisconnectedError(ValueError):
    """The quiver has more than one connected component."""


def _tokens(text: str) -> Iterable[Tuple[int, List[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_text(text: str, require_connected: bool = True) -> GentlePresentation:
    """Parse and validate a presentation.

    Raises:
        ParseError: malformed lines, unknown or duplicate ids, relations
            that do not compose.
        NotGentleError: the presentation parses but is not gentle.
        DisconnectedError: ``require_connected`` and the quiver is not
            connected.
    """
    vertices: List[str] = []
    vset = set()
    arrows: List[Tuple[str, str, str]] = []
    ends = {}
    rels: List[Tuple[str, str]] = []
    rset = set()
    for no, toks in _tokens(text):
        word, args = toks[0], toks[1:]
        for tok in args:
            if not _ID.match(tok):
                raise ParseError(f"bad identifier {tok!r}", no)
        if word == "vertex":
            if not args:
                raise ParseError("'vertex' needs at least one id", no)
            for v in args:
                if v in vset:
                    raise ParseError(f"duplicate vertex {v!r}", no)
                vset.add(v)
                vertices.append(v)
        elif word == "arrow":
            if len(args) != 3:
                raise ParseError("usage: arrow <id> <source> <target>", no)
            a, s, t = args
            if a in ends or a in vset:
                raise ParseError(f"duplicate id {a!r}", no)
            for x in (s, t):
                if x not in vset:
                    raise ParseError(f"undeclared vertex {x!r}", no)
            ends[a] = (s, t)
            arrows.append((a, s, t))
        elif word == "rel":
            if len(args) != 2:
                raise ParseError("usage: rel <arrow> <arrow>", no)
            a, b = args
            for x in (a, b):
                if x not in ends:
                    raise ParseError(f"undeclared arrow {x!r}", no)
            if ends[a][1] != ends[b][0]:
                raise ParseError(
                    f"relation {a} {b} does not compose: {a} ends at {ends[a][1]}, "
                    f"{b} starts at {ends[b][0]}", no)
            if (a, b) in rset:
                raise ParseError(f"duplicate relation {a} {b}", no)
            rset.add((a, b))
            rels.append((a, b))
        else:
            raise ParseError(f"unknown directive {word!r}", no)
    if not vertices:
        raise ParseError("no vertices declared")
    A = validate_gentle(vertices, arrows, rels)
    if require_connected and not is_connected(A):
        raise DisconnectedError("quiver is not connected; split it into blocks first")
    return A


def parse(path: Union[str, Path], require_connected: bool = True) -> GentlePresentation:
    return parse_text(Path(path).read_text(encoding="utf-8"), require_connected)


def serialize(A: GentlePresentation) -> str:
    lines = ["vertex " + " ".join(A.vertices)]
    lines += [f"arrow {a.id} {a.source} {a.target}" for a in A.arrows]
    lines += [f"rel {a} {b}" for a, b in A.sorted_relations()]
    return "\n".join(lines) + "\n"
