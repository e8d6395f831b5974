"""
Reading and writing the graph text format. One directive per line, '#' starts a
comment that runs to the end of the line:

    vertex <name>
    edge <u> <v>
    arc <u> <v>        # tail u, head v

Vertices are declared before the edges and arcs that use them.
"""

import logging
import re

import ChromaticPipe.core.constants as cst
import ChromaticPipe.core.errors as ers
from ChromaticPipe.core.mixedgraph import MixedGraph, edge

logger = logging.getLogger(__name__)

_name = re.compile(cst.name_pattern)


def parse_graph(text):
    """ Parse the graph text format into a MixedGraph.

        Args:
            text (str): contents of a graph file

        Returns:
            MixedGraph: vertices in declaration order

        Raises:
            GraphParseError: on the first offending line, with its line number
    """
    vertices = []
    declared = set()
    edges = set()
    arcs = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.isascii():
            raise ers.GraphParseError(lineno, "non-ASCII character")
        line = raw.split(cst.comment_char, 1)[0].strip()
        if not line:
            continue
        directive, *operands = line.split()

        if directive not in cst.directives:
            raise ers.GraphParseError(lineno, f"unknown directive '{directive}'")
        arity = cst.directives[directive]
        if len(operands) != arity:
            raise ers.GraphParseError(lineno, f"'{directive}' takes {arity} operand{'s' if arity > 1 else ''}, got {len(operands)}")
        for name in operands:
            if not _name.fullmatch(name):
                raise ers.GraphParseError(lineno, f"invalid vertex name '{name}'")

        if directive == "vertex":
            name = operands[0]
            if name in declared:
                raise ers.GraphParseError(lineno, f"duplicate vertex '{name}'")
            declared.add(name)
            vertices.append(name)
            continue

        u, v = operands
        if u == v:
            raise ers.GraphParseError(lineno, f"loop {directive} at '{u}'")
        for name in (u, v):
            if name not in declared:
                raise ers.GraphParseError(lineno, f"undeclared vertex '{name}'")

        if directive == "edge":
            if edge(u, v) in edges:
                raise ers.GraphParseError(lineno, f"duplicate edge {u} {v}")
            edges.add(edge(u, v))
        else:
            if (u, v) in arcs:
                raise ers.GraphParseError(lineno, f"duplicate arc {u} {v}")
            arcs.add((u, v))

    graph = MixedGraph(vertices, edges, arcs)
    logger.debug(f"Parsed {graph!r}")
    return graph


def load_graph(path):
    """ Read and parse a graph file. Bytes outside ASCII are a parse error on
        the line that holds them, comments included.
    """
    with open(path, "rb") as handle:
        data = handle.read()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as err:
        head = data[:err.start].decode("ascii")
        raise ers.GraphParseError(len((head + "_").splitlines()), "non-ASCII character") from err
    return parse_graph(text)


def serialize_graph(graph):
    """ Write graph in the text format: vertices in order, then edges, then arcs.

        Raises:
            GraphStructureError: a vertex name cannot be written in the format
    """
    for v in graph.vertices:
        if not _name.fullmatch(str(v)):
            raise ers.GraphStructureError(f"Vertex name '{v}' is not a valid graph file name")
    lines = [f"vertex {v}" for v in graph.vertices]
    lines += [f"edge {u} {v}" for u, v in graph.edge_list()]
    lines += [f"arc {u} {v}" for u, v in graph.arc_list()]
    return "\n".join(lines) + "\n"
