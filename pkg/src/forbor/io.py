"""Text formats and JSON serialization for the command-line front end.

Graph files start with ``graph <n>`` followed by ``e <u> <v>`` lines;
digraph files use ``digraph <n>`` and ``a <u> <v>``.  Tokens are
whitespace-separated, ``#`` starts a comment, vertices are 0-based.
Forbidden-set files concatenate digraph blocks separated by blank lines;
factor-set files hold one word per line; hole-class spec files are
``key=value`` pairs.  Parse errors always carry a line number.
"""

from __future__ import annotations

from .graphs import Digraph, Graph, OrientedGraph
from .holes import HoleClassSpec
from .words import ALPHABET, FactorSet


class FormatError(ValueError):
    """Malformed input file; message includes the offending line number."""


def _clean_lines(text):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        yield i, line


def parse_graph(text: str) -> Graph:
    n = None
    edges = set()
    for i, line in _clean_lines(text):
        if not line:
            continue
        tok = line.split()
        if tok[0] == "graph":
            if n is not None:
                raise FormatError(f"line {i}: duplicate graph header")
            if len(tok) != 2 or not tok[1].isdigit():
                raise FormatError(f"line {i}: expected 'graph <n>'")
            n = int(tok[1])
        elif tok[0] == "e":
            if n is None:
                raise FormatError(f"line {i}: edge before 'graph <n>' header")
            if len(tok) != 3:
                raise FormatError(f"line {i}: expected 'e <u> <v>'")
            try:
                edges.add((int(tok[1]), int(tok[2])))
            except ValueError:
                raise FormatError(f"line {i}: vertices must be integers") from None
        else:
            raise FormatError(f"line {i}: unknown directive {tok[0]!r}")
    if n is None:
        raise FormatError("line 1: missing 'graph <n>' header")
    try:
        return Graph(n, frozenset(edges))
    except ValueError as e:
        raise FormatError(f"invalid graph: {e}") from None


def _parse_digraph_block(lines, oriented):
    n = None
    arcs = set()
    for i, line in lines:
        tok = line.split()
        if tok[0] == "digraph":
            if n is not None:
                raise FormatError(f"line {i}: duplicate digraph header")
            if len(tok) != 2 or not tok[1].isdigit():
                raise FormatError(f"line {i}: expected 'digraph <n>'")
            n = int(tok[1])
        elif tok[0] == "a":
            if n is None:
                raise FormatError(f"line {i}: arc before 'digraph <n>' header")
            if len(tok) != 3:
                raise FormatError(f"line {i}: expected 'a <u> <v>'")
            try:
                arcs.add((int(tok[1]), int(tok[2])))
            except ValueError:
                raise FormatError(f"line {i}: vertices must be integers") from None
        else:
            raise FormatError(f"line {i}: unknown directive {tok[0]!r}")
    if n is None:
        raise FormatError("missing 'digraph <n>' header")
    try:
        return OrientedGraph(n, frozenset(arcs)) if oriented else Digraph(n, frozenset(arcs))
    except ValueError as e:
        raise FormatError(f"invalid digraph: {e}") from None


def parse_digraph(text: str, oriented: bool = False) -> Digraph:
    lines = [(i, l) for i, l in _clean_lines(text) if l]
    if not lines:
        raise FormatError("line 1: empty digraph file")
    return _parse_digraph_block(lines, oriented)


def parse_digraph_blocks(text: str, oriented: bool = False):
    """Concatenated digraph blocks separated by blank lines."""
    blocks = []
    current = []
    for i, line in _clean_lines(text):
        if line:
            current.append((i, line))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if not blocks:
        raise FormatError("line 1: no digraph blocks found")
    return tuple(_parse_digraph_block(b, oriented) for b in blocks)


def parse_factor_set(text: str) -> FactorSet:
    words = set()
    for i, line in _clean_lines(text):
        if not line:
            continue
        if any(c not in ALPHABET for c in line):
            raise FormatError(
                f"line {i}: word {line!r} uses letters outside {ALPHABET!r}")
        words.add(line)
    return FactorSet(frozenset(words))


def parse_hole_spec(text: str) -> HoleClassSpec:
    """Key-value hole-class spec, e.g. ``variant=odd_tail M=5``.

    Keys: variant (finite | cofinite_complement | odd_tail | custom),
    members (comma-separated lengths), M (odd-tail threshold), exceptions,
    tail (finite | cofinite | odd_tail | coinfinite), bound.  A custom
    variant interprets `members` as the forbidden lengths within `bound`.
    """
    fields = {}
    for i, line in _clean_lines(text):
        if not line:
            continue
        for tok in line.split():
            if "=" not in tok:
                raise FormatError(f"line {i}: expected key=value, got {tok!r}")
            key, value = tok.split("=", 1)
            fields[key] = (i, value)

    def ints(key):
        if key not in fields:
            return ()
        i, value = fields[key]
        try:
            return tuple(int(x) for x in value.split(",") if x)
        except ValueError:
            raise FormatError(f"line {i}: {key} must be comma-separated integers") from None

    if "variant" not in fields:
        raise FormatError("line 1: missing variant=")
    variant = fields["variant"][1]
    if variant == "finite":
        return HoleClassSpec.finite(ints("members"))
    if variant == "cofinite_complement":
        return HoleClassSpec.cofinite_complement(ints("members"))
    if variant == "odd_tail":
        if "M" not in fields:
            raise FormatError("odd_tail needs M=<threshold>")
        return HoleClassSpec.odd_tail(int(fields["M"][1]), ints("exceptions"))
    if variant == "custom":
        if "tail" not in fields:
            raise FormatError("custom needs tail=")
        tail = {"coinfinite": "other"}.get(fields["tail"][1], fields["tail"][1])
        members = frozenset(ints("members"))
        bound = int(fields["bound"][1]) if "bound" in fields else 200
        return HoleClassSpec.custom(members.__contains__, tail, bound)
    raise FormatError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# writers


def graph_to_text(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def digraph_to_text(d: Digraph) -> str:
    lines = [f"digraph {d.n}"]
    lines += [f"a {u} {v}" for u, v in d.sorted_arcs()]
    return "\n".join(lines) + "\n"


def digraph_to_json(d: Digraph):
    return {"n": d.n, "arcs": [list(a) for a in d.sorted_arcs()]}
