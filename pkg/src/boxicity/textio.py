"""Plain-text formats for graphs, representations, families and certificates.

Every format starts with a header word naming the artifact. Lines starting
with ``#`` and blank lines are ignored by the parsers. Writers emit a
canonical form, so ``format(parse(format(x))) == format(x)``.
"""

from __future__ import annotations

from .errors import BoxicityError
from .graphs import Graph, Multigraph
from .intervals import BoxRep, IntervalRep
from .oracle import BoxicityCertificate
from .suitable import Permutation, PermutationFamily


class FormatError(BoxicityError):
    pass


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line.split())
    return out


def _ints(tokens: list[str], where: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"{where}: expected integers, got {' '.join(tokens)!r}") from None


def _header(rows: list[list[str]], word: str, nargs: int) -> list[int]:
    if not rows:
        raise FormatError(f"empty input, expected a '{word}' header")
    head = rows[0]
    if head[0] != word or len(head) != nargs + 1:
        raise FormatError(f"expected header '{word}' with {nargs} numbers, got {' '.join(head)!r}")
    return _ints(head[1:], "header")


def format_graph(g: Graph | Multigraph) -> str:
    word = "multigraph" if isinstance(g, Multigraph) else "graph"
    lines = [f"{word} {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph | Multigraph:
    rows = _lines(text)
    if not rows or rows[0][0] not in ("graph", "multigraph"):
        raise FormatError("expected a 'graph' or 'multigraph' header")
    word = rows[0][0]
    n, m = _header(rows, word, 2)
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    pairs = []
    for row in body:
        if len(row) != 2:
            raise FormatError(f"edge line must have two ids: {' '.join(row)!r}")
        pairs.append(tuple(_ints(row, "edge")))
    if word == "multigraph":
        return Multigraph(n, tuple(pairs))
    return Graph(n, tuple(pairs))


def format_boxrep(rep: BoxRep) -> str:
    lines = [f"boxrep {rep.n} {rep.k}"]
    for v in range(rep.n):
        ends = " ".join(f"{l} {r}" for l, r in rep.box(v))
        lines.append(f"{v} {ends}")
    return "\n".join(lines) + "\n"


def _parse_boxrep_rows(rows: list[list[str]]) -> tuple[BoxRep, int]:
    n, k = _header(rows, "boxrep", 2)
    if k < 1:
        raise FormatError("a box representation needs at least one dimension")
    if len(rows) < n + 1:
        raise FormatError(f"expected {n} vertex lines, found {len(rows) - 1}")
    boxes = []
    for expect, row in enumerate(rows[1 : n + 1]):
        vals = _ints(row, "vertex line")
        if len(vals) != 2 * k + 1 or vals[0] != expect:
            raise FormatError(f"vertex line {expect} must be '<vertex> l1 r1 ... l{k} r{k}'")
        boxes.append([(vals[1 + 2 * i], vals[2 + 2 * i]) for i in range(k)])
    return BoxRep.from_boxes(boxes, k) if n else BoxRep(tuple(IntervalRep(()) for _ in range(k))), n + 1


def parse_boxrep(text: str) -> BoxRep:
    rows = _lines(text)
    rep, used = _parse_boxrep_rows(rows)
    if used != len(rows):
        raise FormatError("trailing lines after box representation")
    return rep


def format_family(family: PermutationFamily) -> str:
    lines = [f"perms {family.n} {len(family)}"]
    lines.extend(" ".join(map(str, p.order)) for p in family.perms)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> PermutationFamily:
    rows = _lines(text)
    n, p = _header(rows, "perms", 2)
    body = rows[1:]
    if len(body) != p:
        raise FormatError(f"header announces {p} permutations, found {len(body)}")
    perms = []
    for row in body:
        vals = _ints(row, "permutation")
        if len(vals) != n:
            raise FormatError(f"permutation must list {n} elements")
        perms.append(Permutation(tuple(vals)))
    return PermutationFamily(n, tuple(perms))


def format_certificate(cert: BoxicityCertificate) -> str:
    parts = [f"boxicity {cert.k}\n"]
    parts.extend(format_boxrep(BoxRep((r,))) for r in cert.reps)
    return "".join(parts)


def parse_certificate(text: str) -> tuple[int, list[IntervalRep]]:
    rows = _lines(text)
    (k,) = _header(rows, "boxicity", 1)
    rows = rows[1:]
    reps = []
    for _ in range(k):
        rep, used = _parse_boxrep_rows(rows)
        if rep.k != 1:
            raise FormatError("certificate blocks must be single-dimension box reps")
        reps.append(rep.dims[0])
        rows = rows[used:]
    if rows:
        raise FormatError("trailing lines after certificate")
    return k, reps


def parse_order(text: str) -> list[int]:
    return _ints([t for row in _lines(text) for t in row], "order")
