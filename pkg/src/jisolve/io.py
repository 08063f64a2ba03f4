"""Plain-text instance, solution and CNF formats.

CISL::

    cisl <n> <gamma>
    v <start> <end> <weight> <color,color,...>      (n lines)

2-union::

    2union <n> <k>
    g1 <start> <end>                                (n lines)
    g2 <start> <end>                                (n lines)

Solutions consist of ``value <v>``, ``pick <i> ...`` and ``yes``/``no``
lines. Everything after ``#`` on a line is ignored.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import InstanceFormatError
from .graph import ColoredIntervalGraph, TwoUnionInstance
from .oracle import Cnf3


def _lines(text):
    """Yield ``(line_number, tokens)`` for non-blank lines, comments stripped."""
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _int(tok, no, what):
    try:
        return int(tok)
    except ValueError:
        raise InstanceFormatError(f"{what} must be an integer, got {tok!r}", no) from None


def _count(tok, no, what):
    val = _int(tok, no, what)
    if val < 0:
        raise InstanceFormatError(f"{what} must be nonnegative", no)
    return val


def parse_instance(text):
    """Parse either instance format into a ``ColoredIntervalGraph`` or a
    ``TwoUnionInstance``."""
    lines = list(_lines(text))
    if not lines:
        raise InstanceFormatError("missing header", 1)
    no, head = lines[0]
    if head[0] == "cisl":
        return _parse_cisl(head, no, lines[1:])
    if head[0] == "2union":
        return _parse_two_union(head, no, lines[1:])
    raise InstanceFormatError(f"unknown header {head[0]!r} (expected 'cisl' or '2union')", no)


def _parse_cisl(head, hno, body):
    if len(head) != 3:
        raise InstanceFormatError("header must be 'cisl <n> <gamma>'", hno)
    n, gamma = _count(head[1], hno, "n"), _count(head[2], hno, "gamma")
    if len(body) != n:
        last = body[-1][0] if body else hno
        raise InstanceFormatError(f"expected {n} vertex lines, found {len(body)}", last)
    starts, ends, weights, ptr, ids = [], [], [], [0], []
    for no, tok in body:
        if tok[0] != "v" or len(tok) != 5:
            raise InstanceFormatError("vertex line must be 'v <start> <end> <weight> <colors>'", no)
        s, e, w = (_int(x, no, name) for x, name in zip(tok[1:4], ("start", "end", "weight")))
        if s > e:
            raise InstanceFormatError("start exceeds end", no)
        if w < 0:
            raise InstanceFormatError("weight must be nonnegative", no)
        cols = [_int(x, no, "color") for x in tok[4].split(",") if x]
        if not cols:
            raise InstanceFormatError("empty color list", no)
        for x in cols:
            if not 1 <= x <= gamma:
                raise InstanceFormatError(f"color {x} outside 1..{gamma}", no)
        starts.append(s)
        ends.append(e)
        weights.append(w)
        ids.extend(cols)
        ptr.append(len(ids))
    return ColoredIntervalGraph.from_arrays(np.array(starts, dtype=np.int64), np.array(ends, dtype=np.int64),
                                            ptr, ids, np.array(weights, dtype=np.int64))


def _parse_two_union(head, hno, body):
    if len(head) != 3:
        raise InstanceFormatError("header must be '2union <n> <k>'", hno)
    n, k = _count(head[1], hno, "n"), _count(head[2], hno, "k")
    blocks = {"g1": [], "g2": []}
    for no, tok in body:
        if tok[0] not in blocks or len(tok) != 3:
            raise InstanceFormatError("interval line must be 'g1 <start> <end>' or 'g2 <start> <end>'", no)
        if tok[0] == "g1" and blocks["g2"]:
            raise InstanceFormatError("g1 line after the g2 block", no)
        s, e = _int(tok[1], no, "start"), _int(tok[2], no, "end")
        if s > e:
            raise InstanceFormatError("start exceeds end", no)
        if len(blocks[tok[0]]) == n:
            raise InstanceFormatError(f"more than {n} {tok[0]} lines", no)
        blocks[tok[0]].append((s, e))
    for name, block in blocks.items():
        if len(block) != n:
            last = body[-1][0] if body else hno
            raise InstanceFormatError(f"expected {n} {name} lines, found {len(block)}", last)
    return TwoUnionInstance.from_pairs(blocks["g1"], blocks["g2"], k)


def serialize_instance(inst):
    """Text form of an instance, using its compact coordinates."""
    out = []
    if isinstance(inst, ColoredIntervalGraph):
        out.append(f"cisl {inst.n} {inst.gamma}")
        for v in range(inst.n):
            cols = ",".join(str(x) for x in inst.colors(v))
            out.append(f"v {inst.rep.starts[v]} {inst.rep.ends[v]} {inst.weights[v]} {cols}")
    elif isinstance(inst, TwoUnionInstance):
        out.append(f"2union {inst.n} {inst.k}")
        out.extend(f"g1 {s} {e}" for s, e in inst.rep1.pairs())
        out.extend(f"g2 {s} {e}" for s, e in inst.rep2.pairs())
    else:
        raise TypeError(f"cannot serialize {type(inst).__name__}")
    return "\n".join(out) + "\n"


def normalize(text):
    """Canonical form of an instance file."""
    return serialize_instance(parse_instance(text))


@dataclass(frozen=True)
class SolutionFile:
    value: Optional[int] = None
    pick: Optional[tuple] = None
    answer: Optional[bool] = None


def parse_solution(text):
    value = pick = answer = None
    for no, tok in _lines(text):
        if tok[0] == "value" and len(tok) == 2:
            value = _int(tok[1], no, "value")
        elif tok[0] == "pick":
            pick = tuple(_count(x, no, "vertex") for x in tok[1:])
        elif tok[0] in ("yes", "no") and len(tok) == 1:
            answer = tok[0] == "yes"
        else:
            raise InstanceFormatError(f"unknown solution line {' '.join(tok)!r}", no)
    return SolutionFile(value, pick, answer)


def format_solution(value=None, pick=None, answer=None):
    out = []
    if answer is not None:
        out.append("yes" if answer else "no")
    if value is not None:
        out.append(f"value {value}")
    if pick is not None:
        out.append(" ".join(["pick"] + [str(v) for v in sorted(pick)]))
    return "\n".join(out) + "\n"


def parse_dimacs(text):
    """Read a ``p cnf`` formula; ``c`` lines are comments."""
    header = None
    clauses, current = [], []
    for no, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if not tok or tok[0] == "c" or tok[0] == "%":
            continue
        if tok[0] == "p":
            if len(tok) != 4 or tok[1] != "cnf":
                raise InstanceFormatError("header must be 'p cnf <vars> <clauses>'", no)
            header = (_count(tok[2], no, "variable count"), _count(tok[3], no, "clause count"))
            continue
        if header is None:
            raise InstanceFormatError("clause before the 'p cnf' header", no)
        for x in tok:
            lit = _int(x, no, "literal")
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise InstanceFormatError("missing 'p cnf' header", 1)
    if current:
        clauses.append(tuple(current))
    if len(clauses) != header[1]:
        raise InstanceFormatError(f"expected {header[1]} clauses, found {len(clauses)}", 1)
    try:
        return Cnf3(header[0], tuple(clauses))
    except ValueError as exc:
        raise InstanceFormatError(str(exc), 1) from None

