"""Line-oriented ``.rl`` document format.

::

    # comments run to end of line
    name example_2_2
    source bundled corpus
    order 5
    elements 0 a b c 1
    hasse            # "x y": y covers x; or a ``leq`` block of N rows of 0/1
    0 a
    ...
    mon              # N rows, row x column y holds x⊙y, columns in element order
    0 0 0 0 0
    ...
    imp              # optional, same shape; derived when absent
    ...
"""

from __future__ import annotations

from typing import Optional

from .algebra import Algebra, derive_imp, leq_from_covers, validate
from .errors import ParseError

KEYWORDS = frozenset({"name", "source", "order", "elements", "hasse", "leq", "mon", "imp"})
BLOCKS = ("hasse", "leq", "mon", "imp")


def _tokens(text: str) -> list[tuple[int, list[tuple[int, str]]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for piece in body.split():
            col = body.index(piece, col)
            toks.append((col + 1, piece))
            col += len(piece)
        if toks:
            lines.append((lineno, toks))
    return lines


def parse_document(text: str) -> dict:
    """Parse into a raw dict (``names``, ``leq``, ``mon``, optional ``imp``, metadata)
    without checking the algebra axioms."""
    lines = _tokens(text)
    doc: dict = {"name": None, "source": None}
    k = 0
    seen = set()

    def fail(msg, lineno, col=1):
        raise ParseError(msg, lineno, col)

    while k < len(lines):
        lineno, toks = lines[k]
        col, key = toks[0]
        if key not in KEYWORDS:
            fail(f"expected a keyword, found {key!r}", lineno, col)
        if key in seen:
            fail(f"duplicate {key!r} section", lineno, col)
        seen.add(key)
        rest = toks[1:]
        k += 1
        if key == "name":
            if len(rest) != 1:
                fail("'name' takes exactly one token", lineno, col)
            doc["name"] = rest[0][1]
        elif key == "source":
            if not rest:
                fail("'source' needs a value", lineno, col)
            doc["source"] = " ".join(t for _, t in rest)
        elif key == "order":
            if len(rest) != 1 or not rest[0][1].isdigit() or int(rest[0][1]) < 1:
                fail("'order' takes one positive integer", lineno, rest[0][0] if rest else col)
            doc["order"] = int(rest[0][1])
        elif key == "elements":
            names = [t for _, t in rest]
            for c, t in rest:
                if t in KEYWORDS:
                    fail(f"element name {t!r} is a reserved keyword", lineno, c)
            if len(set(names)) != len(names):
                fail("element names must be distinct", lineno, col)
            doc["names"] = names
        else:
            if rest:
                fail(f"'{key}' must stand alone on its line", lineno, rest[0][0])
            if "names" not in doc or "order" not in doc:
                fail(f"'{key}' block needs 'order' and 'elements' first", lineno, col)
            n = doc["order"]
            if len(doc["names"]) != n:
                fail(f"'elements' lists {len(doc['names'])} names but order is {n}", lineno, col)
            index = {s: i for i, s in enumerate(doc["names"])}

            def lookup(c, t, ln):
                if t not in index:
                    fail(f"unknown element {t!r}", ln, c)
                return index[t]

            if key == "hasse":
                pairs = []
                while k < len(lines) and lines[k][1][0][1] not in KEYWORDS:
                    ln, row = lines[k]
                    if len(row) != 2:
                        fail("hasse rows are 'x y' pairs", ln, row[0][0])
                    pairs.append((lookup(*row[0], ln), lookup(*row[1], ln)))
                    k += 1
                doc["covers"] = pairs
            else:
                rows = []
                for _ in range(n):
                    if k >= len(lines):
                        fail(f"'{key}' block ends early; expected {n} rows", lineno, col)
                    ln, row = lines[k]
                    if row[0][1] in KEYWORDS:
                        fail(f"'{key}' block ends early; expected {n} rows", ln, row[0][0])
                    if len(row) != n:
                        fail(f"'{key}' rows need {n} entries, found {len(row)}", ln, row[0][0])
                    if key == "leq":
                        vals = []
                        for c, t in row:
                            if t not in ("0", "1"):
                                fail("leq entries are 0 or 1", ln, c)
                            vals.append(t == "1")
                        rows.append(vals)
                    else:
                        rows.append([lookup(c, t, ln) for c, t in row])
                    k += 1
                doc[key] = rows

    for need in ("order", "elements", "mon"):
        if need not in seen:
            raise ParseError(f"missing '{need}' section")
    if ("hasse" in seen) == ("leq" in seen):
        raise ParseError("give exactly one of 'hasse' or 'leq'")
    if "covers" in doc:
        doc["leq"] = leq_from_covers(doc["order"], doc.pop("covers"))
    return doc


def parse(text: str) -> Algebra:
    """Parse and validate a document."""
    doc = parse_document(text)
    return validate(
        doc["names"], doc["leq"], doc["mon"], doc.get("imp"), name=doc["name"], source=doc["source"]
    )


def load(path) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def serialize(A: Algebra, *, include_imp: bool = True) -> str:
    """Canonical text: metadata, order, elements, hasse covers, mon, imp."""
    names = A.names
    out = []
    if A.name:
        out.append(f"name {A.name}")
    if A.source:
        out.append(f"source {A.source}")
    out.append(f"order {A.order}")
    out.append("elements " + " ".join(names))
    out.append("hasse")
    for x, y in sorted(A.covers):
        out.append(f"{names[x]} {names[y]}")
    out.append("mon")
    out.extend(" ".join(names[v] for v in row) for row in A.mon)
    if include_imp:
        out.append("imp")
        out.extend(" ".join(names[v] for v in row) for row in A.imp)
    return "\n".join(out) + "\n"


def canonical(text: str) -> str:
    return serialize(parse(text))


def strip_imp(text: str) -> str:
    """Drop the ``imp`` block so the residuum must be derived."""
    A = parse(text)
    return serialize(A, include_imp=False)


def implication_from_document(text: str) -> Optional[tuple]:
    doc = parse_document(text)
    return derive_imp(doc["leq"], doc["mon"], doc.get("imp"))
