"""Text formats for partial transformations.

All three grammars use 1-based labels:

* tabular        -- ``"2 3 4 1"``; ``-`` marks an undefined image
* chain/cycle    -- ``"[1 2 3](3 4)"``; inside a bracketed chain every label
                    maps to the label on its right, the last label takes its
                    image from a cycle or a later chain; parenthesised groups
                    are cycles
* block idempotent -- ``"{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}"``; every label of a
                    block maps to the block's representative

Labels absent from a chain/cycle or idempotent expression are left undefined
(they are NOT fixed points).  An optional ``^k`` suffix raises any parsed
element to the k-th power.
"""

from __future__ import annotations

import re

from .ptrans import UNDEF, PTrans, power


class ParseError(ValueError):
    """Malformed element text; ``pos`` is the character offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\S+")
_POWER_SUFFIX = re.compile(r"\^(-?\d+)\s*$")


def _ground_size(n: int | None, max_label: int, pos: int) -> int:
    if n is None:
        if max_label < 1:
            raise ParseError("cannot infer ground-set size from an empty expression", pos)
        return max_label
    if max_label > n:
        raise ParseError(f"label {max_label} exceeds ground-set size n={n}", pos)
    return n


def parse_tabular(text: str, n: int | None = None) -> PTrans:
    """Parse ``"2 3 4 1"`` style text: token i is the image of point i, ``-`` = undefined."""
    tokens = list(_TOKEN.finditer(text))
    if not tokens:
        raise ParseError("empty tabular expression", 0)
    if n is not None and len(tokens) != n:
        raise ParseError(f"expected {n} tokens, got {len(tokens)}", tokens[0].start())
    size = len(tokens)
    imgs = []
    for tok in tokens:
        s = tok.group()
        if s == "-":
            imgs.append(UNDEF)
            continue
        if not s.isdigit():
            raise ParseError(f"bad token {s!r}", tok.start())
        v = int(s)
        if not 1 <= v <= size:
            raise ParseError(f"label {v} out of range 1..{size}", tok.start())
        imgs.append(v - 1)
    return PTrans(size, tuple(imgs))


def _scan_groups(text: str) -> list[tuple[str, list[tuple[int, int]], int]]:
    """Split into (kind, [(label, pos)...], group_pos) with kind 'chain' or 'cycle'."""
    groups = []
    i = 0
    closer = {"[": "]", "(": ")"}
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c not in closer:
            raise ParseError(f"expected '[' or '(', found {c!r}", i)
        end = text.find(closer[c], i + 1)
        if end < 0:
            raise ParseError(f"unbalanced {c!r}", i)
        labels = []
        for tok in _TOKEN.finditer(text, i + 1, end):
            s = tok.group()
            if not s.isdigit() or int(s) < 1:
                raise ParseError(f"bad label {s!r}", tok.start())
            labels.append((int(s), tok.start()))
        groups.append(("chain" if c == "[" else "cycle", labels, i))
        i = end + 1
    if not groups:
        raise ParseError("empty chain/cycle expression", 0)
    return groups


def parse_chain_cycle(text: str, n: int | None = None) -> PTrans:
    """Parse chains ``[..]`` and cycles ``(..)`` into one partial transformation.

    Every chain's last label is its attachment point and must receive its
    image from a cycle or a later chain.
    """
    groups = _scan_groups(text)
    max_label = max((l for _, labels, _ in groups for l, _ in labels), default=0)
    first_pos = groups[0][2]
    size = _ground_size(n, max_label, first_pos)
    images: dict[int, int] = {}
    attachments: list[tuple[int, int]] = []

    def assign(src: int, dst: int, pos: int) -> None:
        if src in images:
            raise ParseError(f"label {src} is given two images", pos)
        images[src] = dst

    for kind, labels, gpos in groups:
        if kind == "chain":
            if len(labels) < 2:
                raise ParseError("a chain needs at least two labels", gpos)
            for (a, pos), (b, _) in zip(labels, labels[1:]):
                assign(a, b, pos)
            attachments.append(labels[-1])
        else:
            if not labels:
                raise ParseError("empty cycle", gpos)
            k = len(labels)
            for idx, (a, pos) in enumerate(labels):
                assign(a, labels[(idx + 1) % k][0], pos)
    for label, pos in attachments:
        if label not in images:
            raise ParseError(f"attachment point {label} never receives an image", pos)
    return PTrans.from_pairs(size, {x - 1: v - 1 for x, v in images.items()})


_ARROW = re.compile(r"->")


def parse_idempotent(text: str, n: int | None = None) -> PTrans:
    """Parse block notation ``{a b -> a}...``: each block maps to its representative."""
    i = 0
    blocks: list[tuple[list[tuple[int, int]], int, int]] = []
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c != "{":
            raise ParseError(f"expected '{{', found {c!r}", i)
        end = text.find("}", i + 1)
        if end < 0:
            raise ParseError("unbalanced '{'", i)
        arrow = _ARROW.search(text, i + 1, end)
        if arrow is None:
            raise ParseError("block is missing '->'", i)
        labels = []
        for tok in _TOKEN.finditer(text, i + 1, arrow.start()):
            s = tok.group()
            if not s.isdigit() or int(s) < 1:
                raise ParseError(f"bad label {s!r}", tok.start())
            labels.append((int(s), tok.start()))
        reps = list(_TOKEN.finditer(text, arrow.end(), end))
        if len(reps) != 1 or not reps[0].group().isdigit():
            raise ParseError("block needs exactly one representative after '->'", arrow.end())
        rep = int(reps[0].group())
        if not labels:
            raise ParseError("empty block", i)
        if rep not in [l for l, _ in labels]:
            raise ParseError(f"representative {rep} is not in its block", reps[0].start())
        blocks.append((labels, rep, i))
        i = end + 1
    if not blocks:
        raise ParseError("empty idempotent expression", 0)
    max_label = max(l for labels, _, _ in blocks for l, _ in labels)
    size = _ground_size(n, max_label, blocks[0][2])
    images: dict[int, int] = {}
    for labels, rep, _ in blocks:
        for label, pos in labels:
            if label in images:
                raise ParseError(f"label {label} appears in two blocks", pos)
            images[label] = rep
    return PTrans.from_pairs(size, {x - 1: v - 1 for x, v in images.items()})


def parse_element(text: str, n: int | None = None) -> PTrans:
    """Parse any of the three grammars, chosen by the leading character,
    with an optional ``^k`` power suffix."""
    body = text
    exponent = 1
    m = _POWER_SUFFIX.search(text)
    if m:
        exponent = int(m.group(1))
        if exponent < 1:
            raise ParseError(f"power suffix must be >= 1, got {exponent}", m.start())
        body = text[: m.start()]
    stripped = body.lstrip()
    if not stripped:
        raise ParseError("empty element expression", 0)
    head = stripped[0]
    if head in "[(":
        t = parse_chain_cycle(body, n)
    elif head == "{":
        t = parse_idempotent(body, n)
    else:
        t = parse_tabular(body, n)
    return power(t, exponent) if exponent != 1 else t


def format_tabular(t: PTrans) -> str:
    return str(t)


def format_cycles(t: PTrans) -> str:
    """Cycle text for a permutation, fixed points included, e.g. ``"(1 3)(2 4)"``."""
    return "".join(
        "(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in t.cycle_decomposition()
    )
