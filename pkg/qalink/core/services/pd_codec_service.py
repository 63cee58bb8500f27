# qalink/core/services/pd_codec_service.py
"""
PD-code text format.

    # comment
    mark=3
    loops=0
    X[1,5,2,4];eps=-1
    X[3,1,4,6];eps=-1
    X[5,3,6,2];eps=-1

One crossing per line (several per line are accepted), whitespace is
ignored everywhere, `;eps=` defaults to -1 when omitted. `loops=` counts
crossingless circles; text without crossings and without a `loops=`
header is the unknot.
"""

import re
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..domain.entities.link_diagram_entity import Crossing, LinkDiagram
from ..domain.exceptions import DanglingArc, MalformedInput
from .face_service import check_planar

_CROSSING = r"X\[(\d+),(\d+),(\d+),(\d+)\](?:;eps=([+-]?1))?;?"
_CROSSING_RE = re.compile(_CROSSING)
_CROSSING_LINE_RE = re.compile(rf"(?:{_CROSSING})+")
_HEADER_RE = re.compile(r"(mark|loops)=(\d+);?")


def parse_pd(text: str) -> LinkDiagram:
    raw: List[Tuple[Tuple[int, int, int, int], int]] = []
    mark: Optional[int] = None
    loops: Optional[int] = None

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = re.sub(r"\s+", "", line.split("#", 1)[0])
        if not line:
            continue
        h = _HEADER_RE.fullmatch(line)
        if h:
            key, val = h.group(1), int(h.group(2))
            if key == "mark":
                if mark is not None:
                    raise MalformedInput("duplicate mark= header", lineno, line)
                mark = val
            else:
                if loops is not None:
                    raise MalformedInput("duplicate loops= header", lineno, line)
                loops = val
            continue
        if not _CROSSING_LINE_RE.fullmatch(line):
            raise MalformedInput(f"cannot read {line!r} as X[a,b,c,d];eps=±1", lineno, line)
        for m in _CROSSING_RE.finditer(line):
            labels = tuple(int(m.group(i)) for i in range(1, 5))
            eps = int(m.group(5)) if m.group(5) else -1
            raw.append((labels, eps))

    counts = Counter(x for labels, _ in raw for x in labels)
    for arc, cnt in sorted(counts.items()):
        if cnt != 2:
            raise DanglingArc(arc, cnt)

    if loops is None:
        loops = 0 if raw else 1
    if mark is not None and mark not in counts:
        raise MalformedInput(f"mark={mark} is not an arc of the diagram")

    relabel: Dict[int, int] = {}
    for labels, _ in raw:
        for x in labels:
            relabel.setdefault(x, len(relabel) + 1)

    d = LinkDiagram(
        crossings=tuple(Crossing(*(relabel[x] for x in labels), epsilon=eps) for labels, eps in raw),
        free_loops=loops,
        marked_edge=relabel[mark] if mark is not None else None,
    )
    check_planar(d)
    return d


def serialize_pd(d: LinkDiagram) -> str:
    """Inverse of parse_pd on diagrams whose labels are already normalized."""
    lines: List[str] = []
    if d.marked_edge is not None:
        lines.append(f"mark={d.marked_edge}")
    if d.free_loops or not d.crossings:
        lines.append(f"loops={d.free_loops}")
    for cr in d.crossings:
        lines.append(f"X[{cr.a},{cr.b},{cr.c},{cr.d}];eps={cr.epsilon:+d}")
    return "\n".join(lines) + "\n"


class DiagramBuilder:
    """
    Assemble a diagram from crossings and arc identifications.

    Arc labels are merged with `glue`; after `build` every merged class
    becomes one arc. Classes that end up on no crossing are closed
    circles and are counted as free loops. Crossings keep their insertion
    order and labels are renumbered 1..2n by first appearance.
    """

    def __init__(self, start_label: int = 1, free_loops: int = 0):
        self._parent: Dict[int, int] = {}
        self._next = start_label
        self._crossings: List[Tuple[List[int], int]] = []
        self._free_loops = free_loops
        self._mark: Optional[int] = None

    @classmethod
    def continuing(cls, d: LinkDiagram) -> "DiagramBuilder":
        """A builder whose fresh labels never collide with those of `d`."""
        return cls(start_label=(max(d.arcs) + 1) if d.arcs else 1)

    def _touch(self, x: int) -> int:
        if x not in self._parent:
            self._parent[x] = x
            if x >= self._next:
                self._next = x + 1
        return x

    def _find(self, x: int) -> int:
        p = self._parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def fresh(self) -> int:
        x = self._next
        self._touch(x)
        return x

    def glue(self, a: int, b: int) -> None:
        ra, rb = self._find(self._touch(a)), self._find(self._touch(b))
        if ra != rb:
            self._parent[ra] = rb

    def add_crossing(self, labels: Sequence[int], epsilon: int) -> None:
        for x in labels:
            self._touch(x)
        self._crossings.append((list(labels), epsilon))

    def add_crossings(self, crossings: Iterable[Crossing]) -> None:
        for cr in crossings:
            self.add_crossing(cr.labels, cr.epsilon)

    def add_loops(self, k: int) -> None:
        self._free_loops += k

    def mark(self, label: Optional[int]) -> None:
        if label is not None:
            self._mark = self._touch(label)

    def build(self) -> LinkDiagram:
        occurrences: Counter = Counter()
        for labels, _ in self._crossings:
            for x in labels:
                occurrences[self._find(x)] += 1

        roots = {self._find(x) for x in self._parent}
        loops = self._free_loops + sum(1 for r in roots if occurrences[r] == 0)
        for r in sorted(roots):
            if occurrences[r] not in (0, 2):
                raise DanglingArc(r, occurrences[r])

        relabel: Dict[int, int] = {}
        crossings = []
        for labels, eps in self._crossings:
            out = []
            for x in labels:
                r = self._find(x)
                out.append(relabel.setdefault(r, len(relabel) + 1))
            crossings.append(Crossing(*out, epsilon=eps))

        mark = None
        if self._mark is not None:
            mark = relabel.get(self._find(self._mark))
        return LinkDiagram(tuple(crossings), loops, mark)
