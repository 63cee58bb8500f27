# qalink/core/domain/entities/coloring_entity.py

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

from ..enums.diagram_enums import FaceColor

Dart = Tuple[int, int]  # (crossing index, corner); corner i sits between positions i and i+1


@dataclass(frozen=True)
class Face:
    """
    One complementary region of the diagram, as the cyclic sequence of
    corners it meets and the arcs running along its boundary.
    """
    darts: Tuple[Dart, ...]
    arcs: Tuple[int, ...]

    @property
    def sides(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class CheckerboardColoring:
    faces: Tuple[Face, ...]
    colors: Tuple[FaceColor, ...]
    unbounded: int = 0

    @cached_property
    def face_of(self) -> Dict[Dart, int]:
        return {dart: fi for fi, f in enumerate(self.faces) for dart in f.darts}

    def color_of(self, face: int) -> FaceColor:
        return self.colors[face]

    def faces_of(self, color: FaceColor) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.colors) if c is color)

    def swapped(self) -> "CheckerboardColoring":
        """The other proper coloring. Applying it twice returns an equal coloring."""
        return CheckerboardColoring(self.faces, tuple(c.other() for c in self.colors), self.unbounded)
