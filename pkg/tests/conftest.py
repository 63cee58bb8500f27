from pathlib import Path

import pytest

from qalink.core.domain.entities.link_diagram_entity import LinkDiagram
from qalink.core.services.pd_codec_service import parse_pd

PD_DIR = Path(__file__).resolve().parent.parent / "data" / "pd"


def load(name: str) -> LinkDiagram:
    return parse_pd((PD_DIR / f"{name}.pd").read_text(encoding="utf-8"))


@pytest.fixture
def pd_dir() -> Path:
    return PD_DIR


@pytest.fixture
def trefoil() -> LinkDiagram:
    return load("trefoil")


@pytest.fixture
def hopf() -> LinkDiagram:
    return load("hopf")


@pytest.fixture
def figure_eight() -> LinkDiagram:
    return load("figure_eight")


@pytest.fixture
def kink() -> LinkDiagram:
    return load("kink")


@pytest.fixture
def unknot() -> LinkDiagram:
    return load("unknot")
