# qalink/adapters/external/storage/json_store.py
"""
File persistence for PD text, certificates and surgery diagrams.

Relative paths that do not exist in the working directory are looked up
under <DATA_ROOT>/pd for PD files and <DATA_ROOT> otherwise.
"""

import hashlib
import json
from pathlib import Path
from typing import Tuple, Type, TypeVar

from pydantic import BaseModel

from ....config import get_settings
from ....core.domain.entities.certificate_entity import QACertificate
from ....core.domain.entities.link_diagram_entity import LinkDiagram
from ....core.domain.entities.surgery_entity import SurgeryDiagram
from ....core.services.pd_codec_service import parse_pd

M = TypeVar("M", bound=BaseModel)


def path_for(name: str | Path, subdir: str = "") -> Path:
    p = Path(name)
    if p.exists() or p.is_absolute():
        return p
    fallback = Path(get_settings().DATA_ROOT) / subdir / p
    return fallback if fallback.exists() else p


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def read_text(name: str | Path, subdir: str = "") -> Tuple[str, str]:
    """File contents and their sha256."""
    text = path_for(name, subdir).read_text(encoding="utf-8")
    return text, digest(text)


def load_pd(name: str | Path) -> Tuple[LinkDiagram, str]:
    text, h = read_text(name, "pd")
    return parse_pd(text), h


def save_pd(name: str | Path, text: str) -> Path:
    p = Path(name)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text, encoding="utf-8")
    return p


def load_model(name: str | Path, model: Type[M]) -> Tuple[M, str]:
    text, h = read_text(name)
    return model.model_validate(json.loads(text)), h


def save_model(name: str | Path, obj: BaseModel) -> Path:
    p = Path(name)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(json.dumps(obj.model_dump(mode="json"), indent=2), encoding="utf-8")
    return p


def load_certificate(name: str | Path) -> Tuple[QACertificate, str]:
    return load_model(name, QACertificate)


def load_surgery(name: str | Path) -> Tuple[SurgeryDiagram, str]:
    return load_model(name, SurgeryDiagram)
