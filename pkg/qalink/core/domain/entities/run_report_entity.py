# qalink/core/domain/entities/run_report_entity.py

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class RunReport(BaseModel):
    """
    The single JSON document the CLI prints on stdout.
    `payload` is deterministic for a given command and input; timing is not.
    """
    command: List[str]
    input_digest: Optional[str] = None   # sha256 of the input file, when there is one
    ok: bool = True
    payload: Dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: float = 0.0
    version: str
