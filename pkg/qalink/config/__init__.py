# qalink/config/__init__.py
import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

load_dotenv()


@dataclass
class Settings:
    # --- Logging ---
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = False              # JSON lines on stderr instead of console rendering

    # --- Search / oracle bounds ---
    KAUFFMAN_MAX_CROSSINGS: int = 24    # brute-force state sum refuses larger diagrams
    CERTIFY_BUDGET: int = 100_000       # node limit for the certificate search
    CERTIFY_JOBS: int = 1               # >1 explores sibling branches in threads
    R3_FACTOR: int = 3                  # R3 moves per simplify call capped at R3_FACTOR * n

    # --- Files ---
    DATA_ROOT: str = "data"


def _bool(s: str | None) -> bool:
    return str(s or "").strip().lower() in ("1", "true", "yes", "y", "on")


@lru_cache()
def get_settings() -> Settings:
    return Settings(
        LOG_LEVEL=os.getenv("QALINK_LOG_LEVEL", "INFO").upper(),
        LOG_JSON=_bool(os.getenv("QALINK_LOG_JSON")),
        KAUFFMAN_MAX_CROSSINGS=int(os.getenv("QALINK_KAUFFMAN_MAX_CROSSINGS", "24")),
        CERTIFY_BUDGET=int(os.getenv("QALINK_CERTIFY_BUDGET", "100000")),
        CERTIFY_JOBS=int(os.getenv("QALINK_CERTIFY_JOBS", "1")),
        R3_FACTOR=int(os.getenv("QALINK_R3_FACTOR", "3")),
        DATA_ROOT=os.getenv("QALINK_DATA_ROOT", "data"),
    )
