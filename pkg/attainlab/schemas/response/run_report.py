"""Run report schema."""
import hashlib
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from attainlab.config.settings import SCHEMA_VERSION, TOOL_VERSION
from attainlab.utils.complex_codec import dumps_sorted


def input_digest(raw: bytes, arguments: Dict[str, Any]) -> str:
    """sha256 over the model bytes and the canonical argument echo."""
    digest = hashlib.sha256(raw)
    digest.update(dumps_sorted(arguments).encode())
    return digest.hexdigest()


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


class RunReport(BaseModel):
    """Machine-readable result of one CLI command."""
    schema_version: int = Field(SCHEMA_VERSION, description="Report schema version")
    command: str = Field(..., description="Command that produced the report")
    arguments: Dict[str, Any] = Field(default_factory=dict, description="Validated command arguments")
    version: str = Field(TOOL_VERSION, description="Toolkit version")
    input_digest: str = Field(..., description="sha256 of the model file and arguments")
    passed: Optional[bool] = Field(None, description="Verdict, when the command has one")
    results: Dict[str, Any] = Field(default_factory=dict, description="Command-specific results")
    warnings: List[str] = Field(default_factory=list, description="Estimates and truncations the results rely on")
    timestamp: Optional[str] = None  # omitted with --no-timestamp

    def to_json(self) -> str:
        """Sorted-key JSON; the timestamp key is dropped when unset."""
        return dumps_sorted(self.model_dump(exclude_none=False, exclude={"timestamp"} if self.timestamp is None else set()))
