"""Model file schemas: versioned JSON documents describing a system."""
import json
import logging
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from attainlab.config.settings import SCHEMA_VERSION
from attainlab.services.errors import InvalidArgumentError, ModelValidationError
from attainlab.services.presets import build_preset
from attainlab.services.quasipoly.bridge import to_modal_system
from attainlab.services.quasipoly.roots import find_roots
from attainlab.services.quasipoly.types import QuasiPolynomial, Region
from attainlab.services.spectral.types import ModalSystem, SpectralMode
from attainlab.utils.complex_codec import decode_complex, decode_matrix, encode_complex, encode_matrix

logger = logging.getLogger(__name__)

# [re, im] pair or a bare real
ComplexValue = Union[Tuple[float, float], float]
ComplexMatrix = List[List[ComplexValue]]

KINDS = ("modal", "quasipoly", "preset")


class ModeEntry(BaseModel):
    """One eigenvalue with its Jordan chains and coupling block."""
    model_config = ConfigDict(extra="forbid")

    eigenvalue: ComplexValue = Field(..., description="Eigenvalue as [re, im]")
    chain_lengths: List[int] = Field(default_factory=lambda: [1], description="Jordan chain lengths")
    input_coupling: ComplexMatrix = Field(..., description="Coupling block, one row per chain vector")


class ModalModelFile(BaseModel):
    """Model file of kind 'modal'."""
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = Field(..., description="Model schema version")
    kind: Literal["modal"]
    modes: List[ModeEntry] = Field(..., min_length=1, description="Modes in any order")
    input_dim: Optional[int] = Field(None, ge=1, description="Number of inputs r")
    expansion_time: float = Field(0.0, ge=0, description="Onset T of the spectral expansion")
    minimality_interval: float = Field(0.0, ge=0, description="Minimality horizon nu")
    nu_estimated: bool = Field(False, description="Whether nu is an estimate")

    def to_domain(self) -> ModalSystem:
        modes = [
            SpectralMode(
                eigenvalue=decode_complex(entry.eigenvalue),
                chain_lengths=tuple(entry.chain_lengths),
                input_coupling=decode_matrix(entry.input_coupling),
            )
            for entry in self.modes
        ]
        return ModalSystem.from_modes(
            modes,
            input_dim=self.input_dim,
            expansion_time=self.expansion_time,
            minimality_interval=self.minimality_interval,
            nu_estimated=self.nu_estimated,
        )

    def to_modal_system(self) -> ModalSystem:
        return self.to_domain()


class QuasiPolyModelFile(BaseModel):
    """Model file of kind 'quasipoly', optionally with couplings for its roots."""
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = Field(..., description="Model schema version")
    kind: Literal["quasipoly"]
    dim: int = Field(..., ge=1, description="Matrix dimension n")
    delays: List[float] = Field(..., min_length=1, description="0 = h_0 < h_1 < ... < h_m")
    neutral_coeffs: List[ComplexMatrix] = Field(..., description="A0_j, one n x n matrix per delay")
    retarded_coeffs: List[ComplexMatrix] = Field(..., description="A_j, one n x n matrix per delay")
    region: Optional[Tuple[float, float, float, float]] = Field(None, description="Root search rectangle")
    couplings: Optional[List[ComplexMatrix]] = Field(None, description="Coupling block per root in spectral order")

    def to_domain(self) -> QuasiPolynomial:
        return QuasiPolynomial(
            dim=self.dim,
            delays=self.delays,
            neutral_coeffs=[decode_matrix(m) for m in self.neutral_coeffs],
            retarded_coeffs=[decode_matrix(m) for m in self.retarded_coeffs],
        )

    def to_modal_system(self) -> ModalSystem:
        """Roots in ``region`` paired with ``couplings``; both must be present."""
        if self.region is None or self.couplings is None:
            raise InvalidArgumentError("a quasipoly model needs 'region' and 'couplings' to form a modal system")
        q = self.to_domain()
        roots = find_roots(q, Region(re_min=self.region[0], re_max=self.region[1], im_min=self.region[2], im_max=self.region[3]))
        return to_modal_system(q, roots, [decode_matrix(block) for block in self.couplings])


class PresetModelFile(BaseModel):
    """Model file of kind 'preset'."""
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = Field(..., description="Model schema version")
    kind: Literal["preset"]
    name: str = Field(..., description="Preset name")
    params: Dict[str, Any] = Field(default_factory=dict, description="Preset keyword parameters")

    def to_domain(self) -> ModalSystem:
        return build_preset(self.name, self.params)

    def to_modal_system(self) -> ModalSystem:
        return self.to_domain()


ModelFile = Annotated[Union[ModalModelFile, QuasiPolyModelFile, PresetModelFile], Field(discriminator="kind")]
_model_file_adapter = TypeAdapter(ModelFile)


def _json_path(loc: Tuple[Any, ...]) -> str:
    parts = list(loc)
    if parts and parts[0] in KINDS:
        parts = parts[1:]
    path = "$"
    for part in parts:
        if isinstance(part, int):
            path += f"[{part}]"
        elif "[" in part or part in ("float", "int", "str"):
            # union branch label, not a document key
            continue
        else:
            path += f".{part}"
    return path


def parse_model(data: Any) -> Union[ModalModelFile, QuasiPolyModelFile, PresetModelFile]:
    """
    Validate a decoded JSON document against the model schema.

    Raises:
        ModelValidationError: naming the JSON path of the first violation
    """
    try:
        return _model_file_adapter.validate_python(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = _json_path(first["loc"])
        raise ModelValidationError(f"{path}: {first['msg']}", path) from exc


def parse_model_bytes(raw: bytes, source: str = "<model>") -> Union[ModalModelFile, QuasiPolyModelFile, PresetModelFile]:
    """Decode JSON bytes and validate them as a model document."""
    try:
        data = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ModelValidationError(f"model file {source} is not valid JSON: {exc}", "$") from exc
    return parse_model(data)


def read_model_bytes(path: Union[str, Path]) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ModelValidationError(f"cannot read model file {path}: {exc}", "$") from exc


def read_model_file(path: Union[str, Path]) -> Union[ModalModelFile, QuasiPolyModelFile, PresetModelFile]:
    """Read and schema-validate a model file."""
    model = parse_model_bytes(read_model_bytes(path), str(path))
    logger.info(f"Loaded {model.kind} model from {path}")
    return model


def load_model(path: Union[str, Path]) -> Union[ModalSystem, QuasiPolynomial]:
    """
    Load a model file into a validated domain object.

    Args:
        path: Path to a JSON model file

    Returns:
        ModalSystem for modal and preset files, QuasiPolynomial for quasipoly files
    """
    return read_model_file(path).to_domain()


def dump_model(obj: Union[ModalSystem, QuasiPolynomial]) -> Dict[str, Any]:
    """Serialize a domain object back into a model document."""
    if isinstance(obj, ModalSystem):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "modal",
            "modes": [
                {
                    "eigenvalue": encode_complex(mode.eigenvalue),
                    "chain_lengths": list(mode.chain_lengths),
                    "input_coupling": encode_matrix(mode.input_coupling),
                }
                for mode in obj.modes
            ],
            "input_dim": obj.input_dim,
            "expansion_time": obj.expansion_time,
            "minimality_interval": obj.minimality_interval,
            "nu_estimated": obj.nu_estimated,
        }
    if isinstance(obj, QuasiPolynomial):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "quasipoly",
            "dim": obj.dim,
            "delays": list(obj.delays),
            "neutral_coeffs": [encode_matrix(m) for m in obj.neutral_coeffs],
            "retarded_coeffs": [encode_matrix(m) for m in obj.retarded_coeffs],
        }
    raise InvalidArgumentError(f"cannot serialize {type(obj).__name__} as a model")
