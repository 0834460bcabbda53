"""
Experiment configuration: the ExperimentConfig model and its file loaders.

Two file formats are accepted:
- `key = value` lines (the native format; `#` comments, lists comma separated,
  inclusive integer ranges written `a..b`)
- YAML (`.yaml` / `.yml`) with the same keys

Example:

    n = 200
    area = 2000 x 2000
    radio_range = 250
    seeds = 1..20
    pairs_per_seed = 500
    depths = 1, 2
    deviation_rule = as_written
    displacement_rule = offset_from_physical
    ttl_factor = 4
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.alignment import AlignmentParams, DepthAnchor, DeviationRule, DisplacementRule
from src.errors import ConfigError

logger = logging.getLogger(__name__)

_LIST_KEYS = ("seeds", "depths")


class ExperimentConfig(BaseModel):
    """Everything a comparison run depends on; the report is a pure function of it."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(..., ge=2, description="Nodes per topology")
    width: float = Field(..., gt=0, description="Deployment area width")
    height: float = Field(..., gt=0, description="Deployment area height")
    radio_range: float = Field(..., gt=0, description="Unit-disk radio range")
    seeds: List[int] = Field(..., min_length=1, description="One topology per seed")
    pairs_per_seed: int = Field(..., ge=1, description="Connected (src, dst) pairs sampled per seed")
    depths: List[int] = Field(default_factory=lambda: [1, 2], description="Aligned depths to compare")
    deviation_rule: DeviationRule = DeviationRule.AS_WRITTEN
    displacement_rule: DisplacementRule = DisplacementRule.OFFSET_FROM_PHYSICAL
    depth_anchor: DepthAnchor = DepthAnchor.PREVIOUS_DEPTH
    ttl_factor: float = Field(default=4.0, gt=0, description="ttl = ceil(ttl_factor * n)")

    @field_validator("depths")
    @classmethod
    def _depths_valid(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("at least one depth is required")
        if any(d < 0 for d in v):
            raise ValueError("depths must be >= 0")
        return sorted(set(v))

    @field_validator("seeds")
    @classmethod
    def _seeds_unique(cls, v: List[int]) -> List[int]:
        if len(set(v)) != len(v):
            raise ValueError("seeds must be unique")
        return v

    @property
    def alignment_params(self) -> AlignmentParams:
        return AlignmentParams(self.deviation_rule, self.displacement_rule, self.depth_anchor)

    @property
    def max_depth(self) -> int:
        return max(self.depths)


def _parse_int_list(raw: str) -> List[int]:
    values: List[int] = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return values


def parse_key_value(text: str) -> Dict[str, Any]:
    """Turn `key = value` lines into a raw dict (validation happens in ExperimentConfig)."""
    data: Dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in data:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        try:
            if key in _LIST_KEYS:
                data[key] = _parse_int_list(value)
            elif key == "area":
                width, height = value.lower().split("x")
                data["width"], data["height"] = float(width), float(height)
            else:
                data[key] = value
        except ValueError:
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {value!r}")
    return data


def build_config(data: Dict[str, Any]) -> ExperimentConfig:
    data = dict(data)
    area = data.pop("area", None)
    if area is not None:
        if isinstance(area, str):
            try:
                width, height = area.lower().split("x")
                area = [float(width), float(height)]
            except ValueError:
                raise ConfigError(f"bad area {area!r}, expected 'W x H'")
        data.setdefault("width", area[0])
        data.setdefault("height", area[1])
    for key in _LIST_KEYS:
        if isinstance(data.get(key), str):
            try:
                data[key] = _parse_int_list(data[key])
            except ValueError:
                raise ConfigError(f"bad value for {key!r}: {data[key]!r}")
    try:
        return ExperimentConfig(**data)
    except ValidationError as e:
        raise ConfigError(f"invalid experiment config: {e}")


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Load an experiment config file.

    Raises:
        ConfigError: missing/unreadable file, syntax error or invalid values
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}")

    if path.suffix.lower() in (".yaml", ".yml"):
        try:
            data = yaml.safe_load(text) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"bad YAML in {path}: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"{path} must contain a mapping")
    else:
        data = parse_key_value(text)

    cfg = build_config(data)
    logger.info(f"✅ Loaded experiment config {path.name}: n={cfg.n}, seeds={len(cfg.seeds)}, depths={cfg.depths}")
    return cfg
