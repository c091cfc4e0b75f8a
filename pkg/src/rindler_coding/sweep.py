"""Acceleration sweeps and their CSV serialization."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import BinaryIO, Iterable, Sequence

import numpy as np

from .coding import info_report
from .unruh import R_MAX, RegionPair, channel_closed_form, channel_oracle, check_rindler_angle
from .xstate import XCoefficients, XStateParams

CSV_HEADER = ("r_a", "r_b", "region", "capacity_bits", "decoded_bits", "negativity")
DEFAULT_STEPS = 33
DEFAULT_REGIONS = (RegionPair.I_I, RegionPair.II_II, RegionPair.I_II)
MODES = ("diagonal", "grid")
ORACLE_TOL = 1e-12
# values this close to zero are roundoff, printed as 0
ZERO_FLOOR = 5e-15


@dataclass(frozen=True)
class SweepConfig:
    c_triple: XStateParams
    r_min: float = 0.0
    r_max: float = R_MAX
    steps: int = DEFAULT_STEPS
    mode: str = "diagonal"
    regions: tuple[RegionPair, ...] = field(default=DEFAULT_REGIONS)

    def __post_init__(self):
        r_min = check_rindler_angle(self.r_min, "r_min")
        r_max = check_rindler_angle(self.r_max, "r_max")
        if not r_min < r_max:
            raise ValueError(f"r_min ({r_min}) must be below r_max ({r_max})")
        if isinstance(self.steps, bool) or int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        regions = tuple(
            r if isinstance(r, RegionPair) else RegionPair.from_token(r) for r in self.regions
        )
        if not regions:
            raise ValueError("regions must not be empty")
        object.__setattr__(self, "r_min", r_min)
        object.__setattr__(self, "r_max", r_max)
        object.__setattr__(self, "steps", int(self.steps))
        object.__setattr__(self, "regions", regions)

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        unknown = set(d) - {"c", "r_min", "r_max", "steps", "mode", "regions"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if "c" not in d:
            raise ValueError("config needs key 'c': [cx, cy, cz]")
        c = d["c"]
        if not isinstance(c, (list, tuple)) or len(c) != 3:
            raise ValueError(f"'c' must be a list of three numbers, got {c!r}")
        kwargs = {k: d[k] for k in ("r_min", "r_max", "steps", "mode") if k in d}
        if "regions" in d:
            kwargs["regions"] = tuple(d["regions"])
        return cls(c_triple=XStateParams(*(float(v) for v in c)), **kwargs)

    def to_dict(self) -> dict:
        return {
            "c": list(self.c_triple.as_tuple()),
            "r_min": self.r_min,
            "r_max": self.r_max,
            "steps": self.steps,
            "mode": self.mode,
            "regions": [r.token for r in self.regions],
        }

    def grid_points(self) -> list[tuple[float, float]]:
        rs = np.linspace(self.r_min, self.r_max, self.steps)
        if self.mode == "diagonal":
            return [(float(r), float(r)) for r in rs]
        return [(float(ra), float(rb)) for ra in rs for rb in rs]


@dataclass(frozen=True)
class SweepRecord:
    r_a: float
    r_b: float
    region: RegionPair
    capacity_bits: float
    decoded_bits: float
    negativity: float


def load_config(path: str | Path) -> SweepConfig:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return SweepConfig.from_dict(data)


def builtin_configs() -> list[str]:
    root = resources.files("rindler_coding") / "configs"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def builtin_config(name: str) -> SweepConfig:
    """Packaged figure configs, e.g. ``fig1-mes`` and ``fig1-pes``."""
    path = resources.files("rindler_coding") / "configs" / f"{name}.json"
    if not path.is_file():
        raise ValueError(f"no built-in config {name!r} (have {builtin_configs()})")
    return SweepConfig.from_dict(json.loads(path.read_text(encoding="utf-8")))


def evaluate_point(
    coeffs: XCoefficients, ra: float, rb: float, region: RegionPair, verify: bool = False
) -> SweepRecord:
    channel = channel_closed_form(coeffs, ra, rb, region)
    if verify:
        ref = channel_oracle(coeffs.matrix(), ra, rb, region)
        err = float(np.max(np.abs(channel.matrix() - ref)))
        if err > ORACLE_TOL:
            raise ArithmeticError(
                f"closed form disagrees with dilation at r_a={ra}, r_b={rb}, "
                f"{region.token}: {err:.3e}"
            )
    rep = info_report(channel.matrix())
    return SweepRecord(ra, rb, region, rep.capacity_bits, rep.decoded_bits, rep.negativity)


def run_sweep(cfg: SweepConfig, verify: bool = False) -> list[SweepRecord]:
    """One record per (region, grid point), region-major with r ascending."""
    coeffs = XCoefficients.from_params(cfg.c_triple)
    points = cfg.grid_points()
    return [
        evaluate_point(coeffs, ra, rb, region, verify)
        for region in cfg.regions
        for ra, rb in points
    ]


def format_real(x: float, digits: int = 12) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r}")
    if abs(x) < ZERO_FLOOR:
        return "0"
    return f"{x:#.{digits}g}"


def emit_csv(records: Iterable[SweepRecord], destination: BinaryIO) -> None:
    lines = [",".join(CSV_HEADER)]
    for rec in records:
        lines.append(
            ",".join(
                [
                    format_real(rec.r_a),
                    format_real(rec.r_b),
                    rec.region.token,
                    format_real(rec.capacity_bits),
                    format_real(rec.decoded_bits),
                    format_real(rec.negativity),
                ]
            )
        )
    destination.write(("\n".join(lines) + "\n").encode("ascii"))


def csv_bytes(records: Sequence[SweepRecord]) -> bytes:
    buf = io.BytesIO()
    emit_csv(records, buf)
    return buf.getvalue()


def read_csv(source: BinaryIO | str | Path) -> list[SweepRecord]:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="ascii")
    else:
        text = source.read().decode("ascii")
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError("missing or malformed CSV header")
    return [
        SweepRecord(
            float(ra), float(rb), RegionPair.from_token(region), float(c), float(d), float(n)
        )
        for ra, rb, region, c, d, n in rows[1:]
    ]
