"""Domain data model: pressure frames, angle samples, aligned trials.

All types are immutable after construction (arrays are marked read-only),
so they are safe to share across parallel workers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    LengthMismatch,
    NegativePressure,
    NonFiniteValue,
    NonUniformSampling,
    TimestampMismatch,
    TooShort,
)

GRID_SIZE = 48
N_CELLS = GRID_SIZE * GRID_SIZE


class Condition(Enum):
    """Ground-contact condition of a trial."""

    A_NOTHING = "A"
    B_RUBBER = "B"
    C_PLASTIC = "C"

    @classmethod
    def from_label(cls, label: str) -> "Condition":
        try:
            return cls(label.strip().upper()[:1])
        except ValueError:
            raise ValueError(f"unknown condition label {label!r}") from None


class AngleChannel(Enum):
    """One of the four estimated angle channels."""

    ANKLE = "ankle"
    KNEE = "knee"
    HIP = "hip"
    UPPER = "upper"


#: Fixed column order of angle channels in arrays and files.
CHANNEL_ORDER: tuple[AngleChannel, ...] = (
    AngleChannel.ANKLE,
    AngleChannel.KNEE,
    AngleChannel.HIP,
    AngleChannel.UPPER,
)


def channel_index(channel: AngleChannel) -> int:
    return CHANNEL_ORDER.index(channel)


def flat_index(row: int, col: int) -> int:
    """Row-major flat index of a grid cell; the inverse of grid_position."""
    if not (0 <= row < GRID_SIZE and 0 <= col < GRID_SIZE):
        raise IndexError(f"cell ({row}, {col}) outside {GRID_SIZE}x{GRID_SIZE} grid")
    return GRID_SIZE * row + col


def grid_position(index: int) -> tuple[int, int]:
    """(row, col) of a row-major flat index."""
    if not 0 <= index < N_CELLS:
        raise IndexError(f"flat index {index} outside [0, {N_CELLS})")
    return divmod(index, GRID_SIZE)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class PressureFrame:
    """One timestamped 48x48 grid of non-negative pressures."""

    t_ms: int
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape == (N_CELLS,):
            values = values.reshape(GRID_SIZE, GRID_SIZE)
        if values.shape != (GRID_SIZE, GRID_SIZE):
            raise LengthMismatch(
                f"pressure grid must be {GRID_SIZE}x{GRID_SIZE}, got {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise NonFiniteValue("pressure grid contains NaN or infinity")
        if np.any(values < 0):
            raise NegativePressure("pressure grid contains negative values")
        object.__setattr__(self, "t_ms", int(self.t_ms))
        object.__setattr__(self, "values", _freeze(values.copy()))

    def flat(self) -> np.ndarray:
        """Row-major flattened view of the grid."""
        return self.values.reshape(N_CELLS)


@dataclass(frozen=True)
class AngleSample:
    """Four angle channels (degrees) at one timestamp."""

    t_ms: int
    ankle_deg: float
    knee_deg: float
    hip_deg: float
    upper_deg: float

    def __post_init__(self):
        vals = (self.ankle_deg, self.knee_deg, self.hip_deg, self.upper_deg)
        if not all(np.isfinite(v) for v in vals):
            raise NonFiniteValue("angle sample contains NaN or infinity")
        object.__setattr__(self, "t_ms", int(self.t_ms))

    def as_array(self) -> np.ndarray:
        return np.array(
            [self.ankle_deg, self.knee_deg, self.hip_deg, self.upper_deg], dtype=float
        )


@dataclass(frozen=True)
class TrialDataset:
    """Time-aligned pressure and angle series at a uniform sampling period.

    Pressure is stored as one (n_samples, 2304) row-major matrix; use
    `frames` / `angle_samples` for per-sample object views. Construction
    only coerces shapes; content invariants are checked by validate_trial
    so that malformed data can be constructed and then rejected.
    """

    period_ms: int
    times_ms: np.ndarray
    pressure: np.ndarray
    angles: np.ndarray
    condition: Condition
    participant_id: str = ""

    def __post_init__(self):
        times = np.asarray(self.times_ms, dtype=np.int64)
        pressure = np.asarray(self.pressure, dtype=float)
        angles = np.asarray(self.angles, dtype=float)
        if pressure.ndim == 3:
            if pressure.shape[1:] != (GRID_SIZE, GRID_SIZE):
                raise LengthMismatch(f"bad pressure grid shape {pressure.shape}")
            pressure = pressure.reshape(pressure.shape[0], N_CELLS)
        if pressure.ndim != 2 or pressure.shape[1] != N_CELLS:
            raise LengthMismatch(f"pressure must be (n, {N_CELLS}), got {pressure.shape}")
        if angles.ndim != 2 or angles.shape[1] != 4:
            raise LengthMismatch(f"angles must be (n, 4), got {angles.shape}")
        if not (len(times) == len(pressure) == len(angles)):
            raise LengthMismatch(
                f"lengths differ: {len(times)} times, {len(pressure)} frames, "
                f"{len(angles)} angle samples"
            )
        object.__setattr__(self, "period_ms", int(self.period_ms))
        object.__setattr__(self, "times_ms", _freeze(times.copy()))
        object.__setattr__(self, "pressure", _freeze(pressure.copy()))
        object.__setattr__(self, "angles", _freeze(angles.copy()))

    @classmethod
    def from_frames(
        cls,
        frames: Sequence[PressureFrame],
        angle_samples: Sequence[AngleSample],
        period_ms: int,
        condition: Condition,
        participant_id: str = "",
    ) -> "TrialDataset":
        if len(frames) != len(angle_samples):
            raise LengthMismatch(
                f"{len(frames)} frames vs {len(angle_samples)} angle samples"
            )
        frame_t = np.array([f.t_ms for f in frames], dtype=np.int64)
        angle_t = np.array([a.t_ms for a in angle_samples], dtype=np.int64)
        if np.any(frame_t != angle_t):
            k = int(np.flatnonzero(frame_t != angle_t)[0])
            raise TimestampMismatch(
                f"frame/angle timestamps differ at sample {k}: "
                f"{frame_t[k]} vs {angle_t[k]} ms"
            )
        pressure = np.stack([f.flat() for f in frames]) if frames else np.empty((0, N_CELLS))
        angles = (
            np.stack([a.as_array() for a in angle_samples])
            if angle_samples
            else np.empty((0, 4))
        )
        return cls(period_ms, frame_t, pressure, angles, condition, participant_id)

    @property
    def n_samples(self) -> int:
        return len(self.times_ms)

    @property
    def duration_ms(self) -> int:
        return int(self.times_ms[-1] - self.times_ms[0]) if self.n_samples else 0

    def pressure_grids(self) -> np.ndarray:
        """(n, 48, 48) view of the pressure matrix."""
        return self.pressure.reshape(self.n_samples, GRID_SIZE, GRID_SIZE)

    def frames(self) -> Iterator[PressureFrame]:
        for t, row in zip(self.times_ms, self.pressure):
            yield PressureFrame(int(t), row)

    def angle_samples(self) -> Iterator[AngleSample]:
        for t, row in zip(self.times_ms, self.angles):
            yield AngleSample(int(t), *row)

    def angle_column(self, channel: AngleChannel) -> np.ndarray:
        return self.angles[:, channel_index(channel)]


def validate_trial(trial: TrialDataset) -> TrialDataset:
    """Check TrialDataset content invariants; return the trial unchanged.

    Idempotent: validating a validated trial succeeds with identical content.
    """
    if trial.n_samples < 2:
        raise TooShort(f"trial has {trial.n_samples} samples, need at least 2")
    gaps = np.diff(trial.times_ms)
    if np.any(gaps != trial.period_ms):
        k = int(np.flatnonzero(gaps != trial.period_ms)[0])
        raise NonUniformSampling(
            f"gap of {int(gaps[k])} ms at sample {k + 1}, expected {trial.period_ms} ms"
        )
    if not np.all(np.isfinite(trial.pressure)):
        raise NonFiniteValue("pressure contains NaN or infinity")
    if np.any(trial.pressure < 0):
        t, cell = np.unravel_index(int(np.argmin(trial.pressure)), trial.pressure.shape)
        raise NegativePressure(
            f"negative pressure {trial.pressure[t, cell]:g} at sample {t}, cell {cell}"
        )
    if not np.all(np.isfinite(trial.angles)):
        raise NonFiniteValue("angles contain NaN or infinity")
    return trial


def pressure_matrix(frames) -> np.ndarray:
    """Coerce frames (TrialDataset, array, or PressureFrame sequence) to (n, 2304)."""
    if isinstance(frames, TrialDataset):
        return frames.pressure
    if isinstance(frames, np.ndarray):
        mat = np.asarray(frames, dtype=float)
        if mat.ndim == 3 and mat.shape[1:] == (GRID_SIZE, GRID_SIZE):
            mat = mat.reshape(mat.shape[0], N_CELLS)
        if mat.ndim == 1 and mat.shape == (N_CELLS,):
            mat = mat.reshape(1, N_CELLS)
        if mat.ndim != 2 or mat.shape[1] != N_CELLS:
            raise LengthMismatch(f"cannot interpret shape {frames.shape} as frames")
        return mat
    if isinstance(frames, PressureFrame):
        return frames.flat().reshape(1, N_CELLS)
    return np.stack([f.flat() for f in frames])
