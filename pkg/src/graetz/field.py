from dataclasses import dataclass


@dataclass(frozen=True)
class FieldSample:
    """Temperature ``T`` at radius ``r`` and axial position ``z`` (all nondimensional)."""

    r: float
    z: float
    T: float
