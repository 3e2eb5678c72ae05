"""Centered tensor grids on [-L, L)^d, dual frequency grids, sampled fields.

Conventions used by every module downstream:

* spatial nodes   x_j  = (j - N/2) * h,     h = 2L/N,      j = 0..N-1
* frequency nodes xi_k = (k - N/2) * pi/L,                 k = 0..N-1
* values are complex128, shaped (N,)*d, row-major, axis i <-> coordinate i.

The centered index convention makes the discrete Fourier transform an exact
unitary map between these two node sets (see ``spectral``), which is what
lets trace/transform identities hold to roundoff instead of to O(h).
"""

import struct
from dataclasses import dataclass, field as dataclass_field

import numpy as np

__all__ = ["GridSpec", "Field", "sample", "refine", "serialize_field", "deserialize_field"]

_REFINE_POINT_CAP = 2**16

_TAG_CODES = {"spatial": 0, "frequency": 1}
_TAG_NAMES = {v: k for k, v in _TAG_CODES.items()}


@dataclass(frozen=True)
class GridSpec:
    """Uniform centered grid: dim axes, N points per axis on [-L, L)."""

    dim: int
    half_width: float
    points: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if not self.half_width > 0.0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")
        n = self.points
        if n < 8 or (n & (n - 1)) != 0:
            raise ValueError(f"points must be a power of two >= 8, got {n}")

    @property
    def spacing(self) -> float:
        """Spatial node spacing h = 2L/N."""
        return 2.0 * self.half_width / self.points

    @property
    def freq_spacing(self) -> float:
        """Frequency node spacing pi/L."""
        return np.pi / self.half_width

    @property
    def shape(self) -> tuple:
        return (self.points,) * self.dim

    def spatial_axis(self) -> np.ndarray:
        """Per-axis spatial coordinates (j - N/2) * h."""
        return (np.arange(self.points) - self.points // 2) * self.spacing

    def frequency_axis(self) -> np.ndarray:
        """Per-axis frequency coordinates (k - N/2) * pi/L."""
        return (np.arange(self.points) - self.points // 2) * self.freq_spacing


@dataclass(frozen=True, eq=False)
class Field:
    """Complex samples over a grid, tagged spatial or frequency.

    Values are stored read-only; transforms return new fields with the tag
    flipped.  ``sampler`` optionally remembers the pointwise function the
    field was sampled from so refinement studies can resample it on finer
    grids; it never participates in comparisons or serialization.
    """

    grid: GridSpec
    domain_tag: str
    values: np.ndarray
    sampler: object = dataclass_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.domain_tag not in _TAG_CODES:
            raise ValueError(f"domain_tag must be 'spatial' or 'frequency', got {self.domain_tag!r}")
        vals = np.ascontiguousarray(self.values, dtype=np.complex128)
        if vals.shape != self.grid.shape:
            raise ValueError(f"values shape {vals.shape} != grid shape {self.grid.shape}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def axes(self) -> tuple:
        """Per-axis coordinate arrays matching the domain tag."""
        axis = self.grid.spatial_axis() if self.domain_tag == "spatial" else self.grid.frequency_axis()
        return (axis,) * self.grid.dim


def sample(grid: GridSpec, f) -> Field:
    """Sample a pointwise function of d real coordinates onto the grid.

    ``f`` is called with d coordinate arrays (broadcast to the full tensor
    shape); functions written for scalars are retried through np.vectorize.
    The function handle is kept on the resulting field for resampling.
    """
    axis = grid.spatial_axis()
    mesh = np.meshgrid(*((axis,) * grid.dim), indexing="ij", sparse=True)
    try:
        vals = np.asarray(f(*mesh), dtype=np.complex128)
        vals = np.broadcast_to(vals, grid.shape)
    except (ValueError, TypeError):
        vals = np.vectorize(f, otypes=[np.complex128])(*np.meshgrid(*((axis,) * grid.dim), indexing="ij"))
    return Field(grid=grid, domain_tag="spatial", values=vals, sampler=f)


def refine(grid: GridSpec) -> GridSpec:
    """Halve the spacing and widen the box: N -> 2N, L -> L*sqrt(2).

    Both the resolution (aliasing) and the truncation (tail) error shrink
    along the refinement sequence.  Refinement past 2^16 points per axis is
    refused.
    """
    if 2 * grid.points > _REFINE_POINT_CAP:
        raise ValueError(f"refinement past {_REFINE_POINT_CAP} points per axis refused")
    return GridSpec(dim=grid.dim, half_width=grid.half_width * np.sqrt(2.0), points=2 * grid.points)


_HEADER = struct.Struct("<IIdI")


def serialize_field(field: Field) -> bytes:
    """Flat little-endian encoding: dim, N, L, tag, then re/im doubles."""
    head = _HEADER.pack(
        field.grid.dim,
        field.grid.points,
        field.grid.half_width,
        _TAG_CODES[field.domain_tag],
    )
    payload = field.values.astype("<c16", copy=False).tobytes(order="C")
    return head + payload


def deserialize_field(data: bytes) -> Field:
    """Inverse of serialize_field."""
    if len(data) < _HEADER.size:
        raise ValueError("truncated field header")
    dim, points, half_width, tag_code = _HEADER.unpack_from(data)
    if tag_code not in _TAG_NAMES:
        raise ValueError(f"unknown domain tag code {tag_code}")
    grid = GridSpec(dim=dim, half_width=half_width, points=points)
    expected = points**dim * 16
    payload = data[_HEADER.size :]
    if len(payload) != expected:
        raise ValueError(f"payload holds {len(payload)} bytes, expected {expected}")
    values = np.frombuffer(payload, dtype="<c16").astype(np.complex128).reshape(grid.shape)
    return Field(grid=grid, domain_tag=_TAG_NAMES[tag_code], values=values)
