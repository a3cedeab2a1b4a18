"""Triangle meshes for implicit surfaces and planes, with OBJ scene export.

Implicit surfaces are sampled on a regular grid and the zero isosurface is
extracted by marching cubes (classic case table, linear interpolation on
sign-changing edges). Planes are clipped exactly against the region box.
All output is deterministic: identical inputs produce byte-identical OBJ
and manifest files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np
from skimage import measure

from .planarity import LinearForm
from .poly import Polynomial
from .textio import print_polynomial

Point = tuple[float, float, float]


class DegenerateFormError(ValueError):
    """A plane with zero normal vector cannot be meshed."""


@dataclass(frozen=True)
class Region:
    """Axis-aligned sampling box with a per-axis cell count."""

    min_corner: Point
    max_corner: Point
    resolution: int

    def __post_init__(self):
        if self.resolution < 2:
            raise ValueError("resolution must be at least 2")
        if not all(lo < hi for lo, hi in zip(self.min_corner, self.max_corner)):
            raise ValueError("min corner must be strictly below max corner")

    @classmethod
    def cube(cls, lo: float, hi: float, resolution: int = 64) -> Region:
        return cls((lo, lo, lo), (hi, hi, hi), resolution)

    @property
    def spacing(self) -> Point:
        n = self.resolution
        return tuple((hi - lo) / n for lo, hi in zip(self.min_corner, self.max_corner))

    @property
    def diagonal(self) -> float:
        return math.dist(self.min_corner, self.max_corner)

    def axes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return tuple(
            np.linspace(lo, hi, self.resolution + 1)
            for lo, hi in zip(self.min_corner, self.max_corner)
        )


@dataclass(frozen=True)
class TriangleMesh:
    """Vertex/triangle soup tagged with the source polynomial text."""

    vertices: tuple[Point, ...]
    triangles: tuple[tuple[int, int, int], ...]
    label: str
    name: str = ""

    def __post_init__(self):
        n = len(self.vertices)
        for tri in self.triangles:
            if len(set(tri)) != 3:
                raise ValueError(f"degenerate triangle {tri}")
            if any(not 0 <= k < n for k in tri):
                raise ValueError(f"triangle index out of range in {tri}")
        if not self.name:
            object.__setattr__(self, "name", self.label)

    def is_empty(self) -> bool:
        return not self.triangles


def sample_grid(poly: Polynomial, region: Region) -> np.ndarray:
    """Evaluate the polynomial on the (resolution+1)^3 grid."""
    ax, ay, az = region.axes()
    x, y, z = np.meshgrid(ax, ay, az, indexing="ij")
    values = np.zeros_like(x)
    for term in poly.terms:
        ex, ey, ez = term.monomial.exponents
        values += float(term.coefficient) * x**ex * y**ey * z**ez
    return values


def mesh_implicit_surface(poly: Polynomial, region: Region, label: str | None = None) -> TriangleMesh:
    """Zero isosurface of the polynomial over the region; empty if no sign change."""
    if label is None:
        label = print_polynomial(poly)
    name = f"surface_{label}"
    values = sample_grid(poly, region)
    if values.min() >= 0.0 or values.max() <= 0.0:
        return TriangleMesh((), (), label, name)
    verts, faces, _, _ = measure.marching_cubes(
        values, 0.0, spacing=region.spacing, method="lorensen"
    )
    verts = verts + np.asarray(region.min_corner)
    triangles = tuple(
        (int(a), int(b), int(c)) for a, b, c in faces if a != b and b != c and a != c
    )
    vertices = tuple((float(vx), float(vy), float(vz)) for vx, vy, vz in verts)
    return TriangleMesh(vertices, triangles, label, name)


_BOX_EDGES = (
    ((0, 0, 0), (1, 0, 0)), ((0, 1, 0), (1, 1, 0)), ((0, 0, 1), (1, 0, 1)), ((0, 1, 1), (1, 1, 1)),
    ((0, 0, 0), (0, 1, 0)), ((1, 0, 0), (1, 1, 0)), ((0, 0, 1), (0, 1, 1)), ((1, 0, 1), (1, 1, 1)),
    ((0, 0, 0), (0, 0, 1)), ((1, 0, 0), (1, 0, 1)), ((0, 1, 0), (0, 1, 1)), ((1, 1, 0), (1, 1, 1)),
)


def mesh_plane(form: LinearForm, region: Region, label: str | None = None) -> TriangleMesh:
    """Plane clipped to the region box: a convex polygon fanned into triangles."""
    a, b, c, d = (float(form.a), float(form.b), float(form.c), float(form.d))
    if a == 0.0 and b == 0.0 and c == 0.0:
        raise DegenerateFormError("plane normal is zero")
    if label is None:
        label = print_polynomial(form.to_polynomial())
    name = f"plane_{label}"

    def corner(ix):
        return tuple(
            region.min_corner[k] if ix[k] == 0 else region.max_corner[k] for k in range(3)
        )

    def value(p):
        return a * p[0] + b * p[1] + c * p[2] + d

    points: dict[tuple, Point] = {}

    def add(p):
        points.setdefault(tuple(round(v, 12) for v in p), p)

    for i0, i1 in _BOX_EDGES:
        p0, p1 = corner(i0), corner(i1)
        f0, f1 = value(p0), value(p1)
        if f0 == 0.0:
            add(p0)
        if f1 == 0.0:
            add(p1)
        if (f0 < 0.0 < f1) or (f1 < 0.0 < f0):
            t = f0 / (f0 - f1)
            add(tuple(u + t * (v - u) for u, v in zip(p0, p1)))

    polygon = list(points.values())
    if len(polygon) < 3:
        return TriangleMesh((), (), label, name)

    # order the convex polygon by angle in the plane around its centroid
    normal = np.array((a, b, c))
    normal = normal / np.linalg.norm(normal)
    pivot = min(range(3), key=lambda k: abs(normal[k]))
    axis = np.zeros(3)
    axis[pivot] = 1.0
    u = np.cross(normal, axis)
    u = u / np.linalg.norm(u)
    v = np.cross(normal, u)
    centroid = np.mean(np.array(polygon), axis=0)
    polygon.sort(
        key=lambda p: math.atan2(float(np.dot(p - centroid, v)), float(np.dot(p - centroid, u)))
    )
    vertices = tuple((float(px), float(py), float(pz)) for px, py, pz in polygon)
    triangles = tuple((0, k, k + 1) for k in range(1, len(vertices) - 1))
    return TriangleMesh(vertices, triangles, label, name)


def _fmt(value: float) -> str:
    return repr(float(value))


def obj_text(meshes: Sequence[TriangleMesh]) -> str:
    """Wavefront OBJ with one named object per nonempty mesh; indices are file-global."""
    lines: list[str] = []
    offset = 0
    for mesh in meshes:
        if mesh.is_empty():
            continue
        lines.append(f"o {mesh.name}")
        for vx, vy, vz in mesh.vertices:
            lines.append(f"v {_fmt(vx)} {_fmt(vy)} {_fmt(vz)}")
        for i, j, k in mesh.triangles:
            lines.append(f"f {offset + i + 1} {offset + j + 1} {offset + k + 1}")
        offset += len(mesh.vertices)
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class ScenePhase:
    """One pipeline stage and the meshes that belong to it."""

    name: str
    meshes: tuple[TriangleMesh, ...] = field(default_factory=tuple)


def manifest_text(phases: Sequence[ScenePhase], region: Region) -> str:
    lines = [
        "format=gbx-scene/1",
        "region_min=" + " ".join(_fmt(v) for v in region.min_corner),
        "region_max=" + " ".join(_fmt(v) for v in region.max_corner),
        f"resolution={region.resolution}",
    ]
    for phase in phases:
        lines.append("")
        lines.append(f"phase={phase.name}")
        lines.append(f"file={phase.name}.obj")
        for mesh in phase.meshes:
            lines.append(
                f"object={mesh.name} source={mesh.label} "
                f"vertices={len(mesh.vertices)} triangles={len(mesh.triangles)}"
            )
    return "\n".join(lines) + "\n"


def write_scene(phases: Sequence[ScenePhase], out_dir: Path, region: Region) -> list[Path]:
    """Write one OBJ file per phase plus the scene manifest; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for phase in phases:
        path = out_dir / f"{phase.name}.obj"
        path.write_text(obj_text(phase.meshes), encoding="utf-8")
        written.append(path)
    manifest = out_dir / "scene.manifest"
    manifest.write_text(manifest_text(phases, region), encoding="utf-8")
    written.append(manifest)
    return written
