"""Unit-distance realizations of complete multipartite graphs.

The construction places part i on a circle of radius sqrt(1/2) lying in its
own coordinate plane (2p, 2p+1). Points from circles in orthogonal planes
are at distance exactly sqrt(1/2 + 1/2) = 1, so every cross-part pair is a
unit pair and K_{m1,...,mr} is realized whenever the parts fit into the
floor(d/2) available planes. Singleton parts do not need a whole circle:
two of them can share one plane at perpendicular angles, which is still a
unit pair.

Within a part the angular step is 2*pi/(m + 1/2) rather than 2*pi/m. A
chord of the radius-sqrt(1/2) circle has length 1 only at arc angle pi/2
or 3*pi/2, which the fractional step can never produce, so no intra-part
pair is accidentally at unit distance (with step 2*pi/m this fails for
every m divisible by 4).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from ramseyforge.graphs import (
    Graph,
    complete_multipartite,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
)

RADIUS = math.sqrt(0.5)
DEFAULT_TOLERANCE = 1e-9
PART_PHASE = math.pi / 7  # per-part rotation; keeps distinct parts visibly apart


@dataclass(frozen=True)
class PointConfig:
    """Finite point set in R^d, coordinates in binary64."""

    d: int
    points: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("ambient dimension must be positive")
        for i, p in enumerate(self.points):
            if len(p) != self.d:
                raise ValueError(f"point {i} has {len(p)} coordinates, expected {self.d}")

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.float64).reshape(len(self.points), self.d)


@dataclass(frozen=True)
class RealizationCertificate:
    """Coordinates witnessing that `graph` is a unit-distance graph in R^d."""

    config: PointConfig
    graph: Graph
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        if len(self.config.points) != self.graph.n:
            raise ValueError(
                f"{len(self.config.points)} points for a graph on {self.graph.n} vertices"
            )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a certificate, with offending pairs if any."""

    ok: bool
    bad_edges: tuple[tuple[int, int, float], ...] = ()
    coincident_pairs: tuple[tuple[int, int, float], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _plane_layout(part_sizes: Sequence[int], d: int) -> list[int]:
    """Assign a coordinate plane index to each part.

    Parts of size >= 2 claim a plane each; singleton parts share planes in
    pairs (placed at perpendicular angles). Raises if the parts do not fit
    into the floor(d/2) planes.
    """
    planes_available = d // 2
    assignment = [-1] * len(part_sizes)
    next_plane = 0
    pending_single: Optional[int] = None
    for i, size in enumerate(part_sizes):
        if size >= 2:
            assignment[i] = next_plane
            next_plane += 1
        elif pending_single is None:
            pending_single = i
            assignment[i] = next_plane
            next_plane += 1
        else:
            assignment[i] = assignment[pending_single]
            pending_single = None
    if next_plane > planes_available:
        raise ValueError(
            f"parts {list(part_sizes)} need {next_plane} coordinate planes but "
            f"dimension {d} provides only [d/2] = {planes_available}"
        )
    return assignment


def embed_multipartite(
    part_sizes: Sequence[int], d: int, tolerance: float = DEFAULT_TOLERANCE
) -> RealizationCertificate:
    """Realize the complete multipartite graph on `part_sizes` in R^d.

    Part i occupies m_i points on the circle of radius sqrt(1/2) in its
    plane, at angles j * 2*pi/(m_i + 1/2) + i * pi/7. Vertices are labeled
    part by part, matching `complete_multipartite(part_sizes)`.
    """
    part_sizes = list(part_sizes)
    if d < 2:
        raise ValueError("ambient dimension must be at least 2")
    if not part_sizes:
        raise ValueError("at least one part required")
    if any(m < 1 for m in part_sizes):
        raise ValueError("part sizes must be positive")
    assignment = _plane_layout(part_sizes, d)

    points: list[tuple[float, ...]] = []
    used_plane_angle: dict[int, float] = {}
    for i, size in enumerate(part_sizes):
        plane = assignment[i]
        if plane in used_plane_angle:
            # second singleton in a shared plane: exactly perpendicular
            base = used_plane_angle[plane] + math.pi / 2
        else:
            base = i * PART_PHASE
            used_plane_angle[plane] = base
        step = 2 * math.pi / (size + 0.5)
        for j in range(size):
            theta = base + j * step
            coords = [0.0] * d
            coords[2 * plane] = RADIUS * math.cos(theta)
            coords[2 * plane + 1] = RADIUS * math.sin(theta)
            points.append(tuple(coords))

    cert = RealizationCertificate(
        config=PointConfig(d, tuple(points)),
        graph=complete_multipartite(part_sizes),
        tolerance=tolerance,
    )
    _assert_no_intra_part_unit(cert, part_sizes)
    return cert


def _assert_no_intra_part_unit(
    cert: RealizationCertificate, part_sizes: Sequence[int]
) -> None:
    """Construction self-check: non-edges within a part must avoid distance 1."""
    pts = cert.config.as_array()
    start = 0
    for size in part_sizes:
        block = pts[start : start + size]
        if size > 1:
            diff = block[:, None, :] - block[None, :, :]
            dist = np.sqrt((diff * diff).sum(axis=2))
            off = np.abs(dist - 1.0)
            iu = np.triu_indices(size, 1)
            if np.any(off[iu] <= cert.tolerance):
                raise RuntimeError(
                    "intra-part pair at unit distance; angular layout is broken"
                )
        start += size


def verify_certificate(cert: RealizationCertificate) -> VerificationReport:
    """Check that every edge is a unit pair and all points are distinct.

    Non-edges are unconstrained: a unit-distance graph needs only its edge
    set to consist of unit pairs. Violations are reported with measured
    distances.
    """
    pts = cert.config.as_array()
    n = cert.graph.n
    if pts.shape != (n, cert.config.d):
        raise ValueError("point array shape does not match certificate")

    bad_edges = []
    for u, v in cert.graph.edges():
        dist = float(np.linalg.norm(pts[u] - pts[v]))
        if abs(dist - 1.0) > cert.tolerance:
            bad_edges.append((u, v, dist))

    coincident = []
    if n > 1:
        diff = pts[:, None, :] - pts[None, :, :]
        dist = np.sqrt((diff * diff).sum(axis=2))
        iu, iv = np.triu_indices(n, 1)
        close = dist[iu, iv] <= cert.tolerance
        for idx in np.nonzero(close)[0]:
            coincident.append((int(iu[idx]), int(iv[idx]), float(dist[iu[idx], iv[idx]])))

    return VerificationReport(
        ok=not bad_edges and not coincident,
        bad_edges=tuple(bad_edges),
        coincident_pairs=tuple(coincident),
    )


def forbidden_subgraph_audit(cert: RealizationCertificate, d: int) -> bool:
    """Check the certified graph against the K_{3,...,3} obstruction.

    A unit-distance graph in R^d cannot contain a complete multipartite
    subgraph with floor(d/2)+1 parts of size 3. Returns True when the
    certified graph is free of that pattern. A False return on a verified
    certificate means the embedding or the detector is buggy.
    """
    from ramseyforge.graphs import contains_balanced_multipartite

    report = verify_certificate(cert)
    if not report.ok:
        raise ValueError("certificate does not verify; audit requires a valid realization")
    forbidden_parts = d // 2 + 1
    found, _ = contains_balanced_multipartite(cert.graph, 3, forbidden_parts)
    return not found


def restrict_certificate(
    cert: RealizationCertificate, vertices: Iterable[int]
) -> RealizationCertificate:
    """Certificate for the induced subgraph on `vertices` (sorted relabeling)."""
    sub = sorted(set(vertices))
    return RealizationCertificate(
        config=PointConfig(cert.config.d, tuple(cert.config.points[v] for v in sub)),
        graph=induced_subgraph(cert.graph, sub),
        tolerance=cert.tolerance,
    )


# -- file formats -------------------------------------------------------------
#
# Point file: first line "n d", then n lines of d coordinates, 17 significant
# digits (bit-faithful binary64 round-trip). Certificate file: a "tolerance"
# line, then the point block, then the edge-list block.


def format_points(config: PointConfig) -> str:
    lines = [f"{len(config.points)} {config.d}"]
    for p in config.points:
        lines.append(" ".join(f"{x:.17g}" for x in p))
    return "\n".join(lines) + "\n"


def parse_points(stream: TextIO) -> PointConfig:
    header = stream.readline().split()
    if len(header) != 2:
        raise ValueError("point file must start with 'n d'")
    n, d = int(header[0]), int(header[1])
    points = []
    for i in range(n):
        fields = stream.readline().split()
        if len(fields) != d:
            raise ValueError(f"point line {i + 2}: expected {d} coordinates")
        points.append(tuple(float(x) for x in fields))
    return PointConfig(d, tuple(points))


def format_certificate(cert: RealizationCertificate) -> str:
    return (
        f"tolerance {cert.tolerance:.17g}\n"
        + format_points(cert.config)
        + format_edge_list(cert.graph)
    )


def parse_certificate(stream: TextIO) -> RealizationCertificate:
    head = stream.readline().split()
    if len(head) != 2 or head[0] != "tolerance":
        raise ValueError("certificate must start with a 'tolerance <t>' line")
    tolerance = float(head[1])
    config = parse_points(stream)
    graph = parse_edge_list(stream)
    return RealizationCertificate(config=config, graph=graph, tolerance=tolerance)


def read_certificate(path: str) -> RealizationCertificate:
    with open(path, "r", encoding="ascii") as fh:
        return parse_certificate(fh)


def write_certificate(cert: RealizationCertificate, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_certificate(cert))


def certificate_from_text(text: str) -> RealizationCertificate:
    return parse_certificate(io.StringIO(text))
