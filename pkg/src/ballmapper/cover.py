"""Greedy cover of a point cloud with fixed-radius balls.

Landmarks are taken from the not-yet-covered points, one at a time, and every
point within the radius of a landmark (inclusive boundary, covered earlier or
not) becomes a member of that ball. Membership overlap between balls is what
later produces graph edges.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveEpsilonError
from .point_cloud import PointCloud


@dataclass(frozen=True)
class BallCover:
    """A cover: ball b (1-based) is centred on landmarks[b-1] with radius epsilon.

    Landmark and member values are row ids of the source cloud; member lists
    are sorted ascending. Every row id appears in at least one ball.
    """

    epsilon: float
    landmarks: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    row_ids: tuple[int, ...]

    @property
    def n_balls(self) -> int:
        return len(self.landmarks)

    @property
    def n_points(self) -> int:
        return len(self.row_ids)

    @property
    def ball_ids(self) -> range:
        return range(1, len(self.landmarks) + 1)


def build_cover(
    cloud: PointCloud,
    epsilon: float,
    order: str = "data",
    seed: int = 0,
) -> BallCover:
    """Cover the cloud greedily, choosing each landmark from the uncovered set.

    order="data" takes the first uncovered point in input file order (the
    deterministic default); order="shuffle" walks a seeded random permutation
    of the rows instead, for landmark-order robustness experiments. Distance
    comparisons are inclusive (<= epsilon).
    """
    if not epsilon > 0:
        raise NonPositiveEpsilonError()
    if order not in ("data", "shuffle"):
        raise ValueError(f"unknown landmark order policy {order!r}")

    n = cloud.n
    if order == "shuffle":
        scan_order = np.random.default_rng(seed).permutation(n)
    else:
        scan_order = np.arange(n)

    pts = cloud.values
    covered = np.zeros(n, dtype=bool)
    landmarks: list[int] = []
    members: list[tuple[int, ...]] = []
    row_ids = np.asarray(cloud.row_ids)

    while True:
        uncovered = scan_order[~covered[scan_order]]
        if uncovered.size == 0:
            break
        lm = int(uncovered[0])
        diff = pts - pts[lm]
        dist = np.sqrt(np.einsum("ij,ij->i", diff, diff))
        in_ball = np.nonzero(dist <= epsilon)[0]
        covered[in_ball] = True
        landmarks.append(int(row_ids[lm]))
        members.append(tuple(int(r) for r in row_ids[in_ball]))

    return BallCover(float(epsilon), tuple(landmarks), tuple(members), tuple(cloud.row_ids))


def membership_matrix(cover: BallCover) -> dict[int, list[int]]:
    """Invert the cover: row id -> sorted list of ball ids containing it."""
    containing: dict[int, list[int]] = {r: [] for r in cover.row_ids}
    for ball, member_rows in enumerate(cover.members, start=1):
        for r in member_rows:
            containing[r].append(ball)
    return containing


def ball_sizes(cover: BallCover) -> list[int]:
    """Point count per ball, in ball id order."""
    return [len(m) for m in cover.members]
