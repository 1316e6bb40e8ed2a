//! Turtle walk driven by a bit stream.
//!
//! The walker starts at the origin facing east, in mathematical orientation
//! (y grows upward). For each bit it first turns in place, 90° right on 0 and
//! 90° left on 1, then moves one unit forward. A walk over k bits therefore
//! visits k + 1 lattice points including the start.

use std::collections::HashSet;

use crate::sequences::BitStream;

/// A unit direction on the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Heading {
    pub dx: i64,
    pub dy: i64,
}

impl Heading {
    pub const EAST: Heading = Heading { dx: 1, dy: 0 };

    /// 90° clockwise in y-up coordinates.
    pub fn turn_right(self) -> Heading {
        Heading { dx: self.dy, dy: -self.dx }
    }

    /// 90° counterclockwise in y-up coordinates.
    pub fn turn_left(self) -> Heading {
        Heading { dx: -self.dy, dy: self.dx }
    }
}

/// The full vertex list of a walk, starting point included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub points: Vec<(i64, i64)>,
    pub final_heading: Heading,
}

/// Runs the turn-then-step walk over the stream's bits.
pub fn cloitre_walk(stream: &BitStream) -> Walk {
    let mut heading = Heading::EAST;
    let mut pos = (0i64, 0i64);
    let mut points = Vec::with_capacity(stream.len() + 1);
    points.push(pos);
    for &bit in stream.bits() {
        heading = if bit == 0 {
            heading.turn_right()
        } else {
            heading.turn_left()
        };
        pos = (pos.0 + heading.dx, pos.1 + heading.dy);
        points.push(pos);
    }
    Walk { points, final_heading: heading }
}

/// Axis-aligned bounds of a point set, inclusive on all sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundingBox {
    pub min_x: i64,
    pub min_y: i64,
    pub max_x: i64,
    pub max_y: i64,
}

impl BoundingBox {
    pub fn width(&self) -> i64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> i64 {
        self.max_y - self.min_y
    }
}

fn bounding_box(points: &[(i64, i64)]) -> BoundingBox {
    let mut bbox = BoundingBox {
        min_x: i64::MAX,
        min_y: i64::MAX,
        max_x: i64::MIN,
        max_y: i64::MIN,
    };
    for &(x, y) in points {
        bbox.min_x = bbox.min_x.min(x);
        bbox.min_y = bbox.min_y.min(y);
        bbox.max_x = bbox.max_x.max(x);
        bbox.max_y = bbox.max_y.max(y);
    }
    bbox
}

/// Summary numbers for a walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkStats {
    pub endpoint: (i64, i64),
    pub bbox: BoundingBox,
    /// Number of distinct lattice points visited (revisits collapse).
    pub distinct_points: usize,
    pub final_heading: Heading,
}

pub fn walk_stats(walk: &Walk) -> WalkStats {
    let distinct: HashSet<(i64, i64)> = walk.points.iter().copied().collect();
    WalkStats {
        endpoint: *walk.points.last().expect("walk includes its start point"),
        bbox: bounding_box(&walk.points),
        distinct_points: distinct.len(),
        final_heading: walk.final_heading,
    }
}
