use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::setsystem::SetFamily;
use crate::{Error, Result};

/// Boundary tolerance for closed containment.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// Attempts allowed per disk in pairwise-intersecting mode.
const RESAMPLE_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub c: [f64; 2],
    pub r: f64,
}

impl Disk {
    pub fn contains(&self, p: [f64; 2]) -> bool {
        dist(self.c, p) <= self.r + BOUNDARY_TOL
    }

    pub fn meets(&self, other: &Disk) -> bool {
        dist(self.c, other.c) <= self.r + other.r + BOUNDARY_TOL
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiskMode {
    #[default]
    General,
    PairwiseIntersecting,
}

impl std::str::FromStr for DiskMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(DiskMode::General),
            "pairwise-intersecting" => Ok(DiskMode::PairwiseIntersecting),
            other => Err(Error::InvalidArgument(format!("unknown disk mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskFamily {
    pub disks: Vec<Disk>,
    /// Generator provenance; zero and general for hand-written input.
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub mode: DiskMode,
}

impl DiskFamily {
    pub fn new(disks: Vec<Disk>, seed: u64, mode: DiskMode) -> Result<Self> {
        if let Some(i) = disks.iter().position(|d| !(d.r > 0.0) || !d.r.is_finite()) {
            return Err(Error::InvalidArgument(format!("disk {i} has a non-positive radius")));
        }
        if disks.iter().any(|d| !d.c[0].is_finite() || !d.c[1].is_finite()) {
            return Err(Error::InvalidArgument("disk centre is not finite".into()));
        }
        let fam = DiskFamily { disks, seed, mode };
        if mode == DiskMode::PairwiseIntersecting {
            if let Some((i, j)) = fam.first_disjoint_pair() {
                return Err(Error::InvalidArgument(format!("disks {i} and {j} do not intersect")));
            }
        }
        Ok(fam)
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn first_disjoint_pair(&self) -> Option<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| (i + 1..self.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !self.disks[i].meets(&self.disks[j]))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: DiskFamily = serde_json::from_str(s)?;
        DiskFamily::new(raw.disks, raw.seed, raw.mode)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("disk family serialises")
    }
}

/// `n` disks with centres in `[0, 10)^2`. General mode draws radii from
/// `[0.5, 3)`; pairwise-intersecting mode draws from `[1, 4)` and resamples
/// each disk until it meets all earlier ones.
pub fn random_disk_family(n: usize, seed: u64, mode: DiskMode) -> Result<DiskFamily> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one disk".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disks: Vec<Disk> = Vec::with_capacity(n);
    let mut attempts = 0u64;
    while disks.len() < n {
        let c = [rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)];
        let disk = match mode {
            DiskMode::General => Disk { c, r: rng.gen_range(0.5..3.0) },
            DiskMode::PairwiseIntersecting => Disk { c, r: rng.gen_range(1.0..4.0) },
        };
        if mode == DiskMode::PairwiseIntersecting && !disks.iter().all(|d| d.meets(&disk)) {
            attempts += 1;
            if attempts >= RESAMPLE_BUDGET {
                return Err(Error::ResampleExhausted { attempts });
            }
            continue;
        }
        attempts = 0;
        disks.push(disk);
    }
    DiskFamily::new(disks, seed, mode)
}

/// Where a universe point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    Centre,
    Crossing,
    Lens,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessPoint {
    pub p: [f64; 2],
    pub kind: PointKind,
    /// Generating disks; `(i, i)` for a centre.
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscretizationStats {
    pub disks: usize,
    pub points: usize,
    pub crossings: usize,
    pub lens_witnesses: usize,
    /// Point-disk incidences within the boundary tolerance, not counting a
    /// crossing point on its own two circles.
    pub near_tangencies: usize,
    pub max_depth: usize,
}

impl DiscretizationStats {
    pub const CSV_HEADER: &'static str = "disks,points,crossings,lens_witnesses,near_tangencies,max_depth";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.disks, self.points, self.crossings, self.lens_witnesses, self.near_tangencies, self.max_depth
        )
    }
}

#[derive(Debug, Clone)]
pub struct Discretization {
    pub family: SetFamily,
    pub points: Vec<WitnessPoint>,
    pub stats: DiscretizationStats,
}

/// Discretises the disks to a set family over witness points: all circle
/// crossings, all centres, and one deepest point of every pairwise lens.
/// Points are sorted lexicographically by coordinates, ties by generating
/// pair, and points closer than the tolerance are merged.
pub fn disks_to_set_system(family: &DiskFamily) -> Result<Discretization> {
    let disks = &family.disks;
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            if dist(disks[i].c, disks[j].c) <= BOUNDARY_TOL && (disks[i].r - disks[j].r).abs() <= BOUNDARY_TOL {
                return Err(Error::InvalidArgument(format!("disks {i} and {j} have the same boundary circle")));
            }
        }
    }
    let mut points = Vec::new();
    for (i, d) in disks.iter().enumerate() {
        points.push(WitnessPoint { p: d.c, kind: PointKind::Centre, pair: (i, i) });
    }
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            for p in circle_crossings(&disks[i], &disks[j]) {
                points.push(WitnessPoint { p, kind: PointKind::Crossing, pair: (i, j) });
            }
            if let Some(p) = lens_witness(&disks[i], &disks[j]) {
                points.push(WitnessPoint { p, kind: PointKind::Lens, pair: (i, j) });
            }
        }
    }
    points.sort_by(|a, b| {
        a.p[0].total_cmp(&b.p[0]).then(a.p[1].total_cmp(&b.p[1])).then(a.pair.cmp(&b.pair))
    });
    let mut merged: Vec<WitnessPoint> = Vec::with_capacity(points.len());
    for wp in points {
        if !merged.iter().rev().take_while(|m| wp.p[0] - m.p[0] <= BOUNDARY_TOL).any(|m| dist(m.p, wp.p) <= BOUNDARY_TOL) {
            merged.push(wp);
        }
    }

    let mut sets = vec![Vec::new(); disks.len()];
    let mut near_tangencies = 0;
    let mut max_depth = 0;
    for (k, wp) in merged.iter().enumerate() {
        let mut depth = 0;
        for (i, d) in disks.iter().enumerate() {
            if d.contains(wp.p) {
                sets[i].push(k);
                depth += 1;
                let own_circle = wp.kind == PointKind::Crossing && (wp.pair.0 == i || wp.pair.1 == i);
                if !own_circle && (dist(d.c, wp.p) - d.r).abs() <= BOUNDARY_TOL {
                    near_tangencies += 1;
                }
            }
        }
        max_depth = max_depth.max(depth);
    }
    let stats = DiscretizationStats {
        disks: disks.len(),
        points: merged.len(),
        crossings: merged.iter().filter(|w| w.kind == PointKind::Crossing).count(),
        lens_witnesses: merged.iter().filter(|w| w.kind == PointKind::Lens).count(),
        near_tangencies,
        max_depth,
    };
    let family = SetFamily::new(merged.len(), sets)?;
    Ok(Discretization { family, points: merged, stats })
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Intersection points of the two boundary circles (zero, one or two).
fn circle_crossings(a: &Disk, b: &Disk) -> Vec<[f64; 2]> {
    let d = dist(a.c, b.c);
    if d <= BOUNDARY_TOL || d > a.r + b.r + BOUNDARY_TOL || d < (a.r - b.r).abs() - BOUNDARY_TOL {
        return Vec::new();
    }
    let ux = (b.c[0] - a.c[0]) / d;
    let uy = (b.c[1] - a.c[1]) / d;
    let along = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d);
    let h2 = a.r * a.r - along * along;
    let mid = [a.c[0] + along * ux, a.c[1] + along * uy];
    if h2 <= BOUNDARY_TOL * BOUNDARY_TOL {
        return vec![mid];
    }
    let h = h2.sqrt();
    vec![[mid[0] - h * uy, mid[1] + h * ux], [mid[0] + h * uy, mid[1] - h * ux]]
}

/// Midpoint of the lens along the centre line, when the disks meet.
fn lens_witness(a: &Disk, b: &Disk) -> Option<[f64; 2]> {
    let d = dist(a.c, b.c);
    if d > a.r + b.r + BOUNDARY_TOL {
        return None;
    }
    if d <= BOUNDARY_TOL {
        return Some(a.c);
    }
    // positions along the ray from a.c towards b.c
    let lo = (d - b.r).max(-a.r);
    let hi = a.r.min(d + b.r);
    let t = (lo + hi) / 2.0;
    Some([a.c[0] + t * (b.c[0] - a.c[0]) / d, a.c[1] + t * (b.c[1] - a.c[1]) / d])
}
