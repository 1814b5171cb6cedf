//! Test-instance generators and discrete stand-ins for regions: disk
//! families discretised to set families, and neighbourhood systems around
//! a facial walk.

mod disks;
mod neighborhoods;

pub use disks::{
    disks_to_set_system, random_disk_family, Discretization, DiscretizationStats, Disk, DiskFamily, DiskMode,
    PointKind, WitnessPoint, BOUNDARY_TOL,
};
pub use neighborhoods::{
    check_pairwise_intersecting, discrete_non_piercing, facial_neighborhoods, NeighborhoodSystem, PairwiseVerdict,
};
