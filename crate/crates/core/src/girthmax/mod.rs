//! Maximal plane graphs of girth at least `ell`: verification, subdivision
//! for odd `ell`, bounded search for long faces, and the pierce-point
//! partition of a facial cycle with its structural checks.

mod maximal;
mod partition;
mod search;

use serde::{Deserialize, Serialize};

use crate::embedding::{cross_free_check, Crossing, EmbeddedGraph, FacialWalk};
use crate::regions::{check_pairwise_intersecting, discrete_non_piercing, facial_neighborhoods, PairwiseVerdict};
use crate::setsystem::{min_piercing, PiercingCertificate};
use crate::{Error, Limits, Result};

pub use maximal::{is_two_connected, subdivide_even, subdivided_dart, verify_maximal, AddablePair, MaximalityReport};
pub use partition::{
    check_alternation, check_distance_profile, check_runs, cyclic_runs, partition_cycle, PartitionReport,
    ProfileCheck, Run,
};
pub use search::{search_fmax, FmaxSearch, MaximalWitness, SearchConfig, SearchLogRow};

/// Everything the face-length argument produces for one face.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceBoundReport {
    pub ell: usize,
    /// `ell` for even input, `2 ell` after subdivision for odd input.
    pub working_ell: usize,
    pub subdivided: bool,
    /// Length of the face in the input graph.
    pub face_length: usize,
    pub maximality: MaximalityReport,
    pub pairwise: PairwiseVerdict,
    pub members_are_trees: bool,
    pub cross_free: Option<Crossing>,
    pub non_piercing_witness: Option<(usize, usize)>,
    pub pierce: PiercingCertificate,
    pub partition: PartitionReport,
    /// `face_length` against the bound carried back to the input graph.
    pub bound_holds: bool,
}

impl FaceBoundReport {
    /// All checks the argument guarantees on a maximal instance.
    pub fn all_ok(&self) -> bool {
        self.pairwise.holds
            && self.members_are_trees
            && self.cross_free.is_none()
            && self.partition.pierces
            && self.partition.run_length_ok
            && self.partition.unimodal_ok
            && self.partition.alternation_ok
            && self.bound_holds
    }
}

/// Runs neighbourhood system, exact piercing and cycle partition on one
/// face. Odd `ell` is handled on the subdivided graph with `2 ell`, whose
/// copy of the face is twice as long.
pub fn face_bound_pipeline(g: &EmbeddedGraph, face: &FacialWalk, ell: usize, limits: &Limits) -> Result<FaceBoundReport> {
    let maximality = verify_maximal(g, ell)?;
    if face.darts.is_empty() {
        return Err(Error::InvalidArgument("face has no edges".into()));
    }
    let (work, work_face, working_ell) = if ell % 2 == 1 {
        let s = subdivide_even(g);
        let start = subdivided_dart(face.darts[0]);
        let f = s
            .trace_faces()?
            .into_iter()
            .find(|f| f.darts.contains(&start))
            .expect("every dart lies on a face");
        (s, f, 2 * ell)
    } else {
        (g.clone(), face.clone(), ell)
    };
    let sys = facial_neighborhoods(&work, &work_face, working_ell)?;
    let pairwise = check_pairwise_intersecting(&sys, maximality.is_maximal);
    let members_are_trees = (0..sys.len()).all(|i| sys.member_is_tree(i));
    let cross_free = cross_free_check(&sys.system);
    let non_piercing_witness = discrete_non_piercing(&sys.system);
    let pierce = min_piercing(&sys.to_set_family()?, limits)?;
    let partition = partition_cycle(&work, &work_face, &pierce.points, working_ell)?;
    let bound_holds = partition.bound_holds();
    Ok(FaceBoundReport {
        ell,
        working_ell,
        subdivided: ell % 2 == 1,
        face_length: face.len(),
        maximality,
        pairwise,
        members_are_trees,
        cross_free,
        non_piercing_witness,
        pierce,
        partition,
        bound_holds,
    })
}
