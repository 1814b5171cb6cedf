use serde::{Deserialize, Serialize};

use crate::embedding::{EmbeddedGraph, FacialWalk, SubgraphSystem};
use crate::setsystem::SetFamily;
use crate::{Error, Result};

/// Balls of radius `ell / 2 - 1` around the vertices of one facial walk.
/// Member `i` belongs to the `i`-th vertex of the walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodSystem {
    pub system: SubgraphSystem,
    pub cycle: FacialWalk,
    pub ell: usize,
}

impl NeighborhoodSystem {
    pub fn radius(&self) -> usize {
        self.ell / 2 - 1
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    /// The members as a set family over the host's vertices.
    pub fn to_set_family(&self) -> Result<SetFamily> {
        SetFamily::new(self.system.host.vertex_count(), self.system.members.clone())
    }

    /// Whether member `i` induces a tree.
    pub fn member_is_tree(&self, i: usize) -> bool {
        let host = &self.system.host;
        let members = &self.system.members[i];
        let mask = self.system.member_mask(i);
        let inner_edges = host.edges().iter().filter(|&&(u, v)| mask[u] && mask[v]).count();
        inner_edges + 1 == members.len()
    }
}

/// Builds the neighbourhood system of `face` for even `ell >= 4`.
pub fn facial_neighborhoods(g: &EmbeddedGraph, face: &FacialWalk, ell: usize) -> Result<NeighborhoodSystem> {
    if ell < 4 || ell % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "ell = {ell}: neighbourhood systems need even ell >= 4; subdivide first for odd ell"
        )));
    }
    if let Some(found) = g.girth() {
        if found < ell {
            return Err(Error::GirthViolation { required: ell, found });
        }
    }
    if face.vertices.iter().any(|&v| v >= g.vertex_count()) {
        return Err(Error::InvalidArgument("face vertex outside the graph".into()));
    }
    let r = ell / 2 - 1;
    let members = face.vertices.iter().map(|&v| g.r_neighborhood(v, r)).collect();
    let system = SubgraphSystem::new(g.clone(), members)?;
    Ok(NeighborhoodSystem { system, cycle: face.clone(), ell })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseVerdict {
    pub holds: bool,
    /// First disjoint pair of members.
    pub witness: Option<(usize, usize)>,
    /// A disjoint pair on an instance declared maximal.
    pub theorem_violation: bool,
}

/// Whether every two members share a vertex. On an instance the caller has
/// verified to be maximal, a disjoint pair is flagged as a theorem violation.
pub fn check_pairwise_intersecting(sys: &NeighborhoodSystem, maximal: bool) -> PairwiseVerdict {
    let masks: Vec<Vec<bool>> = (0..sys.len()).map(|i| sys.system.member_mask(i)).collect();
    let members = &sys.system.members;
    let witness = (0..members.len())
        .flat_map(|i| (i + 1..members.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !members[i].iter().any(|&v| masks[j][v]));
    PairwiseVerdict { holds: witness.is_none(), witness, theorem_violation: maximal && witness.is_some() }
}

/// First ordered pair `(f, g)` for which the vertices of member `f` outside
/// member `g` induce a disconnected subgraph.
pub fn discrete_non_piercing(sys: &SubgraphSystem) -> Option<(usize, usize)> {
    let host = &sys.host;
    let masks: Vec<Vec<bool>> = (0..sys.len()).map(|i| sys.member_mask(i)).collect();
    for f in 0..sys.len() {
        for g in 0..sys.len() {
            if f == g {
                continue;
            }
            let rest: Vec<usize> = sys.members[f].iter().copied().filter(|&v| !masks[g][v]).collect();
            let mask = crate::embedding::mask_of(host.vertex_count(), &rest);
            if !crate::embedding::induces_connected(host, &mask, &rest) {
                return Some((f, g));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_one_members_are_closed_neighbourhoods() {
        let g = EmbeddedGraph::cycle(6);
        let face = g.trace_faces().unwrap().remove(0);
        let sys = facial_neighborhoods(&g, &face, 4).unwrap();
        for (i, &v) in face.vertices.iter().enumerate() {
            let mut expected: Vec<usize> = g.neighbors(v).chain([v]).collect();
            expected.sort_unstable();
            assert_eq!(sys.system.members[i], expected);
            assert!(sys.member_is_tree(i));
        }
    }

    #[test]
    fn odd_ell_and_short_girth_are_rejected() {
        let g = EmbeddedGraph::cycle(5);
        let face = g.trace_faces().unwrap().remove(0);
        assert!(facial_neighborhoods(&g, &face, 5).is_err());
        assert!(matches!(
            facial_neighborhoods(&g, &face, 6),
            Err(Error::GirthViolation { required: 6, found: 5 })
        ));
    }

    #[test]
    fn path_minus_middle_is_a_piercing_witness() {
        let g = EmbeddedGraph::path(3);
        let sys = SubgraphSystem::new(g, vec![vec![0, 1, 2], vec![1]]).unwrap();
        assert_eq!(discrete_non_piercing(&sys), Some((0, 1)));
    }

    #[test]
    fn disjoint_members_are_non_piercing() {
        let g = EmbeddedGraph::path(4);
        let sys = SubgraphSystem::new(g, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(discrete_non_piercing(&sys), None);
    }

    #[test]
    fn long_cycle_has_disjoint_neighbourhoods() {
        let g = EmbeddedGraph::cycle(10);
        let face = g.trace_faces().unwrap().remove(0);
        let sys = facial_neighborhoods(&g, &face, 4).unwrap();
        let v = check_pairwise_intersecting(&sys, false);
        assert!(!v.holds && !v.theorem_violation);
        assert_eq!(v.witness, Some((0, 3)));
        assert!(check_pairwise_intersecting(&sys, true).theorem_violation);
    }
}
