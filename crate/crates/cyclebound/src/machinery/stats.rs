//! Per-root statistics of an extension system.
//!
//! Roots fall into four classes. A root whose path never grew is plain
//! (U0). A grown root whose terminal has a neighbor on some other path is
//! separated (U1). The remaining grown roots are probed with the
//! path-growth procedure run on their own path reversed, with the free
//! pool as the neutral set and the rest of the path union as the finish
//! set: if the final recorded path starts and ends on the root's own path
//! the root is closed (UStar), otherwise open (U2).
//!
//! On top of the classes this module computes, for every root u with
//! terminal t and every root v:
//!
//! * Phi_u, the neighbors of t on the path union, and Psi_u, its neighbors
//!   on the host cycle,
//! * B_u, the plain roots adjacent to u's second path vertex, and B*_u
//!   (plain u only), the roots whose second path vertex is adjacent to u,
//! * A_u(v), the part of Phi_u and B_u sitting on v's path, with the
//!   deepest such vertex rho_u(v), its companion rho-bar, and the support
//!   Lambda_u of roots where A_u(v) is nonempty,
//! * the weights: phi-prime (phi, zeroed for closed roots), gamma
//!   (phi-prime plus b for grown roots, phi-prime minus b-star for plain
//!   ones), the edge sums two-beta, and their average mu.

use super::theta::{theta_procedure, VNeutPathMode};
use super::{HcExtension, MachineryError};
use crate::graph::VertexSet;
use crate::rational::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UClass {
    U0,
    U1,
    U2,
    UStar,
}

/// Everything below is indexed by root position on H, not by vertex id;
/// the sets themselves hold vertex ids.
#[derive(Clone, Debug)]
pub struct ExtensionStats {
    pub classes: Vec<UClass>,
    pub phi_sets: Vec<VertexSet>,
    pub phi: Vec<usize>,
    pub psi_sets: Vec<VertexSet>,
    pub psi: Vec<usize>,
    pub b_sets: Vec<VertexSet>,
    pub b: Vec<usize>,
    pub b_star_sets: Vec<VertexSet>,
    pub b_star: Vec<usize>,
    /// `a_sets[u][v]` is A_u(v) for the roots at positions u and v.
    pub a_sets: Vec<Vec<VertexSet>>,
    /// `rho[u][v]` is the vertex of A_u(v) deepest along v's path.
    pub rho: Vec<Vec<Option<usize>>>,
    /// Companion of rho: u's terminal when rho lies in Phi_u, otherwise
    /// u's second path vertex.
    pub rho_bar: Vec<Vec<Option<usize>>>,
    /// Lambda_u as a set of root vertex ids.
    pub lambda: Vec<VertexSet>,
    pub phi_prime: Vec<usize>,
    pub gamma: Vec<i64>,
    /// `two_beta[i]` is `gamma[i] + gamma[i+1]` cyclically, twice the edge
    /// weight beta, kept doubled to stay integral.
    pub two_beta: Vec<i64>,
    /// Average of the beta weights, equal to the gamma sum over h.
    pub mu: Rat,
}

/// Classifies the roots with bare edges admitted as probe paths.
pub fn classify_vertices(ext: &HcExtension) -> Result<Vec<UClass>, MachineryError> {
    classify_vertices_with(ext, VNeutPathMode::AllowEdges)
}

pub fn classify_vertices_with(
    ext: &HcExtension,
    mode: VNeutPathMode,
) -> Result<Vec<UClass>, MachineryError> {
    let g = ext.graph();
    let pool = ext.pool();
    let h = ext.h_len();
    let mut classes = Vec::with_capacity(h);
    for i in 0..h {
        let path = ext.tree(i);
        if path.len() == 1 {
            classes.push(UClass::U0);
            continue;
        }
        let mut phi = g.neighbors(ext.u_hat(i));
        phi.intersect_with(ext.t_set());
        if !phi.is_subset_of(ext.tree_set(i)) {
            classes.push(UClass::U1);
            continue;
        }
        let mut v_fin = ext.t_set().clone();
        v_fin.subtract(ext.tree_set(i));
        let reversed: Vec<usize> = path.iter().rev().copied().collect();
        let trace = theta_procedure(g, &reversed, &pool, &v_fin, mode)?;
        let last = trace.final_path();
        let own = ext.tree_set(i);
        let special = own.contains(last[0]) && own.contains(*last.last().expect("nonempty"));
        classes.push(if special { UClass::UStar } else { UClass::U2 });
    }
    Ok(classes)
}

pub fn compute_stats(ext: &HcExtension) -> Result<ExtensionStats, MachineryError> {
    compute_stats_with(ext, VNeutPathMode::AllowEdges)
}

pub fn compute_stats_with(
    ext: &HcExtension,
    mode: VNeutPathMode,
) -> Result<ExtensionStats, MachineryError> {
    let g = ext.graph();
    let n = g.n();
    let h = ext.h_len();
    let classes = classify_vertices_with(ext, mode)?;

    let mut phi_sets = Vec::with_capacity(h);
    let mut psi_sets = Vec::with_capacity(h);
    for i in 0..h {
        let hat = ext.u_hat(i);
        let mut phi = g.neighbors(hat);
        phi.intersect_with(ext.t_set());
        let mut psi = g.neighbors(hat);
        psi.intersect_with(ext.cycle_set());
        phi_sets.push(phi);
        psi_sets.push(psi);
    }

    let mut b_sets = vec![VertexSet::empty(n); h];
    let mut b_star_sets = vec![VertexSet::empty(n); h];
    for i in 0..h {
        match ext.u_ring(i) {
            Some(ring) => {
                // grown root: collect plain roots adjacent to its second vertex
                for (j, &v) in ext.h().iter().enumerate() {
                    if classes[j] == UClass::U0 && g.has_edge(v, ring) {
                        b_sets[i].insert(v);
                    }
                }
            }
            None => {
                // plain root: collect roots whose second vertex it touches
                let u = ext.h()[i];
                for j in 0..h {
                    if let Some(ring) = ext.u_ring(j) {
                        if g.has_edge(u, ring) {
                            b_star_sets[i].insert(ext.h()[j]);
                        }
                    }
                }
            }
        }
    }

    let mut a_sets = Vec::with_capacity(h);
    let mut rho = Vec::with_capacity(h);
    let mut rho_bar = Vec::with_capacity(h);
    let mut lambda = Vec::with_capacity(h);
    for i in 0..h {
        let mut pool_uv = Vec::with_capacity(h);
        let mut rho_u = Vec::with_capacity(h);
        let mut rho_bar_u = Vec::with_capacity(h);
        let mut lam = VertexSet::empty(n);
        let mut reach = phi_sets[i].clone();
        reach.union_with(&b_sets[i]);
        for j in 0..h {
            let mut a = reach.clone();
            a.intersect_with(ext.tree_set(j));
            if a.is_empty() {
                pool_uv.push(a);
                rho_u.push(None);
                rho_bar_u.push(None);
                continue;
            }
            lam.insert(ext.h()[j]);
            let deepest = ext
                .tree(j)
                .iter()
                .rev()
                .copied()
                .find(|&v| a.contains(v))
                .expect("a is nonempty");
            rho_u.push(Some(deepest));
            rho_bar_u.push(Some(if phi_sets[i].contains(deepest) {
                ext.u_hat(i)
            } else {
                ext.u_ring(i).expect("a b-entry implies a grown root")
            }));
            pool_uv.push(a);
        }
        a_sets.push(pool_uv);
        rho.push(rho_u);
        rho_bar.push(rho_bar_u);
        lambda.push(lam);
    }

    let phi: Vec<usize> = phi_sets.iter().map(|s| s.len()).collect();
    let psi: Vec<usize> = psi_sets.iter().map(|s| s.len()).collect();
    let b: Vec<usize> = b_sets.iter().map(|s| s.len()).collect();
    let b_star: Vec<usize> = b_star_sets.iter().map(|s| s.len()).collect();
    let phi_prime: Vec<usize> = (0..h)
        .map(|i| if classes[i] == UClass::UStar { 0 } else { phi[i] })
        .collect();
    let gamma: Vec<i64> = (0..h)
        .map(|i| {
            if classes[i] == UClass::U0 {
                phi_prime[i] as i64 - b_star[i] as i64
            } else {
                phi_prime[i] as i64 + b[i] as i64
            }
        })
        .collect();
    let two_beta: Vec<i64> = (0..h).map(|i| gamma[i] + gamma[(i + 1) % h]).collect();
    let mu = Rat::new(gamma.iter().sum(), h as i64);

    Ok(ExtensionStats {
        classes,
        phi_sets,
        phi,
        psi_sets,
        psi,
        b_sets,
        b,
        b_star_sets,
        b_star,
        a_sets,
        rho,
        rho_bar,
        lambda,
        phi_prime,
        gamma,
        two_beta,
        mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machinery::tests::{hexagon_plus_triangle, wheel_pendant};
    use crate::machinery::maximal_hc_extension;

    fn members(s: &VertexSet) -> Vec<usize> {
        s.iter().collect()
    }

    #[test]
    fn wheel_pendant_statistics() {
        let (g, c, h) = wheel_pendant();
        let ext = maximal_hc_extension(&g, &c, &h).unwrap();
        let st = compute_stats(&ext).unwrap();
        assert_eq!(st.classes, vec![UClass::UStar, UClass::U0, UClass::U0]);
        assert_eq!(st.phi, vec![1, 2, 2]);
        assert_eq!(members(&st.phi_sets[0]), vec![5]);
        assert_eq!(members(&st.phi_sets[1]), vec![5, 7]);
        assert_eq!(st.psi, vec![1, 1, 1]);
        assert!(st.psi_sets.iter().all(|s| members(s) == vec![0]));
        assert_eq!(st.b, vec![0, 0, 0]);
        assert_eq!(st.b_star, vec![0, 0, 0]);
        assert_eq!(st.phi_prime, vec![0, 2, 2]);
        assert_eq!(st.gamma, vec![0, 2, 2]);
        assert_eq!(st.two_beta, vec![2, 4, 2]);
        assert_eq!(members(&st.lambda[0]), vec![5]);
        assert_eq!(members(&st.lambda[1]), vec![5, 7]);
        assert_eq!(members(&st.lambda[2]), vec![5, 6]);
        assert_eq!(st.mu, Rat::new(4, 3));
        // the deepest contact of root 6 on path 0 is the root 5 itself,
        // reached through the terminal of 6
        assert_eq!(st.rho[1][0], Some(5));
        assert_eq!(st.rho_bar[1][0], Some(6));
        assert_eq!(st.rho[0][0], Some(5));
        assert_eq!(st.rho_bar[0][0], Some(8));
        assert_eq!(st.rho[0][1], None);
    }

    #[test]
    fn trivial_system_statistics() {
        let (g, c, h) = hexagon_plus_triangle();
        let ext = maximal_hc_extension(&g, &c, &h).unwrap();
        let st = compute_stats(&ext).unwrap();
        assert_eq!(st.classes, vec![UClass::U0; 3]);
        assert_eq!(st.phi, vec![2, 2, 2]);
        assert_eq!(st.psi, vec![0, 0, 0]);
        assert_eq!(st.gamma, vec![2, 2, 2]);
        assert_eq!(st.two_beta, vec![4, 4, 4]);
        assert_eq!(st.mu, Rat::new(2, 1));
        assert_eq!(members(&st.lambda[0]), vec![7, 8]);
        // with every path trivial, each contact is the root vertex itself
        assert_eq!(st.rho[0][1], Some(7));
        assert_eq!(st.rho_bar[0][1], Some(6));
    }
}
