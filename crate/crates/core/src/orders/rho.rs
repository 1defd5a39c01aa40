//! The poset `ρ(a, q) = {R_b : b D q, b ≤_R a}` and the order automorphism
//! `φ_a : R_b ↦ R_ab` it carries, for `a` in a subgroup and `q ≤_R a`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::green::{self, GreenData};
use crate::semigroup::FiniteSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoStructure {
    pub base: usize,
    pub target: usize,
    /// Ids (into `green.r`) of the `R`-classes in `ρ(a, q)`, ascending.
    pub classes: Vec<usize>,
    /// `phi[i] = j` when `φ_a` sends `classes[i]` to `classes[j]`.
    pub phi: Vec<usize>,
    /// Order of `φ_a` as a permutation.
    pub phi_order: usize,
}

impl RhoStructure {
    /// `φ_a^k` as a permutation of positions.
    pub fn phi_power(&self, k: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.phi.len()).collect();
        for _ in 0..k {
            p = p.iter().map(|&i| self.phi[i]).collect();
        }
        p
    }
}

fn rho_classes(green: &GreenData, a: usize, target: usize) -> Vec<usize> {
    let mut ids: Vec<usize> = green
        .r
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.iter().any(|&b| green.d_related(b, target) && green.leq_r(b, a)))
        .map(|(id, _)| id)
        .collect();
    ids.sort_unstable();
    ids
}

/// `R_b ↦ R_xb` on the given classes, checked well defined and closed.
fn translation(q: &FiniteSemigroup, green: &GreenData, x: usize, classes: &[usize]) -> Result<Vec<usize>> {
    classes
        .iter()
        .map(|&id| {
            let members = green.r.class(id);
            let image = green.r.class_of(q.mul(x, members[0]));
            if members.iter().any(|&b| green.r.class_of(q.mul(x, b)) != image) {
                return Err(Error::PreconditionFailed(format!("R_b -> R_xb ill defined for x = {x}")));
            }
            classes
                .binary_search(&image)
                .map_err(|_| Error::PreconditionFailed(format!("R_xb escapes rho for x = {x}")))
        })
        .collect()
}

/// Builds `ρ(a, q)` and `φ_a`, checking that `φ_a` is an order automorphism
/// with inverse `φ_{a♯}`.
pub fn rho_structure(q: &FiniteSemigroup, green: &GreenData, a: usize, target: usize) -> Result<RhoStructure> {
    let inv = green::group_inverse(q, green, a)?;
    if !green.leq_r(target, a) {
        return Err(Error::PreconditionFailed(format!("{target} is not <=_R {a}")));
    }
    let classes = rho_classes(green, a, target);
    if classes.binary_search(&green.r.class_of(target)).is_err() {
        return Err(Error::PreconditionFailed("R_q is missing from rho".into()));
    }
    let phi = translation(q, green, a, &classes)?;
    let phi_inv = translation(q, green, inv, &classes)?;
    for i in 0..classes.len() {
        if phi_inv[phi[i]] != i || phi[phi_inv[i]] != i {
            return Err(Error::PreconditionFailed("phi_a and phi_a# are not mutually inverse".into()));
        }
    }
    let rep = |i: usize| green.r.class(classes[i])[0];
    for i in 0..classes.len() {
        for j in 0..classes.len() {
            if green.leq_r(rep(i), rep(j)) != green.leq_r(rep(phi[i]), rep(phi[j])) {
                return Err(Error::PreconditionFailed("phi_a does not preserve and reflect <=_R".into()));
            }
        }
    }
    let mut phi_order = 1;
    let mut p = phi.clone();
    while p.iter().enumerate().any(|(i, &j)| i != j) {
        p = p.iter().map(|&i| phi[i]).collect();
        phi_order += 1;
    }
    Ok(RhoStructure { base: a, target, classes, phi, phi_order })
}

/// `φ_{a^i}` as a permutation of the positions of `ρ(a, q)`.
pub fn phi_of_power(q: &FiniteSemigroup, green: &GreenData, rho: &RhoStructure, i: usize) -> Result<Vec<usize>> {
    translation(q, green, q.pow(rho.base, i), &rho.classes)
}

/// `k` with `q H a^k b`, for `q = a♯b` and `b ≤_R a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerWitness {
    /// `n − 1` where `φ_a^n` is the identity; `a^0 b` reads as `b`.
    pub proof_k: usize,
    pub minimal_k: usize,
}

/// `a^k b`, with `a^0 b = b`.
pub fn power_times(q: &FiniteSemigroup, a: usize, k: usize, b: usize) -> usize {
    if k == 0 { b } else { q.mul(q.pow(a, k), b) }
}

pub fn power_witness(q: &FiniteSemigroup, green: &GreenData, target: usize, a: usize, b: usize) -> Result<PowerWitness> {
    let inv = green::group_inverse(q, green, a)?;
    if q.mul(inv, b) != target {
        return Err(Error::PreconditionFailed(format!("{target} != {a}# {b}")));
    }
    if !green.leq_r(b, a) {
        return Err(Error::PreconditionFailed(format!("{b} is not <=_R {a}")));
    }
    let rho = rho_structure(q, green, a, target)?;
    let proof_k = rho.phi_order - 1;
    if !green.h_related(target, power_times(q, a, proof_k, b)) {
        return Err(Error::PreconditionFailed(format!("q is not H-related to a^{proof_k} b")));
    }
    let minimal_k = (0..=proof_k)
        .find(|&k| green.h_related(target, power_times(q, a, k, b)))
        .expect("proof_k qualifies");
    Ok(PowerWitness { proof_k, minimal_k })
}
