//! The periodicity function `P(h, G)`, the explicit generator families for
//! the full-rank sublattice of periodicities, the resulting complexity
//! quotients, the sharpness combinations, and exact verification of the
//! linear combinations used to recover integer periodicity.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{GroupId, VirtualRep};
use crate::lattice::{IntegerLattice, InvariantFactors};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PeriodicityError {
    #[error("height {h} is not compatible with {group}: {reason}")]
    BadPair {
        h: u64,
        group: GroupId,
        reason: String,
    },
    #[error("malformed descriptor: {0}")]
    BadDescriptor(String),
}

/// Sylow type of a finite subgroup of the stabilizer group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SylowType {
    Trivial,
    Cyclic2Power(u32),
    Quaternion8,
}

impl SylowType {
    pub fn order(self) -> u64 {
        match self {
            SylowType::Trivial => 1,
            SylowType::Cyclic2Power(n) => 1u64 << n,
            SylowType::Quaternion8 => 8,
        }
    }
}

/// A finite subgroup described by the order of `G_0` and its 2-Sylow type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSubgroupDescriptor {
    pub g0_order: u64,
    pub sylow: SylowType,
}

impl FiniteSubgroupDescriptor {
    pub fn new(g0_order: u64, sylow: SylowType) -> Result<Self, PeriodicityError> {
        let s = sylow.order();
        if g0_order % s != 0 {
            return Err(PeriodicityError::BadDescriptor(format!(
                "Sylow order {s} does not divide |G_0| = {g0_order}"
            )));
        }
        let odd_index = g0_order / s;
        if odd_index % 2 == 0 {
            return Err(PeriodicityError::BadDescriptor(format!(
                "2-part of |G_0| = {g0_order} exceeds the Sylow subgroup"
            )));
        }
        Ok(FiniteSubgroupDescriptor { g0_order, sylow })
    }

    pub fn odd_index(&self) -> u64 {
        self.g0_order / self.sylow.order()
    }
}

/// `P(h, G) = (|G_0| / |H|) * P(h, H)` with `P(h, H)` equal to 2, 2^{h+n+1}
/// or 2^{h+4} according to the Sylow type.
pub fn periodicity(h: u64, d: &FiniteSubgroupDescriptor) -> BigInt {
    let sylow_part: BigInt = match d.sylow {
        SylowType::Trivial => BigInt::from(2),
        SylowType::Cyclic2Power(n) => BigInt::one() << (h + n as u64 + 1),
        SylowType::Quaternion8 => BigInt::one() << (h + 4),
    };
    BigInt::from(d.odd_index()) * sylow_part
}

/// Valid `(height, 2-group)` pairs: `h = 2^{n-1} m` for `C_{2^n}` and
/// `h = 4l + 2` for `Q_8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightGroupPair {
    pub h: u64,
    pub group: GroupId,
}

impl HeightGroupPair {
    pub fn new(h: u64, group: GroupId) -> Result<Self, PeriodicityError> {
        if h == 0 {
            return Err(PeriodicityError::BadPair {
                h,
                group,
                reason: "height must be positive".into(),
            });
        }
        match group {
            GroupId::Cyclic2Power(n) => {
                let step = 1u64 << (n - 1);
                if h % step != 0 {
                    return Err(PeriodicityError::BadPair {
                        h,
                        group,
                        reason: format!("2^{{n-1}} = {step} must divide h"),
                    });
                }
            }
            GroupId::Quaternion8 => {
                if h % 4 != 2 {
                    return Err(PeriodicityError::BadPair {
                        h,
                        group,
                        reason: "h must be congruent to 2 mod 4".into(),
                    });
                }
            }
            GroupId::Trivial => {
                return Err(PeriodicityError::BadPair {
                    h,
                    group,
                    reason: "lattice machinery needs a nontrivial 2-group".into(),
                })
            }
        }
        Ok(HeightGroupPair { h, group })
    }

    /// The odd part `m` of `h = 2^{n-1} m` for cyclic pairs.
    pub fn cyclic_m(&self) -> u64 {
        let GroupId::Cyclic2Power(n) = self.group else {
            panic!("cyclic_m on non-cyclic pair")
        };
        self.h >> (n - 1)
    }

    /// `l` with `h = 4l + 2` for quaternion pairs.
    pub fn quaternion_l(&self) -> u64 {
        assert_eq!(self.group, GroupId::Quaternion8);
        (self.h - 2) / 4
    }
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// The explicit generator list for the full-rank periodicity sublattice.
///
/// Cyclic pairs: the regular representation plus the family
/// `2^{2^{n-i}m+n-i+1} - 2^{2^{n-i}m+n-i} lambda_{n-i}` for `1 <= i <= n`
/// (the `i = n` entry reading `2^{m+1} - 2^{m+1} sigma`). Quaternion pairs:
/// the seven printed generators, dependent ones included.
pub fn generators_lprime(p: &HeightGroupPair) -> IntegerLattice {
    match p.group {
        GroupId::Cyclic2Power(n) => {
            let m = p.cyclic_m();
            let mut gens = vec![crate::groups::regular(p.group)];
            for i in 1..=n as u64 {
                let e = (1u64 << (n as u64 - i)) * m + n as u64 - i;
                let mut v = VirtualRep::zero(p.group);
                v.coeffs[0] = pow2(e + 1);
                if i == n as u64 {
                    // lambda_0 = 2 sigma: 2^{m+1} - 2^m lambda_0 = 2^{m+1}(1 - sigma)
                    v.coeffs[1] = -pow2(e + 1);
                } else {
                    let lambda_idx = (n as u64 - i) as usize + 1;
                    v.coeffs[lambda_idx] = -pow2(e);
                }
                gens.push(v);
            }
            IntegerLattice::new(p.group, gens)
        }
        GroupId::Quaternion8 => {
            let l = p.quaternion_l();
            let q8 = GroupId::Quaternion8;
            let mut gens = vec![crate::groups::regular(q8)];
            // sign-pattern family 2^{2l+2}(1 ± si ± sj ± sk)
            let e = 2 * l + 2;
            for own in 1..=3usize {
                let mut v = VirtualRep::zero(q8);
                v.coeffs[0] = pow2(e);
                for s in 1..=3usize {
                    v.coeffs[s] = if s == own { pow2(e) } else { -pow2(e) };
                }
                gens.push(v);
            }
            // H family 2^{h+2} + 2^{h+2} sigma_x - 2^{h+1} H
            for own in 1..=3usize {
                let mut v = VirtualRep::zero(q8);
                v.coeffs[0] = pow2(p.h + 2);
                v.coeffs[own] = pow2(p.h + 2);
                v.coeffs[4] = -pow2(p.h + 1);
                gens.push(v);
            }
            IntegerLattice::new(q8, gens)
        }
        GroupId::Trivial => unreachable!("validated at construction"),
    }
}

/// Quotient `RO(G) / span(generators)` computed by Smith normal form.
pub fn complexity(p: &HeightGroupPair) -> InvariantFactors {
    generators_lprime(p).quotient()
}

/// The closed-form complexity bound, for cross-checking against the computed
/// Smith normal form.
pub fn complexity_closed_form(p: &HeightGroupPair) -> InvariantFactors {
    let mut torsion: Vec<BigInt> = Vec::new();
    match p.group {
        GroupId::Cyclic2Power(n) => {
            let n = n as u64;
            let m = p.cyclic_m();
            for i in 1..n {
                torsion.push(pow2((1u64 << (n - i - 1)) * m + n - i));
            }
            torsion.push(pow2(p.h + n + 1));
        }
        GroupId::Quaternion8 => {
            let l = p.quaternion_l();
            torsion.push(pow2(2 * l + 2));
            torsion.push(pow2(2 * l + 3));
            torsion.push(pow2(2 * l + 3));
            torsion.push(pow2(4 * l + 6));
        }
        GroupId::Trivial => unreachable!(),
    }
    torsion.sort();
    InvariantFactors {
        free_rank: 0,
        torsion,
    }
}

/// Integer period recovered from the lattice: the least `d` with `d * 1`
/// in the span.
pub fn integer_period(p: &HeightGroupPair) -> BigInt {
    let lat = generators_lprime(p);
    lat.minimal_multiple(&VirtualRep::unit(p.group))
        .expect("full-rank lattice always has an integer multiple of the unit")
}

/// Candidate extra periodicity whose presence would halve the integer period:
/// `2^{h+n-1} - 2^{h+n-2} lambda_{n-1}` resp. `2^{h+2} - 2^h H`.
pub fn sharpness_candidate(p: &HeightGroupPair) -> VirtualRep {
    match p.group {
        GroupId::Cyclic2Power(n) => {
            let mut v = VirtualRep::zero(p.group);
            v.coeffs[0] = pow2(p.h + n as u64 - 1);
            if n == 1 {
                // 2^h - 2^{h-1} lambda_0 = 2^h (1 - sigma)
                v.coeffs[1] = -pow2(p.h);
            } else {
                v.coeffs[n as usize] = -pow2(p.h + n as u64 - 2);
            }
            v
        }
        GroupId::Quaternion8 => {
            let mut v = VirtualRep::zero(p.group);
            v.coeffs[0] = pow2(p.h + 2);
            v.coeffs[4] = -pow2(p.h);
            v
        }
        GroupId::Trivial => unreachable!(),
    }
}

/// Integer period after adjoining the sharpness candidate; equals `2^{h+n}`
/// resp. `2^{h+3}`.
pub fn sharpness_drop(p: &HeightGroupPair) -> BigInt {
    let lat = generators_lprime(p).with_extra(&sharpness_candidate(p));
    lat.minimal_multiple(&VirtualRep::unit(p.group))
        .expect("lattice has full rank")
}

/// Exact check that `sum coeffs[i] * gens[i] = target`.
pub fn verify_combination(coeffs: &[BigInt], gens: &[VirtualRep], target: &VirtualRep) -> bool {
    if coeffs.len() != gens.len() {
        return false;
    }
    let mut acc = VirtualRep::zero(target.group);
    for (c, g) in coeffs.iter().zip(gens) {
        if g.group != target.group {
            return false;
        }
        acc = acc.add(&g.scale(c));
    }
    acc == *target
}

/// The linear combination from the remark after the periodicity-generator
/// theorem, evaluating to `2^{h+n+1}` resp. `2^{h+4}` times the trivial
/// representation: returns (coefficients, generators, target).
pub fn integer_periodicity_combination(
    p: &HeightGroupPair,
) -> (Vec<BigInt>, Vec<VirtualRep>, VirtualRep) {
    let gens = generators_lprime(p).generators;
    match p.group {
        GroupId::Cyclic2Power(n) => {
            let n = n as u64;
            let m = p.cyclic_m();
            let mut coeffs = vec![pow2((1u64 << (n - 1)) * m + 1)];
            for i in 1..=n {
                coeffs.push(pow2((1u64 << (n - 1)) * m - (1u64 << (n - i)) * m));
            }
            let target = VirtualRep::unit(p.group).scale(&pow2(p.h + n + 1));
            (coeffs, gens, target)
        }
        GroupId::Quaternion8 => {
            let l = p.quaternion_l();
            // rho, the three sign generators, then only the sigma_i H-generator
            let coeffs = vec![
                pow2(4 * l + 3),
                pow2(2 * l + 1),
                pow2(2 * l + 2),
                pow2(2 * l + 2),
                BigInt::one(),
                BigInt::zero(),
                BigInt::zero(),
            ];
            let target = VirtualRep::unit(p.group).scale(&pow2(p.h + 4));
            (coeffs, gens, target)
        }
        GroupId::Trivial => unreachable!(),
    }
}

/// The two dependency identities expressing the `sigma_j` and `sigma_k`
/// H-generators in terms of the other five: returns for each one
/// (coefficients over the five independent generators, the dependent target).
pub fn quaternion_dependency_identities(
    p: &HeightGroupPair,
) -> Vec<(Vec<BigInt>, Vec<VirtualRep>, VirtualRep)> {
    assert_eq!(p.group, GroupId::Quaternion8);
    let l = p.quaternion_l();
    let gens = generators_lprime(p).generators;
    // generator order: rho, b_i, b_j, b_k, c_i, c_j, c_k
    let five = vec![
        gens[0].clone(),
        gens[1].clone(),
        gens[2].clone(),
        gens[3].clone(),
        gens[4].clone(),
    ];
    let mut out = Vec::new();
    // c_j = c_i - 2^{2l+1} b_i + 2^{2l+1} b_j
    out.push((
        vec![
            BigInt::zero(),
            -pow2(2 * l + 1),
            pow2(2 * l + 1),
            BigInt::zero(),
            BigInt::one(),
        ],
        five.clone(),
        gens[5].clone(),
    ));
    // c_k = c_i - 2^{2l+1} b_i + 2^{2l+1} b_k
    out.push((
        vec![
            BigInt::zero(),
            -pow2(2 * l + 1),
            BigInt::zero(),
            pow2(2 * l + 1),
            BigInt::one(),
        ],
        five,
        gens[6].clone(),
    ));
    out
}

/// Everything the CLI prints for one `(h, G)` pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub pair: HeightGroupPair,
    pub generators: Vec<VirtualRep>,
    pub snf_diagonal: Vec<BigInt>,
    pub complexity: InvariantFactors,
    pub integer_period: BigInt,
}

pub fn report(p: &HeightGroupPair) -> PeriodicityReport {
    let lat = generators_lprime(p);
    let dec = crate::lattice::snf(&lat.matrix());
    let n = lat.matrix().rows.min(lat.matrix().cols);
    let diag: Vec<BigInt> = (0..n)
        .map(|i| dec.d.at(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect();
    PeriodicityReport {
        pair: *p,
        generators: lat.generators.clone(),
        snf_diagonal: diag,
        complexity: lat.quotient(),
        integer_period: integer_period(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: u32) -> GroupId {
        GroupId::Cyclic2Power(n)
    }

    fn pair(h: u64, g: GroupId) -> HeightGroupPair {
        HeightGroupPair::new(h, g).unwrap()
    }

    #[test]
    fn known_periodicity_table() {
        // the twelve previously known periodicities
        let cases: Vec<(u64, FiniteSubgroupDescriptor, i64)> = vec![
            // EO_1(C_2): 8
            (1, FiniteSubgroupDescriptor::new(2, SylowType::Cyclic2Power(1)).unwrap(), 8),
            // EO_2(C_2): 16
            (2, FiniteSubgroupDescriptor::new(2, SylowType::Cyclic2Power(1)).unwrap(), 16),
            // EO_2(C_4): 32
            (2, FiniteSubgroupDescriptor::new(4, SylowType::Cyclic2Power(2)).unwrap(), 32),
            // EO_2(C_6): 48
            (2, FiniteSubgroupDescriptor::new(6, SylowType::Cyclic2Power(1)).unwrap(), 48),
            // EO_2(Q_8): 64
            (2, FiniteSubgroupDescriptor::new(8, SylowType::Quaternion8).unwrap(), 64),
            // EO_2(G_24): 192  (|G_0| = 24, Sylow Q_8)
            (2, FiniteSubgroupDescriptor::new(24, SylowType::Quaternion8).unwrap(), 192),
            // EO_2(G_48): 192  (G_0 = G_24)
            (2, FiniteSubgroupDescriptor::new(24, SylowType::Quaternion8).unwrap(), 192),
            // EO_4(C_2): 64
            (4, FiniteSubgroupDescriptor::new(2, SylowType::Cyclic2Power(1)).unwrap(), 64),
            // EO_4(C_4): 128
            (4, FiniteSubgroupDescriptor::new(4, SylowType::Cyclic2Power(2)).unwrap(), 128),
            // EO_4(C_8): 256
            (4, FiniteSubgroupDescriptor::new(8, SylowType::Cyclic2Power(3)).unwrap(), 256),
            // EO_4(C_12): 384  (|G_0| = 12, Sylow C_4)
            (4, FiniteSubgroupDescriptor::new(12, SylowType::Cyclic2Power(2)).unwrap(), 384),
        ];
        for (h, d, expect) in cases {
            assert_eq!(periodicity(h, &d), BigInt::from(expect), "P({h}, {d:?})");
        }
        // EO_h(C_2) = 2^{h+2} for a sweep of heights
        for h in 1..=16u64 {
            let d = FiniteSubgroupDescriptor::new(2, SylowType::Cyclic2Power(1)).unwrap();
            assert_eq!(periodicity(h, &d), BigInt::one() << (h + 2));
        }
        // trivial Sylow
        let d = FiniteSubgroupDescriptor::new(1, SylowType::Trivial).unwrap();
        assert_eq!(periodicity(5, &d), BigInt::from(2));
    }

    #[test]
    fn lprime_generators_match_worked_examples() {
        // (2, C_4): {rho_4, 4 - 4 sigma, 16 - 8 lambda_1}
        let p = pair(2, cyc(2));
        let lat = generators_lprime(&p);
        assert_eq!(lat.generators.len(), 3);
        assert_eq!(lat.generators[0], VirtualRep::from_i64(cyc(2), &[1, 1, 1]));
        assert_eq!(lat.generators[2], VirtualRep::from_i64(cyc(2), &[4, -4, 0]));
        assert_eq!(lat.generators[1], VirtualRep::from_i64(cyc(2), &[16, 0, -8]));
        // (h, C_2): {rho_2, 2^{h+1} - 2^{h+1} sigma}
        for h in 1..=6 {
            let p = pair(h, cyc(1));
            let lat = generators_lprime(&p);
            assert_eq!(lat.generators[0], VirtualRep::from_i64(cyc(1), &[1, 1]));
            let e = 1i64 << (h + 1);
            assert_eq!(
                lat.generators[1],
                VirtualRep::from_i64(cyc(1), &[e, -e])
            );
        }
        // (2, Q_8) contains 64 + 64 sigma_i - 32 H
        let p = pair(2, GroupId::Quaternion8);
        let lat = generators_lprime(&p);
        let want = VirtualRep::from_i64(GroupId::Quaternion8, &[16, 16, 0, 0, -8]);
        assert!(lat.generators.contains(&want), "{:?}", lat.generators);
    }

    #[test]
    fn complexity_matches_worked_examples() {
        // (2, C_4) -> Z/4 + Z/32
        let q = complexity(&pair(2, cyc(2)));
        assert_eq!(q.free_rank, 0);
        assert_eq!(q, InvariantFactors::from_torsion_i64(&[4, 32]));
        // (h, C_2) -> Z/2^{h+2}
        for h in 1..=6 {
            let q = complexity(&pair(h, cyc(1)));
            assert_eq!(q.torsion, vec![BigInt::one() << (h + 2)]);
        }
        // (2, Q_8) -> Z/4 + Z/8 + Z/8 + Z/64
        let q = complexity(&pair(2, GroupId::Quaternion8));
        assert_eq!(q, InvariantFactors::from_torsion_i64(&[4, 8, 8, 64]));
        // (4, C_8) -> Z/4 + Z/16 + Z/256 (sorted chain), n = 3, m = 1
        let q = complexity(&pair(4, cyc(3)));
        assert_eq!(q, InvariantFactors::from_torsion_i64(&[4, 16, 256]));
        // (4, C_4): Z/8 + Z/128
        let q = complexity(&pair(4, cyc(2)));
        assert_eq!(q, InvariantFactors::from_torsion_i64(&[8, 128]));
    }

    #[test]
    fn complexity_closed_form_on_grid() {
        for n in 1..=4u32 {
            for m in [1u64, 2, 3] {
                let h = (1u64 << (n - 1)) * m;
                let p = pair(h, cyc(n));
                assert_eq!(
                    complexity(&p),
                    complexity_closed_form(&p),
                    "closed form at n={n}, m={m}"
                );
            }
        }
        for l in 0..=2u64 {
            let p = pair(4 * l + 2, GroupId::Quaternion8);
            assert_eq!(complexity(&p), complexity_closed_form(&p), "Q8 at l={l}");
        }
    }

    #[test]
    fn theorem_a_recovered_from_lattice() {
        for n in 1..=4u32 {
            for m in [1u64, 2, 3] {
                let h = (1u64 << (n - 1)) * m;
                let p = pair(h, cyc(n));
                assert_eq!(
                    integer_period(&p),
                    BigInt::one() << (h + n as u64 + 1),
                    "period at n={n}, m={m}"
                );
            }
        }
        for l in 0..=2u64 {
            let h = 4 * l + 2;
            let p = pair(h, GroupId::Quaternion8);
            assert_eq!(integer_period(&p), BigInt::one() << (h + 4));
        }
    }

    #[test]
    fn sharpness_combinations() {
        // (2, C_4): adjoining the candidate halves the period to 16 = 2^{h+n}
        assert_eq!(sharpness_drop(&pair(2, cyc(2))), BigInt::from(16));
        // (2, Q_8) -> 32 = 2^{h+3}
        assert_eq!(
            sharpness_drop(&pair(2, GroupId::Quaternion8)),
            BigInt::from(32)
        );
        // (1, C_2): period halves from 8 to 4
        assert_eq!(sharpness_drop(&pair(1, cyc(1))), BigInt::from(4));
        // the grid
        for n in 1..=4u32 {
            for m in [1u64, 3] {
                let h = (1u64 << (n - 1)) * m;
                let p = pair(h, cyc(n));
                assert_eq!(sharpness_drop(&p), BigInt::one() << (h + n as u64));
            }
        }
    }

    #[test]
    fn remark_combinations_verify_exactly() {
        for n in 1..=4u32 {
            for m in [1u64, 2, 3] {
                let h = (1u64 << (n - 1)) * m;
                let p = pair(h, cyc(n));
                let (coeffs, gens, target) = integer_periodicity_combination(&p);
                assert!(
                    verify_combination(&coeffs, &gens, &target),
                    "cyclic combination fails at n={n}, m={m}"
                );
            }
        }
        for l in 0..=2u64 {
            let p = pair(4 * l + 2, GroupId::Quaternion8);
            let (coeffs, gens, target) = integer_periodicity_combination(&p);
            assert!(verify_combination(&coeffs, &gens, &target), "Q8 at l={l}");
        }
        // all-zero coefficients sum to zero
        let p = pair(2, cyc(2));
        let gens = generators_lprime(&p).generators;
        let zeros = vec![BigInt::zero(); gens.len()];
        assert!(verify_combination(
            &zeros,
            &gens,
            &VirtualRep::zero(cyc(2))
        ));
    }

    #[test]
    fn quaternion_dependencies_hold() {
        for l in 0..=2u64 {
            let p = pair(4 * l + 2, GroupId::Quaternion8);
            for (coeffs, gens, target) in quaternion_dependency_identities(&p) {
                assert!(verify_combination(&coeffs, &gens, &target), "l = {l}");
            }
        }
    }

    #[test]
    fn induction_consistency_into_lprime() {
        use crate::groups::{induce, regular, SubgroupRef};
        // Ind_{C_2}^{C_{2^n}}(rho_2) lies in the span for the cyclic grid
        for n in 2..=4u32 {
            for m in [1u64, 3] {
                let h = (1u64 << (n - 1)) * m;
                let p = pair(h, cyc(n));
                let lat = generators_lprime(&p);
                let ind = induce(
                    &regular(cyc(1)),
                    SubgroupRef::Cyclic { parent_n: n, k: 1 },
                )
                .unwrap();
                assert!(lat.contains(&ind), "rho induction at n={n}, m={m}");
            }
        }
        // the Q8 proof inductions from each C_4<x>, for each x
        for l in 0..=2u64 {
            let h = 4 * l + 2;
            let p = pair(h, GroupId::Quaternion8);
            let lat = generators_lprime(&p);
            let e = 1i64 << (2 * l + 2);
            let sub_gen = VirtualRep::from_i64(cyc(2), &[e, -e, 0]);
            for s in [
                SubgroupRef::QuaternionC4i,
                SubgroupRef::QuaternionC4j,
                SubgroupRef::QuaternionC4k,
            ] {
                let ind = induce(&sub_gen, s).unwrap();
                assert!(lat.contains(&ind), "Q8 induction at l={l}, {s:?}");
            }
        }
    }

    #[test]
    fn lattice_membership_examples() {
        // L'_{1, C_2} contains (8, 0) but not (4, 0); every lattice contains 0
        let p = pair(1, cyc(1));
        let lat = generators_lprime(&p);
        assert!(lat.contains(&VirtualRep::from_i64(cyc(1), &[8, 0])));
        assert!(!lat.contains(&VirtualRep::from_i64(cyc(1), &[4, 0])));
        assert!(lat.contains(&VirtualRep::zero(cyc(1))));
        // generators are members; minimal multiples pass membership
        for g in &lat.generators {
            assert!(lat.contains(g));
        }
        let unit = VirtualRep::unit(cyc(1));
        let d = lat.minimal_multiple(&unit).unwrap();
        assert!(lat.contains(&unit.scale(&d)));
        // minimal multiple of the unit in L'_{2,C_4} is 32; of a member, 1
        let p4 = pair(2, cyc(2));
        let lat4 = generators_lprime(&p4);
        assert_eq!(
            lat4.minimal_multiple(&VirtualRep::unit(cyc(2))).unwrap(),
            BigInt::from(32)
        );
        assert_eq!(
            lat4.minimal_multiple(&lat4.generators[0]).unwrap(),
            BigInt::one()
        );
    }
}
