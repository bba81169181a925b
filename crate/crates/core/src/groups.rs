//! Group descriptors and 2-local real representation-ring arithmetic for
//! `C_{2^n}` and `Q_8`: bases, dimensions, restriction, induction, and a
//! character-theoretic verification oracle.
//!
//! Everything works in the 2-local irreducible basis: for `C_{2^n}` this is
//! `{1, sigma, lambda_1, ..., lambda_{n-1}}` (rotations of equal 2-adic
//! valuation are identified, and `lambda_0` is normalized to `2 sigma`), for
//! `Q_8` it is `{1, sigma_i, sigma_j, sigma_k, H}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    Trivial,
    /// `C_{2^n}`, n >= 1.
    Cyclic2Power(u32),
    Quaternion8,
}

impl GroupId {
    pub fn order(self) -> u64 {
        match self {
            GroupId::Trivial => 1,
            GroupId::Cyclic2Power(n) => 1u64 << n,
            GroupId::Quaternion8 => 8,
        }
    }

    /// Number of 2-local irreducibles, i.e. the rank of the grading group.
    pub fn basis_len(self) -> usize {
        match self {
            GroupId::Trivial => 1,
            GroupId::Cyclic2Power(n) => (n as usize) + 1,
            GroupId::Quaternion8 => 5,
        }
    }

    /// Canonically ordered labels of the 2-local irreducible basis.
    pub fn basis(self) -> Vec<String> {
        match self {
            GroupId::Trivial => vec!["1".into()],
            GroupId::Cyclic2Power(n) => {
                let mut v = vec!["1".to_string(), format!("s{}", 1u64 << n)];
                for i in 1..n {
                    v.push(format!("l{i}"));
                }
                v
            }
            GroupId::Quaternion8 => vec![
                "1".into(),
                "si".into(),
                "sj".into(),
                "sk".into(),
                "H".into(),
            ],
        }
    }

    /// Dimensions of the basis irreducibles, in basis order.
    pub fn basis_dims(self) -> Vec<u32> {
        match self {
            GroupId::Trivial => vec![1],
            GroupId::Cyclic2Power(n) => {
                let mut v = vec![1, 1];
                v.extend(std::iter::repeat(2).take((n as usize).saturating_sub(1)));
                v
            }
            GroupId::Quaternion8 => vec![1, 1, 1, 1, 4],
        }
    }

    pub fn parse(s: &str) -> Result<GroupId, RepError> {
        let t = s.trim();
        match t {
            "C1" | "c1" | "e" | "trivial" => return Ok(GroupId::Trivial),
            "Q8" | "q8" => return Ok(GroupId::Quaternion8),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix('C').or_else(|| t.strip_prefix('c')) {
            let order: u64 = rest
                .parse()
                .map_err(|_| RepError::BadGroupName(s.to_string()))?;
            if order >= 2 && order.is_power_of_two() {
                return Ok(GroupId::Cyclic2Power(order.trailing_zeros()));
            }
        }
        Err(RepError::BadGroupName(s.to_string()))
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Trivial => write!(f, "C1"),
            GroupId::Cyclic2Power(n) => write!(f, "C{}", 1u64 << n),
            GroupId::Quaternion8 => write!(f, "Q8"),
        }
    }
}

/// A subgroup of a fixed parent group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubgroupRef {
    /// `C_{2^k}` inside `C_{2^n}` (k <= n); also covers the trivial group
    /// inside anything cyclic via k = 0.
    Cyclic { parent_n: u32, k: u32 },
    /// Subgroups of `Q_8`.
    QuaternionE,
    QuaternionC2,
    QuaternionC4i,
    QuaternionC4j,
    QuaternionC4k,
    QuaternionFull,
}

impl SubgroupRef {
    pub fn parent(self) -> GroupId {
        match self {
            SubgroupRef::Cyclic { parent_n, .. } => GroupId::Cyclic2Power(parent_n),
            _ => GroupId::Quaternion8,
        }
    }

    /// The subgroup as a standalone group.
    pub fn subgroup_id(self) -> GroupId {
        match self {
            SubgroupRef::Cyclic { k, .. } => {
                if k == 0 {
                    GroupId::Trivial
                } else {
                    GroupId::Cyclic2Power(k)
                }
            }
            SubgroupRef::QuaternionE => GroupId::Trivial,
            SubgroupRef::QuaternionC2 => GroupId::Cyclic2Power(1),
            SubgroupRef::QuaternionC4i | SubgroupRef::QuaternionC4j | SubgroupRef::QuaternionC4k => {
                GroupId::Cyclic2Power(2)
            }
            SubgroupRef::QuaternionFull => GroupId::Quaternion8,
        }
    }

    pub fn index(self) -> u64 {
        self.parent().order() / self.subgroup_id().order()
    }

    fn check(self) -> Result<(), RepError> {
        if let SubgroupRef::Cyclic { parent_n, k } = self {
            if k > parent_n {
                return Err(RepError::NotASubgroup);
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum RepError {
    #[error("not a subgroup of the parent group")]
    NotASubgroup,
    #[error("virtual representation belongs to {found}, expected {expected}")]
    GroupMismatch { expected: GroupId, found: GroupId },
    #[error("character decomposition residual {0} above tolerance")]
    OracleResidual(f64),
    #[error("oracle requires an actual (non-virtual) representation")]
    VirtualInput,
    #[error("unknown group name {0:?}")]
    BadGroupName(String),
    #[error("cannot parse representation expression: {0}")]
    BadRepExpr(String),
}

/// Integer coefficient vector over the group's 2-local irreducible basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VirtualRep {
    pub group: GroupId,
    pub coeffs: Vec<BigInt>,
}

impl fmt::Debug for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.group, self.to_text())
    }
}

impl VirtualRep {
    pub fn zero(group: GroupId) -> Self {
        VirtualRep {
            group,
            coeffs: vec![BigInt::zero(); group.basis_len()],
        }
    }

    pub fn from_coeffs(group: GroupId, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), group.basis_len(), "coefficient length");
        VirtualRep { group, coeffs }
    }

    pub fn from_i64(group: GroupId, coeffs: &[i64]) -> Self {
        VirtualRep::from_coeffs(group, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Basis irreducible by index.
    pub fn basis_elem(group: GroupId, idx: usize) -> Self {
        let mut v = VirtualRep::zero(group);
        v.coeffs[idx] = BigInt::one();
        v
    }

    /// The trivial one-dimensional representation.
    pub fn unit(group: GroupId) -> Self {
        VirtualRep::basis_elem(group, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Z-linear dimension; may be negative for virtual representations.
    pub fn dim(&self) -> BigInt {
        let dims = self.group.basis_dims();
        self.coeffs
            .iter()
            .zip(dims)
            .map(|(c, d)| c * BigInt::from(d))
            .sum()
    }

    pub fn add(&self, other: &VirtualRep) -> VirtualRep {
        assert_eq!(self.group, other.group);
        VirtualRep {
            group: self.group,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &VirtualRep) -> VirtualRep {
        assert_eq!(self.group, other.group);
        VirtualRep {
            group: self.group,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> VirtualRep {
        VirtualRep {
            group: self.group,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> VirtualRep {
        VirtualRep {
            group: self.group,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> VirtualRep {
        self.scale(&BigInt::from(k))
    }

    /// Text form like `1 + s4 + 2*l1`.
    pub fn to_text(&self) -> String {
        let labels = self.group.basis();
        let mut parts = Vec::new();
        for (c, label) in self.coeffs.iter().zip(&labels) {
            if c.is_zero() {
                continue;
            }
            let body = if label == "1" {
                c.to_string()
            } else if c.is_one() {
                label.clone()
            } else if (-c).is_one() {
                format!("-{label}")
            } else {
                format!("{c}*{label}")
            };
            if parts.is_empty() {
                parts.push(body);
            } else if body.starts_with('-') {
                parts.push(format!("- {}", &body[1..]));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Parse expressions like `"2 + 3*s - l1"`, `"c+a*s+b*l"` style. Accepted
    /// labels: `1` (implicit), `s`/`s4`/`si`/`sj`/`sk`, `l`/`l1`/`l2`..., `H`.
    pub fn parse(group: GroupId, text: &str) -> Result<VirtualRep, RepError> {
        let mut v = VirtualRep::zero(group);
        let cleaned = text.replace(' ', "");
        if cleaned.is_empty() {
            return Ok(v);
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(cur.clone());
                cur.clear();
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let t = term.trim_start_matches('+');
            let (coeff_str, label) = match t.find(|c: char| c.is_ascii_alphabetic()) {
                Some(pos) => (&t[..pos], &t[pos..]),
                None => (t, ""),
            };
            let coeff_str = coeff_str.trim_end_matches('*');
            let coeff: BigInt = if coeff_str.is_empty() || coeff_str == "+" {
                BigInt::one()
            } else if coeff_str == "-" {
                -BigInt::one()
            } else {
                coeff_str
                    .parse()
                    .map_err(|_| RepError::BadRepExpr(term.clone()))?
            };
            let idx = Self::label_index(group, label)
                .ok_or_else(|| RepError::BadRepExpr(term.clone()))?;
            // lambda_0 = 2 sigma normalization for the cyclic groups
            if let (GroupId::Cyclic2Power(_), "l0") = (group, label) {
                v.coeffs[1] += BigInt::from(2) * &coeff;
            } else {
                v.coeffs[idx] += coeff;
            }
        }
        Ok(v)
    }

    fn label_index(group: GroupId, label: &str) -> Option<usize> {
        if label.is_empty() || label == "1" {
            return Some(0);
        }
        match group {
            GroupId::Trivial => None,
            GroupId::Cyclic2Power(n) => {
                if label == "l0" {
                    return Some(1);
                }
                if label == "s" || label == format!("s{}", 1u64 << n) {
                    return Some(1);
                }
                if let Some(rest) = label.strip_prefix('l') {
                    if rest.is_empty() && n >= 2 {
                        return Some(2); // bare `l` means lambda_1
                    }
                    if let Ok(i) = rest.parse::<u32>() {
                        if i >= 1 && i < n {
                            return Some((i + 1) as usize);
                        }
                    }
                }
                None
            }
            GroupId::Quaternion8 => match label {
                "si" => Some(1),
                "sj" => Some(2),
                "sk" => Some(3),
                "H" | "h" => Some(4),
                _ => None,
            },
        }
    }
}

/// The 2-local regular representation.
pub fn regular(group: GroupId) -> VirtualRep {
    match group {
        GroupId::Trivial => VirtualRep::from_i64(group, &[1]),
        GroupId::Cyclic2Power(n) => {
            // 1 + sigma + lambda_1 + 2 lambda_2 + ... + 2^{n-2} lambda_{n-1}
            let mut coeffs = vec![BigInt::one(), BigInt::one()];
            for i in 1..n {
                coeffs.push(BigInt::from(1u64 << (i - 1)));
            }
            VirtualRep::from_coeffs(group, coeffs)
        }
        GroupId::Quaternion8 => VirtualRep::from_i64(group, &[1, 1, 1, 1, 1]),
    }
}

/// One cyclic index-2 restriction step `C_{2^n} -> C_{2^{n-1}}`.
fn restrict_cyclic_step(v: &VirtualRep) -> VirtualRep {
    let GroupId::Cyclic2Power(n) = v.group else {
        panic!("cyclic step on non-cyclic group")
    };
    let sub = if n == 1 {
        GroupId::Trivial
    } else {
        GroupId::Cyclic2Power(n - 1)
    };
    let mut out = VirtualRep::zero(sub);
    // 1 -> 1, sigma -> 1
    out.coeffs[0] = &v.coeffs[0] + &v.coeffs[1];
    for i in 1..n {
        let c = &v.coeffs[(i + 1) as usize];
        if i == 1 {
            // lambda_1 -> 2 sigma_{2^{n-1}}  (lambda_0 = 2 sigma)
            out.coeffs[1] += BigInt::from(2) * c;
        } else {
            // lambda_i -> lambda_{i-1}
            out.coeffs[i as usize] += c;
        }
    }
    out
}

/// One cyclic index-2 induction step `C_{2^{n-1}} -> C_{2^n}`.
fn induce_cyclic_step(v: &VirtualRep, n: u32) -> VirtualRep {
    let parent = GroupId::Cyclic2Power(n);
    let mut out = VirtualRep::zero(parent);
    match v.group {
        GroupId::Trivial => {
            assert_eq!(n, 1);
            // 1 -> 1 + sigma_2
            out.coeffs[0] = v.coeffs[0].clone();
            out.coeffs[1] = v.coeffs[0].clone();
        }
        GroupId::Cyclic2Power(m) => {
            assert_eq!(m + 1, n);
            // 1 -> 1 + sigma
            out.coeffs[0] = v.coeffs[0].clone();
            out.coeffs[1] = v.coeffs[0].clone();
            // sigma_{2^{n-1}} -> lambda_1
            out.coeffs[2] += &v.coeffs[1];
            // lambda_i -> 2 lambda_{i+1}
            for i in 1..m {
                out.coeffs[(i + 2) as usize] += BigInt::from(2) * &v.coeffs[(i + 1) as usize];
            }
        }
        GroupId::Quaternion8 => panic!("cyclic step on Q8"),
    }
    out
}

/// Restriction of representations along `H <= parent`, by the 2-local tables
/// and composition for deeper subgroups.
pub fn restrict(v: &VirtualRep, h: SubgroupRef) -> Result<VirtualRep, RepError> {
    h.check()?;
    if v.group != h.parent() {
        return Err(RepError::GroupMismatch {
            expected: h.parent(),
            found: v.group,
        });
    }
    match h {
        SubgroupRef::Cyclic { parent_n, k } => {
            let mut cur = v.clone();
            for _ in 0..(parent_n - k) {
                cur = restrict_cyclic_step(&cur);
            }
            Ok(cur)
        }
        SubgroupRef::QuaternionFull => Ok(v.clone()),
        SubgroupRef::QuaternionC4i | SubgroupRef::QuaternionC4j | SubgroupRef::QuaternionC4k => {
            // Q8 to C4<x>: sigma_x -> 1, other two signs -> sigma_4, H -> 2 lambda_1
            let own = match h {
                SubgroupRef::QuaternionC4i => 1,
                SubgroupRef::QuaternionC4j => 2,
                SubgroupRef::QuaternionC4k => 3,
                _ => unreachable!(),
            };
            let c4 = GroupId::Cyclic2Power(2);
            let mut out = VirtualRep::zero(c4);
            out.coeffs[0] = &v.coeffs[0] + &v.coeffs[own];
            for s in 1..4 {
                if s != own {
                    out.coeffs[1] += &v.coeffs[s];
                }
            }
            out.coeffs[2] += BigInt::from(2) * &v.coeffs[4];
            Ok(out)
        }
        SubgroupRef::QuaternionC2 => {
            // all signs -> 1, H -> 4 sigma_2 (the center acts by -1 on H)
            let c2 = GroupId::Cyclic2Power(1);
            let mut out = VirtualRep::zero(c2);
            out.coeffs[0] = &v.coeffs[0] + &v.coeffs[1] + &v.coeffs[2] + &v.coeffs[3];
            out.coeffs[1] = BigInt::from(4) * &v.coeffs[4];
            Ok(out)
        }
        SubgroupRef::QuaternionE => {
            let mut out = VirtualRep::zero(GroupId::Trivial);
            out.coeffs[0] = v.dim();
            Ok(out)
        }
    }
}

/// Induction of representations along `H <= parent`, by the 2-local tables
/// and transitivity for deeper subgroups.
pub fn induce(v: &VirtualRep, h: SubgroupRef) -> Result<VirtualRep, RepError> {
    h.check()?;
    if v.group != h.subgroup_id() {
        return Err(RepError::GroupMismatch {
            expected: h.subgroup_id(),
            found: v.group,
        });
    }
    match h {
        SubgroupRef::Cyclic { parent_n, k } => {
            let mut cur = v.clone();
            for step in k..parent_n {
                cur = induce_cyclic_step(&cur, step + 1);
            }
            Ok(cur)
        }
        SubgroupRef::QuaternionFull => Ok(v.clone()),
        SubgroupRef::QuaternionC4i | SubgroupRef::QuaternionC4j | SubgroupRef::QuaternionC4k => {
            // C4<x> to Q8: 1 -> 1 + sigma_x, sigma_4 -> sigma_y + sigma_z,
            // lambda_1 -> H
            let own = match h {
                SubgroupRef::QuaternionC4i => 1,
                SubgroupRef::QuaternionC4j => 2,
                SubgroupRef::QuaternionC4k => 3,
                _ => unreachable!(),
            };
            let q8 = GroupId::Quaternion8;
            let mut out = VirtualRep::zero(q8);
            out.coeffs[0] = v.coeffs[0].clone();
            out.coeffs[own] = v.coeffs[0].clone();
            for s in 1..4 {
                if s != own {
                    out.coeffs[s] += &v.coeffs[1];
                }
            }
            out.coeffs[4] += &v.coeffs[2];
            Ok(out)
        }
        SubgroupRef::QuaternionC2 => {
            // C2 to Q8: 1 -> 1 + si + sj + sk, sigma_2 -> H
            let q8 = GroupId::Quaternion8;
            let mut out = VirtualRep::zero(q8);
            out.coeffs[0] = v.coeffs[0].clone();
            out.coeffs[1] = v.coeffs[0].clone();
            out.coeffs[2] = v.coeffs[0].clone();
            out.coeffs[3] = v.coeffs[0].clone();
            out.coeffs[4] = v.coeffs[1].clone();
            Ok(out)
        }
        SubgroupRef::QuaternionE => {
            // 1 -> regular representation of Q8 (2-local form)
            Ok(regular(GroupId::Quaternion8).scale(&v.coeffs[0]))
        }
    }
}

// ---------------------------------------------------------------------------
// Character-theoretic oracle.
//
// Characters are computed in floating point, decomposed against the true real
// character table by weighted inner product, and the rotation irreducibles of
// the cyclic groups are then folded into the 2-local basis by 2-adic
// valuation. Ring arithmetic elsewhere stays exact.
// ---------------------------------------------------------------------------

/// Real character table data: conjugacy classes with sizes, irreducible
/// characters as rows, and the Frobenius-Schur weight of each irreducible
/// (dim of End over R: 1 for real type, 2 for complex pairs folded to real).
struct CharTable {
    class_sizes: Vec<f64>,
    order: f64,
    /// (character values on classes, schur weight, 2-local basis target)
    irreps: Vec<(Vec<f64>, f64, usize)>,
}

fn char_table(group: GroupId) -> CharTable {
    match group {
        GroupId::Trivial => CharTable {
            class_sizes: vec![1.0],
            order: 1.0,
            irreps: vec![(vec![1.0], 1.0, 0)],
        },
        GroupId::Cyclic2Power(n) => {
            let order = 1u64 << n;
            let classes: Vec<u64> = (0..order).collect();
            let mut irreps = Vec::new();
            // trivial and sign
            irreps.push((classes.iter().map(|_| 1.0).collect(), 1.0, 0));
            irreps.push((
                classes
                    .iter()
                    .map(|&j| if j % 2 == 0 { 1.0 } else { -1.0 })
                    .collect(),
                1.0,
                1,
            ));
            // rotations by 2 pi k / 2^n for 1 <= k < 2^{n-1}: real irreducible
            // of dim 2, folded to lambda_{n-1-v2(k)} 2-locally
            for k in 1..(order / 2) {
                let v2 = k.trailing_zeros();
                let target = (n - 1 - v2) as usize; // lambda index
                let chi: Vec<f64> = classes
                    .iter()
                    .map(|&j| {
                        2.0 * (2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / order as f64)
                            .cos()
                    })
                    .collect();
                // lambda_0 = 2 sigma: valuation n-1 folds onto the sign slot
                let slot = if target == 0 { 1 } else { target + 1 };
                irreps.push((chi, 2.0, slot));
            }
            // rotation by pi (k = 2^{n-1}) is sigma + sigma, already covered:
            // its character is handled by the sign slot through decomposition
            CharTable {
                class_sizes: vec![1.0; order as usize],
                order: order as f64,
                irreps,
            }
        }
        GroupId::Quaternion8 => CharTable {
            // classes: 1, -1, {i,-i}, {j,-j}, {k,-k}
            class_sizes: vec![1.0, 1.0, 2.0, 2.0, 2.0],
            order: 8.0,
            irreps: vec![
                (vec![1.0, 1.0, 1.0, 1.0, 1.0], 1.0, 0),
                (vec![1.0, 1.0, 1.0, -1.0, -1.0], 1.0, 1),
                (vec![1.0, 1.0, -1.0, 1.0, -1.0], 1.0, 2),
                (vec![1.0, 1.0, -1.0, -1.0, 1.0], 1.0, 3),
                // H = R + Ri + Rj + Rk, quaternionic type: as a real rep its
                // character is 4, -4, 0, 0, 0 and <chi, chi> = 4
                (vec![4.0, -4.0, 0.0, 0.0, 0.0], 4.0, 4),
            ],
        },
    }
}

/// Numeric character of an actual representation on the classes of its group.
fn character_of(v: &VirtualRep) -> Vec<f64> {
    let table = char_table(v.group);
    let n_classes = table.class_sizes.len();
    let mut chi = vec![0.0; n_classes];
    // express v in terms of table irreps: basis slot -> representative irrep
    match v.group {
        GroupId::Trivial => {
            let c: f64 = bigint_to_f64(&v.coeffs[0]);
            chi[0] = c;
        }
        GroupId::Cyclic2Power(n) => {
            let order = 1u64 << n;
            for j in 0..order as usize {
                let mut val = bigint_to_f64(&v.coeffs[0]); // trivial
                val += bigint_to_f64(&v.coeffs[1]) * if j % 2 == 0 { 1.0 } else { -1.0 };
                for i in 1..n {
                    // lambda_i = rotation by pi / 2^i = 2 pi * 2^{n-1-i} / 2^n
                    let k = 1u64 << (n - 1 - i);
                    let angle =
                        2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / (order as f64);
                    val += bigint_to_f64(&v.coeffs[(i + 1) as usize]) * 2.0 * angle.cos();
                }
                chi[j] = val;
            }
        }
        GroupId::Quaternion8 => {
            let rows = [
                [1.0, 1.0, 1.0, 1.0, 1.0],
                [1.0, 1.0, 1.0, -1.0, -1.0],
                [1.0, 1.0, -1.0, 1.0, -1.0],
                [1.0, 1.0, -1.0, -1.0, 1.0],
                [4.0, -4.0, 0.0, 0.0, 0.0],
            ];
            for cls in 0..5 {
                chi[cls] = (0..5)
                    .map(|b| bigint_to_f64(&v.coeffs[b]) * rows[b][cls])
                    .sum();
            }
        }
    }
    chi
}

fn bigint_to_f64(b: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().expect("coefficient out of f64 range")
}

/// Character of the induced representation, computed from the standard
/// induced-character formula on each class of the parent.
fn induced_character(v: &VirtualRep, h: SubgroupRef) -> Vec<f64> {
    let chi_h = character_of(v);
    let parent = h.parent();
    match (parent, h) {
        (GroupId::Cyclic2Power(n), SubgroupRef::Cyclic { k, .. }) => {
            let big = 1u64 << n;
            let small = 1u64 << k;
            let index = big / small;
            // subgroup elements: multiples of `index` in Z/big; classes of the
            // subgroup as Z/small: g^(index * t) <-> t
            (0..big)
                .map(|j| {
                    if j % index == 0 {
                        let t = (j / index) % small;
                        index as f64 * chi_h[t as usize]
                    } else {
                        0.0
                    }
                })
                .collect()
        }
        (GroupId::Quaternion8, _) => {
            // parent classes: 1, -1, {±i}, {±j}, {±k}
            match h {
                SubgroupRef::QuaternionFull => chi_h,
                SubgroupRef::QuaternionE => {
                    vec![8.0 * chi_h[0], 0.0, 0.0, 0.0, 0.0]
                }
                SubgroupRef::QuaternionC2 => {
                    // H = {1, -1} central: ind chi(1) = 4 chi(1), ind chi(-1) = 4 chi(-1)
                    vec![4.0 * chi_h[0], 4.0 * chi_h[1], 0.0, 0.0, 0.0]
                }
                SubgroupRef::Cyclic { .. } => unreachable!("parent is Q8"),
                SubgroupRef::QuaternionC4i
                | SubgroupRef::QuaternionC4j
                | SubgroupRef::QuaternionC4k => {
                    // C4 = {1, x, -1, -x} with classes of C4 = Z/4; in Q8 the
                    // class {±x} meets C4 in {x, -x} (= x, x^3)
                    let own_class = match h {
                        SubgroupRef::QuaternionC4i => 2,
                        SubgroupRef::QuaternionC4j => 3,
                        SubgroupRef::QuaternionC4k => 4,
                        _ => unreachable!(),
                    };
                    let mut out = vec![0.0; 5];
                    out[0] = 2.0 * chi_h[0];
                    out[1] = 2.0 * chi_h[2]; // -1 = x^2
                    out[own_class] = chi_h[1] + chi_h[3];
                    out
                }
            }
        }
        _ => unreachable!("induced_character: invalid pair"),
    }
}

const ORACLE_TOL: f64 = 1e-9;

/// Independent verification of the induction tables: compute the induced
/// character numerically, decompose against the parent's character table and
/// fold rotations into the 2-local basis.
pub fn frobenius_oracle(v: &VirtualRep, h: SubgroupRef) -> Result<VirtualRep, RepError> {
    h.check()?;
    if v.group != h.subgroup_id() {
        return Err(RepError::GroupMismatch {
            expected: h.subgroup_id(),
            found: v.group,
        });
    }
    if v.coeffs.iter().any(|c| c.is_negative()) {
        return Err(RepError::VirtualInput);
    }
    let parent = h.parent();
    let chi = induced_character(v, h);
    let table = char_table(parent);
    let mut out = VirtualRep::zero(parent);
    let mut residual = chi.clone();
    for (row, weight, slot) in &table.irreps {
        // multiplicity = <chi, row> / (weight), real inner product
        let mut ip = 0.0;
        for c in 0..row.len() {
            ip += table.class_sizes[c] * chi[c] * row[c];
        }
        let mult = ip / (table.order * weight);
        let rounded = mult.round();
        if (mult - rounded).abs() > ORACLE_TOL {
            return Err(RepError::OracleResidual((mult - rounded).abs()));
        }
        if rounded != 0.0 {
            out.coeffs[*slot] += BigInt::from(rounded as i64);
            for c in 0..row.len() {
                residual[c] -= rounded * row[c];
            }
        }
    }
    let worst = residual.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    if worst > ORACLE_TOL {
        return Err(RepError::OracleResidual(worst));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u32) -> GroupId {
        GroupId::Cyclic2Power(n)
    }

    fn sub_c(parent_n: u32, k: u32) -> SubgroupRef {
        SubgroupRef::Cyclic { parent_n, k }
    }

    #[test]
    fn basis_labels() {
        assert_eq!(c(3).basis(), vec!["1", "s8", "l1", "l2"]);
        assert_eq!(
            GroupId::Quaternion8.basis(),
            vec!["1", "si", "sj", "sk", "H"]
        );
        assert_eq!(GroupId::Trivial.basis(), vec!["1"]);
    }

    #[test]
    fn regular_reps() {
        assert_eq!(regular(c(2)), VirtualRep::from_i64(c(2), &[1, 1, 1]));
        assert_eq!(regular(c(1)), VirtualRep::from_i64(c(1), &[1, 1]));
        assert_eq!(
            regular(GroupId::Quaternion8),
            VirtualRep::from_i64(GroupId::Quaternion8, &[1, 1, 1, 1, 1])
        );
        // rho_8 = 1 + s + l1 + 2 l2, dim 8
        assert_eq!(regular(c(3)).dim(), BigInt::from(8));
        assert_eq!(
            VirtualRep::basis_elem(GroupId::Quaternion8, 4).dim(),
            BigInt::from(4)
        );
        assert_eq!(VirtualRep::zero(c(2)).dim(), BigInt::from(0));
    }

    #[test]
    fn restriction_table() {
        // Res^{C4}_{C2}(lambda_1) = 2 sigma_2
        let l1 = VirtualRep::basis_elem(c(2), 2);
        let r = restrict(&l1, sub_c(2, 1)).unwrap();
        assert_eq!(r, VirtualRep::from_i64(c(1), &[0, 2]));
        // Res^{Q8}_{C2}(H) = 4 sigma_2
        let h = VirtualRep::basis_elem(GroupId::Quaternion8, 4);
        let r = restrict(&h, SubgroupRef::QuaternionC2).unwrap();
        assert_eq!(r, VirtualRep::from_i64(c(1), &[0, 4]));
        // trivial restricts trivially
        let one = VirtualRep::unit(GroupId::Quaternion8);
        assert_eq!(
            restrict(&one, SubgroupRef::QuaternionC4j).unwrap(),
            VirtualRep::unit(c(2))
        );
    }

    #[test]
    fn induction_examples() {
        // Ind_{C2}^{C4}(1 + sigma_2) = rho_4
        let rho2 = regular(c(1));
        let r = induce(&rho2, sub_c(2, 1)).unwrap();
        assert_eq!(r, regular(c(2)));
        // Ind_{C4<i>}^{Q8}(2^{2l+2} - 2^{2l+2} sigma_4) with l = 0
        let v = VirtualRep::from_i64(c(2), &[4, -4, 0]);
        let r = induce(&v, SubgroupRef::QuaternionC4i).unwrap();
        assert_eq!(r, VirtualRep::from_i64(GroupId::Quaternion8, &[4, 4, -4, -4, 0]));
        // additivity: Ind(0) = 0
        let z = VirtualRep::zero(c(1));
        assert!(induce(&z, sub_c(3, 1)).unwrap().is_zero());
    }

    #[test]
    fn oracle_matches_table_examples() {
        // oracle(sigma_2, C2 -> C4) = lambda_1
        let s2 = VirtualRep::basis_elem(c(1), 1);
        let r = frobenius_oracle(&s2, sub_c(2, 1)).unwrap();
        assert_eq!(r, VirtualRep::basis_elem(c(2), 2));
        // oracle(1, C2 -> Q8) = 1 + si + sj + sk
        let one = VirtualRep::unit(c(1));
        let r = frobenius_oracle(&one, SubgroupRef::QuaternionC2).unwrap();
        assert_eq!(r, VirtualRep::from_i64(GroupId::Quaternion8, &[1, 1, 1, 1, 0]));
        // identity induction
        let w = VirtualRep::from_i64(GroupId::Quaternion8, &[1, 0, 2, 0, 1]);
        assert_eq!(frobenius_oracle(&w, SubgroupRef::QuaternionFull).unwrap(), w);
    }

    fn all_subgroups() -> Vec<SubgroupRef> {
        let mut subs = Vec::new();
        for n in 1..=4 {
            for k in 0..n {
                subs.push(sub_c(n, k));
            }
        }
        subs.extend([
            SubgroupRef::QuaternionE,
            SubgroupRef::QuaternionC2,
            SubgroupRef::QuaternionC4i,
            SubgroupRef::QuaternionC4j,
            SubgroupRef::QuaternionC4k,
        ]);
        subs
    }

    #[test]
    fn induce_agrees_with_oracle_on_all_irreducibles() {
        for h in all_subgroups() {
            let sub = h.subgroup_id();
            for idx in 0..sub.basis_len() {
                let v = VirtualRep::basis_elem(sub, idx);
                let table = induce(&v, h).unwrap();
                let oracle = frobenius_oracle(&v, h).unwrap();
                assert_eq!(table, oracle, "mismatch inducing {v:?} along {h:?}");
            }
        }
    }

    #[test]
    fn dim_multiplicativity_and_restriction() {
        for h in all_subgroups() {
            let sub = h.subgroup_id();
            let parent = h.parent();
            for idx in 0..sub.basis_len() {
                let v = VirtualRep::basis_elem(sub, idx);
                let ind = induce(&v, h).unwrap();
                assert_eq!(ind.dim(), v.dim() * BigInt::from(h.index()));
            }
            for idx in 0..parent.basis_len() {
                let w = VirtualRep::basis_elem(parent, idx);
                let res = restrict(&w, h).unwrap();
                assert_eq!(res.dim(), w.dim());
            }
        }
    }

    #[test]
    fn induction_transitivity_c2_c4_c8() {
        for idx in 0..c(1).basis_len() {
            let v = VirtualRep::basis_elem(c(1), idx);
            let step = induce(&induce(&v, sub_c(2, 1)).unwrap(), sub_c(3, 2)).unwrap();
            let direct = induce(&v, sub_c(3, 1)).unwrap();
            assert_eq!(step, direct);
        }
    }

    /// dim_R of the endomorphism algebra of the basis irreducible: 1 for the
    /// real-type one-dimensionals, 2 for the rotations, 4 for H.
    fn schur_weight(group: GroupId, idx: usize) -> i64 {
        match group {
            GroupId::Trivial => 1,
            GroupId::Cyclic2Power(_) => {
                if idx >= 2 {
                    2
                } else {
                    1
                }
            }
            GroupId::Quaternion8 => {
                if idx == 4 {
                    4
                } else {
                    1
                }
            }
        }
    }

    /// Number of honest rotation irreducibles identified into the 2-local
    /// basis slot (1 except for the deeper lambda classes).
    fn fold_count(group: GroupId, idx: usize) -> i64 {
        match group {
            GroupId::Cyclic2Power(_) if idx >= 2 => 1i64 << (idx - 2),
            _ => 1,
        }
    }

    #[test]
    fn frobenius_reciprocity_trivial_multiplicities() {
        // Hom-dimension form of reciprocity, adjusted for the 2-local basis:
        // mult of 1 in Res(W) times the fold count of W's slot equals the
        // coefficient of W in Ind(1) times dim_R End(W).
        for h in all_subgroups() {
            let parent = h.parent();
            let ind_one = induce(&VirtualRep::unit(h.subgroup_id()), h).unwrap();
            for idx in 0..parent.basis_len() {
                let w = VirtualRep::basis_elem(parent, idx);
                let res = restrict(&w, h).unwrap();
                let lhs = res.coeffs[0].clone() * BigInt::from(fold_count(parent, idx));
                let rhs = ind_one.coeffs[idx].clone() * BigInt::from(schur_weight(parent, idx));
                assert_eq!(lhs, rhs, "reciprocity at {h:?}, {w:?}");
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let v = VirtualRep::from_i64(c(2), &[10, -2, -4]);
        let s = v.to_text();
        assert_eq!(VirtualRep::parse(c(2), &s).unwrap(), v);
        let w = VirtualRep::parse(c(2), "2+3*s-l1").unwrap();
        assert_eq!(w, VirtualRep::from_i64(c(2), &[2, 3, -1]));
        // lambda_0 normalizes to 2 sigma
        let u = VirtualRep::parse(c(3), "l0").unwrap();
        assert_eq!(u, VirtualRep::from_i64(c(3), &[0, 2, 0, 0]));
    }
}
