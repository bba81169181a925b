//! Symbolic bidegree calculus for named classes (Euler classes `a_V`,
//! orientation classes `u_V`, the `vbar_l` / `tbar_1` generators, transfers
//! and norms) and the differential families they generate.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

use crate::groups::{induce, restrict, GroupId, RepError, SubgroupRef, VirtualRep};
use crate::periodicity::HeightGroupPair;

#[derive(Debug, Error)]
pub enum SymbolicError {
    #[error("representation arithmetic failed: {0}")]
    Rep(#[from] RepError),
    #[error("class has no well-defined degree: {0}")]
    NoDegree(String),
    #[error("invalid input spec: {0}")]
    BadSpec(String),
}

/// `RO(G)`-degree plus filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolDegree {
    pub ro_degree: VirtualRep,
    pub filtration: i64,
}

impl SymbolDegree {
    pub fn zero(group: GroupId) -> Self {
        SymbolDegree {
            ro_degree: VirtualRep::zero(group),
            filtration: 0,
        }
    }

    pub fn add(&self, other: &SymbolDegree) -> SymbolDegree {
        SymbolDegree {
            ro_degree: self.ro_degree.add(&other.ro_degree),
            filtration: self.filtration + other.filtration,
        }
    }
}

/// A single generator symbol at some group level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Atom {
    /// Euler class of `V`: degree `(-V, |V|)`.
    A(VirtualRep),
    /// Orientation class of orientable `V`: degree `(|V| - V, 0)`.
    U(VirtualRep),
    /// `vbar_l` at the `C_2` level, degree `((2^l - 1) rho_2, 0)`.
    VBar(u32),
    /// `tbar_1` and its conjugate, degree `(rho_2, 0)` at the `C_2` level.
    TBar1,
    GammaTBar1,
    /// `dbar = N_{C_2}^{C_4}(tbar_1)`, degree `(rho_4, 0)`.
    DBar,
}

impl Atom {
    fn degree(&self, level: GroupId) -> Result<SymbolDegree, SymbolicError> {
        match self {
            Atom::A(v) => {
                if v.group != level {
                    return Err(SymbolicError::NoDegree(format!(
                        "a-class of {:?} at level {level}",
                        v
                    )));
                }
                Ok(SymbolDegree {
                    ro_degree: v.neg(),
                    filtration: bigint_to_i64(&v.dim()),
                })
            }
            Atom::U(v) => {
                if v.group != level {
                    return Err(SymbolicError::NoDegree(format!(
                        "u-class of {:?} at level {level}",
                        v
                    )));
                }
                let mut d = VirtualRep::zero(level);
                d.coeffs[0] = v.dim();
                Ok(SymbolDegree {
                    ro_degree: d.sub(v),
                    filtration: 0,
                })
            }
            Atom::VBar(l) => {
                let c2 = GroupId::Cyclic2Power(1);
                if level != c2 {
                    return Err(SymbolicError::NoDegree("vbar lives at the C2 level".into()));
                }
                let k = (1i64 << l) - 1;
                Ok(SymbolDegree {
                    ro_degree: VirtualRep::from_i64(c2, &[k, k]),
                    filtration: 0,
                })
            }
            Atom::TBar1 | Atom::GammaTBar1 => {
                let c2 = GroupId::Cyclic2Power(1);
                if level != c2 {
                    return Err(SymbolicError::NoDegree("tbar lives at the C2 level".into()));
                }
                Ok(SymbolDegree {
                    ro_degree: VirtualRep::from_i64(c2, &[1, 1]),
                    filtration: 0,
                })
            }
            Atom::DBar => {
                let c4 = GroupId::Cyclic2Power(2);
                if level != c4 {
                    return Err(SymbolicError::NoDegree("dbar lives at the C4 level".into()));
                }
                Ok(SymbolDegree {
                    ro_degree: VirtualRep::from_i64(c4, &[1, 1, 1]),
                    filtration: 0,
                })
            }
        }
    }

    fn label(&self) -> String {
        match self {
            Atom::A(v) => format!("a[{}]", v.to_text()),
            Atom::U(v) => format!("u[{}]", v.to_text()),
            Atom::VBar(l) => format!("v{l}"),
            Atom::TBar1 => "t1".into(),
            Atom::GammaTBar1 => "gt1".into(),
            Atom::DBar => "d".into(),
        }
    }
}

fn bigint_to_i64(b: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    b.to_i64().expect("filtration out of i64 range")
}

/// One multiplicative factor of a named class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Factor {
    Pow(Atom, i64),
    /// Additive transfer wrapper around a class at a lower level.
    Transfer {
        from: SubgroupRef,
        inner: Box<NamedClass>,
    },
    /// Multiplicative norm wrapper around a class at a lower level.
    Norm {
        from: SubgroupRef,
        inner: Box<NamedClass>,
    },
}

/// A formal monomial at a fixed group level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedClass {
    pub level: GroupId,
    pub factors: Vec<Factor>,
}

impl NamedClass {
    pub fn one(level: GroupId) -> Self {
        NamedClass {
            level,
            factors: Vec::new(),
        }
    }

    pub fn atom(level: GroupId, a: Atom) -> Self {
        NamedClass {
            level,
            factors: vec![Factor::Pow(a, 1)],
        }
    }

    pub fn push(mut self, a: Atom, e: i64) -> Self {
        if e != 0 {
            self.factors.push(Factor::Pow(a, e));
        }
        self
    }

    pub fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    pub fn times(mut self, other: &NamedClass) -> Self {
        assert_eq!(self.level, other.level);
        self.factors.extend(other.factors.iter().cloned());
        self.normalize();
        self
    }

    /// Canonical form: `u`/`a` classes are split along basis lines and merged
    /// using `u_V u_W = u_{V+W}` (same for `a`), other atoms get their
    /// exponents merged, wrapped classes are normalized recursively.
    pub fn normalize(&mut self) {
        let blen = self.level.basis_len();
        let mut u_lines = vec![BigInt::zero(); blen];
        let mut a_lines = vec![BigInt::zero(); blen];
        let mut rest: Vec<Factor> = Vec::new();
        for f in self.factors.drain(..) {
            match f {
                Factor::Pow(Atom::U(v), e) => {
                    for (i, c) in v.coeffs.iter().enumerate() {
                        u_lines[i] += c * BigInt::from(e);
                    }
                }
                Factor::Pow(Atom::A(v), e) => {
                    for (i, c) in v.coeffs.iter().enumerate() {
                        a_lines[i] += c * BigInt::from(e);
                    }
                }
                Factor::Pow(a, e) => {
                    if let Some(Factor::Pow(_, e0)) = rest
                        .iter_mut()
                        .find(|g| matches!(g, Factor::Pow(b, _) if *b == a))
                    {
                        *e0 += e;
                    } else {
                        rest.push(Factor::Pow(a, e));
                    }
                }
                Factor::Transfer { from, mut inner } => {
                    inner.normalize();
                    rest.push(Factor::Transfer { from, inner });
                }
                Factor::Norm { from, mut inner } => {
                    inner.normalize();
                    rest.push(Factor::Norm { from, inner });
                }
            }
        }
        rest.retain(|f| !matches!(f, Factor::Pow(_, 0)));
        // a on the trivial line is kept verbatim; u on the trivial line is 1
        for (i, t) in a_lines.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            let mut w = VirtualRep::zero(self.level);
            if t.sign() == num_bigint::Sign::Minus {
                w.coeffs[i] = -t.clone();
                rest.push(Factor::Pow(Atom::A(w), -1));
            } else {
                w.coeffs[i] = t.clone();
                rest.push(Factor::Pow(Atom::A(w), 1));
            }
        }
        for (i, t) in u_lines.iter().enumerate().skip(1) {
            if t.is_zero() {
                continue;
            }
            let mut w = VirtualRep::zero(self.level);
            if t.sign() == num_bigint::Sign::Minus {
                w.coeffs[i] = -t.clone();
                rest.push(Factor::Pow(Atom::U(w), -1));
            } else {
                w.coeffs[i] = t.clone();
                rest.push(Factor::Pow(Atom::U(w), 1));
            }
        }
        self.factors = rest;
    }

    /// Whether the class contains an additive transfer wrapper (in which case
    /// its degree is only pinned after restriction).
    pub fn has_transfer(&self) -> bool {
        self.factors
            .iter()
            .any(|f| matches!(f, Factor::Transfer { .. }))
    }

    /// Sum of the factor degrees; errors on transfer wrappers.
    pub fn degree(&self) -> Result<SymbolDegree, SymbolicError> {
        let mut acc = SymbolDegree::zero(self.level);
        for f in &self.factors {
            match f {
                Factor::Pow(a, e) => {
                    let d = a.degree(self.level)?;
                    acc = acc.add(&SymbolDegree {
                        ro_degree: d.ro_degree.scale(&BigInt::from(*e)),
                        filtration: d.filtration * e,
                    });
                }
                Factor::Transfer { .. } => {
                    return Err(SymbolicError::NoDegree(
                        "transfer-wrapped factor has no canonical G-degree".into(),
                    ))
                }
                Factor::Norm { from, inner } => {
                    let d = inner.degree()?;
                    // norm multiplies degrees by induction and filtration by
                    // the index
                    let ind = induce(&d.ro_degree, *from)?;
                    acc = acc.add(&SymbolDegree {
                        ro_degree: ind,
                        filtration: d.filtration * from.index() as i64,
                    });
                }
            }
        }
        Ok(acc)
    }

    /// Degree split: the degree of the non-transfer part, plus the transfer
    /// factor when present (at most one is supported).
    fn split_transfer(&self) -> Result<(SymbolDegree, Option<(&SubgroupRef, &NamedClass)>), SymbolicError> {
        let mut acc = SymbolDegree::zero(self.level);
        let mut tr = None;
        for f in &self.factors {
            match f {
                Factor::Transfer { from, inner } => {
                    if tr.is_some() {
                        return Err(SymbolicError::NoDegree(
                            "more than one transfer factor".into(),
                        ));
                    }
                    tr = Some((from, inner.as_ref()));
                }
                Factor::Pow(a, e) => {
                    let d = a.degree(self.level)?;
                    acc = acc.add(&SymbolDegree {
                        ro_degree: d.ro_degree.scale(&BigInt::from(*e)),
                        filtration: d.filtration * e,
                    });
                }
                Factor::Norm { from, inner } => {
                    let d = inner.degree()?;
                    let ind = induce(&d.ro_degree, *from)?;
                    acc = acc.add(&SymbolDegree {
                        ro_degree: ind,
                        filtration: d.filtration * from.index() as i64,
                    });
                }
            }
        }
        Ok((acc, tr))
    }

    pub fn to_label(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|f| match f {
                Factor::Pow(a, 1) => a.label(),
                Factor::Pow(a, e) => format!("{}^{}", a.label(), e),
                Factor::Transfer { inner, .. } => format!("tr({})", inner.to_label()),
                Factor::Norm { inner, .. } => format!("N({})", inner.to_label()),
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_label())
    }
}

/// A differential `d_page(source) = coefficient * target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialSpec {
    pub page: i64,
    pub source: NamedClass,
    pub coefficient: BigInt,
    pub target: NamedClass,
}

impl fmt::Display for DifferentialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient == BigInt::from(1) {
            write!(f, "d{}({}) = {}", self.page, self.source, self.target)
        } else {
            write!(
                f,
                "d{}({}) = {}*{}",
                self.page, self.source, self.coefficient, self.target
            )
        }
    }
}

/// Bidegree bookkeeping: the target must sit at
/// `(source RO-degree) - 1` in the trivial slot with filtration raised by the
/// page. Transfer-wrapped targets are checked after restriction to the inner
/// level.
pub fn validate(d: &DifferentialSpec) -> bool {
    let Ok(src) = d.source.degree() else {
        return false;
    };
    let mut want = src.ro_degree.clone();
    want.coeffs[0] -= 1;
    let want_fil = src.filtration + d.page;

    let Ok((outer, tr)) = d.target.split_transfer() else {
        return false;
    };
    match tr {
        None => {
            let Ok(t) = d.target.degree() else {
                return false;
            };
            t.ro_degree == want && t.filtration == want_fil
        }
        Some((from, inner)) => {
            let Ok(inner_deg) = inner.degree() else {
                return false;
            };
            // remaining G-degree that the transfer must carry
            let rem = want.sub(&outer.ro_degree);
            let rem_fil = want_fil - outer.filtration;
            let Ok(res) = restrict(&rem, *from) else {
                return false;
            };
            res == inner_deg.ro_degree && rem_fil == inner_deg.filtration
        }
    }
}

/// The differential family on orientation classes: one spec per
/// `1 <= l <= h`.
///
/// Cyclic level (`n >= 2`):
/// `d_{2^{l+1}-1}(u_{2^{l+n-2} lambda_{n-1}})
///    = tr(vbar_l a_{(2^{l+1}-1) sigma_2} u_{(2^{l+n-1}-2^l) sigma_2}) u_{W_l}`
/// with `W_l = 2^l sigma + 2^l lambda_1 + ... + 2^{l+n-3} lambda_{n-2}`.
/// At `n = 1` the transfer is the identity and the family degenerates to
/// `d(u_{2^l sigma_2}) = vbar_l a_{(2^{l+1}-1) sigma_2}`.
///
/// Quaternion level: `d_{2^{l+1}-1}(u_{2^l H})
///    = tr(vbar_l a_{(2^{l+1}-1) sigma_2} u_{3*2^l sigma_2})
///      u_{2^l si} u_{2^l sj} u_{2^l sk}`.
pub fn theorem_d_family(p: &HeightGroupPair) -> Result<Vec<DifferentialSpec>, SymbolicError> {
    let c2 = GroupId::Cyclic2Power(1);
    let mut out = Vec::new();
    for l in 1..=p.h {
        let page = (1i64 << (l + 1)) - 1;
        let spec = match p.group {
            GroupId::Cyclic2Power(1) => {
                let src =
                    NamedClass::one(c2).push(Atom::U(VirtualRep::from_i64(c2, &[0, 1i64 << l])), 1);
                let tgt = NamedClass::one(c2)
                    .push(Atom::VBar(l as u32), 1)
                    .push(Atom::A(VirtualRep::from_i64(c2, &[0, (1i64 << (l + 1)) - 1])), 1);
                DifferentialSpec {
                    page,
                    source: src,
                    coefficient: BigInt::from(1),
                    target: tgt,
                }
            }
            GroupId::Cyclic2Power(n) => {
                let g = p.group;
                let mut top = VirtualRep::zero(g);
                top.coeffs[n as usize] = BigInt::from(1i64 << (l + n as u64 - 2));
                let src = NamedClass::one(g).push(Atom::U(top), 1);
                let inner = NamedClass::one(c2)
                    .push(Atom::VBar(l as u32), 1)
                    .push(Atom::A(VirtualRep::from_i64(c2, &[0, (1i64 << (l + 1)) - 1])), 1)
                    .push(
                        Atom::U(VirtualRep::from_i64(
                            c2,
                            &[0, (1i64 << (l + n as u64 - 1)) - (1i64 << l)],
                        )),
                        1,
                    );
                let mut tgt = NamedClass::one(g);
                tgt.factors.push(Factor::Transfer {
                    from: SubgroupRef::Cyclic { parent_n: n, k: 1 },
                    inner: Box::new(inner),
                });
                // u_{W_l}: one u-factor per summand of W_l
                let mut w = VirtualRep::zero(g);
                w.coeffs[1] = BigInt::from(1i64 << l);
                if !w.coeffs[1].is_zero() {
                    tgt = tgt.push(Atom::U(w), 1);
                }
                for j in 1..=(n as u64).saturating_sub(2) {
                    let mut wj = VirtualRep::zero(g);
                    wj.coeffs[(j + 1) as usize] = BigInt::from(1i64 << (l + j - 1));
                    tgt = tgt.push(Atom::U(wj), 1);
                }
                DifferentialSpec {
                    page,
                    source: src,
                    coefficient: BigInt::from(1),
                    target: tgt,
                }
            }
            GroupId::Quaternion8 => {
                let q8 = GroupId::Quaternion8;
                let mut hrep = VirtualRep::zero(q8);
                hrep.coeffs[4] = BigInt::from(1i64 << l);
                let src = NamedClass::one(q8).push(Atom::U(hrep), 1);
                let inner = NamedClass::one(c2)
                    .push(Atom::VBar(l as u32), 1)
                    .push(Atom::A(VirtualRep::from_i64(c2, &[0, (1i64 << (l + 1)) - 1])), 1)
                    .push(Atom::U(VirtualRep::from_i64(c2, &[0, 3 * (1i64 << l)])), 1);
                let mut tgt = NamedClass::one(q8);
                tgt.factors.push(Factor::Transfer {
                    from: SubgroupRef::QuaternionC2,
                    inner: Box::new(inner),
                });
                for s in 1..=3usize {
                    let mut sig = VirtualRep::zero(q8);
                    sig.coeffs[s] = BigInt::from(1i64 << l);
                    tgt = tgt.push(Atom::U(sig), 1);
                }
                DifferentialSpec {
                    page,
                    source: src,
                    coefficient: BigInt::from(1),
                    target: tgt,
                }
            }
            GroupId::Trivial => {
                return Err(SymbolicError::BadSpec("trivial group has no family".into()))
            }
        };
        let spec = DifferentialSpec {
            page: spec.page,
            source: spec.source.normalized(),
            coefficient: spec.coefficient,
            target: spec.target.normalized(),
        };
        out.push(spec);
    }
    Ok(out)
}

/// Expand a norm of a product of `u`/`a` classes into `u`/`a` classes at the
/// parent level: `N(u_V) = u_{Ind V} / u_{Ind |V|}` and `N(a_V) = a_{Ind V}`;
/// anything else stays wrapped.
fn norm_factor(f: &Factor, from: SubgroupRef, level: GroupId) -> Result<Vec<Factor>, SymbolicError> {
    match f {
        Factor::Pow(Atom::U(v), e) => {
            let ind = induce(v, from)?;
            // Ind(|V| * 1) = |V| * Ind(1); u of a trivial summand is 1, so the
            // denominator is u of the nontrivial part of |V| * Ind(1)
            let mut triv = VirtualRep::zero(v.group);
            triv.coeffs[0] = v.dim();
            let ind_triv = induce(&triv, from)?;
            let mut fs = vec![Factor::Pow(Atom::U(ind), *e)];
            // strip the trivial coordinate, split the rest into basis lines
            for idx in 1..level.basis_len() {
                let c = &ind_triv.coeffs[idx];
                if c.is_zero() {
                    continue;
                }
                let mut w = VirtualRep::zero(level);
                w.coeffs[idx] = c.clone();
                fs.push(Factor::Pow(Atom::U(w), -e));
            }
            Ok(fs)
        }
        Factor::Pow(Atom::A(v), e) => {
            let ind = induce(v, from)?;
            Ok(vec![Factor::Pow(Atom::A(ind), *e)])
        }
        Factor::Pow(atom, e) => {
            if *e == 1 {
                Ok(vec![Factor::Norm {
                    from,
                    inner: Box::new(NamedClass::atom(from.subgroup_id(), atom.clone())),
                }])
            } else {
                let mut inner = NamedClass::one(from.subgroup_id());
                inner = inner.push(atom.clone(), *e);
                Ok(vec![Factor::Norm {
                    from,
                    inner: Box::new(inner),
                }])
            }
        }
        other => Err(SymbolicError::BadSpec(format!(
            "cannot norm factor {other:?}"
        ))),
    }
}

/// Norm of a whole class along `from`, expanding `u`/`a` factors.
pub fn norm_class(x: &NamedClass, from: SubgroupRef) -> Result<NamedClass, SymbolicError> {
    let level = from.parent();
    let mut out = NamedClass::one(level);
    for f in &x.factors {
        out.factors.extend(norm_factor(f, from, level)?);
    }
    out.normalize();
    Ok(out)
}

/// The norm differential: from `d_r(x) = y` at the subgroup level to
/// `d_{k(r-1)+1}(N(x) a_{rhobar}) = N(y)` at the parent level, with
/// `rhobar = Ind(1) - 1`. Denominator orientation classes produced by the
/// norm are cleared by multiplying both sides.
pub fn hhr_norm_differential(
    d: &DifferentialSpec,
    from: SubgroupRef,
) -> Result<DifferentialSpec, SymbolicError> {
    if d.source.level != from.subgroup_id() {
        return Err(SymbolicError::BadSpec(format!(
            "spec at level {}, expected {}",
            d.source.level,
            from.subgroup_id()
        )));
    }
    let k = from.index() as i64;
    let level = from.parent();
    let page = k * (d.page - 1) + 1;
    let mut source = norm_class(&d.source, from)?;
    let mut target = norm_class(&d.target, from)?;
    // a_{rhobar}: rhobar = Ind(1) - 1, one a-factor per nontrivial basis line
    let ind_one = induce(&VirtualRep::unit(from.subgroup_id()), from)?;
    for idx in 1..level.basis_len() {
        let c = &ind_one.coeffs[idx];
        if c.is_zero() {
            continue;
        }
        let mut w = VirtualRep::zero(level);
        w.coeffs[idx] = c.clone();
        source = source.push(Atom::A(w), 1);
    }
    // clear denominators: move negative u-powers to the other side
    let mut src_clear = Vec::new();
    for f in source.factors.drain(..) {
        match f {
            Factor::Pow(a @ Atom::U(_), e) if e < 0 => {
                target = target.push(a, -e);
            }
            other => src_clear.push(other),
        }
    }
    source.factors = src_clear;
    source.normalize();
    let mut tgt_clear = Vec::new();
    for f in target.factors.drain(..) {
        match f {
            Factor::Pow(a @ Atom::U(_), e) if e < 0 => {
                source = source.push(a, -e);
            }
            other => tgt_clear.push(other),
        }
    }
    target.factors = tgt_clear;
    source.normalize();
    target.normalize();
    Ok(DifferentialSpec {
        page,
        source,
        coefficient: d.coefficient.clone(),
        target,
    })
}

/// The norm-transfer differential for central `H`: `d_r(N(x)) = tr(y x^{k-1})`
/// on the same page. `k = 1` returns the input unchanged.
pub fn norm_transfer_differential(
    d: &DifferentialSpec,
    from: SubgroupRef,
) -> Result<DifferentialSpec, SymbolicError> {
    if d.source.level != from.subgroup_id() {
        return Err(SymbolicError::BadSpec(format!(
            "spec at level {}, expected {}",
            d.source.level,
            from.subgroup_id()
        )));
    }
    let central = match from {
        SubgroupRef::Cyclic { .. } => true, // cyclic groups are abelian
        SubgroupRef::QuaternionC2 | SubgroupRef::QuaternionFull | SubgroupRef::QuaternionE => true,
        SubgroupRef::QuaternionC4i | SubgroupRef::QuaternionC4j | SubgroupRef::QuaternionC4k => {
            false
        }
    };
    if !central {
        return Err(SymbolicError::BadSpec(
            "norm-transfer formula implemented for central subgroups only".into(),
        ));
    }
    let k = from.index() as i64;
    if k == 1 {
        return Ok(d.clone());
    }
    let level = from.parent();
    let source = norm_class(&d.source, from)?;
    // inner = y * x^{k-1}
    let mut inner = d.target.clone();
    for f in &d.source.factors {
        if let Factor::Pow(a, e) = f {
            inner = inner.push(a.clone(), e * (k - 1));
        } else {
            return Err(SymbolicError::BadSpec(
                "norm-transfer source must be a plain monomial".into(),
            ));
        }
    }
    inner.normalize();
    let mut target = NamedClass::one(level);
    target.factors.push(Factor::Transfer {
        from,
        inner: Box::new(inner),
    });
    // clear norm denominators into the target
    let mut source = source;
    let mut src_clear = Vec::new();
    let mut moved: Vec<Factor> = Vec::new();
    for f in source.factors.drain(..) {
        match f {
            Factor::Pow(a @ Atom::U(_), e) if e < 0 => moved.push(Factor::Pow(a, -e)),
            other => src_clear.push(other),
        }
    }
    source.factors = src_clear;
    source.normalize();
    target.factors.extend(moved);
    target.normalize();
    Ok(DifferentialSpec {
        page: d.page,
        source,
        coefficient: d.coefficient.clone(),
        target,
    })
}

/// The height-h `C_2`-level seed family `d_{2^{l+1}-1}(u_{2^l sigma_2}) =
/// vbar_l a_{(2^{l+1}-1) sigma_2}`.
pub fn c2_seed_family(h: u64) -> Vec<DifferentialSpec> {
    let p = HeightGroupPair::new(h, GroupId::Cyclic2Power(1)).expect("C2 pair");
    theorem_d_family(&p).expect("C2 family")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> GroupId {
        GroupId::Cyclic2Power(1)
    }
    fn c4() -> GroupId {
        GroupId::Cyclic2Power(2)
    }

    #[test]
    fn degrees_of_basic_symbols() {
        // u_{2 sigma_2} -> (2 - 2 sigma_2, 0)
        let u = NamedClass::one(c2()).push(Atom::U(VirtualRep::from_i64(c2(), &[0, 2])), 1);
        let d = u.degree().unwrap();
        assert_eq!(d.ro_degree, VirtualRep::from_i64(c2(), &[2, -2]));
        assert_eq!(d.filtration, 0);
        // a_{7 sigma_2} -> (-7 sigma_2, 7)
        let a = NamedClass::one(c2()).push(Atom::A(VirtualRep::from_i64(c2(), &[0, 7])), 1);
        let d = a.degree().unwrap();
        assert_eq!(d.ro_degree, VirtualRep::from_i64(c2(), &[0, -7]));
        assert_eq!(d.filtration, 7);
        // vbar_2 a_{7s} u_{4s} -> (7 - 8 sigma_2, 7)
        let m = NamedClass::one(c2())
            .push(Atom::VBar(2), 1)
            .push(Atom::A(VirtualRep::from_i64(c2(), &[0, 7])), 1)
            .push(Atom::U(VirtualRep::from_i64(c2(), &[0, 4])), 1);
        let d = m.degree().unwrap();
        assert_eq!(d.ro_degree, VirtualRep::from_i64(c2(), &[7, -8]));
        assert_eq!(d.filtration, 7);
    }

    #[test]
    fn theorem_d_c2_level() {
        // (1, C_2), l = 1: d_3(u_{2 sigma}) = vbar_1 a_{3 sigma}
        let p = HeightGroupPair::new(1, c2()).unwrap();
        let fam = theorem_d_family(&p).unwrap();
        assert_eq!(fam.len(), 1);
        let d = &fam[0];
        assert_eq!(d.page, 3);
        assert_eq!(
            d.source,
            NamedClass::one(c2())
                .push(Atom::U(VirtualRep::from_i64(c2(), &[0, 2])), 1)
                .normalized()
        );
        assert_eq!(
            d.target,
            NamedClass::one(c2())
                .push(Atom::VBar(1), 1)
                .push(Atom::A(VirtualRep::from_i64(c2(), &[0, 3])), 1)
                .normalized()
        );
        assert!(validate(d));
    }

    #[test]
    fn theorem_d_exam_dseven_c4() {
        // (2, C_4), l = 2: d_7(u_{4 lambda_1}) = tr(vbar_2 a_{7s} u_{4s}) u_{4 sigma_4}
        let p = HeightGroupPair::new(2, c4()).unwrap();
        let fam = theorem_d_family(&p).unwrap();
        assert_eq!(fam.len(), 2);
        let d7 = &fam[1];
        assert_eq!(d7.page, 7);
        assert_eq!(
            d7.source,
            NamedClass::one(c4())
                .push(Atom::U(VirtualRep::from_i64(c4(), &[0, 0, 4])), 1)
                .normalized()
        );
        // target: transfer factor + u_{4 sigma_4}
        assert!(d7.target.has_transfer());
        let has_u4s = d7.target.factors.iter().any(|f| {
            matches!(f, Factor::Pow(Atom::U(v), 1) if *v == VirtualRep::from_i64(c4(), &[0, 4, 0]))
        });
        assert!(has_u4s, "{d7}");
        let tr_ok = d7.target.factors.iter().any(|f| match f {
            Factor::Transfer { inner, .. } => {
                **inner
                    == NamedClass::one(c2())
                        .push(Atom::VBar(2), 1)
                        .push(Atom::A(VirtualRep::from_i64(c2(), &[0, 7])), 1)
                        .push(Atom::U(VirtualRep::from_i64(c2(), &[0, 4])), 1)
                        .normalized()
            }
            _ => false,
        });
        assert!(tr_ok, "{d7}");
        assert!(validate(d7));
    }

    #[test]
    fn theorem_d_exam_dseven_q8() {
        // (2, Q_8), l = 2: d_7(u_{4H}) = tr(vbar_2 u_{12s} a_{7s}) u_{4si}u_{4sj}u_{4sk}
        let p = HeightGroupPair::new(2, GroupId::Quaternion8).unwrap();
        let fam = theorem_d_family(&p).unwrap();
        let d7 = &fam[1];
        assert_eq!(d7.page, 7);
        let q8 = GroupId::Quaternion8;
        assert_eq!(
            d7.source,
            NamedClass::one(q8)
                .push(Atom::U(VirtualRep::from_i64(q8, &[0, 0, 0, 0, 4])), 1)
                .normalized()
        );
        let tr_ok = d7.target.factors.iter().any(|f| match f {
            Factor::Transfer { inner, .. } => {
                **inner
                    == NamedClass::one(c2())
                        .push(Atom::VBar(2), 1)
                        .push(Atom::A(VirtualRep::from_i64(c2(), &[0, 7])), 1)
                        .push(Atom::U(VirtualRep::from_i64(c2(), &[0, 12])), 1)
                        .normalized()
            }
            _ => false,
        });
        assert!(tr_ok, "{d7}");
        assert!(validate(d7));
    }

    #[test]
    fn families_validate_across_grid() {
        for n in 1..=4u32 {
            for m in [1u64, 2, 3] {
                let h = (1u64 << (n - 1)) * m;
                if h > 8 {
                    continue;
                }
                let p = HeightGroupPair::new(h, GroupId::Cyclic2Power(n)).unwrap();
                for d in theorem_d_family(&p).unwrap() {
                    assert!(validate(&d), "invalid member {d} at n={n}, h={h}");
                }
            }
        }
        for h in [2u64, 6] {
            let p = HeightGroupPair::new(h, GroupId::Quaternion8).unwrap();
            for d in theorem_d_family(&p).unwrap() {
                assert!(validate(&d), "invalid member {d} at Q8, h={h}");
            }
        }
    }

    #[test]
    fn hhr_norm_reproduces_d13() {
        // d_7(u_{4 sigma_2}) = vbar_2 a_{7 sigma_2} at C_2, normed to C_4:
        // d_13(u_{4 lambda_1} a_{sigma_4}) = N(vbar_2) u_{4 sigma_4} a_{7 lambda_1}
        let d7 = DifferentialSpec {
            page: 7,
            source: NamedClass::one(c2()).push(Atom::U(VirtualRep::from_i64(c2(), &[0, 4])), 1),
            coefficient: BigInt::from(1),
            target: NamedClass::one(c2())
                .push(Atom::VBar(2), 1)
                .push(Atom::A(VirtualRep::from_i64(c2(), &[0, 7])), 1),
        };
        let from = SubgroupRef::Cyclic { parent_n: 2, k: 1 };
        let d13 = hhr_norm_differential(&d7, from).unwrap();
        assert_eq!(d13.page, 13);
        // source: u_{4 lambda_1} a_{sigma_4}
        let mut want_src = NamedClass::one(c4())
            .push(Atom::U(VirtualRep::from_i64(c4(), &[0, 0, 4])), 1)
            .push(Atom::A(VirtualRep::from_i64(c4(), &[0, 1, 0])), 1);
        want_src.normalize();
        assert_eq!(d13.source, want_src, "got {d13}");
        // target: N(vbar_2) a_{7 lambda_1} u_{4 sigma_4}
        let has_norm_vbar = d13.target.factors.iter().any(|f| match f {
            Factor::Norm { inner, .. } => {
                **inner == NamedClass::one(c2()).push(Atom::VBar(2), 1)
            }
            _ => false,
        });
        let has_a7l = d13.target.factors.iter().any(|f| {
            matches!(f, Factor::Pow(Atom::A(v), 1) if *v == VirtualRep::from_i64(c4(), &[0, 0, 7]))
        });
        let has_u4s = d13.target.factors.iter().any(|f| {
            matches!(f, Factor::Pow(Atom::U(v), 1) if *v == VirtualRep::from_i64(c4(), &[0, 4, 0]))
        });
        assert!(has_norm_vbar && has_a7l && has_u4s, "got {d13}");
        assert!(validate(&d13));
        // page law sanity: k = 1 keeps the page
        let same = hhr_norm_differential(&d7, SubgroupRef::Cyclic { parent_n: 1, k: 1 }).unwrap();
        assert_eq!(same.page, 7);
    }

    #[test]
    fn hhr_norm_page_law_small() {
        // d_3(u_{2s}) = vbar_1 a_{3s}: C_2 -> C_4 gives page 2*2+1 = 5
        let d3 = &c2_seed_family(1)[0];
        let from = SubgroupRef::Cyclic { parent_n: 2, k: 1 };
        let d5 = hhr_norm_differential(d3, from).unwrap();
        assert_eq!(d5.page, 5);
        assert!(validate(&d5));
    }

    #[test]
    fn norm_transfer_rebuilds_theorem_d() {
        // applying the central norm-transfer formula to the C_2 seeds gives
        // the cyclic family (after the same denominator clearing)
        for n in 2..=4u32 {
            let h = 1u64 << (n - 1);
            let p = HeightGroupPair::new(h, GroupId::Cyclic2Power(n)).unwrap();
            let want = theorem_d_family(&p).unwrap();
            let from = SubgroupRef::Cyclic { parent_n: n, k: 1 };
            for (l, seed) in c2_seed_family(h).iter().enumerate() {
                let got = norm_transfer_differential(seed, from).unwrap();
                assert_eq!(got.page, want[l].page);
                assert_eq!(got.source, want[l].source, "source at n={n}, l={}", l + 1);
                assert_eq!(got.target, want[l].target, "target at n={n}, l={}", l + 1);
                assert!(validate(&got));
            }
        }
        // Q8: same up to the u_{si}u_{sj}u_{sk} regrouping, so compare degrees
        let p = HeightGroupPair::new(2, GroupId::Quaternion8).unwrap();
        let want = theorem_d_family(&p).unwrap();
        for (l, seed) in c2_seed_family(2).iter().enumerate() {
            let got = norm_transfer_differential(seed, SubgroupRef::QuaternionC2).unwrap();
            assert_eq!(got.page, want[l].page);
            assert_eq!(
                got.source.degree().unwrap(),
                want[l].source.degree().unwrap()
            );
            assert!(validate(&got), "Q8 norm-transfer l={}", l + 1);
        }
        // k = 1: differential passes through unchanged
        let seed = &c2_seed_family(1)[0];
        let same =
            norm_transfer_differential(seed, SubgroupRef::Cyclic { parent_n: 1, k: 1 }).unwrap();
        assert_eq!(&same, seed);
    }

    #[test]
    fn validate_rejects_wrong_filtration() {
        let mut d = c2_seed_family(1)[0].clone();
        d.page += 1;
        assert!(!validate(&d));
    }

    #[test]
    fn norm_of_u_degree_identity() {
        // degree(N(u_V)) = degree(u_{Ind V}) - degree(u_{Ind |V|})
        let from = SubgroupRef::Cyclic { parent_n: 2, k: 1 };
        for v in [
            VirtualRep::from_i64(c2(), &[0, 2]),
            VirtualRep::from_i64(c2(), &[2, 4]),
        ] {
            let n = norm_class(
                &NamedClass::one(c2()).push(Atom::U(v.clone()), 1),
                from,
            )
            .unwrap();
            let got = n.degree().unwrap();
            let ind_v = induce(&v, from).unwrap();
            let mut triv = VirtualRep::zero(c2());
            triv.coeffs[0] = v.dim();
            let ind_triv = induce(&triv, from).unwrap();
            let u1 = NamedClass::one(c4()).push(Atom::U(ind_v), 1);
            let u2 = NamedClass::one(c4()).push(Atom::U(ind_triv), 1);
            let want_ro = u1
                .degree()
                .unwrap()
                .ro_degree
                .sub(&u2.degree().unwrap().ro_degree);
            assert_eq!(got.ro_degree, want_ro);
            assert_eq!(got.filtration, 0);
        }
    }
}
