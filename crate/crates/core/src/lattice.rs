//! Exact integer-matrix machinery: Hermite and Smith normal forms, lattice
//! membership, quotient invariant factors and minimal multiples over the free
//! abelian group underlying `RO(G)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::groups::{GroupId, VirtualRep};

/// Dense matrix with arbitrary-precision integer entries.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        IntMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c && !self.at(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[i] += q * row[j]
    fn add_row_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = self.at(j, c) * q;
            *self.at_mut(i, c) += v;
        }
    }

    /// col[i] += q * col[j]
    fn add_col_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = self.at(r, j) * q;
            *self.at_mut(r, i) += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.at(i, c).clone();
            self.set(i, c, v);
        }
    }

    /// Parse from whitespace-separated integer text: first two tokens are the
    /// dimensions, followed by row-major entries.
    pub fn parse_text(text: &str) -> Result<IntMatrix, String> {
        let mut toks = text.split_whitespace();
        let rows: usize = toks
            .next()
            .ok_or("missing row count")?
            .parse()
            .map_err(|e| format!("bad row count: {e}"))?;
        let cols: usize = toks
            .next()
            .ok_or("missing column count")?
            .parse()
            .map_err(|e| format!("bad column count: {e}"))?;
        let mut m = IntMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let t = toks.next().ok_or("not enough entries")?;
                let v: BigInt = t.parse().map_err(|e| format!("bad entry {t:?}: {e}"))?;
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Result of the Smith normal form: `u * m * v = d` with `u`, `v` unimodular
/// and `d` diagonal with a divisibility chain.
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

/// Smith normal form with transforms. Pivoting picks the smallest nonzero
/// absolute value in the working block, ties broken by lowest (row, col)
/// index, so the transforms are reproducible.
pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);

    let mut t = 0;
    while t < n {
        // find pivot: smallest |entry| among nonzero entries of the block
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..d.rows {
            for c in t..d.cols {
                if d.at(r, c).is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((r, c)),
                    Some((pr, pc)) => {
                        if d.at(r, c).abs() < d.at(pr, pc).abs() {
                            pivot = Some((r, c));
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        // clear row and column t by division-with-remainder steps
        let mut dirty = true;
        while dirty {
            dirty = false;
            for r in t + 1..d.rows {
                if d.at(r, t).is_zero() {
                    continue;
                }
                let q = -(d.at(r, t) / d.at(t, t));
                if !q.is_zero() {
                    d.add_row_mul(r, t, &q);
                    u.add_row_mul(r, t, &q);
                }
                if !d.at(r, t).is_zero() {
                    // remainder smaller than pivot: swap up and restart
                    d.swap_rows(t, r);
                    u.swap_rows(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..d.cols {
                if d.at(t, c).is_zero() {
                    continue;
                }
                let q = -(d.at(t, c) / d.at(t, t));
                if !q.is_zero() {
                    d.add_col_mul(c, t, &q);
                    v.add_col_mul(c, t, &q);
                }
                if !d.at(t, c).is_zero() {
                    d.swap_cols(t, c);
                    v.swap_cols(t, c);
                    dirty = true;
                }
            }
        }

        // divisibility: pivot must divide the rest of the block
        let mut fixed = false;
        'scan: for r in t + 1..d.rows {
            for c in t + 1..d.cols {
                if !(d.at(r, c) % d.at(t, t)).is_zero() {
                    // fold row r into row t and redo this pivot
                    d.add_row_mul(t, r, &BigInt::one());
                    u.add_row_mul(t, r, &BigInt::one());
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue;
        }

        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SmithDecomposition { d, u, v }
}

/// Row-style Hermite normal form (echelon, nonnegative pivots) together with
/// the pivot column of each nonzero row.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let mut h = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..h.cols {
        // reduce all entries below `row` in this column against each other
        loop {
            let mut best: Option<usize> = None;
            for r in row..h.rows {
                if h.at(r, col).is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(r),
                    Some(b) => {
                        if h.at(r, col).abs() < h.at(b, col).abs() {
                            Some(r)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(b) = best else { break };
            h.swap_rows(row, b);
            let mut any = false;
            for r in row + 1..h.rows {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let q = -(h.at(r, col) / h.at(row, col));
                h.add_row_mul(r, row, &q);
                if !h.at(r, col).is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if h.at(row, col).is_zero() {
            continue;
        }
        if h.at(row, col).is_negative() {
            h.negate_row(row);
        }
        // reduce the rows above to put entries in [0, pivot)
        for r in 0..row {
            let q = -(h.at(r, col).div_floor(h.at(row, col)));
            if !q.is_zero() {
                h.add_row_mul(r, row, &q);
            }
        }
        pivots.push(col);
        row += 1;
        if row == h.rows {
            break;
        }
    }
    (h, pivots)
}

/// Free rank plus the ordered torsion coefficients of a finitely generated
/// abelian group; unit factors are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantFactors {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn free(rank: usize) -> Self {
        InvariantFactors {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn from_torsion_i64(t: &[i64]) -> Self {
        InvariantFactors {
            free_rank: 0,
            torsion: t.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Total order of the torsion part (1 if torsion-free).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = (0..self.free_rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariant factors of `Z^ambient_rank / rowspan(m)`.
pub fn quotient_invariants(ambient_rank: usize, m: &IntMatrix) -> InvariantFactors {
    assert_eq!(m.cols, ambient_rank, "generators live in wrong rank");
    if m.rows == 0 {
        return InvariantFactors::free(ambient_rank);
    }
    let dec = snf(m);
    let mut torsion = Vec::new();
    let mut rank = 0;
    for i in 0..m.rows.min(m.cols) {
        let d = dec.d.at(i, i);
        if d.is_zero() {
            continue;
        }
        rank += 1;
        if !d.is_one() {
            torsion.push(d.clone());
        }
    }
    InvariantFactors {
        free_rank: ambient_rank - rank,
        torsion,
    }
}

/// A finitely generated subgroup of `RO(G)`, stored as the list of its
/// generators over the group's irreducible basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerLattice {
    pub group: GroupId,
    pub generators: Vec<VirtualRep>,
}

impl IntegerLattice {
    pub fn new(group: GroupId, generators: Vec<VirtualRep>) -> Self {
        for g in &generators {
            assert_eq!(g.group, group, "generator in wrong group");
        }
        IntegerLattice { group, generators }
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.generators.iter().map(|g| g.coeffs.clone()).collect())
    }

    pub fn with_extra(&self, v: &VirtualRep) -> IntegerLattice {
        let mut gens = self.generators.clone();
        gens.push(v.clone());
        IntegerLattice::new(self.group, gens)
    }

    /// Invariant factors of `RO(G) / span(self)`.
    pub fn quotient(&self) -> InvariantFactors {
        let rank = self.group.basis_len();
        quotient_invariants(rank, &self.matrix())
    }

    /// Membership test via Hermite normal form back-substitution.
    pub fn contains(&self, v: &VirtualRep) -> bool {
        assert_eq!(v.group, self.group);
        solve_in_rowspan(&self.matrix(), &v.coeffs).is_some()
    }

    /// Least `d > 0` with `d * v` in the span, if any multiple lies there.
    pub fn minimal_multiple(&self, v: &VirtualRep) -> Option<BigInt> {
        assert_eq!(v.group, self.group);
        minimal_multiple_in_rowspan(&self.matrix(), &v.coeffs)
    }
}

/// Solve `x * m = target` over the integers (row span membership); returns the
/// coefficient vector when solvable.
pub fn solve_in_rowspan(m: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.cols, target.len());
    // HNF of the generators with a transform: h = t * m
    let (h, t) = hnf_with_transform(m);
    let mut residue: Vec<BigInt> = target.to_vec();
    let mut combo = vec![BigInt::zero(); m.rows];
    for r in 0..h.rows {
        let Some(p) = (0..h.cols).find(|&c| !h.at(r, c).is_zero()) else {
            break;
        };
        if residue[p].is_zero() {
            continue;
        }
        let q = &residue[p] / h.at(r, p);
        if q.is_zero() {
            continue;
        }
        for c in 0..h.cols {
            let v = h.at(r, c) * &q;
            residue[c] -= v;
        }
        for k in 0..m.rows {
            let v = t.at(r, k) * &q;
            combo[k] += v;
        }
    }
    if residue.iter().all(|x| x.is_zero()) {
        Some(combo)
    } else {
        None
    }
}

fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    // run HNF on [m | I] by carrying the transform along
    let mut h = m.clone();
    let mut t = IntMatrix::identity(m.rows);
    let mut row = 0;
    for col in 0..h.cols {
        loop {
            let mut best: Option<usize> = None;
            for r in row..h.rows {
                if h.at(r, col).is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(r),
                    Some(b) => {
                        if h.at(r, col).abs() < h.at(b, col).abs() {
                            Some(r)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(b) = best else { break };
            h.swap_rows(row, b);
            t.swap_rows(row, b);
            let mut any = false;
            for r in row + 1..h.rows {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let q = -(h.at(r, col) / h.at(row, col));
                h.add_row_mul(r, row, &q);
                t.add_row_mul(r, row, &q);
                if !h.at(r, col).is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if h.at(row, col).is_zero() {
            continue;
        }
        if h.at(row, col).is_negative() {
            h.negate_row(row);
            t.negate_row(row);
        }
        for r in 0..row {
            let q = -(h.at(r, col).div_floor(h.at(row, col)));
            if !q.is_zero() {
                h.add_row_mul(r, row, &q);
                t.add_row_mul(r, row, &q);
            }
        }
        row += 1;
        if row == h.rows {
            break;
        }
    }
    (h, t)
}

/// Least `d > 0` with `d * target` in the row span of `m`, or `None`.
///
/// This is the order of the class of `target` in `Z^n / rowspan(m)`: with
/// `u m v = d` in Smith form, the span in the `v`-coordinates is spanned by
/// the diagonal rows, so the order is an lcm of diagonal quotients.
pub fn minimal_multiple_in_rowspan(m: &IntMatrix, target: &[BigInt]) -> Option<BigInt> {
    assert_eq!(m.cols, target.len());
    if target.iter().all(|x| x.is_zero()) {
        return Some(BigInt::one());
    }
    let dec = snf(m);
    // coordinates of target in the transformed basis: w = target * v
    let mut w = vec![BigInt::zero(); m.cols];
    for (c, wc) in w.iter_mut().enumerate() {
        for (r, t) in target.iter().enumerate() {
            *wc += t * dec.v.at(r, c);
        }
    }
    let rank = (0..m.rows.min(m.cols))
        .take_while(|&i| !dec.d.at(i, i).is_zero())
        .count();
    if w.iter().skip(rank).any(|x| !x.is_zero()) {
        return None;
    }
    let mut order = BigInt::one();
    for (i, wi) in w.iter().enumerate().take(rank) {
        let di = dec.d.at(i, i);
        let g = wi.gcd(di);
        let f = di / g;
        order = order.lcm(&f);
    }
    Some(order)
}

/// Homology of a chain complex at one spot: `ker(out) / im(in)` where
/// `out: C -> C'` and `in: C'' -> C` are given by matrices acting on column
/// vectors. Returns invariant factors of the homology group.
pub fn homology_at(out: &IntMatrix, inc: &IntMatrix) -> InvariantFactors {
    assert_eq!(out.cols, inc.rows, "chain groups mismatch");
    let n = out.cols;
    // kernel of `out` as rows: kernel of x |-> out * x; compute via HNF of
    // [out^T | I]: rows of I-part where out^T-part became zero.
    let ot = out.transpose(); // n x (rows of out)
    let mut aug = IntMatrix::zero(n, ot.cols + n);
    for r in 0..n {
        for c in 0..ot.cols {
            aug.set(r, c, ot.at(r, c).clone());
        }
        aug.set(r, ot.cols + r, BigInt::one());
    }
    let (h, _) = hnf(&aug);
    let mut kernel_rows: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..h.rows {
        let lead_in_m = (0..ot.cols).any(|c| !h.at(r, c).is_zero());
        let any_in_i = (ot.cols..aug.cols).any(|c| !h.at(r, c).is_zero());
        if !lead_in_m && any_in_i {
            kernel_rows.push((ot.cols..aug.cols).map(|c| h.at(r, c).clone()).collect());
        }
    }
    let kdim = kernel_rows.len();
    if kdim == 0 {
        return InvariantFactors::free(0);
    }
    let kmat = IntMatrix::from_rows(kernel_rows);
    // express each image column in the kernel basis
    let mut img_rows: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..inc.cols {
        let col: Vec<BigInt> = (0..inc.rows).map(|r| inc.at(r, c).clone()).collect();
        if col.iter().all(|x| x.is_zero()) {
            continue;
        }
        let combo = solve_in_rowspan(&kmat, &col)
            .expect("image of boundary must lie in the kernel (d^2 = 0)");
        img_rows.push(combo);
    }
    if img_rows.is_empty() {
        return InvariantFactors::free(kdim);
    }
    let imat = IntMatrix::from_rows(img_rows);
    quotient_invariants(kdim, &imat)
}
