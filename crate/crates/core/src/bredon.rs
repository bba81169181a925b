//! Fixed-level Bredon homology of representation spheres for `C_2` and `C_4`
//! with constant Mackey functor `Z` coefficients.
//!
//! Spheres are built as smash products of three elementary based cell
//! structures (basepoint cell dropped):
//!
//! * `S^sigma` for `C_4`: one fixed 0-cell and one `C_4/C_2` 1-cell,
//! * `S^lambda` for `C_4`: one fixed 0-cell, one free 1-cell, one free 2-cell,
//! * `S^sigma` for `C_2`: one fixed 0-cell and one free 1-cell.
//!
//! Negative summands smash with the equivariant dual complex. A complex is
//! stored by its orbit cells and the underlying boundary matrices on translate
//! bases. The constant Mackey structure enters when a complex is realized at a
//! subgroup level `K`: the boundary coefficient from a `K`-orbit of cells with
//! stabilizer `H` to one with stabilizer `H'` is the bucketed underlying sum
//! times `|K ∩ H'| / |K ∩ H|` (restrictions are identities, transfers
//! multiply by the index). Same-stabilizer cancellation runs between smash
//! steps so large multiples of the regular representation stay small.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::groups::GroupId;
use crate::lattice::{homology_at, IntMatrix, InvariantFactors};

/// Index of a (virtual) representation sphere `c + a*sigma (+ b*lambda)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSphereIndex {
    pub group: GroupId,
    pub trivial: i64,
    pub sigma: i64,
    /// Only meaningful for `C_4`.
    pub lambda: i64,
}

impl RepSphereIndex {
    pub fn c2(trivial: i64, sigma: i64) -> Self {
        RepSphereIndex {
            group: GroupId::Cyclic2Power(1),
            trivial,
            sigma,
            lambda: 0,
        }
    }

    pub fn c4(trivial: i64, sigma: i64, lambda: i64) -> Self {
        RepSphereIndex {
            group: GroupId::Cyclic2Power(2),
            trivial,
            sigma,
            lambda,
        }
    }

    /// Virtual dimension `|V|`.
    pub fn dim(&self) -> i64 {
        self.trivial + self.sigma + 2 * self.lambda
    }

    pub fn neg(&self) -> Self {
        RepSphereIndex {
            group: self.group,
            trivial: -self.trivial,
            sigma: -self.sigma,
            lambda: -self.lambda,
        }
    }
}

/// One orbit of cells: stabilizer order only (dimension is the key).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct OrbitCell {
    stab: u32,
}

/// Equivariant chain complex for the cyclic group of order `n` (2 or 4).
///
/// Underlying basis in each dimension: for each cell, translate cosets
/// `g^0 H, ..., g^{n/|H|-1} H` in order. `diffs[d]` is the underlying
/// boundary matrix from dimension `d` to `d - 1` over these bases.
#[derive(Clone, Debug)]
pub struct EquivariantComplex {
    group_order: u32,
    cells: BTreeMap<i32, Vec<OrbitCell>>,
    diffs: BTreeMap<i32, Vec<Vec<i64>>>,
}

impl EquivariantComplex {
    fn translates(&self, c: &OrbitCell) -> usize {
        (self.group_order / c.stab) as usize
    }

    fn dim_basis(&self, d: i32) -> usize {
        self.cells
            .get(&d)
            .map(|cs| cs.iter().map(|c| self.translates(c)).sum())
            .unwrap_or(0)
    }

    fn block_offsets(&self, d: i32) -> Vec<usize> {
        let mut offs = Vec::new();
        let mut acc = 0;
        if let Some(cs) = self.cells.get(&d) {
            for c in cs {
                offs.push(acc);
                acc += self.translates(c);
            }
        }
        offs
    }

    fn check_shapes(&self) {
        for (&d, m) in &self.diffs {
            let rows = self.dim_basis(d - 1);
            let cols = self.dim_basis(d);
            assert_eq!(m.len(), rows, "boundary rows at dim {d}");
            assert!(m.iter().all(|r| r.len() == cols), "boundary cols at {d}");
        }
    }

    /// d ∘ d = 0 on the underlying level (debug sanity).
    fn assert_chain(&self) {
        for (&d, m) in &self.diffs {
            if let Some(m2) = self.diffs.get(&(d - 1)) {
                let rows2 = self.dim_basis(d - 2);
                for c in 0..self.dim_basis(d) {
                    for r in 0..rows2 {
                        let mut acc = 0i64;
                        for k in 0..self.dim_basis(d - 1) {
                            acc += m2[r][k] * m[k][c];
                        }
                        assert_eq!(acc, 0, "d^2 != 0 out of dim {d}");
                    }
                }
            }
        }
    }

    pub fn sphere_sigma_c4() -> Self {
        let mut cells = BTreeMap::new();
        cells.insert(0, vec![OrbitCell { stab: 4 }]);
        cells.insert(1, vec![OrbitCell { stab: 2 }]);
        let mut diffs = BTreeMap::new();
        // both translates of the 1-cell attach to the surviving fixed 0-cell
        diffs.insert(1, vec![vec![1, 1]]);
        let c = EquivariantComplex {
            group_order: 4,
            cells,
            diffs,
        };
        c.check_shapes();
        c
    }

    pub fn sphere_lambda_c4() -> Self {
        let mut cells = BTreeMap::new();
        cells.insert(0, vec![OrbitCell { stab: 4 }]);
        cells.insert(1, vec![OrbitCell { stab: 1 }]);
        cells.insert(2, vec![OrbitCell { stab: 1 }]);
        let mut diffs = BTreeMap::new();
        diffs.insert(1, vec![vec![1, 1, 1, 1]]);
        // lobe i spans meridians e_i and e_{i+1}
        let mut d2 = vec![vec![0i64; 4]; 4];
        for i in 0..4 {
            d2[i][i] += 1;
            d2[(i + 1) % 4][i] -= 1;
        }
        diffs.insert(2, d2);
        let c = EquivariantComplex {
            group_order: 4,
            cells,
            diffs,
        };
        c.check_shapes();
        c
    }

    pub fn sphere_sigma_c2() -> Self {
        let mut cells = BTreeMap::new();
        cells.insert(0, vec![OrbitCell { stab: 2 }]);
        cells.insert(1, vec![OrbitCell { stab: 1 }]);
        let mut diffs = BTreeMap::new();
        diffs.insert(1, vec![vec![1, 1]]);
        let c = EquivariantComplex {
            group_order: 2,
            cells,
            diffs,
        };
        c.check_shapes();
        c
    }

    pub fn point(group_order: u32) -> Self {
        let mut cells = BTreeMap::new();
        cells.insert(0, vec![OrbitCell { stab: group_order }]);
        EquivariantComplex {
            group_order,
            cells,
            diffs: BTreeMap::new(),
        }
    }

    /// Shift all dimensions by `k` (smash with a trivial sphere).
    pub fn suspend(&self, k: i32) -> Self {
        EquivariantComplex {
            group_order: self.group_order,
            cells: self.cells.iter().map(|(&d, cs)| (d + k, cs.clone())).collect(),
            diffs: self.diffs.iter().map(|(&d, m)| (d + k, m.clone())).collect(),
        }
    }

    /// Equivariant dual: dimensions negate, boundaries transpose.
    pub fn dual(&self) -> Self {
        let cells: BTreeMap<i32, Vec<OrbitCell>> = self
            .cells
            .iter()
            .map(|(&d, cs)| (-d, cs.clone()))
            .collect();
        let mut diffs = BTreeMap::new();
        for (&d, m) in &self.diffs {
            // original: d -> d-1; dual: -(d-1) -> -d
            let rows = self.dim_basis(d);
            let cols = self.dim_basis(d - 1);
            let mut t = vec![vec![0i64; cols]; rows];
            for (r, row) in m.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    t[c][r] = v;
                }
            }
            diffs.insert(-(d - 1), t);
        }
        let out = EquivariantComplex {
            group_order: self.group_order,
            cells,
            diffs,
        };
        out.check_shapes();
        out
    }

    /// Smash product, cells indexed by `(a-cell, b-cell, t)` with `t` running
    /// over cosets of `H_a H_b`; boundaries via the graded Leibniz rule.
    pub fn smash(&self, other: &EquivariantComplex) -> EquivariantComplex {
        assert_eq!(self.group_order, other.group_order);
        let n = self.group_order;

        #[derive(Clone, Copy, PartialEq, Eq)]
        struct ProdCell {
            a_dim: i32,
            a_idx: usize,
            b_dim: i32,
            b_idx: usize,
            t: u32,
            stab: u32,
        }

        let mut prod: BTreeMap<i32, Vec<ProdCell>> = BTreeMap::new();
        for (&da, cas) in &self.cells {
            for (&db, cbs) in &other.cells {
                for (ai, ca) in cas.iter().enumerate() {
                    for (bi, cb) in cbs.iter().enumerate() {
                        let stab = ca.stab.min(cb.stab);
                        let orbits = n / ca.stab.max(cb.stab);
                        for t in 0..orbits {
                            prod.entry(da + db).or_default().push(ProdCell {
                                a_dim: da,
                                a_idx: ai,
                                b_dim: db,
                                b_idx: bi,
                                t,
                                stab,
                            });
                        }
                    }
                }
            }
        }

        let cells: BTreeMap<i32, Vec<OrbitCell>> = prod
            .iter()
            .map(|(&d, cs)| (d, cs.iter().map(|c| OrbitCell { stab: c.stab }).collect()))
            .collect();

        let offsets: BTreeMap<i32, Vec<usize>> = prod
            .iter()
            .map(|(&d, cs)| {
                let mut offs = Vec::new();
                let mut acc = 0usize;
                for c in cs {
                    offs.push(acc);
                    acc += (n / c.stab) as usize;
                }
                (d, offs)
            })
            .collect();
        let dim_len = |d: i32| -> usize {
            prod.get(&d)
                .map(|cs| cs.iter().map(|c| (n / c.stab) as usize).sum())
                .unwrap_or(0)
        };

        // row index of the underlying translate (u of a-cell, v of b-cell)
        let locate = |d: i32,
                      a_dim: i32,
                      a_idx: usize,
                      a_stab: u32,
                      b_idx: usize,
                      b_stab: u32,
                      u: u32,
                      v: u32|
         -> usize {
            let orbits = n / a_stab.max(b_stab);
            let t = (v % orbits + orbits - u % orbits) % orbits;
            let cs = &prod[&d];
            let idx = cs
                .iter()
                .position(|c| c.a_dim == a_dim && c.a_idx == a_idx && c.b_idx == b_idx && c.t == t)
                .expect("product cell lookup");
            let z = if a_stab <= b_stab {
                u % (n / a_stab)
            } else {
                (v + n - t) % (n / b_stab)
            };
            debug_assert_eq!(z % (n / a_stab), u % (n / a_stab));
            debug_assert_eq!((z + t) % (n / b_stab), v % (n / b_stab));
            offsets[&d][idx] + z as usize
        };

        let mut diffs: BTreeMap<i32, Vec<Vec<i64>>> = BTreeMap::new();
        for (&d, cs) in &prod {
            let rows = dim_len(d - 1);
            if rows == 0 {
                continue;
            }
            let cols = dim_len(d);
            let mut m = vec![vec![0i64; cols]; rows];
            let mut col = 0usize;
            for pc in cs {
                let ca = &self.cells[&pc.a_dim][pc.a_idx];
                let cb = &other.cells[&pc.b_dim][pc.b_idx];
                for z in 0..(n / pc.stab) {
                    let ua = z % (n / ca.stab);
                    let vb = (z + pc.t) % (n / cb.stab);
                    // boundary in the first factor
                    if let Some(da_m) = self.diffs.get(&pc.a_dim) {
                        let a_col = self.block_offsets(pc.a_dim)[pc.a_idx] + ua as usize;
                        if let Some(ta_cells) = self.cells.get(&(pc.a_dim - 1)) {
                            let ta_offs = self.block_offsets(pc.a_dim - 1);
                            for (tai, tac) in ta_cells.iter().enumerate() {
                                for tu in 0..self.translates(tac) {
                                    let coeff = da_m[ta_offs[tai] + tu][a_col];
                                    if coeff == 0 {
                                        continue;
                                    }
                                    let row = locate(
                                        d - 1,
                                        pc.a_dim - 1,
                                        tai,
                                        tac.stab,
                                        pc.b_idx,
                                        cb.stab,
                                        tu as u32,
                                        vb,
                                    );
                                    m[row][col] += coeff;
                                }
                            }
                        }
                    }
                    // boundary in the second factor, Koszul sign (-1)^{a_dim}
                    if let Some(db_m) = other.diffs.get(&pc.b_dim) {
                        let sign = if pc.a_dim.rem_euclid(2) == 0 { 1 } else { -1 };
                        let b_col = other.block_offsets(pc.b_dim)[pc.b_idx] + vb as usize;
                        if let Some(tb_cells) = other.cells.get(&(pc.b_dim - 1)) {
                            let tb_offs = other.block_offsets(pc.b_dim - 1);
                            for (tbi, tbc) in tb_cells.iter().enumerate() {
                                for tv in 0..other.translates(tbc) {
                                    let coeff = db_m[tb_offs[tbi] + tv][b_col];
                                    if coeff == 0 {
                                        continue;
                                    }
                                    let row = locate(
                                        d - 1,
                                        pc.a_dim,
                                        pc.a_idx,
                                        ca.stab,
                                        tbi,
                                        tbc.stab,
                                        ua,
                                        tv as u32,
                                    );
                                    m[row][col] += coeff * sign;
                                }
                            }
                        }
                    }
                    col += 1;
                }
            }
            diffs.insert(d, m);
        }

        let out = EquivariantComplex {
            group_order: n,
            cells,
            diffs,
        };
        out.check_shapes();
        if cfg!(debug_assertions) {
            out.assert_chain();
        }
        out
    }

    /// Repeatedly cancel invertible same-stabilizer boundary components
    /// (Gaussian elimination on the orbit category); Bredon homology at every
    /// level is preserved.
    pub fn reduce(&mut self) {
        while let Some((d, si, ti)) = self.find_cancellable() {
            self.cancel_pair(d, si, ti);
        }
    }

    /// Find (dim, source cell, target cell) whose component block is plus or
    /// minus a single cyclic-shift permutation between same-stabilizer cells.
    fn find_cancellable(&self) -> Option<(i32, usize, usize)> {
        for (&d, m) in &self.diffs {
            let scells = self.cells.get(&d)?;
            let Some(tcells) = self.cells.get(&(d - 1)) else {
                continue;
            };
            let soffs = self.block_offsets(d);
            let toffs = self.block_offsets(d - 1);
            for (si, sc) in scells.iter().enumerate() {
                for (ti, tc) in tcells.iter().enumerate() {
                    if sc.stab != tc.stab {
                        continue;
                    }
                    let len = self.translates(sc);
                    let mut shift: Option<(usize, i64)> = None;
                    let mut ok = true;
                    for c in 0..len {
                        let mut seen = 0;
                        for r in 0..len {
                            let v = m[toffs[ti] + r][soffs[si] + c];
                            if v == 0 {
                                continue;
                            }
                            seen += 1;
                            if v.abs() != 1 {
                                ok = false;
                                break;
                            }
                            let s = (r + len - c) % len;
                            match shift {
                                None => shift = Some((s, v)),
                                Some((s0, v0)) if s0 == s && v0 == v => {}
                                _ => {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        if !ok || seen != 1 {
                            ok = false;
                            break;
                        }
                    }
                    if ok && shift.is_some() {
                        return Some((d, si, ti));
                    }
                }
            }
        }
        None
    }

    fn cancel_pair(&mut self, d: i32, si: usize, ti: usize) {
        let soffs = self.block_offsets(d);
        let toffs = self.block_offsets(d - 1);
        let slen = self.translates(&self.cells[&d][si]);
        let srange = soffs[si]..soffs[si] + slen;
        let trange = toffs[ti]..toffs[ti] + slen;

        let m = self.diffs[&d].clone();
        let inv = invert_shift_block(&m, &srange, &trange);
        let rows = self.dim_basis(d - 1);
        let cols = self.dim_basis(d);

        // delta' = delta - gamma * inv * beta on the surviving block
        let mut newm = m.clone();
        for c in 0..cols {
            if srange.contains(&c) {
                continue;
            }
            let mut alpha = vec![0i64; slen];
            for (k, a) in alpha.iter_mut().enumerate() {
                for j in 0..slen {
                    *a += inv[k][j] * m[trange.start + j][c];
                }
            }
            if alpha.iter().all(|&x| x == 0) {
                continue;
            }
            for r in 0..rows {
                if trange.contains(&r) {
                    continue;
                }
                let mut corr = 0i64;
                for (k, &a) in alpha.iter().enumerate() {
                    corr += m[r][srange.start + k] * a;
                }
                newm[r][c] -= corr;
            }
        }

        let keep_cols: Vec<usize> = (0..cols).filter(|c| !srange.contains(c)).collect();
        let keep_rows: Vec<usize> = (0..rows).filter(|r| !trange.contains(r)).collect();
        let shrunk: Vec<Vec<i64>> = keep_rows
            .iter()
            .map(|&r| keep_cols.iter().map(|&c| newm[r][c]).collect())
            .collect();

        // level d+1: drop the rows of the cancelled source cell
        let up = self.diffs.get(&(d + 1)).map(|upm| {
            keep_cols
                .iter()
                .map(|&r| upm[r].clone())
                .collect::<Vec<_>>()
        });
        // level d-1: drop the columns of the cancelled target cell
        let down = self.diffs.get(&(d - 1)).map(|dm| {
            dm.iter()
                .map(|row| keep_rows.iter().map(|&c| row[c]).collect::<Vec<i64>>())
                .collect::<Vec<_>>()
        });

        self.diffs.insert(d, shrunk);
        if let Some(u) = up {
            self.diffs.insert(d + 1, u);
        }
        if let Some(dn) = down {
            self.diffs.insert(d - 1, dn);
        }

        let mut sc = self.cells[&d].clone();
        sc.remove(si);
        if sc.is_empty() {
            self.cells.remove(&d);
        } else {
            self.cells.insert(d, sc);
        }
        let mut tc = self.cells[&(d - 1)].clone();
        tc.remove(ti);
        if tc.is_empty() {
            self.cells.remove(&(d - 1));
        } else {
            self.cells.insert(d - 1, tc);
        }

        // prune empty boundary matrices
        for dd in [d - 1, d, d + 1] {
            if self.dim_basis(dd) == 0 || self.dim_basis(dd - 1) == 0 {
                self.diffs.remove(&dd);
            }
        }
        self.check_shapes();
        if cfg!(debug_assertions) {
            self.assert_chain();
        }
    }

    /// Realize the complex at the subgroup level of order `k_order`.
    pub fn realize(&self, k_order: u32) -> RealizedComplex {
        assert!(self.group_order % k_order == 0);
        let n = self.group_order;
        let mut bases: BTreeMap<i32, Vec<(usize, u32)>> = BTreeMap::new();
        for (&d, cs) in &self.cells {
            let mut basis = Vec::new();
            for (ci, c) in cs.iter().enumerate() {
                let kh = k_order.max(c.stab);
                for t in 0..(n / kh) {
                    basis.push((ci, t));
                }
            }
            bases.insert(d, basis);
        }
        let mut mats = BTreeMap::new();
        for (&d, m) in &self.diffs {
            let src = &bases[&d];
            let empty = Vec::new();
            let tgt = bases.get(&(d - 1)).unwrap_or(&empty);
            let scells = &self.cells[&d];
            let tcells = self.cells.get(&(d - 1)).map(|v| &v[..]).unwrap_or(&[]);
            let soffs = self.block_offsets(d);
            let toffs = self.block_offsets(d - 1);
            let mut out = IntMatrix::zero(tgt.len(), src.len());
            for (col, &(sci, st)) in src.iter().enumerate() {
                let sc = &scells[sci];
                let under_col = soffs[sci] + (st % (n / sc.stab)) as usize;
                for (row, &(tci, tt)) in tgt.iter().enumerate() {
                    let tc = &tcells[tci];
                    let kh_t = k_order.max(tc.stab);
                    let mut bucket = 0i64;
                    for u in 0..(n / tc.stab) {
                        if u % (n / kh_t) == tt {
                            bucket += m[toffs[tci] + u as usize][under_col];
                        }
                    }
                    if bucket == 0 {
                        continue;
                    }
                    let w_num = k_order.min(tc.stab) as i64;
                    let w_den = k_order.min(sc.stab) as i64;
                    let val = bucket * w_num;
                    assert!(
                        val % w_den == 0,
                        "non-integral Bredon boundary at dim {d}: {bucket}*{w_num}/{w_den}"
                    );
                    out.set(row, col, BigInt::from(val / w_den));
                }
            }
            mats.insert(d, out);
        }
        RealizedComplex {
            bases_len: bases.iter().map(|(&d, b)| (d, b.len())).collect(),
            mats,
        }
    }
}

fn invert_shift_block(
    m: &[Vec<i64>],
    srange: &std::ops::Range<usize>,
    trange: &std::ops::Range<usize>,
) -> Vec<Vec<i64>> {
    let len = srange.len();
    let mut s = 0;
    let mut sign = 0i64;
    'outer: for c in 0..len {
        for r in 0..len {
            let v = m[trange.start + r][srange.start + c];
            if v != 0 {
                s = (r + len - c) % len;
                sign = v;
                break 'outer;
            }
        }
    }
    assert!(sign == 1 || sign == -1, "block is not a signed shift");
    // block[r][c] = sign * [r = c + s]; inverse[r][c] = sign * [r = c - s]
    let mut inv = vec![vec![0i64; len]; len];
    for c in 0..len {
        inv[(c + len - s) % len][c] = sign;
    }
    inv
}

/// Integer chain complex at one subgroup level.
pub struct RealizedComplex {
    bases_len: BTreeMap<i32, usize>,
    mats: BTreeMap<i32, IntMatrix>,
}

impl RealizedComplex {
    pub fn rank(&self, d: i32) -> usize {
        self.bases_len.get(&d).copied().unwrap_or(0)
    }

    pub fn boundary(&self, d: i32) -> IntMatrix {
        match self.mats.get(&d) {
            Some(m) => m.clone(),
            None => IntMatrix::zero(self.rank(d - 1), self.rank(d)),
        }
    }

    pub fn homology(&self, d: i32) -> InvariantFactors {
        if self.rank(d) == 0 {
            return InvariantFactors::free(0);
        }
        homology_at(&self.boundary(d), &self.boundary(d + 1))
    }

    pub fn support(&self) -> (i32, i32) {
        let lo = self.bases_len.keys().copied().min().unwrap_or(0);
        let hi = self.bases_len.keys().copied().max().unwrap_or(0);
        (lo, hi)
    }
}

/// Sparse column of summands indexed by internal degree `t`.
pub type HomologyColumn = BTreeMap<i32, InvariantFactors>;

/// Freeness-or-torsion summary of one chart position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Summand {
    Free,
    Torsion(BigInt),
}

/// Build the chain complex of `S^V`: smash of elementary complexes and their
/// duals, reduced along the way, suspended by the trivial part.
pub fn sphere_complex(idx: &RepSphereIndex) -> EquivariantComplex {
    let (order, sigma_c, lambda_c) = match idx.group {
        GroupId::Cyclic2Power(1) => (2, EquivariantComplex::sphere_sigma_c2(), None),
        GroupId::Cyclic2Power(2) => (
            4,
            EquivariantComplex::sphere_sigma_c4(),
            Some(EquivariantComplex::sphere_lambda_c4()),
        ),
        _ => panic!("oracle supports C2 and C4 only"),
    };
    let mut acc = EquivariantComplex::point(order);
    let sigma_dual = sigma_c.dual();
    for _ in 0..idx.sigma.unsigned_abs() {
        let f = if idx.sigma > 0 { &sigma_c } else { &sigma_dual };
        acc = acc.smash(f);
        acc.reduce();
    }
    if idx.lambda != 0 {
        let lc = lambda_c.expect("lambda summand needs C4");
        let ld = lc.dual();
        for _ in 0..idx.lambda.unsigned_abs() {
            let f = if idx.lambda > 0 { &lc } else { &ld };
            acc = acc.smash(f);
            acc.reduce();
        }
    }
    acc.suspend(idx.trivial as i32)
}

fn column_at_level(idx: &RepSphereIndex, level: u32) -> HomologyColumn {
    let complex = sphere_complex(idx);
    let realized = complex.realize(level);
    let (lo, hi) = realized.support();
    let mut out = BTreeMap::new();
    for t in lo..=hi {
        let h = realized.homology(t);
        if h.free_rank > 0 || !h.torsion.is_empty() {
            out.insert(t, h);
        }
    }
    out
}

/// Fixed-level reduced Bredon homology of `S^V` with constant `Z`
/// coefficients, as a map `t -> invariant factors`.
pub fn homology_column(idx: &RepSphereIndex) -> HomologyColumn {
    column_at_level(idx, idx.group.order() as u32)
}

/// Underlying (trivial-level) homology, for consistency checks.
pub fn underlying_column(idx: &RepSphereIndex) -> HomologyColumn {
    column_at_level(idx, 1)
}

/// Intermediate `C_2`-level column of a `C_4`-sphere.
pub fn middle_column(idx: &RepSphereIndex) -> HomologyColumn {
    assert_eq!(idx.group, GroupId::Cyclic2Power(2));
    column_at_level(idx, 2)
}

/// Reindex a homology column to chart coordinates `f = |V| - t` and split
/// every group into cyclic summands.
pub fn chart_column(idx: &RepSphereIndex) -> BTreeMap<i32, Vec<Summand>> {
    let col = homology_column(idx);
    let dim = idx.dim() as i32;
    let mut out = BTreeMap::new();
    for (t, inv) in col {
        let f = dim - t;
        let mut summands = Vec::new();
        for _ in 0..inv.free_rank {
            summands.push(Summand::Free);
        }
        for tor in &inv.torsion {
            summands.push(Summand::Torsion(tor.clone()));
        }
        out.insert(f, summands);
    }
    out
}
