//! Exact linear algebra over sparse rows.
//!
//! Two elimination paths: a generic reduced-echelon form over Gaussian
//! rationals (used for quotient reduction, span comparisons and small rank
//! computations), and a fraction-free integer path for the larger kinematics
//! systems, where rows are cleared to integers and combined by cross
//! multiplication with content removal so intermediate entries stay small.

use crate::scalar::{GaussianRational, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Sparse row: nonzero entries sorted by column.
pub type SRow = Vec<(usize, GaussianRational)>;

pub fn dense_to_sparse(v: &[GaussianRational]) -> SRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// `dst += c * src` on sparse rows.
fn axpy(dst: &SRow, src: &SRow, c: &GaussianRational) -> SRow {
    let mut out = SRow::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        let take_dst = j >= src.len() || (i < dst.len() && dst[i].0 < src[j].0);
        let take_src = i >= dst.len() || (j < src.len() && src[j].0 < dst[i].0);
        if take_dst {
            out.push(dst[i].clone());
            i += 1;
        } else if take_src {
            let v = &src[j].1 * c;
            if !v.is_zero() {
                out.push((src[j].0, v));
            }
            j += 1;
        } else {
            let v = &dst[i].1 + &(&src[j].1 * c);
            if !v.is_zero() {
                out.push((dst[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row-echelon form with unit pivots. Row insertion order is the
/// pivot tie-break, so the result is deterministic for a fixed input order.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    pub ncols: usize,
    /// Reduced rows, each with coefficient 1 at its pivot column; sorted by
    /// pivot column.
    pub rows: Vec<SRow>,
    pub pivot_cols: Vec<usize>,
}

impl Rref {
    pub fn new(ncols: usize) -> Rref {
        Rref {
            ncols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots; returns the remainder.
    pub fn residue(&self, mut row: SRow) -> SRow {
        loop {
            let Some(&(lead, _)) = row.first() else {
                return row;
            };
            // Rows are sorted by pivot; only pivots <= lead can act, and the
            // reduced form guarantees a single candidate per column.
            match self.pivot_cols.binary_search(&lead) {
                Ok(pos) => {
                    let c = -&row[0].1;
                    row = axpy(&row, &self.rows[pos], &c);
                }
                Err(_) => {
                    // Leading column is pivot-free: eliminate any later pivot
                    // columns instead.
                    let mut changed = false;
                    for (pos, &p) in self.pivot_cols.iter().enumerate() {
                        if p <= lead {
                            continue;
                        }
                        if let Ok(k) = row.binary_search_by_key(&p, |e| e.0) {
                            let c = -&row[k].1;
                            row = axpy(&row, &self.rows[pos], &c);
                            changed = true;
                        }
                    }
                    if !changed {
                        return row;
                    }
                }
            }
        }
    }

    /// Inserts a row, extending the basis if it is independent. Returns true
    /// if the rank grew.
    pub fn insert(&mut self, row: SRow) -> bool {
        let mut row = self.residue(row);
        let Some(&(lead, _)) = row.first() else {
            return false;
        };
        let inv = row[0].1.recip();
        for e in row.iter_mut() {
            e.1 = &e.1 * &inv;
        }
        // Eliminate the new pivot from existing rows to stay fully reduced.
        for r in self.rows.iter_mut() {
            if let Ok(k) = r.binary_search_by_key(&lead, |e| e.0) {
                let c = -&r[k].1;
                *r = axpy(r, &row, &c);
            }
        }
        let pos = self.pivot_cols.binary_search(&lead).unwrap_err();
        self.pivot_cols.insert(pos, lead);
        self.rows.insert(pos, row);
        true
    }

    /// Eliminates the pivot coordinates of a dense vector in place.
    pub fn reduce_dense(&self, v: &mut [GaussianRational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivot_cols) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (col, x) in row {
                let delta = &c * x;
                v[*col] -= &delta;
            }
        }
    }

    pub fn in_rowspace(&self, row: SRow) -> bool {
        self.residue(row).is_empty()
    }
}

pub fn rref_of(rows: impl IntoIterator<Item = SRow>, ncols: usize) -> Rref {
    let mut r = Rref::new(ncols);
    for row in rows {
        r.insert(row);
    }
    r
}

pub fn rank_of(rows: impl IntoIterator<Item = SRow>, ncols: usize) -> usize {
    rref_of(rows, ncols).rank()
}

/// Exact nullspace basis from the reduced echelon form: one vector per free
/// column, in increasing column order.
pub fn nullspace(rows: impl IntoIterator<Item = SRow>, ncols: usize) -> Vec<Vec<GaussianRational>> {
    let r = rref_of(rows, ncols);
    nullspace_of_rref(&r)
}

pub fn nullspace_of_rref(r: &Rref) -> Vec<Vec<GaussianRational>> {
    let mut basis = Vec::with_capacity(r.ncols - r.rank());
    let mut is_pivot = vec![false; r.ncols];
    for &p in &r.pivot_cols {
        is_pivot[p] = true;
    }
    for f in 0..r.ncols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![GaussianRational::ZERO; r.ncols];
        v[f] = GaussianRational::ONE;
        for (row, &p) in r.rows.iter().zip(&r.pivot_cols) {
            if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                v[p] = -&row[k].1;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Fraction-free integer path (real rational input).
// ---------------------------------------------------------------------------

type IRow = Vec<(usize, BigInt)>;

fn clear_denominators(row: &[(usize, Rat)]) -> IRow {
    let mut lcm = BigInt::from(1);
    for (_, v) in row {
        lcm = lcm.lcm(&v.denom());
    }
    let mut out: IRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .filter(|(_, n)| !n.is_zero())
        .collect();
    remove_content(&mut out);
    out
}

fn remove_content(row: &mut IRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g > BigInt::from(1) {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a*ca - b*cb` on integer sparse rows, with content removal.
fn int_combine(a: &IRow, ca: &BigInt, b: &IRow, cb: &BigInt) -> IRow {
    let mut out = IRow::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, &a[i].1 * ca));
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(&b[j].1 * cb)));
            j += 1;
        } else {
            let v = &a[i].1 * ca - &b[j].1 * cb;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    remove_content(&mut out);
    out
}

/// Row-echelon elimination over the integers with cross-multiplication and
/// content removal, followed by exact rational back-substitution. Pivot
/// choice is deterministic: smallest leading column, then fewest entries,
/// then original row order.
pub struct FractionFreeEchelon {
    pub ncols: usize,
    pub pivots: Vec<(usize, IRow)>,
}

pub fn fraction_free_echelon(rows: Vec<Vec<(usize, Rat)>>, ncols: usize) -> FractionFreeEchelon {
    let mut active: Vec<IRow> = rows
        .iter()
        .map(|r| clear_denominators(r))
        .filter(|r| !r.is_empty())
        .collect();
    let mut pivots: Vec<(usize, IRow)> = Vec::new();

    for col in 0..ncols {
        // Gather active rows leading at `col`.
        let mut lead_rows: Vec<usize> = Vec::new();
        for (i, r) in active.iter().enumerate() {
            if r.first().map(|e| e.0) == Some(col) {
                lead_rows.push(i);
            }
        }
        let Some(&best) = lead_rows
            .iter()
            .min_by_key(|&&i| (active[i].len(), i))
        else {
            continue;
        };
        let pivot_row = active.swap_remove(best);
        let pivot_val = pivot_row[0].1.clone();
        for r in active.iter_mut() {
            if r.first().map(|e| e.0) == Some(col) {
                let c = r[0].1.clone();
                *r = int_combine(r, &pivot_val, &pivot_row, &c);
            }
        }
        active.retain(|r| !r.is_empty());
        pivots.push((col, pivot_row));
        if active.is_empty() {
            break;
        }
    }
    FractionFreeEchelon { ncols, pivots }
}

impl FractionFreeEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nullspace basis by back-substitution, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut is_pivot = vec![false; self.ncols];
        for (c, _) in &self.pivots {
            is_pivot[*c] = true;
        }
        let mut basis = Vec::new();
        for f in 0..self.ncols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rat::ZERO; self.ncols];
            v[f] = Rat::ONE;
            // Pivots are sorted by column; solve from the bottom up.
            for (col, row) in self.pivots.iter().rev() {
                let mut acc = Rat::ZERO;
                for (c, coeff) in row.iter().skip(1) {
                    if !v[*c].is_zero() {
                        acc += &(&Rat::from_bigint_ratio(coeff.clone(), BigInt::from(1)) * &v[*c]);
                    }
                }
                if acc.is_zero() {
                    continue;
                }
                let lead = Rat::from_bigint_ratio(row[0].1.clone(), BigInt::from(1));
                v[*col] = &(-&acc) / &lead;
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    fn row(entries: &[(usize, i64)]) -> SRow {
        entries.iter().map(|&(c, v)| (c, g(v))).collect()
    }

    #[test]
    fn rref_rank_and_nullspace() {
        // x + y + z = 0 ; x - y = 0  =>  nullspace spanned by (1, 1, -2).
        let rows = vec![row(&[(0, 1), (1, 1), (2, 1)]), row(&[(0, 1), (1, -1)])];
        let ns = nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(&v[0] - &v[1], g(0));
        assert_eq!(&(&v[0] + &v[1]) + &v[2], g(0));
        assert_eq!(rank_of(rows, 3), 2);
    }

    #[test]
    fn rowspace_membership() {
        let r = rref_of(vec![row(&[(0, 2), (1, 4)]), row(&[(1, 3), (2, 3)])], 3);
        assert!(r.in_rowspace(row(&[(0, 1), (1, 2)])));
        assert!(r.in_rowspace(row(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!r.in_rowspace(row(&[(2, 1)])));
    }

    #[test]
    fn reduce_dense_eliminates_pivots() {
        let r = rref_of(vec![row(&[(0, 1), (2, 5)])], 3);
        let mut v = vec![g(3), g(7), g(1)];
        r.reduce_dense(&mut v);
        assert!(v[0].is_zero());
        assert_eq!(v[1], g(7));
        assert_eq!(v[2], g(1 - 15));
    }

    #[test]
    fn complex_pivots() {
        // i*x + y = 0 has nullspace (1, -i) direction => rank 1.
        let rows = vec![vec![(0usize, GaussianRational::I), (1usize, g(1))]];
        let ns = nullspace(rows, 2);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // i*v0 + v1 = 0.
        let resid = &(&GaussianRational::I * &v[0]) + &v[1];
        assert!(resid.is_zero());
    }

    #[test]
    fn fraction_free_matches_generic() {
        // Random-ish small system; both paths must agree on the solution
        // space (dimension and membership).
        let rat_rows: Vec<Vec<(usize, Rat)>> = vec![
            vec![(0, Rat::new(1, 2)), (1, Rat::new(-1, 3)), (3, Rat::new(5, 1))],
            vec![(1, Rat::new(2, 1)), (2, Rat::new(7, 4))],
            vec![(0, Rat::new(3, 1)), (2, Rat::new(-1, 1)), (3, Rat::new(1, 6))],
        ];
        let ech = fraction_free_echelon(rat_rows.clone(), 4);
        assert_eq!(ech.rank(), 3);
        let ns = ech.nullspace();
        assert_eq!(ns.len(), 1);
        // Verify the basis vector satisfies every original row exactly.
        for r in &rat_rows {
            let mut acc = Rat::ZERO;
            for (c, v) in r {
                acc += &(v * &ns[0][*c]);
            }
            assert!(acc.is_zero());
        }
        let grows: Vec<SRow> = rat_rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(c, v)| (*c, GaussianRational::real(v.clone())))
                    .collect()
            })
            .collect();
        assert_eq!(nullspace(grows, 4).len(), 1);
    }
}
