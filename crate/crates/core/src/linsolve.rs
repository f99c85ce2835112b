//! Dense exact linear algebra: echelon forms, kernels, ranks, and the
//! parameter values at which the rank of a matrix over ℚ[c] drops.

use crate::ring::{rational_roots, CPoly, Cyclo, Field, ParamRing, QZeta, Rat, RatFunc, Ring, UPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Rectangular matrix over a single coefficient domain, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// Builds from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| R::from_i64(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        let data: Result<Vec<S>, E> = self.data.iter().map(f).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data: data? })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out.get(i, j).add(&a.mul(o.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(R::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Stacks `o` below `self`.
    pub fn vstack(&self, o: &Self) -> Self {
        if self.rows == 0 {
            return o.clone();
        }
        assert_eq!(self.cols, o.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Appends `o` to the right of `self`.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows, "dimension mismatch");
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().chain(o.row(i)).cloned().collect())
            .collect();
        Self::from_rows(self.cols + o.cols, rows)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_rows(self.cols, idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form over a field, with pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).filter(|&i| !a.get(i, col).is_zero()).min_by_key(|&i| a.get(i, col).weight()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, col).inv();
        for j in col..a.cols {
            let v = a.get(r, j).mul(&inv);
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let f = a.get(i, col).clone();
            if f.is_zero() {
                continue;
            }
            for j in col..a.cols {
                let v = a.get(i, j).sub(&f.mul(a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(col);
        r += 1;
    }
    (a, pivots)
}

/// Kernel basis over a field: one vector per free column, with a 1 there.
pub fn field_kernel<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (a, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); m.cols];
            v[f] = F::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = a.get(i, f).neg();
            }
            v
        })
        .collect()
}

/// Result of fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon<R: Ring> {
    pub matrix: Matrix<R>,
    /// (row, column) of each pivot, in elimination order.
    pub pivots: Vec<(usize, usize)>,
    /// Parity of the row permutation applied.
    pub swaps_odd: bool,
}

impl<R: Ring> Echelon<R> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The last pivot, which equals ± the determinant of the pivot minor.
    pub fn last_pivot(&self) -> R {
        self.pivots
            .last()
            .map(|&(i, j)| self.matrix.get(i, j).clone())
            .unwrap_or_else(R::one)
    }
}

/// Bareiss elimination over an integral domain. With `reduce_above` the
/// elimination is also carried out above each pivot (Gauss–Jordan form), in
/// which case every pivot ends up equal to the last one.
pub fn fraction_free_eliminate<R: Ring>(m: &Matrix<R>, reduce_above: bool) -> Echelon<R> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut swaps_odd = false;
    let mut prev = R::one();
    let mut r = 0;
    for col in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).filter(|&i| !a.get(i, col).is_zero()).min_by_key(|&i| a.get(i, col).weight()) else {
            continue;
        };
        if p != r {
            a.swap_rows(r, p);
            swaps_odd = !swaps_odd;
        }
        let piv = a.get(r, col).clone();
        let range: Vec<usize> = if reduce_above { (0..a.rows).collect() } else { (r + 1..a.rows).collect() };
        for i in range {
            if i == r {
                continue;
            }
            let f = a.get(i, col).clone();
            let start = if reduce_above { 0 } else { col + 1 };
            for j in start..a.cols {
                if j == col {
                    continue;
                }
                let num = piv.mul(a.get(i, j)).sub(&f.mul(a.get(r, j)));
                let v = if prev.is_one() {
                    num
                } else {
                    num.div_exact(&prev).expect("Bareiss division is exact")
                };
                a.set(i, j, v);
            }
            a.set(i, col, R::zero());
        }
        prev = piv;
        pivots.push((r, col));
        r += 1;
    }
    Echelon { matrix: a, pivots, swaps_odd }
}

/// Determinant of a square matrix by fraction-free elimination.
pub fn determinant<R: Ring>(m: &Matrix<R>) -> R {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    if m.rows == 0 {
        return R::one();
    }
    let e = fraction_free_eliminate(m, false);
    if e.rank() < m.rows {
        return R::zero();
    }
    let d = e.last_pivot();
    if e.swaps_odd {
        d.neg()
    } else {
        d
    }
}

/// Connected components of the row/column incidence graph of the nonzero
/// entries, as (rows, columns) pairs sorted by first column. A column with no
/// nonzero entry is a block of its own without rows.
pub fn block_structure<R: Ring>(m: &Matrix<R>) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut parent: Vec<usize> = (0..m.cols).collect();
    let mut row_col = vec![None; m.rows];
    for (i, rc) in row_col.iter_mut().enumerate() {
        let mut first = None;
        for j in 0..m.cols {
            if !m.get(i, j).is_zero() {
                match first {
                    None => first = Some(j),
                    Some(f) => {
                        let (a, b) = (find(&mut parent, f), find(&mut parent, j));
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        *rc = first;
    }
    let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut index_of = vec![usize::MAX; m.cols];
    for j in 0..m.cols {
        let root = find(&mut parent, j);
        if index_of[root] == usize::MAX {
            index_of[root] = blocks.len();
            blocks.push((Vec::new(), Vec::new()));
        }
        blocks[index_of[root]].1.push(j);
    }
    for (i, rc) in row_col.iter().enumerate() {
        if let Some(j) = rc {
            let root = find(&mut parent, *j);
            blocks[index_of[root]].0.push(i);
        }
    }
    blocks
}

fn submatrix<R: Ring>(m: &Matrix<R>, rows: &[usize], cols: &[usize]) -> Matrix<R> {
    let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| m.get(i, j).clone())).collect();
    Matrix { rows: rows.len(), cols: cols.len(), data }
}

/// Kernel over an integral domain without fractions: vectors have entries in
/// the domain itself.
///
/// Block-diagonal inputs (up to permutation) are split first; each basis
/// vector is supported on one block and the basis is ordered by free column.
pub fn fraction_free_kernel<R: Ring>(m: &Matrix<R>) -> Vec<Vec<R>> {
    let blocks = block_structure(m);
    if blocks.len() == 1 {
        return connected_kernel(m).into_iter().map(|(_, v)| v).collect();
    }
    let mut out: Vec<(usize, Vec<R>)> = Vec::new();
    for (rows, cols) in &blocks {
        for (f, v) in connected_kernel(&submatrix(m, rows, cols)) {
            let mut full = vec![R::zero(); m.cols];
            for (k, &j) in cols.iter().enumerate() {
                full[j] = v[k].clone();
            }
            out.push((cols[f], full));
        }
    }
    out.sort_by_key(|(f, _)| *f);
    out.into_iter().map(|(_, v)| v).collect()
}

/// Rank, computed block by block.
pub fn fraction_free_rank<R: Ring>(m: &Matrix<R>) -> usize {
    block_structure(m)
        .iter()
        .filter(|(rows, _)| !rows.is_empty())
        .map(|(rows, cols)| fraction_free_eliminate(&submatrix(m, rows, cols), false).rank())
        .sum()
}

/// Kernel vectors of a matrix, each tagged with its free column.
fn connected_kernel<R: Ring>(m: &Matrix<R>) -> Vec<(usize, Vec<R>)> {
    let e = fraction_free_eliminate(m, true);
    let d = e.last_pivot();
    let pivot_cols: Vec<usize> = e.pivots.iter().map(|p| p.1).collect();
    (0..m.cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|f| {
            let mut v = vec![R::zero(); m.cols];
            v[f] = d.clone();
            for &(i, pc) in &e.pivots {
                v[pc] = e.matrix.get(i, f).neg();
            }
            (f, v)
        })
        .collect()
}

/// Coefficient domains with a kernel and rank routine.
pub trait KernelRing: Ring {
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>>;
    fn rank(m: &Matrix<Self>) -> usize {
        m.cols() - Self::kernel(m).len()
    }
}

impl KernelRing for Rat {
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>> {
        field_kernel(m)
    }
    fn rank(m: &Matrix<Self>) -> usize {
        rref(m).1.len()
    }
}

impl KernelRing for QZeta {
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>> {
        field_kernel(m)
    }
}

impl KernelRing for RatFunc {
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>> {
        field_kernel(m)
    }
}

impl KernelRing for CPoly {
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>> {
        fraction_free_kernel(m).into_iter().map(|v| primitive_vector(&v)).collect()
    }
    fn rank(m: &Matrix<Self>) -> usize {
        fraction_free_rank(m)
    }
}

impl KernelRing for Cyclo<CPoly> {
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>> {
        fraction_free_kernel(m)
    }
}

/// Divides a vector over ℚ[c₁,c₂] by the gcd of its entries and by a rational
/// factor so that coefficients are coprime integers, with the leading
/// coefficient of the first nonzero entry positive.
pub fn primitive_vector(v: &[CPoly]) -> Vec<CPoly> {
    let g = v.iter().fold(CPoly::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<CPoly> = v.iter().map(|x| x.div_exact(&g).expect("gcd divides")).collect();
    let scale = rational_content(out.iter().flat_map(|p| p.terms().map(|(_, c)| c.clone())));
    let lead_neg = out
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.leading_coeff().is_negative())
        .unwrap_or(false);
    let s = if lead_neg { scale.recip().neg() } else { scale.recip() };
    for x in &mut out {
        *x = x.scale(&s);
    }
    out
}

/// Positive rational r such that the given coefficients divided by r are
/// coprime integers.
pub fn rational_content(coeffs: impl Iterator<Item = Rat>) -> Rat {
    use num_integer::Integer;
    let mut num = num_bigint::BigInt::from(0);
    let mut den = num_bigint::BigInt::from(1);
    for c in coeffs {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num == num_bigint::BigInt::from(0) {
        return Rat::one();
    }
    Rat::from_big(num, den).expect("positive denominator")
}

/// Generic rank of a matrix over ℚ[c] together with its rank-drop values.
#[derive(Clone, Debug)]
pub struct ExceptionalLocus {
    pub generic_rank: usize,
    /// Polynomial in c whose root set contains every rank-drop value.
    pub defect_polynomial: UPoly,
    /// Rational roots confirmed by substitution, with the observed rank.
    pub confirmed: Vec<(Rat, usize)>,
    /// Rational roots at which the rank turned out not to drop.
    pub spurious: Vec<Rat>,
    /// Part of the defect polynomial without rational roots (not evaluated).
    pub unevaluated: UPoly,
}

impl ExceptionalLocus {
    pub fn confirmed_values(&self) -> Vec<Rat> {
        self.confirmed.iter().map(|(c, _)| c.clone()).collect()
    }
}

fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<CPoly> {
    let data = (0..rows * cols)
        .map(|_| CPoly::from_i64(rng.gen_range(-9..=9)))
        .collect::<Vec<_>>();
    Matrix { rows, cols, data }
}

/// Rank analysis of a matrix whose entries are polynomials in c₁ alone.
///
/// The defect polynomial is the gcd of a few determinants det(P·M·Q) with
/// random integer P, Q; each of them is a combination of maximal minors of M,
/// so every value where all maximal minors vanish is among its roots.
pub fn rank_over_parameters(m: &Matrix<CPoly>, seed: u64) -> ExceptionalLocus {
    assert!(
        (0..m.rows).all(|i| m.row(i).iter().all(|x| !x.uses_param(1))),
        "rank_over_parameters expects a single parameter; slice along a line first"
    );
    let e = fraction_free_eliminate(m, false);
    let k = e.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut defect = UPoly::zero();
    if k > 0 {
        for _ in 0..3 {
            let p = random_int_matrix(&mut rng, k, m.rows);
            let q = random_int_matrix(&mut rng, m.cols, k);
            let d = determinant(&p.mul(m).mul(&q));
            defect = defect.gcd(&d.to_upoly(0).expect("single parameter"));
        }
    } else {
        defect = UPoly::constant(Rat::one());
    }
    let (roots, cofactor) = rational_roots(&defect);
    let mut distinct: Vec<Rat> = Vec::new();
    for r in roots {
        if !distinct.contains(&r) {
            distinct.push(r);
        }
    }
    distinct.sort();
    let mut confirmed = Vec::new();
    let mut spurious = Vec::new();
    for r in distinct {
        let ms = m.map(|x| x.eval(std::slice::from_ref(&r)).expect("single parameter"));
        let rk = Rat::rank(&ms);
        if rk < k {
            confirmed.push((r, rk));
        } else {
            spurious.push(r);
        }
    }
    ExceptionalLocus { generic_rank: k, defect_polynomial: defect, confirmed, spurious, unevaluated: cofactor }
}

/// A line in the (c₁, c₂)-plane, c₂ = slope·c₁ + offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamLine {
    pub slope: Rat,
    pub offset: Rat,
}

/// Two-parameter exploration: the diagonal c₁ = c₂ and `extra` seeded random lines.
pub fn rank_over_parameter_lines(
    m: &Matrix<CPoly>,
    extra: usize,
    seed: u64,
) -> Vec<(ParamLine, ExceptionalLocus)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = vec![ParamLine { slope: Rat::one(), offset: Rat::zero() }];
    for _ in 0..extra {
        let slope = Rat::new(rng.gen_range(-20..=20i64), rng.gen_range(1..=7i64));
        let offset = Rat::new(rng.gen_range(-20..=20i64), rng.gen_range(1..=7i64));
        lines.push(ParamLine { slope, offset });
    }
    let c1 = CPoly::param(0);
    lines
        .into_iter()
        .enumerate()
        .map(|(i, line)| {
            let image = c1.scale(&line.slope).add(&CPoly::constant(line.offset.clone()));
            let sliced = m.map(|x| x.compose(&c1, &image));
            let locus = rank_over_parameters(&sliced, seed.wrapping_add(i as u64 + 1));
            (line, locus)
        })
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn split_kernel_matches_unsplit() {
        let c = CPoly::param(0);
        let lin = |a: i64, b: i64| c.scale(&Rat::from(a)).add(&CPoly::from_i64(b));
        let z = CPoly::zero();
        // Columns {0, 2, 4} and {1, 3} are coupled; column 5 is untouched.
        let m = Matrix::from_rows(
            6,
            vec![
                vec![lin(1, 2), z.clone(), lin(0, 3), z.clone(), lin(2, -1), z.clone()],
                vec![z.clone(), lin(1, 1), z.clone(), lin(3, 0), z.clone(), z.clone()],
                vec![lin(0, 1), z.clone(), lin(1, 0), z.clone(), z.clone(), z.clone()],
            ],
        );
        assert_eq!(block_structure(&m).len(), 3);
        let split: Vec<Vec<CPoly>> = fraction_free_kernel(&m).iter().map(|v| primitive_vector(v)).collect();
        let whole: Vec<Vec<CPoly>> = connected_kernel(&m).iter().map(|(_, v)| primitive_vector(v)).collect();
        assert_eq!(split, whole);
        assert_eq!(fraction_free_rank(&m), 3);
    }

    #[test]
    fn identity_and_zero_kernels() {
        assert!(field_kernel(&Matrix::<Rat>::identity(3)).is_empty());
        assert_eq!(field_kernel(&Matrix::<Rat>::zeros(2, 3)).len(), 3);
    }

    #[test]
    fn bareiss_determinants() {
        assert_eq!(determinant(&Matrix::<Rat>::from_i64(&[&[2, 0], &[0, 3]])), q(6, 1));
        let c = CPoly::param(0);
        let m = Matrix::from_rows(2, vec![vec![c.clone(), CPoly::one()], vec![CPoly::one(), c.clone()]]);
        assert_eq!(determinant(&m), c.mul(&c).sub(&CPoly::one()));
        let m = Matrix::<Rat>::from_i64(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]]);
        assert_eq!(determinant(&m), q(-3, 1));
    }

    #[test]
    fn fraction_free_kernel_is_exact() {
        let c = CPoly::param(0);
        let one = CPoly::one();
        let m = Matrix::from_rows(
            4,
            vec![
                vec![c.clone(), one.clone(), CPoly::zero(), c.mul(&c)],
                vec![one.clone(), c.sub(&one), c.clone(), one.clone()],
            ],
        );
        let ker = CPoly::kernel(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn diagonal_exceptional_value() {
        let c = CPoly::param(0);
        let m = Matrix::from_rows(2, vec![vec![c, CPoly::zero()], vec![CPoly::zero(), CPoly::one()]]);
        let loc = rank_over_parameters(&m, 7);
        assert_eq!(loc.generic_rank, 2);
        assert_eq!(loc.confirmed, vec![(Rat::zero(), 1)]);
    }
}
