//! Exact linear algebra over the scalar field on finitely supported vectors.
//!
//! Vectors are sparse maps from an ordered basis-key type to scalars. The key
//! type is generic: PBW monomials, tensor pairs of monomials, and plain column
//! indices are all used. Everything is deterministic; elimination follows the
//! key order, so identical inputs give identical echelon bases.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A finitely supported vector with exact entries; zero entries are not stored.
pub type CoordVector<K> = BTreeMap<K, Scalar>;

/// Adds `c * src` into `dst`, dropping entries that cancel to zero.
pub fn axpy<K: Ord + Clone>(dst: &mut CoordVector<K>, c: &Scalar, src: &CoordVector<K>) {
    if c.is_zero() {
        return;
    }
    for (k, v) in src {
        let entry = dst.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += &(c * v);
        if entry.is_zero() {
            dst.remove(k);
        }
    }
}

pub fn scale<K: Ord + Clone>(v: &CoordVector<K>, c: &Scalar) -> CoordVector<K> {
    if c.is_zero() {
        return CoordVector::new();
    }
    v.iter().map(|(k, x)| (k.clone(), c * x)).collect()
}

/// A basis of the span of some vectors, in reduced row-echelon form.
///
/// Row i has pivot key `pivots[i]` with entry exactly 1, pivots strictly
/// increase in the key order, and every pivot column is zero in all other rows.
#[derive(Debug, Clone)]
pub struct Basis<K: Ord + Clone> {
    rows: Vec<CoordVector<K>>,
    pivots: Vec<K>,
}

impl<K: Ord + Clone> Basis<K> {
    pub fn empty() -> Self {
        Basis { rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[CoordVector<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[K] {
        &self.pivots
    }

    /// Reduces `v` against the basis, returning the residue.
    pub fn reduce(&self, v: &CoordVector<K>) -> CoordVector<K> {
        let mut r = v.clone();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = r.get(p).cloned() {
                axpy(&mut r, &(-&c), row);
            }
        }
        r
    }

    /// Inserts a vector, extending the basis if it is independent.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, v: &CoordVector<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        r = scale(&r, &inv);
        // Back-substitute into existing rows to keep the form reduced.
        for row in &mut self.rows {
            if let Some(c) = row.get(&pivot).cloned() {
                let minus = -&c;
                axpy(row, &minus, &r);
            }
        }
        let at = self
            .pivots
            .binary_search(&pivot)
            .expect_err("pivot cannot already exist");
        self.pivots.insert(at, pivot);
        self.rows.insert(at, r);
        true
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &CoordVector<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Row-reduces a list of vectors into an echelon basis of their span.
pub fn row_reduce<K: Ord + Clone>(vectors: &[CoordVector<K>]) -> Basis<K> {
    let mut b = Basis::empty();
    for v in vectors {
        b.insert(v);
    }
    b
}

/// Echelonised span of a vector list with combination tracking, for repeated
/// exact solves against the same (not necessarily independent) spanning set.
#[derive(Debug, Clone)]
pub struct SpanSolver<K: Ord + Clone> {
    rows: Vec<CoordVector<K>>,
    combos: Vec<Vec<Scalar>>,
    pivots: Vec<K>,
    n: usize,
}

impl<K: Ord + Clone> SpanSolver<K> {
    pub fn new(vectors: &[CoordVector<K>]) -> Self {
        let mut rows: Vec<CoordVector<K>> = Vec::new();
        let mut combos: Vec<Vec<Scalar>> = Vec::new();
        let mut pivots: Vec<K> = Vec::new();
        let n = vectors.len();
        for (i, v) in vectors.iter().enumerate() {
            let mut r = v.clone();
            let mut combo = vec![Scalar::zero(); n];
            combo[i] = Scalar::one();
            for ((row, p), rc) in rows.iter().zip(&pivots).zip(&combos) {
                if let Some(c) = r.get(p).cloned() {
                    let minus = -&c;
                    axpy(&mut r, &minus, row);
                    for (dst, src) in combo.iter_mut().zip(rc) {
                        *dst += &(&minus * src);
                    }
                }
            }
            let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                continue;
            };
            let inv = lead.inv().expect("nonzero pivot");
            r = scale(&r, &inv);
            for c in combo.iter_mut() {
                *c *= &inv;
            }
            let at = pivots.binary_search(&pivot).expect_err("fresh pivot");
            pivots.insert(at, pivot);
            rows.insert(at, r);
            combos.insert(at, combo);
        }
        SpanSolver { rows, combos, pivots, n }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Exact coefficients over the original vector list, or None when `x` is
    /// outside the span. For dependent inputs the representative combination
    /// is deterministic.
    pub fn solve(&self, x: &CoordVector<K>) -> Option<Vec<Scalar>> {
        let mut r = x.clone();
        let mut out = vec![Scalar::zero(); self.n];
        for ((row, p), rc) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if let Some(c) = r.get(p).cloned() {
                axpy(&mut r, &(-&c), row);
                for (dst, src) in out.iter_mut().zip(rc) {
                    *dst += &(&c * src);
                }
            }
        }
        if r.is_empty() {
            Some(out)
        } else {
            None
        }
    }
}

/// Expresses `x` in a given (not necessarily echelon) list of vectors.
///
/// Returns exact coefficients c with x = sum c_i vectors[i], or None when x is
/// not in the span.
pub fn solve_in_span<K: Ord + Clone>(
    vectors: &[CoordVector<K>],
    x: &CoordVector<K>,
) -> Option<Vec<Scalar>> {
    SpanSolver::new(vectors).solve(x)
}

/// Exact coefficients of `x` over an echelon basis, or None when not in span.
pub fn coordinates<K: Ord + Clone>(x: &CoordVector<K>, basis: &Basis<K>) -> Option<Vec<Scalar>> {
    let mut r = x.clone();
    let mut coeffs = vec![Scalar::zero(); basis.rank()];
    for (i, (row, p)) in basis.rows.iter().zip(&basis.pivots).enumerate() {
        if let Some(c) = r.get(p).cloned() {
            axpy(&mut r, &(-&c), row);
            coeffs[i] = c;
        }
    }
    if r.is_empty() {
        Some(coeffs)
    } else {
        None
    }
}

/// Exact null space of the linear map sending unit vector e_i to columns[i].
///
/// The kernel vectors are returned as a basis over column indices.
pub fn kernel<K: Ord + Clone>(columns: &[CoordVector<K>]) -> Vec<CoordVector<usize>> {
    // Echelonise the columns, tracking combinations; every dependent column
    // yields one kernel vector.
    let mut rows: Vec<CoordVector<K>> = Vec::new();
    let mut combos: Vec<CoordVector<usize>> = Vec::new();
    let mut pivots: Vec<K> = Vec::new();
    let mut out = Vec::new();
    for (i, v) in columns.iter().enumerate() {
        let mut r = v.clone();
        let mut combo: CoordVector<usize> = BTreeMap::new();
        combo.insert(i, Scalar::one());
        for ((row, p), rc) in rows.iter().zip(&pivots).zip(&combos) {
            if let Some(c) = r.get(p).cloned() {
                let minus = -&c;
                axpy(&mut r, &minus, row);
                axpy(&mut combo, &minus, rc);
            }
        }
        match r.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            None => out.push(combo),
            Some((pivot, lead)) => {
                let inv = lead.inv().expect("nonzero pivot");
                r = scale(&r, &inv);
                combo = scale(&combo, &inv);
                let at = pivots.binary_search(&pivot).expect_err("fresh pivot");
                pivots.insert(at, pivot);
                rows.insert(at, r);
                combos.insert(at, combo);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(pairs: &[(u32, i64)]) -> CoordVector<u32> {
        pairs
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|&(k, c)| (k, Scalar::from_int(c)))
            .collect()
    }

    #[test]
    fn dependent_vectors_have_rank_one() {
        let v = vec_of(&[(0, 1), (2, 3)]);
        let w = scale(&v, &Scalar::from_int(2));
        let b = row_reduce(&[v.clone(), w]);
        assert_eq!(b.rank(), 1);
        assert!(b.contains(&v));
    }

    #[test]
    fn coordinates_of_basis_vectors() {
        let b1 = vec_of(&[(0, 1)]);
        let b2 = vec_of(&[(1, 1)]);
        let basis = row_reduce(&[b1.clone(), b2]);
        let c = coordinates(&b1, &basis).unwrap();
        assert_eq!(c, vec![Scalar::one(), Scalar::zero()]);
    }

    #[test]
    fn not_in_span_is_detected() {
        let basis = row_reduce(&[vec_of(&[(0, 1), (1, 1)])]);
        assert!(coordinates(&vec_of(&[(0, 1)]), &basis).is_none());
    }

    #[test]
    fn identity_matrix_has_empty_kernel() {
        let cols = vec![vec_of(&[(0, 1)]), vec_of(&[(1, 1)]), vec_of(&[(2, 1)])];
        assert!(kernel(&cols).is_empty());
    }

    #[test]
    fn rank_nullity_on_a_singular_matrix() {
        let cols = vec![
            vec_of(&[(0, 1), (1, 2)]),
            vec_of(&[(0, 2), (1, 4)]),
            vec_of(&[(0, 0), (1, 1)]),
        ];
        let ker = kernel(&cols);
        let rank = row_reduce(&cols).rank();
        assert_eq!(rank + ker.len(), cols.len());
        // Kernel vectors really annihilate the matrix.
        for kv in &ker {
            let mut img: CoordVector<u32> = BTreeMap::new();
            for (i, c) in kv {
                axpy(&mut img, c, &cols[*i]);
            }
            assert!(img.is_empty());
        }
    }

    #[test]
    fn solve_in_span_recovers_combination() {
        let a = vec_of(&[(0, 1), (1, 1)]);
        let b = vec_of(&[(1, 1), (2, 1)]);
        let mut target: CoordVector<u32> = BTreeMap::new();
        axpy(&mut target, &Scalar::from_int(3), &a);
        axpy(&mut target, &Scalar::from_int(-2), &b);
        let c = solve_in_span(&[a.clone(), b.clone()], &target).unwrap();
        assert_eq!(c, vec![Scalar::from_int(3), Scalar::from_int(-2)]);
        assert!(solve_in_span(&[a], &vec_of(&[(2, 1)])).is_none());
    }

    #[test]
    fn every_input_has_coordinates_in_its_own_span() {
        let vs = vec![
            vec_of(&[(0, 2), (3, 5)]),
            vec_of(&[(1, 1), (3, -1)]),
            vec_of(&[(0, 2), (1, 1), (3, 4)]),
        ];
        let b = row_reduce(&vs);
        for v in &vs {
            assert!(coordinates(v, &b).is_some());
        }
    }
}
