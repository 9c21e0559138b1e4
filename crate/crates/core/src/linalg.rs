//! Dense exact linear algebra: row reduction, kernels, subspaces.
//!
//! Matrices act on column vectors. A [`Subspace`] stores its basis as the rows
//! of a matrix in reduced row echelon form, which makes equality structural.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{FieldDescriptor, FieldElement};

pub type Vector = Vec<FieldElement>;

pub fn zero_vector(field: FieldDescriptor, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldDescriptor, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn vec_add(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &FieldElement, a: &[FieldElement]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// a + c·b
pub fn vec_axpy(a: &[FieldElement], c: &FieldElement, b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

pub fn vec_is_zero(a: &[FieldElement]) -> bool {
    a.iter().all(FieldElement::is_zero)
}

/// Linear combination Σ cᵢ·vᵢ of equal-length vectors.
pub fn combine(field: FieldDescriptor, n: usize, terms: &[(FieldElement, &[FieldElement])]) -> Vector {
    let mut out = zero_vector(field, n);
    for (c, v) in terms {
        out = vec_axpy(&out, c, v);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(field: FieldDescriptor, rows: usize, cols: usize, data: Vec<FieldElement>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|x| x.descriptor() != field) {
            return Err(Error::MixedFields);
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(field: FieldDescriptor, cols: usize, rows: &[Vector]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    /// Small-integer matrices, mostly for tests and tables.
    pub fn from_ints(field: FieldDescriptor, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vs: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.int(x)).collect())
            .collect();
        Self::from_rows(field, cols, &vs).expect("rectangular integer rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldDescriptor, rows: usize, cols: &[Vector]) -> Result<Self> {
        Ok(Self::from_rows(field, rows, cols)?.transpose())
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        assert_eq!(x.descriptor(), self.field, "entry from another field");
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        if self.field != o.field {
            return Err(Error::MixedFields);
        }
        let mut out = Self::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc = acc + a * o.get(k, j);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// m·v for a column vector v.
    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc + self.get(i, j) * x;
                    }
                }
                acc
            })
            .collect())
    }

    /// Reduced row echelon form and rank. Pivots are the first nonzero entry
    /// in column order.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = m.get(rank, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(rank, j) * &inv;
                m.set(rank, j, x);
            }
            for r in 0..m.rows {
                if r != rank && !m.get(r, c).is_zero() {
                    let f = m.get(r, c).clone();
                    for j in c..m.cols {
                        let x = m.get(r, j) - &f * m.get(rank, j);
                        m.set(r, j, x);
                    }
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Pivot column of each nonzero row of an RREF matrix.
    fn pivots(&self) -> Vec<usize> {
        (0..self.rows)
            .filter_map(|i| (0..self.cols).find(|&j| !self.get(i, j).is_zero()))
            .collect()
    }

    /// {x : m·x = 0}.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let pivots = r.pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = zero_vector(self.field, self.cols);
            v[free] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = -r.get(i, free);
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, &basis).expect("kernel vectors have ambient length")
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, _) = aug.rref();
        for i in 0..n {
            if !r.get(i, i).is_one() {
                return Err(Error::Singular);
            }
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Some x with m·x = b, if the system is consistent.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::Shape("right-hand side length".into()));
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, _) = aug.rref();
        let mut x = zero_vector(self.field, self.cols);
        for (i, pc) in r.pivots().into_iter().enumerate() {
            if pc == self.cols {
                return Ok(None);
            }
            x[pc] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn rref(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}

pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

/// A subspace of F^n in canonical (RREF) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldDescriptor, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: FieldDescriptor, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn span(field: FieldDescriptor, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::AmbientMismatch(
                ambient,
                vectors.iter().map(Vec::len).find(|&l| l != ambient).unwrap(),
            ));
        }
        let (r, rank) = Matrix::from_rows(field, ambient, vectors)?.rref();
        let rows: Vec<Vector> = (0..rank).map(|i| r.row(i)).collect();
        Ok(Subspace {
            ambient,
            basis: Matrix::from_rows(field, ambient, &rows)?,
        })
    }

    /// Span of the natural basis vectors with the given indices.
    pub fn coordinate(field: FieldDescriptor, ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices.iter().map(|&i| unit_vector(field, ambient, i)).collect();
        Self::span(field, ambient, &vs).expect("unit vectors fit the ambient space")
    }

    pub fn field(&self) -> FieldDescriptor {
        self.basis.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis matrix, one basis vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field() != other.field() {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Self::span(self.field(), self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Ok(Self::zero(self.field(), self.ambient));
        }
        // columns s_1..s_k, -t_1..-t_l; a kernel vector (a, b) gives Σ aᵢsᵢ in both
        let mut cols = self.basis_vectors();
        cols.extend(other.basis_vectors().iter().map(|t| t.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.field(), self.ambient, &cols)?;
        let s = self.basis_vectors();
        let vs: Vec<Vector> = m
            .kernel()
            .basis_vectors()
            .iter()
            .map(|c| {
                let terms: Vec<(FieldElement, &[FieldElement])> =
                    (0..k).map(|i| (c[i].clone(), s[i].as_slice())).collect();
                combine(self.field(), self.ambient, &terms)
            })
            .collect();
        Self::span(self.field(), self.ambient, &vs)
    }

    /// Residual of v after elimination against the RREF rows.
    pub fn reduce(&self, v: &[FieldElement]) -> Result<Vector> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        let mut r = v.to_vec();
        for (i, pc) in self.basis.pivots().into_iter().enumerate() {
            if !r[pc].is_zero() {
                let c = r[pc].clone();
                r = vec_axpy(&r, &-c, &self.basis.row(i));
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        Ok(vec_is_zero(&self.reduce(v)?))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        other.check(self)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of v in the RREF basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &[FieldElement]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.basis.pivots().into_iter().map(|pc| v[pc].clone()).collect()))
    }

    /// Natural basis indices whose unit vectors complete a basis of this
    /// subspace to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let pivots = self.basis.pivots();
        (0..self.ambient).filter(|c| !pivots.contains(c)).collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis_vectors()
            .iter()
            .map(|v| format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

pub fn subspace_sum(s: &Subspace, t: &Subspace) -> Result<Subspace> {
    s.sum(t)
}

pub fn subspace_intersect(s: &Subspace, t: &Subspace) -> Result<Subspace> {
    s.intersect(t)
}

pub fn contains_vector(s: &Subspace, v: &[FieldElement]) -> Result<bool> {
    s.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }
    fn f13() -> FieldDescriptor {
        FieldDescriptor::prime(13).unwrap()
    }
    fn ints(f: FieldDescriptor, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let m = Matrix::from_ints(q(), &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), (Matrix::from_ints(q(), &[&[1, 2], &[0, 0]]), 1));
        let p = Matrix::from_ints(f13(), &[&[0, 1], &[1, 0]]);
        assert_eq!(p.rref(), (Matrix::identity(f13(), 2), 2));
        let (r, _) = m.rref();
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::zeros(q(), 2, 2).kernel().is_full());
        assert!(Matrix::identity(q(), 3).kernel().is_zero());
        let k = Matrix::from_ints(q(), &[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::span(q(), 2, &[ints(q(), &[1, -1])]).unwrap());
    }

    #[test]
    fn lattice_examples() {
        let e = |i| Subspace::coordinate(q(), 3, &[i]);
        let s = Subspace::span(q(), 3, &[ints(q(), &[1, 2, 3])]).unwrap();
        assert_eq!(s.sum(&Subspace::zero(q(), 3)).unwrap(), s);
        assert_eq!(e(0).sum(&e(1)).unwrap(), Subspace::coordinate(q(), 3, &[0, 1]));
        assert_eq!(s.sum(&s).unwrap(), s);
        assert_eq!(s.intersect(&s).unwrap(), s);
        assert!(e(0).intersect(&e(1)).unwrap().is_zero());
        let a = Subspace::coordinate(q(), 3, &[0, 1]);
        let b = Subspace::coordinate(q(), 3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), e(1));
        assert!(a.intersect(&Subspace::zero(q(), 2)).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(q(), 2, &[ints(q(), &[1, 1])]).unwrap();
        assert!(s.contains(&ints(q(), &[0, 0])).unwrap());
        assert!(!Subspace::coordinate(q(), 2, &[1]).contains(&ints(q(), &[1, 0])).unwrap());
        assert!(s.contains(&ints(q(), &[1, 1])).unwrap());
        assert!(s.contains(&ints(q(), &[1])).is_err());
        assert_eq!(s.coordinates(&ints(q(), &[3, 3])).unwrap(), Some(ints(q(), &[3])));
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_ints(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(q(), 2));
        assert_eq!(Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        let x = m.solve(&ints(q(), &[3, 2])).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), ints(q(), &[3, 2]));
        let sing = Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]);
        assert_eq!(sing.solve(&ints(q(), &[1, 2])).unwrap(), None);
    }

    fn f13_vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vector>> {
        proptest::collection::vec(proptest::collection::vec(0i64..13, n), 0..=k)
            .prop_map(|vs| vs.iter().map(|v| ints(f13(), v)).collect())
    }

    fn dim_and_pair() -> impl Strategy<Value = (usize, Vec<Vector>, Vec<Vector>)> {
        (1usize..=6).prop_flat_map(|n| (Just(n), f13_vectors(n, n), f13_vectors(n, n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn grassmann_identity((n, a, b) in dim_and_pair()) {
            let s = Subspace::span(f13(), n, &a).unwrap();
            let t = Subspace::span(f13(), n, &b).unwrap();
            let sum = s.sum(&t).unwrap();
            let cap = s.intersect(&t).unwrap();
            prop_assert_eq!(s.dim() + t.dim(), sum.dim() + cap.dim());
            prop_assert!(cap.is_subspace_of(&s).unwrap() && cap.is_subspace_of(&t).unwrap());
            prop_assert!(s.is_subspace_of(&sum).unwrap());
        }

        #[test]
        fn kernel_is_annihilated((n, a, _b) in dim_and_pair()) {
            let m = Matrix::from_rows(f13(), n, &a).unwrap();
            let k = m.kernel();
            prop_assert_eq!(k.dim(), n - m.rank());
            for v in k.basis_vectors() {
                prop_assert!(vec_is_zero(&m.mul_vec(&v).unwrap()));
            }
        }

        #[test]
        fn rref_is_canonical((n, a, mix) in dim_and_pair()) {
            let s = Subspace::span(f13(), n, &a).unwrap();
            let k = s.dim();
            // mix the basis by a random square matrix; keep it only when invertible
            let mut g = Matrix::identity(f13(), k);
            for i in 0..k {
                for j in 0..k {
                    if let Some(v) = mix.get(i) { g.set(i, j, v[j % n].clone()); }
                }
            }
            prop_assume!(g.is_invertible());
            let mixed = g.mul(s.basis()).unwrap();
            prop_assert_eq!(Subspace::span(f13(), n, &mixed.row_vectors()).unwrap(), s);
        }
    }
}
