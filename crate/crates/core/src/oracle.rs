//! Brute-force isomorphism search over prime fields, and homomorphism checks.
//!
//! Any isomorphism between nilpotent evolution algebras, written in natural
//! bases ordered block by block, has the block pattern below: an image of a
//! basis vector from block k has coordinates only in block k and block 1.
//!
//! ```text
//!  * * * … *
//!  0 * 0 … 0
//!  0 0 * … 0
//!  0 0 0 … *
//! ```
//!
//! The search fills the block-k coordinates column by column, blocks 2..r in
//! order, pruning with two conditions. The first is orthogonality of columns
//! in one block. The second is the homomorphism condition outside block 1.
//! All block-1 coordinates then enter the remaining conditions linearly and
//! are solved for exactly. The only nonlinear leftover is invertibility of
//! the block-1 diagonal block, which is searched over the affine solution set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evolution::EvolutionAlgebra;
use crate::exactfield::{FieldDescriptor, FieldElement, FieldKind};
use crate::linalg::{vec_is_zero, Matrix, Vector};

/// Exhaustive search refuses pattern spaces larger than this.
pub const EXHAUSTIVE_LIMIT: f64 = 1e8;

/// Candidate columns are enumerated when there are at most this many.
const ENUMERATE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Randomized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub mode: SearchMode,
    /// Number of randomized descents; ignored by exhaustive search.
    pub max_trials: u64,
    pub seed: u64,
}

impl SearchBudget {
    pub fn exhaustive() -> Self {
        SearchBudget {
            mode: SearchMode::Exhaustive,
            max_trials: 0,
            seed: 0,
        }
    }

    pub fn randomized(max_trials: u64, seed: u64) -> Self {
        SearchBudget {
            mode: SearchMode::Randomized,
            max_trials,
            seed,
        }
    }
}

/// Whether x ↦ m·x maps E1 homomorphically into E2. The columns of m are the
/// images of E1's basis vectors.
pub fn verify_hom(e1: &EvolutionAlgebra, e2: &EvolutionAlgebra, m: &Matrix) -> Result<bool> {
    let n = e1.dim();
    if e2.dim() != n || m.rows() != n || m.cols() != n {
        return Err(Error::Shape("algebras and matrix must share one size".into()));
    }
    if e1.field() != e2.field() || m.field() != e1.field() {
        return Err(Error::MixedFields);
    }
    if !m.is_invertible() {
        return Err(Error::Singular);
    }
    let cols: Vec<Vector> = (0..n).map(|j| m.col(j)).collect();
    for i in 0..n {
        if m.mul_vec(&e1.square_of_basis(i))? != e2.square(&cols[i])? {
            return Ok(false);
        }
        for j in i + 1..n {
            if !vec_is_zero(&e2.multiply(&cols[i], &cols[j])?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn search_iso(e1: &EvolutionAlgebra, e2: &EvolutionAlgebra, budget: SearchBudget) -> Result<Option<Matrix>> {
    match budget.mode {
        SearchMode::Exhaustive => exhaustive_iso(e1, e2, budget),
        SearchMode::Randomized => randomized_iso(e1, e2, budget),
    }
}

/// The first isomorphism in a fixed enumeration order, or `None` when there
/// is none over this field. `None` is conclusive.
pub fn exhaustive_iso(e1: &EvolutionAlgebra, e2: &EvolutionAlgebra, _budget: SearchBudget) -> Result<Option<Matrix>> {
    let Some(prob) = Problem::new(e1, e2)? else {
        return Ok(None);
    };
    let space = (prob.p as f64).powi(prob.free_entries() as i32);
    if space > EXHAUSTIVE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "p^{} = {space:.3e} block-pattern matrices exceeds {EXHAUSTIVE_LIMIT:e}",
            prob.free_entries()
        )));
    }
    let mut state = vec![Vec::new(); prob.n];
    let found = prob.exhaust(0, &mut state)?;
    finish(e1, e2, found)
}

/// Seeded random descents through the same search tree. `None` is not
/// evidence of non-isomorphism.
pub fn randomized_iso(e1: &EvolutionAlgebra, e2: &EvolutionAlgebra, budget: SearchBudget) -> Result<Option<Matrix>> {
    let Some(prob) = Problem::new(e1, e2)? else {
        return Ok(None);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    for _ in 0..budget.max_trials {
        if let Some(m) = prob.descend(&mut rng)? {
            return finish(e1, e2, Some(m));
        }
    }
    Ok(None)
}

/// A random element: uniform over F_p, small Gaussian integers otherwise.
pub fn random_element<R: Rng>(field: FieldDescriptor, rng: &mut R) -> FieldElement {
    match field.modulus() {
        Some(p) => FieldElement::from_residue(field, rng.gen_range(0..p)),
        None => {
            let re = field.int(rng.gen_range(-4..=4));
            match field.i() {
                Ok(i) if rng.gen_bool(0.5) => re + i * field.int(rng.gen_range(-2..=2)),
                _ => re,
            }
        }
    }
}

/// A random change to another natural basis, following the block pattern
/// above: the annihilator block is mixed freely, every other block either
/// by a random matrix that happens to keep its columns orthogonal or by a
/// scaled permutation, and annihilator components are added throughout.
pub fn random_natural_basis_change<R: Rng>(e: &EvolutionAlgebra, rng: &mut R) -> Result<Matrix> {
    let field = e.field();
    let n = e.dim();
    let series = e.upper_series();
    if !series.nilpotent {
        return Err(Error::NotNilpotent);
    }
    let nonzero = |rng: &mut R| loop {
        let x = random_element(field, rng);
        if !x.is_zero() {
            return x;
        }
    };
    loop {
        let mut m = Matrix::zeros(field, n, n);
        for (k, block) in series.blocks.iter().enumerate() {
            let mut mixed = None;
            for _ in 0..if k == 0 { 1 } else { 8 } {
                let cols: Vec<Vec<FieldElement>> = block
                    .iter()
                    .map(|_| block.iter().map(|_| random_element(field, rng)).collect())
                    .collect();
                let vs: Vec<Vector> = cols
                    .iter()
                    .map(|c| {
                        let mut v = vec![field.zero(); n];
                        for (a, &l) in block.iter().enumerate() {
                            v[l] = c[a].clone();
                        }
                        v
                    })
                    .collect();
                let orthogonal = k == 0
                    || (0..vs.len()).all(|a| {
                        (a + 1..vs.len()).all(|b| e.multiply(&vs[a], &vs[b]).map_or(false, |p| vec_is_zero(&p)))
                    });
                if orthogonal {
                    mixed = Some(cols);
                    break;
                }
            }
            let cols = mixed.unwrap_or_else(|| {
                let mut perm: Vec<usize> = (0..block.len()).collect();
                for a in (1..perm.len()).rev() {
                    perm.swap(a, rng.gen_range(0..=a));
                }
                perm.iter()
                    .map(|&t| (0..block.len()).map(|a| if a == t { nonzero(rng) } else { field.zero() }).collect())
                    .collect()
            });
            for (a, &j) in block.iter().enumerate() {
                for (b, &l) in block.iter().enumerate() {
                    m.set(l, j, cols[a][b].clone());
                }
                if k > 0 {
                    for &l in &series.blocks[0] {
                        m.set(l, j, random_element(field, rng));
                    }
                }
            }
        }
        if m.is_invertible() {
            return Ok(m);
        }
    }
}

fn finish(e1: &EvolutionAlgebra, e2: &EvolutionAlgebra, found: Option<Matrix>) -> Result<Option<Matrix>> {
    match found {
        Some(m) if verify_hom(e1, e2, &m)? => Ok(Some(m)),
        Some(_) => Err(Error::Domain("search produced a matrix that is not a homomorphism".into())),
        None => Ok(None),
    }
}

struct Problem {
    p: u64,
    n: usize,
    field: crate::exactfield::FieldDescriptor,
    a1: Vec<Vec<u64>>,
    a2: Vec<Vec<u64>>,
    blocks1: Vec<Vec<usize>>,
    blocks2: Vec<Vec<usize>>,
    block_of1: Vec<usize>,
    /// E1 indices outside block 1, in search order.
    order: Vec<usize>,
    in_block1_2: Vec<bool>,
}

fn residues(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).residue().unwrap()).collect())
        .collect()
}

impl Problem {
    fn new(e1: &EvolutionAlgebra, e2: &EvolutionAlgebra) -> Result<Option<Problem>> {
        let field = e1.field();
        if field.kind() != FieldKind::PrimeField {
            return Err(Error::UnsupportedField(format!(
                "brute-force search needs a prime field, got {field}"
            )));
        }
        if e2.field() != field {
            return Err(Error::MixedFields);
        }
        let (s1, s2) = (e1.upper_series(), e2.upper_series());
        if e1.dim() != e2.dim() || !s1.nilpotent || !s2.nilpotent || s1.type_vector != s2.type_vector {
            return Ok(None);
        }
        let n = e1.dim();
        let mut block_of1 = vec![0; n];
        for (k, b) in s1.blocks.iter().enumerate() {
            for &i in b {
                block_of1[i] = k;
            }
        }
        let mut in_block1_2 = vec![false; n];
        for &l in &s2.blocks[0] {
            in_block1_2[l] = true;
        }
        Ok(Some(Problem {
            p: field.modulus().unwrap(),
            n,
            field,
            a1: residues(e1.structure()),
            a2: residues(e2.structure()),
            order: s1.blocks[1..].concat(),
            blocks1: s1.blocks,
            blocks2: s2.blocks,
            block_of1,
            in_block1_2,
        }))
    }

    fn free_entries(&self) -> usize {
        let n1 = self.blocks1[0].len();
        self.blocks1.iter().map(|b| b.len() * b.len()).sum::<usize>() + n1 * (self.n - n1)
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Σₐ wₐ·(row of E2 for the a-th index of block k).
    fn weighted_rows(&self, k: usize, w: impl Fn(usize) -> u64) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for (a, &l) in self.blocks2[k].iter().enumerate() {
            let c = w(a);
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(&self.a2[l]) {
                    *o = (*o + self.mulm(c, x)) % self.p;
                }
            }
        }
        out
    }

    /// Whether x can be the block coordinates of column `pos` given the
    /// columns already fixed in `state`.
    fn admissible(&self, pos: usize, x: &[u64], state: &[Vec<u64>]) -> bool {
        let i = self.order[pos];
        let k = self.block_of1[i];
        // φ(eᵢ)² outside block 1 against φ(eᵢ²) = Σ A1[i][m] φ(e_m)
        let sq = self.weighted_rows(k, |a| self.mulm(x[a], x[a]));
        let mut rhs = vec![0u64; self.n];
        for m in 0..self.n {
            let c = self.a1[i][m];
            let km = self.block_of1[m];
            if c != 0 && km > 0 {
                for (a, &l) in self.blocks2[km].iter().enumerate() {
                    rhs[l] = (rhs[l] + self.mulm(c, state[m][a])) % self.p;
                }
            }
        }
        if (0..self.n).any(|l| !self.in_block1_2[l] && sq[l] != rhs[l]) {
            return false;
        }
        let earlier: Vec<&Vec<u64>> = self.order[..pos]
            .iter()
            .filter(|&&j| self.block_of1[j] == k)
            .map(|&j| &state[j])
            .collect();
        for y in &earlier {
            if self.weighted_rows(k, |a| self.mulm(x[a], y[a])).iter().any(|&v| v != 0) {
                return false;
            }
        }
        let mut rows: Vec<Vec<u64>> = earlier.into_iter().cloned().collect();
        rows.push(x.to_vec());
        let want = rows.len();
        self.rank(rows) == want && self.block1_consistent(pos, x, state)
    }

    /// Whether the block-1 conditions of the columns fixed so far (with x at
    /// `pos`) admit a solution. They are linear in the block-1 unknowns.
    fn block1_consistent(&self, pos: usize, x: &[u64], state: &[Vec<u64>]) -> bool {
        let n1 = self.blocks1[0].len();
        let mut slot = vec![usize::MAX; self.n];
        for (s, &m) in self.blocks1[0].iter().chain(&self.order).enumerate() {
            slot[m] = s;
        }
        let unknowns = self.n * n1;
        let mut aug: Vec<Vec<u64>> = Vec::new();
        for (q, &i) in self.order[..=pos].iter().enumerate() {
            let xi: &[u64] = if q == pos { x } else { &state[i] };
            let sq = self.weighted_rows(self.block_of1[i], |a| self.mulm(xi[a], xi[a]));
            for (c, &l) in self.blocks2[0].iter().enumerate() {
                let mut row = vec![0u64; unknowns + 1];
                for m in 0..self.n {
                    if self.a1[i][m] != 0 {
                        row[slot[m] * n1 + c] = self.a1[i][m];
                    }
                }
                row[unknowns] = sq[l];
                aug.push(row);
            }
        }
        let coeffs: Vec<Vec<u64>> = aug.iter().map(|r| r[..unknowns].to_vec()).collect();
        self.rank(coeffs) == self.rank(aug)
    }

    fn rank(&self, mut rows: Vec<Vec<u64>>) -> usize {
        let p = self.p;
        let cols = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = pow_mod(rows[r][c], p - 2, p);
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = self.mulm(rows[i][c], inv);
                    for j in c..cols {
                        let sub = self.mulm(f, rows[r][j]);
                        rows[i][j] = (rows[i][j] + p - sub) % p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn vector_at(&self, mut idx: u64, len: usize) -> Vec<u64> {
        // most significant digit first, so idx order is lexicographic order
        let mut v = vec![0u64; len];
        for a in (0..len).rev() {
            v[a] = idx % self.p;
            idx /= self.p;
        }
        v
    }

    fn column_count(&self, len: usize) -> u64 {
        self.p.saturating_pow(len as u32)
    }

    fn exhaust(&self, pos: usize, state: &mut Vec<Vec<u64>>) -> Result<Option<Matrix>> {
        if pos == self.order.len() {
            return self.close(state, None);
        }
        let len = self.blocks1[self.block_of1[self.order[pos]]].len();
        for idx in 0..self.column_count(len) {
            let x = self.vector_at(idx, len);
            if self.admissible(pos, &x, state) {
                state[self.order[pos]] = x;
                if let Some(m) = self.exhaust(pos + 1, state)? {
                    return Ok(Some(m));
                }
            }
        }
        Ok(None)
    }

    fn descend(&self, rng: &mut ChaCha8Rng) -> Result<Option<Matrix>> {
        let mut state = vec![Vec::new(); self.n];
        for pos in 0..self.order.len() {
            let len = self.blocks1[self.block_of1[self.order[pos]]].len();
            let total = self.column_count(len);
            let pick = if total <= ENUMERATE_LIMIT {
                let valid: Vec<Vec<u64>> = (0..total)
                    .map(|idx| self.vector_at(idx, len))
                    .filter(|x| self.admissible(pos, x, &state))
                    .collect();
                if valid.is_empty() {
                    None
                } else {
                    Some(valid[rng.gen_range(0..valid.len())].clone())
                }
            } else {
                (0..ENUMERATE_LIMIT)
                    .map(|_| (0..len).map(|_| rng.gen_range(0..self.p)).collect::<Vec<u64>>())
                    .find(|x| self.admissible(pos, x, &state))
            };
            match pick {
                Some(x) => state[self.order[pos]] = x,
                None => return Ok(None),
            }
        }
        self.close(&state, Some(rng))
    }

    /// Solves for all block-1 coordinates and assembles the matrix.
    fn close(&self, state: &[Vec<u64>], rng: Option<&mut ChaCha8Rng>) -> Result<Option<Matrix>> {
        let f = self.field;
        let fe = |r: u64| FieldElement::from_residue(f, r);
        let b1 = &self.blocks1[0];
        let b1_2 = &self.blocks2[0];
        let n1 = b1.len();
        // unknown slot for (E1 index m, block-1 coordinate c)
        let mut slot = vec![usize::MAX; self.n];
        for (s, &m) in b1.iter().chain(&self.order).enumerate() {
            slot[m] = s;
        }
        let unknowns = self.n * n1;
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vector = Vec::new();
        for &i in &self.order {
            let sq = self.weighted_rows(self.block_of1[i], |a| self.mulm(state[i][a], state[i][a]));
            for (c, &l) in b1_2.iter().enumerate() {
                let mut row = vec![f.zero(); unknowns];
                for m in 0..self.n {
                    if self.a1[i][m] != 0 {
                        row[slot[m] * n1 + c] = fe(self.a1[i][m]);
                    }
                }
                rows.push(row);
                rhs.push(fe(sq[l]));
            }
        }
        let sys = Matrix::from_rows(f, unknowns, &rows)?;
        let Some(z0) = sys.solve(&rhs)? else {
            return Ok(None);
        };
        let kernel = sys.kernel().basis_vectors();
        // directions that move the block-1 diagonal block, kept independent
        let head = n1 * n1;
        let mut dirs: Vec<Vector> = Vec::new();
        for k in kernel {
            let mut trial: Vec<Vector> = dirs.iter().map(|d| d[..head].to_vec()).collect();
            trial.push(k[..head].to_vec());
            if Matrix::from_rows(f, head, &trial)?.rank() == trial.len() {
                dirs.push(k);
            }
        }
        let point = |t: &[u64]| -> Vector {
            let mut z = z0.clone();
            for (d, &tj) in dirs.iter().zip(t) {
                if tj != 0 {
                    z = crate::linalg::vec_axpy(&z, &fe(tj), d);
                }
            }
            z
        };
        let det_ok = |z: &Vector| -> bool {
            let rows: Vec<Vec<u64>> = (0..n1)
                .map(|a| (0..n1).map(|c| z[a * n1 + c].residue().unwrap()).collect())
                .collect();
            self.rank(rows) == n1
        };
        let chosen = match rng {
            None => {
                let total = self.column_count(dirs.len());
                (0..total).map(|idx| point(&self.vector_at(idx, dirs.len()))).find(|z| det_ok(z))
            }
            Some(rng) => (0..256)
                .map(|_| point(&(0..dirs.len()).map(|_| rng.gen_range(0..self.p)).collect::<Vec<_>>()))
                .find(|z| det_ok(z)),
        };
        let Some(z) = chosen else {
            return Ok(None);
        };
        let mut m = Matrix::zeros(f, self.n, self.n);
        for (idx, &col) in b1.iter().chain(&self.order).enumerate() {
            for (c, &l) in b1_2.iter().enumerate() {
                m.set(l, col, z[idx * n1 + c].clone());
            }
        }
        for &i in &self.order {
            for (a, &l) in self.blocks2[self.block_of1[i]].iter().enumerate() {
                m.set(l, i, fe(state[i][a]));
            }
        }
        Ok(Some(m))
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldDescriptor;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn chain4(f: FieldDescriptor) -> EvolutionAlgebra {
        EvolutionAlgebra::from_ints(f, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]])
    }

    fn second_1111(f: FieldDescriptor) -> EvolutionAlgebra {
        EvolutionAlgebra::from_ints(f, &[&[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]])
    }

    #[test]
    fn verify_hom_examples() {
        let e = chain4(gf(5));
        assert!(verify_hom(&e, &e, &Matrix::identity(gf(5), 4)).unwrap());
        let perm = [3, 1, 0, 2];
        let relabeled = e.permute(&perm);
        // old e_{perm[k]} becomes new e_k
        let mut m = Matrix::zeros(gf(5), 4, 4);
        for (k, &old) in perm.iter().enumerate() {
            m.set(k, old, gf(5).one());
        }
        assert!(verify_hom(&e, &relabeled, &m).unwrap());
        assert_eq!(verify_hom(&e, &e, &Matrix::zeros(gf(5), 4, 4)), Err(Error::Singular));
    }

    #[test]
    fn exhaustive_examples() {
        let f3 = gf(3);
        assert_eq!(exhaustive_iso(&chain4(f3), &second_1111(f3), SearchBudget::exhaustive()).unwrap(), None);
        let f5 = gf(5);
        let v1 = EvolutionAlgebra::from_ints(f5, &[&[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let mut s = Matrix::identity(f5, 4);
        for i in 0..4 {
            s.set(i, i, f5.int(2));
        }
        let scaled = v1.change_basis(&s).unwrap();
        let w = exhaustive_iso(&v1, &scaled, SearchBudget::exhaustive()).unwrap().unwrap();
        assert!(verify_hom(&v1, &scaled, &w).unwrap());
        let t12 = EvolutionAlgebra::from_ints(f3, &[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]]);
        let t111 = EvolutionAlgebra::from_ints(f3, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(exhaustive_iso(&t12, &t111, SearchBudget::exhaustive()).unwrap(), None);
        let q = FieldDescriptor::rationals();
        let eq = EvolutionAlgebra::from_ints(q, &[&[0, 1], &[0, 0]]);
        assert!(matches!(exhaustive_iso(&eq, &eq, SearchBudget::exhaustive()), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn exhaustive_respects_budget() {
        let f = gf(13);
        let star = EvolutionAlgebra::from_ints(
            f,
            &[&[0, 0, 0, 0, 1], &[0, 0, 0, 0, 1], &[0, 0, 0, 0, 1], &[0, 0, 0, 0, 1], &[0, 0, 0, 0, 0]],
        );
        assert!(matches!(exhaustive_iso(&star, &star, SearchBudget::exhaustive()), Err(Error::BudgetExceeded(_))));
        let w = randomized_iso(&star, &star, SearchBudget::randomized(50, 1)).unwrap().unwrap();
        assert!(verify_hom(&star, &star, &w).unwrap());
    }

    #[test]
    fn randomized_examples() {
        let f = gf(13);
        let e = chain4(f);
        assert!(randomized_iso(&e, &e, SearchBudget::randomized(10, 7)).unwrap().is_some());
        assert_eq!(randomized_iso(&e, &e, SearchBudget::randomized(0, 7)).unwrap(), None);
        assert_eq!(randomized_iso(&e, &second_1111(f), SearchBudget::randomized(20, 7)).unwrap(), None);
    }

    #[test]
    fn search_is_symmetric_on_small_pairs() {
        let f3 = gf(3);
        let algebras = [
            chain4(f3),
            second_1111(f3),
            EvolutionAlgebra::from_ints(f3, &[&[0, 0, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]),
            EvolutionAlgebra::from_ints(f3, &[&[0, 0, 1, 0], &[0, 0, 1, 1], &[0, 0, 0, 1], &[0, 0, 0, 0]]),
        ];
        for a in &algebras {
            for b in &algebras {
                let ab = exhaustive_iso(a, b, SearchBudget::exhaustive()).unwrap().is_some();
                let ba = exhaustive_iso(b, a, SearchBudget::exhaustive()).unwrap().is_some();
                assert_eq!(ab, ba);
                assert_eq!(ab, a == b);
            }
        }
    }
}
