//! Evolution algebras given by a structure matrix in a natural basis.
//!
//! Row i of the structure matrix holds the coordinates of eᵢ², and eᵢeⱼ = 0
//! for i ≠ j. Indices are 0-based in the API; reports print them 1-based.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::exactfield::{FieldDescriptor, FieldElement};
use crate::linalg::{unit_vector, vec_axpy, vec_is_zero, zero_vector, Matrix, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvolutionAlgebra {
    dim: usize,
    field: FieldDescriptor,
    structure: Matrix,
}

/// The upper annihilating series ann¹ ⊆ ann² ⊆ … together with the blocks
/// Bᵢ of natural basis indices entering at each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnSeries {
    pub chain: Vec<Subspace>,
    pub blocks: Vec<Vec<usize>>,
    pub type_vector: Vec<usize>,
    pub nilpotent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Right,
    Plenary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub vertex_count: usize,
    /// (source, target, weight), sorted, weights nonzero.
    pub edges: Vec<(usize, usize, FieldElement)>,
}

/// Which sufficient criterion settled a decomposability question.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Disconnected,
    AnnNotInSquare,
    LargeAnnihilator,
    TypeN1M,
    OneDimensionalAnn,
    LongSeries,
    OneDimensional,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// E = I ⊕ J with I, J nonzero ideals, when the witness is known.
    Decomposable {
        rule: Rule,
        witness: Option<(Subspace, Subspace)>,
    },
    Indecomposable(Rule),
    Unknown,
}

impl Verdict {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, Verdict::Decomposable { .. })
    }
}

/// The discriminating dimensions used by the classification.
///
/// Indexing: `block_square_dims[k]` is dim (U_{k+2} ⊕ U₁)², and likewise for
/// `block_square_square_dims` with ((U_{k+2} ⊕ U₁)²)².
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantProfile {
    pub type_vector: Vec<usize>,
    pub dim_square: usize,
    pub block_square_dims: Vec<usize>,
    pub block_square_square_dims: Vec<usize>,
    pub u3_square_square_dim: Option<usize>,
    pub u4_square_in_u3: Option<bool>,
    pub ann_in_square: bool,
    pub square_cap_u3_dim: Option<usize>,
}

impl EvolutionAlgebra {
    pub fn new(n: usize, structure: Matrix, field: FieldDescriptor) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("dimension must be at least 1".into()));
        }
        if structure.rows() != n || structure.cols() != n {
            return Err(Error::Shape(format!(
                "structure matrix is {}x{}, expected {n}x{n}",
                structure.rows(),
                structure.cols()
            )));
        }
        if structure.field() != field {
            return Err(Error::MixedFields);
        }
        Ok(EvolutionAlgebra {
            dim: n,
            field,
            structure,
        })
    }

    pub fn from_matrix(structure: Matrix) -> Result<Self> {
        Self::new(structure.rows(), structure.clone(), structure.field())
    }

    pub fn from_ints(field: FieldDescriptor, rows: &[&[i64]]) -> Self {
        Self::from_matrix(Matrix::from_ints(field, rows)).expect("square integer structure")
    }

    /// The algebra with eᵢ² = Σ w·e_j over the listed (i, j, w) edges.
    pub fn from_edges(field: FieldDescriptor, n: usize, edges: &[(usize, usize, FieldElement)]) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for (i, j, w) in edges {
            let x = m.get(*i, *j) + w;
            m.set(*i, *j, x);
        }
        Self::from_matrix(m).expect("square structure")
    }

    pub fn zero_algebra(field: FieldDescriptor, n: usize) -> Self {
        Self::from_matrix(Matrix::zeros(field, n, n)).expect("square structure")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn structure(&self) -> &Matrix {
        &self.structure
    }

    /// Coordinates of eᵢ².
    pub fn square_of_basis(&self, i: usize) -> Vector {
        self.structure.row(i)
    }

    fn check_len(&self, v: &[FieldElement]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::Shape(format!(
                "vector of length {} in a {}-dimensional algebra",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// (Σλᵢeᵢ)(Σμᵢeᵢ) = Σ λᵢμᵢ eᵢ².
    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vector(self.field, self.dim);
        for i in 0..self.dim {
            let c = &x[i] * &y[i];
            if !c.is_zero() {
                out = vec_axpy(&out, &c, &self.structure.row(i));
            }
        }
        Ok(out)
    }

    pub fn square(&self, x: &[FieldElement]) -> Result<Vector> {
        self.multiply(x, x)
    }

    pub fn unit(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim, i)
    }

    fn row_support(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim).filter(move |&j| !self.structure.get(i, j).is_zero())
    }

    /// Indices whose squares vanish.
    pub fn null_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.row_support(i).next().is_none()).collect()
    }

    pub fn annihilator(&self) -> Subspace {
        Subspace::coordinate(self.field, self.dim, &self.null_indices())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// E² = span of the rows.
    pub fn square_space(&self) -> Subspace {
        Subspace::span(self.field, self.dim, &self.structure.row_vectors()).expect("rows fit")
    }

    /// Whether the span of the given basis vectors is an ideal.
    pub fn is_coordinate_ideal(&self, indices: &[usize]) -> bool {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        indices.iter().all(|&i| self.row_support(i).all(|j| set.contains(&j)))
    }

    /// E / span{eᵢ : i ∉ keep}, in the basis of kept indices (ascending).
    pub fn quotient_by_block(&self, keep: &[usize]) -> Result<EvolutionAlgebra> {
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        if keep.iter().any(|&k| k >= self.dim) {
            return Err(Error::Shape("index out of range".into()));
        }
        let discard: Vec<usize> = (0..self.dim).filter(|i| !keep.contains(i)).collect();
        if !self.is_coordinate_ideal(&discard) {
            return Err(Error::NotAnIdeal);
        }
        Ok(self.restrict_to(&keep.into_iter().collect::<Vec<_>>()))
    }

    /// Rows and columns of the given indices, in the given order. This is the
    /// subalgebra when the span is closed under squares, and the quotient when
    /// the complement is an ideal.
    pub fn restrict_to(&self, idx: &[usize]) -> EvolutionAlgebra {
        let mut m = Matrix::zeros(self.field, idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.structure.get(i, j).clone());
            }
        }
        EvolutionAlgebra {
            dim: idx.len(),
            field: self.field,
            structure: m,
        }
    }

    /// The algebra in the basis f_j = m·e_j (columns of m). Fails unless the
    /// new basis is natural.
    pub fn change_basis(&self, m: &Matrix) -> Result<EvolutionAlgebra> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::Shape("basis change must be square of the algebra's size".into()));
        }
        let inv = m.inverse()?;
        let cols: Vec<Vector> = (0..self.dim).map(|j| m.col(j)).collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if !vec_is_zero(&self.multiply(&cols[i], &cols[j])?) {
                    return Err(Error::Domain("the new basis is not natural".into()));
                }
            }
        }
        let rows: Vec<Vector> = cols
            .iter()
            .map(|c| inv.mul_vec(&self.square(c).expect("length checked")))
            .collect::<Result<_>>()?;
        Self::from_matrix(Matrix::from_rows(self.field, self.dim, &rows)?)
    }

    /// The algebra with basis reordered: new eₖ is old e_{perm[k]}.
    pub fn permute(&self, perm: &[usize]) -> EvolutionAlgebra {
        assert_eq!(perm.len(), self.dim);
        self.restrict_to(perm)
    }

    pub fn upper_series(&self) -> AnnSeries {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut chain = Vec::new();
        let mut blocks = Vec::new();
        loop {
            let block: Vec<usize> = (0..self.dim)
                .filter(|i| !seen.contains(i) && self.row_support(*i).all(|j| seen.contains(&j)))
                .collect();
            if block.is_empty() {
                break;
            }
            seen.extend(&block);
            chain.push(Subspace::coordinate(
                self.field,
                self.dim,
                &seen.iter().copied().collect::<Vec<_>>(),
            ));
            blocks.push(block);
        }
        AnnSeries {
            type_vector: blocks.iter().map(Vec::len).collect(),
            nilpotent: seen.len() == self.dim,
            chain,
            blocks,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.upper_series().nilpotent
    }

    /// span{xy : x ∈ S, y ∈ T}.
    pub fn product_subspace(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        for x in [s, t] {
            if x.ambient_dim() != self.dim {
                return Err(Error::AmbientMismatch(self.dim, x.ambient_dim()));
            }
        }
        let mut vs = Vec::new();
        for x in s.basis_vectors() {
            for y in t.basis_vectors() {
                vs.push(self.multiply(&x, &y)?);
            }
        }
        Subspace::span(self.field, self.dim, &vs)
    }

    pub fn square_subspace(&self, s: &Subspace) -> Result<Subspace> {
        self.product_subspace(s, s)
    }

    /// E^{<1>}, E^{<2>}, … (Right) or E¹, E², … (Plenary), stopping once the
    /// chain is stable or after `max_k` terms.
    ///
    /// A right chain is stable as soon as a term repeats. A plenary chain can
    /// stall and then drop again (in a 4-chain E⁵ = E⁶ ≠ E⁹ = 0), but once
    /// E^m = … = E^{2m} every later term is E^m as well: each summand EⁱE^{2m−i}
    /// with i ≤ m equals EⁱE^{N−i} for N > 2m.
    pub fn power_subspaces(&self, kind: PowerKind, max_k: usize) -> Vec<Subspace> {
        let mut out = vec![self.full_space()];
        // plenary bookkeeping: distinct terms, the id of each term, and products
        let mut distinct = vec![self.full_space()];
        let mut id = vec![0usize];
        let mut products: HashMap<(usize, usize), Subspace> = HashMap::new();
        let mut plateau = 1;
        while out.len() < max_k.max(1) {
            let k = out.len();
            let next = match kind {
                PowerKind::Right => self.product_subspace(&out[k - 1], &out[0]).expect("same ambient"),
                PowerKind::Plenary => {
                    let mut acc = Subspace::zero(self.field, self.dim);
                    for i in 1..=(k + 1) / 2 {
                        let (a, b) = (id[i - 1].min(id[k - i]), id[i - 1].max(id[k - i]));
                        let p = products.entry((a, b)).or_insert_with(|| {
                            self.product_subspace(&distinct[a], &distinct[b]).expect("same ambient")
                        });
                        acc = acc.sum(p).expect("same ambient");
                    }
                    acc
                }
            };
            let repeat = next == out[k - 1];
            match kind {
                PowerKind::Right if repeat => break,
                PowerKind::Plenary if repeat && k + 1 >= 2 * plateau => break,
                PowerKind::Plenary if !repeat => {
                    plateau = k + 1;
                    distinct.push(next.clone());
                }
                _ => {}
            }
            id.push(distinct.len() - 1);
            let zero = next.is_zero();
            out.push(next);
            if zero {
                break;
            }
        }
        out
    }

    /// Whether the given power chain reaches zero.
    pub fn power_chain_nilpotent(&self, kind: PowerKind) -> bool {
        self.power_subspaces(kind, usize::MAX).last().is_some_and(Subspace::is_zero)
    }

    /// {x ∈ inside : x·against = 0}.
    pub fn relative_annihilator(&self, inside: &Subspace, against: &Subspace) -> Result<Subspace> {
        for x in [inside, against] {
            if x.ambient_dim() != self.dim {
                return Err(Error::AmbientMismatch(self.dim, x.ambient_dim()));
            }
        }
        let s = inside.basis_vectors();
        let a = against.basis_vectors();
        if s.is_empty() || a.is_empty() {
            return Ok(inside.clone());
        }
        // column k stacks sₖ·a_j over all j; kernel vectors are coefficient tuples
        let cols: Vec<Vector> = s
            .iter()
            .map(|sk| {
                a.iter()
                    .flat_map(|aj| self.multiply(sk, aj).expect("lengths match"))
                    .collect()
            })
            .collect();
        let m = Matrix::from_columns(self.field, self.dim * a.len(), &cols)?;
        let vs: Vec<Vector> = m
            .kernel()
            .basis_vectors()
            .iter()
            .map(|c| {
                s.iter()
                    .zip(c)
                    .fold(zero_vector(self.field, self.dim), |acc, (sk, ck)| vec_axpy(&acc, ck, sk))
            })
            .collect();
        Subspace::span(self.field, self.dim, &vs)
    }

    pub fn graph(&self) -> WeightedGraph {
        let mut edges = Vec::new();
        for i in 0..self.dim {
            for j in self.row_support(i) {
                edges.push((i, j, self.structure.get(i, j).clone()));
            }
        }
        WeightedGraph {
            vertex_count: self.dim,
            edges,
        }
    }

    /// Index sets of the weakly connected components, each sorted, ordered by
    /// smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.dim).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..self.dim {
            for j in self.row_support(i).collect::<Vec<_>>() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of = vec![usize::MAX; self.dim];
        for i in 0..self.dim {
            let r = find(&mut parent, i);
            if root_of[r] == usize::MAX {
                root_of[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_of[r]].push(i);
        }
        groups
    }

    pub fn split_components(&self) -> Vec<EvolutionAlgebra> {
        self.components().iter().map(|c| self.restrict_to(c)).collect()
    }

    /// I ∩ J = 0, I + J = E, both nonzero ideals.
    pub fn is_direct_sum_of_ideals(&self, i: &Subspace, j: &Subspace) -> bool {
        let full = self.full_space();
        !i.is_zero()
            && !j.is_zero()
            && i.intersect(j).is_ok_and(|c| c.is_zero())
            && i.sum(j).is_ok_and(|s| s == full)
            && self.is_ideal(i)
            && self.is_ideal(j)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.product_subspace(&self.full_space(), s)
            .and_then(|p| p.is_subspace_of(s))
            .unwrap_or(false)
    }

    /// Sufficient criteria for (in)decomposability, tried in a fixed order.
    pub fn decomposability_check(&self) -> Verdict {
        let n = self.dim;
        if n == 1 {
            return Verdict::Indecomposable(Rule::OneDimensional);
        }
        let comps = self.components();
        if comps.len() > 1 {
            let rest: Vec<usize> = comps[1..].concat();
            return Verdict::Decomposable {
                rule: Rule::Disconnected,
                witness: Some((
                    Subspace::coordinate(self.field, n, &comps[0]),
                    Subspace::coordinate(self.field, n, &rest),
                )),
            };
        }
        let ann = self.annihilator();
        let sq = self.square_space();
        let nulls = self.null_indices();
        if let Some(&k) = nulls.iter().find(|&&k| !sq.contains(&self.unit(k)).unwrap()) {
            // S ⊇ E² is an ideal; complete E² + span{e_k} by unit vectors
            let with_k = sq.sum(&Subspace::coordinate(self.field, n, &[k])).unwrap();
            let mut gens = sq.basis_vectors();
            gens.extend(with_k.complement_indices().into_iter().map(|c| self.unit(c)));
            let s = Subspace::span(self.field, n, &gens).unwrap();
            return Verdict::Decomposable {
                rule: Rule::AnnNotInSquare,
                witness: Some((s, Subspace::coordinate(self.field, n, &[k]))),
            };
        }
        let r = ann.dim();
        if 2 * r >= n && r >= 1 && n >= 4 {
            // here ann = E², so E = ⊕ span{eᵢ, eᵢ²} over the non-null eᵢ
            let live: Vec<usize> = (0..n).filter(|i| !nulls.contains(i)).collect();
            let pair = |i: usize| vec![self.unit(i), self.square_of_basis(i)];
            let first = Subspace::span(self.field, n, &pair(live[0])).unwrap();
            let rest: Vec<Vector> = live[1..].iter().flat_map(|&i| pair(i)).collect();
            return Verdict::Decomposable {
                rule: Rule::LargeAnnihilator,
                witness: Some((first, Subspace::span(self.field, n, &rest).unwrap())),
            };
        }
        let series = self.upper_series();
        if !series.nilpotent {
            return Verdict::Unknown;
        }
        if r == 1 {
            return Verdict::Indecomposable(Rule::OneDimensionalAnn);
        }
        let t = &series.type_vector;
        if t.len() == 3 && t[1] == 1 {
            // ann ⊆ E² holds here, otherwise the rule above fired
            return Verdict::Indecomposable(Rule::TypeN1M);
        }
        if t.len() >= 3 && 2 * t[0] + t.len() > n + 2 {
            return Verdict::Decomposable {
                rule: Rule::LongSeries,
                witness: None,
            };
        }
        Verdict::Unknown
    }

    /// Requires a nilpotent algebra.
    pub fn invariant_profile(&self) -> Result<InvariantProfile> {
        let series = self.upper_series();
        if !series.nilpotent {
            return Err(Error::NotNilpotent);
        }
        let n = self.dim;
        let b1 = &series.blocks[0];
        let ui_u1 = |i: usize| -> Subspace {
            let idx: Vec<usize> = series.blocks[i - 1].iter().chain(b1).copied().collect();
            Subspace::coordinate(self.field, n, &idx)
        };
        let r = series.blocks.len();
        let mut block_square_dims = Vec::new();
        let mut block_square_square_dims = Vec::new();
        for i in 2..=r {
            let s = self.square_subspace(&ui_u1(i))?;
            block_square_dims.push(s.dim());
            block_square_square_dims.push(self.square_subspace(&s)?.dim());
        }
        let sq = self.square_space();
        let u4_square_in_u3 = if r >= 4 {
            Some(self.square_subspace(&ui_u1(4))?.is_subspace_of(&ui_u1(3))?)
        } else {
            None
        };
        Ok(InvariantProfile {
            type_vector: series.type_vector.clone(),
            dim_square: sq.dim(),
            u3_square_square_dim: block_square_square_dims.get(1).copied(),
            u4_square_in_u3,
            ann_in_square: self.annihilator().is_subspace_of(&sq)?,
            square_cap_u3_dim: if r >= 3 {
                Some(sq.intersect(&ui_u1(3))?.dim())
            } else {
                None
            },
            block_square_dims,
            block_square_square_dims,
        })
    }
}

pub fn new_algebra(n: usize, structure: Matrix, field: FieldDescriptor) -> Result<EvolutionAlgebra> {
    EvolutionAlgebra::new(n, structure, field)
}
