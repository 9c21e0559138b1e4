//! Classification of nilpotent evolution algebras of dimension at most five.
//!
//! An algebra is first split into indecomposable ideals. Each summand gets a
//! label (type, variant, parameters) computed from its structure constants
//! without taking roots, and, when the field has the roots it needs, a basis
//! change from the canonical template. Composing two such basis changes gives
//! an explicit isomorphism between algebras with equal labels.

mod normal;
mod table;

use std::fmt;

use crate::error::{Error, Result};
use crate::evolution::{EvolutionAlgebra, InvariantProfile, Verdict};
use crate::exactfield::{FieldDescriptor, FieldElement};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::oracle::verify_hom;

pub use table::{anharmonic, j_invariant};

/// One entry of the classification: dimension, type, the variant's position
/// among the graphs of that type, and the orbit-minimal parameters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel {
    pub dim: usize,
    pub type_vector: Vec<usize>,
    pub variant: usize,
    pub params: Vec<FieldElement>,
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ty: Vec<String> = self.type_vector.iter().map(ToString::to_string).collect();
        write!(f, "d{}:[{}]:v{}", self.dim, ty.join(","), self.variant)?;
        if !self.params.is_empty() {
            write!(f, "({})", table::join(&self.params))?;
        }
        Ok(())
    }
}

/// A table entry bound to a field.
#[derive(Clone, Copy)]
pub struct ClassEntry {
    spec: &'static table::Spec,
    field: FieldDescriptor,
}

impl fmt::Debug for ClassEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassEntry({:?} v{}, arity {})", self.spec.ty, self.spec.variant, self.spec.arity)
    }
}

impl ClassEntry {
    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn type_vector(&self) -> Vec<usize> {
        self.spec.ty.to_vec()
    }

    pub fn variant(&self) -> usize {
        self.spec.variant
    }

    pub fn arity(&self) -> usize {
        self.spec.arity
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn in_domain(&self, params: &[FieldElement]) -> bool {
        self.spec.in_domain(params)
    }

    pub fn structure_template(&self, params: &[FieldElement]) -> Result<EvolutionAlgebra> {
        self.spec.build(self.field, params)
    }

    pub fn param_orbit(&self, params: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        self.spec.orbit(params)
    }

    /// The label of the template with these parameters.
    pub fn label(&self, params: &[FieldElement]) -> Result<CanonicalLabel> {
        if !self.in_domain(params) {
            return Err(Error::Domain("parameters outside the entry's domain".into()));
        }
        Ok(CanonicalLabel {
            dim: self.dim(),
            type_vector: self.type_vector(),
            variant: self.variant(),
            params: self.spec.representative(params),
        })
    }

    /// The distinguishing property printed next to the entry, if any.
    pub fn property(&self) -> Option<&'static str> {
        self.spec.property.map(|p| p.0)
    }

    pub fn property_holds(&self, profile: &InvariantProfile) -> Option<bool> {
        self.spec.property.map(|p| (p.1)(profile))
    }
}

pub fn canonical_table(dim: usize, field: FieldDescriptor) -> Result<Vec<ClassEntry>> {
    let specs = table::specs(dim)?;
    if dim >= 4 && !field.has_i() {
        return Err(Error::FieldLacksI);
    }
    Ok(specs.iter().map(|spec| ClassEntry { spec, field }).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `witness_available` is false when the field lacks a root the
    /// normalizing basis change needs; the label itself is still exact.
    Indecomposable {
        label: CanonicalLabel,
        witness_available: bool,
    },
    Decomposed(Vec<CanonicalLabel>),
}

impl Classification {
    pub fn labels(&self) -> Vec<CanonicalLabel> {
        match self {
            Classification::Indecomposable { label, .. } => vec![label.clone()],
            Classification::Decomposed(ls) => ls.clone(),
        }
    }

    pub fn is_decomposed(&self) -> bool {
        matches!(self, Classification::Decomposed(_))
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Indecomposable { label, .. } => write!(f, "{label}"),
            Classification::Decomposed(ls) => {
                let parts: Vec<String> = ls.iter().map(ToString::to_string).collect();
                write!(f, "decomposed {}", parts.join(" + "))
            }
        }
    }
}

/// The labels of the indecomposable summands (sorted) and, when available,
/// the basis change from the direct sum of their templates onto E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub parts: Vec<CanonicalLabel>,
    pub map: Option<Matrix>,
}

struct Part {
    label: CanonicalLabel,
    /// images in E of the template basis
    cols: Option<Vec<Vector>>,
}

pub fn classify(e: &EvolutionAlgebra) -> Result<Classification> {
    let nf = normal_form(e)?;
    Ok(if nf.parts.len() == 1 {
        Classification::Indecomposable {
            label: nf.parts[0].clone(),
            witness_available: nf.map.is_some(),
        }
    } else {
        Classification::Decomposed(nf.parts)
    })
}

pub fn normal_form(e: &EvolutionAlgebra) -> Result<NormalForm> {
    let mut parts = normalize(e)?;
    parts.sort_by(|a, b| a.label.cmp(&b.label));
    let map = parts
        .iter()
        .map(|p| p.cols.clone())
        .collect::<Option<Vec<_>>>()
        .map(|cs| cs.concat());
    let labels: Vec<CanonicalLabel> = parts.into_iter().map(|p| p.label).collect();
    let map = match map {
        Some(cols) => {
            let m = Matrix::from_columns(e.field(), e.dim(), &cols)?;
            let model = model_algebra(&labels, e.field())?;
            matches!(verify_hom(&model, e, &m), Ok(true)).then_some(m)
        }
        None => None,
    };
    Ok(NormalForm { parts: labels, map })
}

/// The direct sum of the templates of the given labels, in order.
pub fn model_algebra(labels: &[CanonicalLabel], field: FieldDescriptor) -> Result<EvolutionAlgebra> {
    let n: usize = labels.iter().map(|l| l.dim).sum();
    let mut m = Matrix::zeros(field, n, n);
    let mut off = 0;
    for l in labels {
        let spec = table::find(&l.type_vector, l.variant)
            .ok_or_else(|| Error::Domain(format!("no table entry for {l}")))?;
        let t = spec.build(field, &l.params)?;
        for i in 0..l.dim {
            for j in 0..l.dim {
                m.set(off + i, off + j, t.structure().get(i, j).clone());
            }
        }
        off += l.dim;
    }
    EvolutionAlgebra::from_matrix(m)
}

fn normalize(e: &EvolutionAlgebra) -> Result<Vec<Part>> {
    if e.dim() > 5 {
        return Err(Error::UnsupportedDim(e.dim()));
    }
    let series = e.upper_series();
    if !series.nilpotent {
        return Err(Error::NotNilpotent);
    }
    let Some((i, j)) = split(e, &series.blocks)? else {
        return Ok(vec![indecomposable(e, series.blocks)?]);
    };
    let mut out = Vec::new();
    for (keep, drop) in [(&i, &j), (&j, &i)] {
        let (alg, embed) = summand(e, keep, drop)?;
        for p in normalize(&alg)? {
            let cols = match p.cols {
                Some(cs) => Some(cs.iter().map(|c| embed.mul_vec(c)).collect::<Result<_>>()?),
                None => None,
            };
            out.push(Part { label: p.label, cols });
        }
    }
    Ok(out)
}

/// A splitting E = I ⊕ J into nonzero ideals, or None when E is indecomposable.
fn split(e: &EvolutionAlgebra, blocks: &[Vec<usize>]) -> Result<Option<(Subspace, Subspace)>> {
    match e.decomposability_check() {
        Verdict::Decomposable { witness: Some(w), .. } => return Ok(Some(w)),
        Verdict::Indecomposable(_) => return Ok(None),
        _ => {}
    }
    let f = e.field();
    let n = e.dim();
    let unit = |i: usize| e.unit(i);
    let span = |vs: Vec<Vector>| Subspace::span(f, n, &vs);
    let ty: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let found = match ty.as_slice() {
        // three squares in a plane; a parallel pair splits off the third
        [2, 3] => {
            let tops = &blocks[1];
            let sq: Vec<Vector> = tops.iter().map(|&i| e.square_of_basis(i)).collect();
            let mut out = None;
            for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                if span(vec![sq[a].clone(), sq[b].clone()])?.dim() == 1 {
                    out = Some((
                        span(vec![unit(tops[a]), unit(tops[b]), sq[a].clone()])?,
                        span(vec![unit(tops[c]), sq[c].clone()])?,
                    ));
                    break;
                }
            }
            out
        }
        // x² = αy + βz + p; a vanishing coefficient splits off y or z
        [2, 2, 1] => {
            let x = blocks[2][0];
            let (y, z) = (blocks[1][0], blocks[1][1]);
            let hx = e.square_of_basis(x);
            let pick = if hx[z].is_zero() {
                Some((y, z))
            } else if hx[y].is_zero() {
                Some((z, y))
            } else {
                None
            };
            match pick {
                Some((keep, other)) => Some((
                    span(vec![unit(x), hx.clone(), e.square_of_basis(keep)])?,
                    span(vec![unit(other), e.square_of_basis(other)])?,
                )),
                None => None,
            }
        }
        [2, 1, 2] => None,
        _ => {
            return Err(Error::Domain(format!(
                "no decomposition procedure for type {ty:?}"
            )))
        }
    };
    match found {
        Some((i, j)) if e.is_direct_sum_of_ideals(&i, &j) => Ok(Some((i, j))),
        Some(_) => Err(Error::Domain("splitting candidate is not a direct sum of ideals".into())),
        None => Ok(None),
    }
}

/// The ideal `keep` as an algebra in its own natural basis, with the matrix
/// whose columns are that basis in E's coordinates.
///
/// The projections of the eᵢ onto `keep` along `drop` are pairwise orthogonal,
/// so any maximal independent subset of them is a natural basis.
fn summand(e: &EvolutionAlgebra, keep: &Subspace, drop: &Subspace) -> Result<(EvolutionAlgebra, Matrix)> {
    let f = e.field();
    let n = e.dim();
    let kb = keep.basis_vectors();
    let all: Vec<Vector> = kb.iter().chain(drop.basis_vectors().iter()).cloned().collect();
    let b = Matrix::from_columns(f, n, &all)?;
    let mut chosen: Vec<Vector> = Vec::new();
    for i in 0..n {
        let c = b.solve(&e.unit(i))?.ok_or(Error::Singular)?;
        let mut proj = vec![f.zero(); n];
        for (k, v) in kb.iter().enumerate() {
            proj = crate::linalg::vec_axpy(&proj, &c[k], v);
        }
        let mut trial = chosen.clone();
        trial.push(proj);
        if Subspace::span(f, n, &trial)?.dim() == trial.len() {
            chosen = trial;
        }
    }
    let k = chosen.len();
    let fb = Matrix::from_columns(f, n, &chosen)?;
    let mut rows = Vec::with_capacity(k);
    for v in &chosen {
        let sq = e.square(v)?;
        rows.push(fb.solve(&sq)?.ok_or(Error::NotAnIdeal)?);
    }
    let alg = EvolutionAlgebra::from_matrix(Matrix::from_rows(f, k, &rows)?)?;
    Ok((alg, fb))
}

fn indecomposable(e: &EvolutionAlgebra, blocks: Vec<Vec<usize>>) -> Result<Part> {
    let ctx = normal::Ctx::new(e, blocks);
    let (ty, analysis) = normal::analyze(&ctx)?;
    let spec = table::find(&ty, analysis.variant).expect("analyses only produce table variants");
    let canonical = spec.representative(&analysis.cands[0].params);
    let label = CanonicalLabel {
        dim: e.dim(),
        type_vector: ty,
        variant: analysis.variant,
        params: canonical.clone(),
    };
    let cols = spec.build(e.field(), &canonical).ok().and_then(|t| {
        analysis
            .cands
            .iter()
            .filter(|c| c.params == canonical)
            .filter_map(|c| c.gens.as_ref().ok())
            .find_map(|g| normal::assemble(&t, e, g))
            .map(|m| (0..m.cols()).map(|j| m.col(j)).collect())
    });
    Ok(Part { label, cols })
}

pub fn labels_equal(l1: &CanonicalLabel, l2: &CanonicalLabel) -> bool {
    if (l1.dim, &l1.type_vector, l1.variant) != (l2.dim, &l2.type_vector, l2.variant) {
        return false;
    }
    if l1.params.len() != l2.params.len() {
        return false;
    }
    if l1.params.iter().chain(&l2.params).any(|p| p.descriptor() != l1.params[0].descriptor()) {
        return false;
    }
    match table::find(&l1.type_vector, l1.variant) {
        Some(spec) if spec.arity == l1.params.len() && spec.arity > 0 => {
            spec.orbit(&l1.params).contains(&l2.params)
        }
        _ => l1.params == l2.params,
    }
}

/// A basis change carrying E1 onto E2 (columns are images of E1's basis).
pub fn witness_isomorphism(e1: &EvolutionAlgebra, e2: &EvolutionAlgebra) -> Result<Option<Matrix>> {
    if e1.field() != e2.field() {
        return Err(Error::MixedFields);
    }
    let n1 = normal_form(e1)?;
    let n2 = normal_form(e2)?;
    if n1.parts != n2.parts {
        return Ok(None);
    }
    let (Some(m1), Some(m2)) = (n1.map, n2.map) else {
        return Err(Error::SqrtUnavailable(
            "a normalizing basis change needs a root outside the field".into(),
        ));
    };
    let w = m2.mul(&m1.inverse()?)?;
    if verify_hom(e1, e2, &w)? {
        Ok(Some(w))
    } else {
        Err(Error::Domain("composed normal forms failed verification".into()))
    }
}

#[cfg(test)]
mod tests;
