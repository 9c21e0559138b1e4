//! The parametric families E(U,b), E(U,b,g), E(U,b,f,g) and E(U,b,u).
//!
//! Each family is given by diagonal data: the Gram diagonal of b in an
//! orthogonal basis u₁..u_n of U, and the eigenvalues of f and g on that basis.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::evolution::EvolutionAlgebra;
use crate::exactfield::{FieldDescriptor, FieldElement};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Ub,
    Ubg,
    Ubfg,
    Ubu,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub field: FieldDescriptor,
    pub b_diag: Vec<FieldElement>,
    pub f_eigs: Option<Vec<FieldElement>>,
    pub g_eigs: Option<Vec<FieldElement>>,
    pub u_coords: Option<Vec<FieldElement>>,
}

impl FamilySpec {
    fn raw(kind: FamilyKind, b: Vec<FieldElement>) -> Result<Self> {
        let field = b
            .first()
            .ok_or_else(|| Error::SpecMismatch("U must be nonzero".into()))?
            .descriptor();
        Ok(FamilySpec {
            kind,
            field,
            b_diag: b,
            f_eigs: None,
            g_eigs: None,
            u_coords: None,
        })
    }

    pub fn ub(b: Vec<FieldElement>) -> Result<Self> {
        let s = Self::raw(FamilyKind::Ub, b)?;
        s.validate()?;
        Ok(s)
    }

    pub fn ubg(b: Vec<FieldElement>, g: Vec<FieldElement>) -> Result<Self> {
        let mut s = Self::raw(FamilyKind::Ubg, b)?;
        s.g_eigs = Some(g);
        s.validate()?;
        Ok(s)
    }

    pub fn ubfg(b: Vec<FieldElement>, f: Vec<FieldElement>, g: Vec<FieldElement>) -> Result<Self> {
        let mut s = Self::raw(FamilyKind::Ubfg, b)?;
        s.f_eigs = Some(f);
        s.g_eigs = Some(g);
        s.validate()?;
        Ok(s)
    }

    pub fn ubu(b: Vec<FieldElement>, u: Vec<FieldElement>) -> Result<Self> {
        let mut s = Self::raw(FamilyKind::Ubu, b)?;
        s.u_coords = Some(u);
        s.validate()?;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.b_diag.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let bad = |m: &str| Err(Error::SpecMismatch(m.into()));
        if n == 0 {
            return bad("U must be nonzero");
        }
        let all: Vec<&FieldElement> = self
            .b_diag
            .iter()
            .chain(self.f_eigs.iter().flatten())
            .chain(self.g_eigs.iter().flatten())
            .chain(self.u_coords.iter().flatten())
            .collect();
        if all.iter().any(|x| x.descriptor() != self.field) {
            return Err(Error::MixedFields);
        }
        if self.b_diag.iter().any(FieldElement::is_zero) {
            return bad("b must be nondegenerate (nonzero diagonal)");
        }
        let (need_f, need_g, need_u) = match self.kind {
            FamilyKind::Ub => (false, false, false),
            FamilyKind::Ubg => (false, true, false),
            FamilyKind::Ubfg => (true, true, false),
            FamilyKind::Ubu => (false, false, true),
        };
        for (name, need, data) in [
            ("f", need_f, &self.f_eigs),
            ("g", need_g, &self.g_eigs),
            ("u", need_u, &self.u_coords),
        ] {
            match (need, data) {
                (true, None) => return bad(&format!("{name} is required for this family")),
                (false, Some(_)) => return bad(&format!("{name} does not belong to this family")),
                (true, Some(v)) if v.len() != n => {
                    return bad(&format!("{name} has {} entries, expected {n}", v.len()))
                }
                _ => {}
            }
        }
        if need_u && self.u_coords.as_ref().unwrap().iter().all(FieldElement::is_zero) {
            return bad("u must be nonzero");
        }
        Ok(())
    }

    /// Dimension of the built algebra.
    pub fn algebra_dim(&self) -> usize {
        self.n()
            + match self.kind {
                FamilyKind::Ub => 1,
                FamilyKind::Ubg | FamilyKind::Ubu => 2,
                FamilyKind::Ubfg => 3,
            }
    }

    /// b(u,u) = Σ bᵢuᵢ², for Ubu specs.
    pub fn u_norm(&self) -> Option<FieldElement> {
        let u = self.u_coords.as_ref()?;
        Some(
            self.b_diag
                .iter()
                .zip(u)
                .fold(self.field.zero(), |acc, (b, x)| acc + b * x * x),
        )
    }
}

fn expect_kind(spec: &FamilySpec, kind: FamilyKind) -> Result<()> {
    spec.validate()?;
    if spec.kind != kind {
        return Err(Error::SpecMismatch(format!(
            "expected a {kind:?} spec, got {:?}",
            spec.kind
        )));
    }
    Ok(())
}

/// Basis (u₁..u_n, s): uᵢ² = bᵢ s.
pub fn build_ub(spec: &FamilySpec) -> Result<EvolutionAlgebra> {
    expect_kind(spec, FamilyKind::Ub)?;
    let n = spec.n();
    let mut m = Matrix::zeros(spec.field, n + 1, n + 1);
    for (i, b) in spec.b_diag.iter().enumerate() {
        m.set(i, n, b.clone());
    }
    EvolutionAlgebra::from_matrix(m)
}

/// Basis (u₁..u_n, w, s): uᵢ² = bᵢw + bᵢgᵢs, w² = s.
pub fn build_ubg(spec: &FamilySpec) -> Result<EvolutionAlgebra> {
    expect_kind(spec, FamilyKind::Ubg)?;
    let n = spec.n();
    let g = spec.g_eigs.as_ref().unwrap();
    let mut m = Matrix::zeros(spec.field, n + 2, n + 2);
    for (i, b) in spec.b_diag.iter().enumerate() {
        m.set(i, n, b.clone());
        m.set(i, n + 1, b * &g[i]);
    }
    m.set(n, n + 1, spec.field.one());
    EvolutionAlgebra::from_matrix(m)
}

/// Basis (u₁..u_n, w, t, s): uᵢ² = bᵢ(w + fᵢt + gᵢs), w² = t, t² = s.
pub fn build_ubfg(spec: &FamilySpec) -> Result<EvolutionAlgebra> {
    expect_kind(spec, FamilyKind::Ubfg)?;
    let n = spec.n();
    let f = spec.f_eigs.as_ref().unwrap();
    let g = spec.g_eigs.as_ref().unwrap();
    let mut m = Matrix::zeros(spec.field, n + 3, n + 3);
    for (i, b) in spec.b_diag.iter().enumerate() {
        m.set(i, n, b.clone());
        m.set(i, n + 1, b * &f[i]);
        m.set(i, n + 2, b * &g[i]);
    }
    m.set(n, n + 1, spec.field.one());
    m.set(n + 1, n + 2, spec.field.one());
    EvolutionAlgebra::from_matrix(m)
}

/// Basis (a, u₁..u_n, s): a² = Σ uᵢ·eᵢ, uᵢ² = bᵢ s.
pub fn build_ubu(spec: &FamilySpec) -> Result<EvolutionAlgebra> {
    expect_kind(spec, FamilyKind::Ubu)?;
    let n = spec.n();
    let u = spec.u_coords.as_ref().unwrap();
    let mut m = Matrix::zeros(spec.field, n + 2, n + 2);
    for i in 0..n {
        m.set(0, i + 1, u[i].clone());
        m.set(i + 1, n + 1, spec.b_diag[i].clone());
    }
    EvolutionAlgebra::from_matrix(m)
}

pub fn build(spec: &FamilySpec) -> Result<EvolutionAlgebra> {
    match spec.kind {
        FamilyKind::Ub => build_ub(spec),
        FamilyKind::Ubg => build_ubg(spec),
        FamilyKind::Ubfg => build_ubfg(spec),
        FamilyKind::Ubu => build_ubu(spec),
    }
}

/// The spec E(U, αb, αf, α³g + β·id).
pub fn scaled_spec(spec: &FamilySpec, alpha: &FieldElement, beta: &FieldElement) -> Result<FamilySpec> {
    expect_kind(spec, FamilyKind::Ubfg)?;
    let a3 = alpha.pow(3);
    FamilySpec::ubfg(
        spec.b_diag.iter().map(|b| alpha * b).collect(),
        spec.f_eigs.as_ref().unwrap().iter().map(|f| alpha * f).collect(),
        spec.g_eigs.as_ref().unwrap().iter().map(|g| &a3 * g + beta).collect(),
    )
}

/// An isomorphism E(U,b,f,g) → E(U,αb,αf,α³g+β·id), as the matrix whose
/// columns are the images of the source basis.
///
/// Taking ψ = id gives a similarity (U,b) → (U,αb) of norm μ = α, and then
/// ν = αβ: the map is (u,a,b,c) ↦ (u, αa, α²b, α⁴c + αβa). No roots are
/// needed, so every nonzero α works.
pub fn scaling_isomorphism(spec: &FamilySpec, alpha: &FieldElement, beta: &FieldElement) -> Result<Matrix> {
    expect_kind(spec, FamilyKind::Ubfg)?;
    if alpha.is_zero() {
        return Err(Error::Domain("the scaling factor must be nonzero".into()));
    }
    let n = spec.n();
    let fld = spec.field;
    let mut m = Matrix::identity(fld, n + 3);
    m.set(n, n, alpha.clone());
    m.set(n + 2, n, alpha * beta);
    m.set(n + 1, n + 1, alpha.pow(2));
    m.set(n + 2, n + 2, alpha.pow(4));
    let src = build_ubfg(spec)?;
    let dst = build_ubfg(&scaled_spec(spec, alpha, beta)?)?;
    // in the target, the image basis must reproduce the source structure
    if dst.change_basis(&m)? != src {
        return Err(Error::Domain("scaling map failed the homomorphism check".into()));
    }
    Ok(m)
}

/// Whether `to` = μ·`from` + ν as multisets for some μ ≠ 0 and ν.
fn affine_multiset_match(from: &[FieldElement], to: &[FieldElement]) -> bool {
    if from.len() != to.len() {
        return false;
    }
    let counts = |xs: &[FieldElement]| {
        let mut m: BTreeMap<FieldElement, usize> = BTreeMap::new();
        for x in xs {
            *m.entry(x.clone()).or_default() += 1;
        }
        m
    };
    let target = counts(to);
    let (lo, hi) = (from.iter().min().unwrap(), from.iter().max().unwrap());
    if lo == hi {
        return target.len() == 1;
    }
    // the two extremes of `from` must land on two distinct values of `to`
    for a in target.keys() {
        for b in target.keys() {
            if a == b {
                continue;
            }
            let mu = (a - b) / (lo - hi);
            let nu = a - &mu * lo;
            let image: Vec<FieldElement> = from.iter().map(|x| &mu * x + &nu).collect();
            if counts(&image) == target {
                return true;
            }
        }
    }
    false
}

/// Whether the (f,g) pairs of `to` are (μf, μ³g + ν) of `from` as multisets.
fn pair_multiset_match(
    from_f: &[FieldElement],
    from_g: &[FieldElement],
    to_f: &[FieldElement],
    to_g: &[FieldElement],
) -> bool {
    let n = from_f.len();
    if to_f.len() != n {
        return false;
    }
    let Some(k) = (0..n).find(|&i| !from_f[i].is_zero()) else {
        return to_f.iter().all(FieldElement::is_zero) && affine_multiset_match(from_g, to_g);
    };
    let mut target: Vec<(FieldElement, FieldElement)> =
        to_f.iter().cloned().zip(to_g.iter().cloned()).collect();
    target.sort();
    for j in 0..n {
        if to_f[j].is_zero() {
            continue;
        }
        let mu = &to_f[j] / &from_f[k];
        let nu = &to_g[j] - mu.pow(3) * &from_g[k];
        let mut image: Vec<(FieldElement, FieldElement)> = (0..n)
            .map(|i| (&mu * &from_f[i], mu.pow(3) * &from_g[i] + &nu))
            .collect();
        image.sort();
        if image == target {
            return true;
        }
    }
    false
}

/// Isomorphism of two family algebras under algebraically-closed semantics.
///
/// The eigen-data criteria hold over algebraically closed fields only, so the
/// caller must assert that semantics with `assume_closed`; otherwise the test
/// is refused.
pub fn family_iso_test(s1: &FamilySpec, s2: &FamilySpec, assume_closed: bool) -> Result<bool> {
    s1.validate()?;
    s2.validate()?;
    if s1.kind != s2.kind {
        return Err(Error::KindMismatch);
    }
    if s1.field != s2.field {
        return Err(Error::MixedFields);
    }
    if !assume_closed {
        return Err(Error::UnsupportedField(format!(
            "{} is not algebraically closed; assert closed-field semantics to use eigen-data criteria",
            s1.field
        )));
    }
    if s1.n() != s2.n() {
        return Ok(false);
    }
    Ok(match s1.kind {
        FamilyKind::Ub => true,
        FamilyKind::Ubg => affine_multiset_match(s1.g_eigs.as_ref().unwrap(), s2.g_eigs.as_ref().unwrap()),
        FamilyKind::Ubfg => pair_multiset_match(
            s1.f_eigs.as_ref().unwrap(),
            s1.g_eigs.as_ref().unwrap(),
            s2.f_eigs.as_ref().unwrap(),
            s2.g_eigs.as_ref().unwrap(),
        ),
        FamilyKind::Ubu => s1.u_norm().unwrap().is_zero() == s2.u_norm().unwrap().is_zero(),
    })
}
