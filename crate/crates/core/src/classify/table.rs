//! The canonical algebras of dimension at most five, transcribed from their
//! weighted graphs. Node k of a graph is basis vector k of the template.

use crate::error::{Error, Result};
use crate::evolution::{EvolutionAlgebra, InvariantProfile};
use crate::exactfield::{FieldDescriptor, FieldElement};

/// Edge weight: a constant or a parameter slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum W {
    One,
    I,
    NegI,
    P(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Orbit {
    Trivial,
    /// p ~ −p
    Sign,
    /// the six cross-ratio images of α
    Anharmonic,
    /// (β, γ) ~ (1/β, −γ/β³)
    InverseCube,
    /// (α, β) ~ (−α, −β)
    JointSign,
    /// (β, γ) ~ (±β, ±γ) ~ (±1/β, ±iγ/β)
    SignSwap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Domain {
    Any,
    NotZeroOne,
    FirstNonZero,
}

pub(crate) struct Spec {
    pub ty: &'static [usize],
    pub variant: usize,
    pub arity: usize,
    pub edges: &'static [(usize, usize, W)],
    pub orbit: Orbit,
    pub domain: Domain,
    pub property: Option<(&'static str, fn(&InvariantProfile) -> bool)>,
}

const fn fixed(ty: &'static [usize], variant: usize, edges: &'static [(usize, usize, W)]) -> Spec {
    Spec {
        ty,
        variant,
        arity: 0,
        edges,
        orbit: Orbit::Trivial,
        domain: Domain::Any,
        property: None,
    }
}

const fn param(
    ty: &'static [usize],
    variant: usize,
    arity: usize,
    edges: &'static [(usize, usize, W)],
    orbit: Orbit,
    domain: Domain,
) -> Spec {
    Spec {
        ty,
        variant,
        arity,
        edges,
        orbit,
        domain,
        property: None,
    }
}

const fn with_property(mut s: Spec, text: &'static str, f: fn(&InvariantProfile) -> bool) -> Spec {
    s.property = Some((text, f));
    s
}

use W::{One as O, I, NegI as NI, P};

static DIM1: [Spec; 1] = [fixed(&[1], 1, &[])];
static DIM2: [Spec; 1] = [fixed(&[1, 1], 1, &[(0, 1, O)])];
static DIM3: [Spec; 2] = [
    fixed(&[1, 2], 1, &[(0, 2, O), (1, 2, O)]),
    fixed(&[1, 1, 1], 1, &[(0, 1, O), (1, 2, O)]),
];

static DIM4: [Spec; 7] = [
    fixed(&[1, 3], 1, &[(0, 3, O), (1, 3, O), (2, 3, O)]),
    with_property(
        fixed(&[1, 2, 1], 1, &[(0, 1, O), (1, 3, O), (2, 3, O)]),
        "((U3+U1)^2)^2 != 0",
        |p| p.block_square_square_dims.get(1) != Some(&0),
    ),
    with_property(
        fixed(&[1, 2, 1], 2, &[(0, 1, O), (0, 2, I), (1, 3, O), (2, 3, O)]),
        "((U3+U1)^2)^2 = 0",
        |p| p.block_square_square_dims.get(1) == Some(&0),
    ),
    with_property(
        fixed(&[1, 1, 2], 1, &[(0, 2, O), (1, 2, O), (2, 3, O)]),
        "dim (U3+U1)^2 = 1",
        |p| p.block_square_dims.get(1) == Some(&1),
    ),
    with_property(
        fixed(&[1, 1, 2], 2, &[(0, 2, O), (1, 2, O), (2, 3, O), (1, 3, O)]),
        "dim (U3+U1)^2 = 2",
        |p| p.block_square_dims.get(1) == Some(&2),
    ),
    with_property(
        fixed(&[1, 1, 1, 1], 1, &[(0, 1, O), (1, 2, O), (2, 3, O)]),
        "(U4+U1)^2 in U3+U1",
        |p| p.u4_square_in_u3 == Some(true),
    ),
    with_property(
        fixed(&[1, 1, 1, 1], 2, &[(0, 1, O), (0, 2, O), (1, 2, O), (2, 3, O)]),
        "(U4+U1)^2 not in U3+U1",
        |p| p.u4_square_in_u3 == Some(false),
    ),
];

static DIM5: [Spec; 36] = [
    // dim ann = 2
    fixed(&[2, 3], 1, &[(0, 2, O), (1, 2, O), (1, 3, O), (4, 3, O)]),
    fixed(&[2, 2, 1], 1, &[(0, 1, O), (0, 2, O), (1, 3, O), (2, 4, O)]),
    fixed(&[2, 1, 2], 1, &[(0, 2, O), (1, 2, O), (2, 3, O), (1, 4, O)]),
    // dim ann = 1
    fixed(&[1, 4], 1, &[(0, 4, O), (1, 4, O), (2, 4, O), (3, 4, O)]),
    fixed(&[1, 3, 1], 1, &[(0, 1, O), (1, 4, O), (2, 4, O), (3, 4, O)]),
    fixed(&[1, 3, 1], 2, &[(0, 1, O), (0, 2, I), (1, 3, O), (2, 3, O), (4, 3, O)]),
    fixed(&[1, 1, 3], 1, &[(0, 3, O), (1, 3, O), (2, 3, O), (3, 4, O)]),
    fixed(&[1, 1, 3], 2, &[(0, 3, O), (1, 3, O), (2, 3, O), (3, 4, O), (2, 4, O)]),
    param(
        &[1, 1, 3],
        3,
        1,
        &[(0, 3, O), (1, 3, O), (2, 3, O), (3, 4, O), (2, 4, O), (0, 4, P(0))],
        Orbit::Anharmonic,
        Domain::NotZeroOne,
    ),
    fixed(&[1, 1, 1, 2], 1, &[(0, 2, O), (1, 2, O), (2, 3, O), (3, 4, O)]),
    fixed(&[1, 1, 1, 2], 2, &[(0, 2, O), (1, 2, O), (2, 3, O), (3, 4, O), (0, 4, O)]),
    param(
        &[1, 1, 1, 2],
        3,
        1,
        &[(0, 2, O), (1, 2, O), (2, 3, O), (3, 4, O), (0, 3, O), (0, 4, P(0))],
        Orbit::Trivial,
        Domain::Any,
    ),
    param(
        &[1, 1, 1, 2],
        4,
        2,
        &[(0, 2, O), (1, 2, O), (2, 3, O), (3, 4, O), (0, 3, O), (0, 4, P(1)), (1, 3, P(0))],
        Orbit::InverseCube,
        Domain::FirstNonZero,
    ),
    param(
        &[1, 2, 2],
        1,
        1,
        &[(0, 2, O), (1, 3, O), (1, 2, P(0)), (3, 4, O), (2, 4, O)],
        Orbit::Sign,
        Domain::Any,
    ),
    fixed(&[1, 2, 2], 2, &[(0, 2, O), (1, 2, O), (3, 4, O), (2, 4, O)]),
    fixed(&[1, 2, 2], 3, &[(0, 2, O), (1, 2, O), (3, 4, O), (2, 4, O), (1, 4, O)]),
    fixed(&[1, 2, 2], 4, &[(0, 2, O), (0, 3, I), (1, 2, O), (1, 3, I), (2, 4, O), (3, 4, O)]),
    fixed(
        &[1, 2, 2],
        5,
        &[(0, 2, O), (0, 3, I), (1, 2, O), (1, 3, I), (2, 4, O), (3, 4, O), (1, 4, O)],
    ),
    fixed(&[1, 2, 2], 6, &[(0, 2, O), (0, 3, I), (1, 2, O), (1, 3, NI), (2, 4, O), (3, 4, O)]),
    fixed(&[1, 2, 1, 1], 1, &[(0, 1, O), (1, 2, O), (2, 4, O), (3, 4, O)]),
    fixed(&[1, 2, 1, 1], 2, &[(0, 1, O), (1, 2, O), (2, 4, O), (3, 4, O), (0, 3, O)]),
    param(
        &[1, 2, 1, 1],
        3,
        1,
        &[(0, 1, O), (0, 2, O), (0, 3, P(0)), (1, 2, O), (2, 4, O), (3, 4, O)],
        Orbit::Sign,
        Domain::Any,
    ),
    fixed(&[1, 2, 1, 1], 4, &[(0, 1, O), (1, 2, O), (1, 3, I), (2, 4, O), (3, 4, O)]),
    fixed(&[1, 2, 1, 1], 5, &[(0, 1, O), (0, 2, O), (1, 2, O), (1, 3, I), (2, 4, O), (3, 4, O)]),
    fixed(
        &[1, 2, 1, 1],
        6,
        &[(0, 1, O), (0, 2, O), (0, 3, I), (1, 2, O), (1, 3, I), (2, 4, O), (3, 4, O)],
    ),
    fixed(
        &[1, 2, 1, 1],
        7,
        &[(0, 1, O), (0, 2, O), (0, 3, NI), (1, 2, O), (1, 3, I), (2, 4, O), (3, 4, O)],
    ),
    fixed(&[1, 1, 2, 1], 1, &[(0, 1, O), (1, 3, O), (2, 3, O), (3, 4, O)]),
    fixed(&[1, 1, 2, 1], 2, &[(0, 1, O), (0, 3, O), (1, 3, O), (2, 3, O), (3, 4, O)]),
    fixed(&[1, 1, 2, 1], 3, &[(0, 1, O), (0, 2, I), (1, 3, O), (2, 3, O), (3, 4, O)]),
    fixed(&[1, 1, 2, 1], 4, &[(0, 1, O), (0, 3, O), (0, 2, I), (1, 3, O), (2, 3, O), (3, 4, O)]),
    param(
        &[1, 1, 2, 1],
        5,
        1,
        &[(0, 1, O), (1, 3, O), (2, 3, O), (2, 4, O), (3, 4, O), (0, 3, P(0))],
        Orbit::Sign,
        Domain::Any,
    ),
    param(
        &[1, 1, 2, 1],
        6,
        2,
        &[(0, 1, P(0)), (0, 3, P(1)), (0, 2, O), (1, 3, O), (2, 3, O), (3, 4, O), (2, 4, O)],
        Orbit::SignSwap,
        Domain::FirstNonZero,
    ),
    fixed(&[1, 1, 1, 1, 1], 1, &[(0, 1, O), (1, 2, O), (2, 3, O), (3, 4, O)]),
    fixed(&[1, 1, 1, 1, 1], 2, &[(0, 1, O), (1, 2, O), (2, 3, O), (3, 4, O), (0, 3, O)]),
    param(
        &[1, 1, 1, 1, 1],
        3,
        1,
        &[(0, 1, O), (1, 2, O), (2, 3, O), (3, 4, O), (0, 3, P(0)), (0, 2, O)],
        Orbit::Trivial,
        Domain::Any,
    ),
    param(
        &[1, 1, 1, 1, 1],
        4,
        2,
        &[(0, 1, O), (1, 2, O), (2, 3, O), (3, 4, O), (0, 3, P(1)), (0, 2, P(0)), (1, 3, O)],
        Orbit::JointSign,
        Domain::Any,
    ),
];

pub(crate) fn specs(dim: usize) -> Result<&'static [Spec]> {
    Ok(match dim {
        1 => &DIM1,
        2 => &DIM2,
        3 => &DIM3,
        4 => &DIM4,
        5 => &DIM5,
        _ => return Err(Error::UnsupportedDim(dim)),
    })
}

pub(crate) fn find(ty: &[usize], variant: usize) -> Option<&'static Spec> {
    let dim = ty.iter().sum();
    specs(dim).ok()?.iter().find(|s| s.ty == ty && s.variant == variant)
}

impl Spec {
    pub fn dim(&self) -> usize {
        self.ty.iter().sum()
    }

    pub fn in_domain(&self, params: &[FieldElement]) -> bool {
        params.len() == self.arity
            && match self.domain {
                Domain::Any => true,
                Domain::NotZeroOne => !params[0].is_zero() && !params[0].is_one(),
                Domain::FirstNonZero => !params[0].is_zero(),
            }
    }

    pub fn build(&self, field: FieldDescriptor, params: &[FieldElement]) -> Result<EvolutionAlgebra> {
        if !self.in_domain(params) {
            return Err(Error::Domain(format!(
                "parameters ({}) outside the domain of {:?} variant {}",
                join(params),
                self.ty,
                self.variant
            )));
        }
        if params.iter().any(|p| p.descriptor() != field) {
            return Err(Error::MixedFields);
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(a, b, w) in self.edges {
            let weight = match w {
                W::One => field.one(),
                W::I => field.i()?,
                W::NegI => -field.i()?,
                W::P(k) => params[k].clone(),
            };
            edges.push((a, b, weight));
        }
        Ok(EvolutionAlgebra::from_edges(field, self.dim(), &edges))
    }

    /// Every parameter tuple equivalent to `params` that is expressible in the
    /// field, sorted and deduplicated.
    pub fn orbit(&self, params: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        let mut out = match self.orbit {
            Orbit::Trivial => vec![params.to_vec()],
            Orbit::Sign => vec![params.to_vec(), vec![-&params[0]]],
            Orbit::JointSign => vec![params.to_vec(), vec![-&params[0], -&params[1]]],
            Orbit::Anharmonic => anharmonic(&params[0]).into_iter().map(|a| vec![a]).collect(),
            Orbit::InverseCube => {
                let (b, g) = (&params[0], &params[1]);
                let mut v = vec![params.to_vec()];
                if !b.is_zero() {
                    v.push(vec![b.inv().unwrap(), -(g / b.pow(3))]);
                }
                v
            }
            Orbit::SignSwap => {
                let (b, g) = (&params[0], &params[1]);
                let mut base = vec![(b.clone(), g.clone())];
                if let (false, Ok(i)) = (b.is_zero(), b.descriptor().i()) {
                    base.push((b.inv().unwrap(), &i * g / b));
                }
                base.into_iter()
                    .flat_map(|(b, g)| {
                        [
                            vec![b.clone(), g.clone()],
                            vec![-&b, g.clone()],
                            vec![b.clone(), -&g],
                            vec![-&b, -&g],
                        ]
                    })
                    .collect()
            }
        };
        out.sort();
        out.dedup();
        out
    }

    pub fn representative(&self, params: &[FieldElement]) -> Vec<FieldElement> {
        self.orbit(params).into_iter().next().unwrap_or_default()
    }
}

/// {α, 1/α, 1−α, 1−1/α, 1/(1−α), α/(α−1)}
pub fn anharmonic(a: &FieldElement) -> Vec<FieldElement> {
    let one = a.descriptor().one();
    if a.is_zero() || a.is_one() {
        return vec![a.clone()];
    }
    let inv = a.inv().unwrap();
    let mut v = vec![
        a.clone(),
        inv.clone(),
        &one - a,
        &one - &inv,
        (&one - a).inv().unwrap(),
        (&one - &inv).inv().unwrap(),
    ];
    v.sort();
    v.dedup();
    v
}

/// The invariant (α²−α+1)³ / (α²(α−1)²) of the anharmonic orbit.
pub fn j_invariant(a: &FieldElement) -> Result<FieldElement> {
    let one = a.descriptor().one();
    let num = (a * a - a + &one).pow(3);
    let den = a * a * (a - &one) * (a - &one);
    num.checked_div(&den)
}

pub(crate) fn join(params: &[FieldElement]) -> String {
    params.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
