//! Per-type normal forms.
//!
//! Each analysis reads the variant and parameters from rational expressions in
//! the structure constants, then proposes images for the template's free basis
//! vectors. Those proposals are the only place roots are taken; `assemble`
//! fills in every other image from the template's own products and the result
//! is checked with `verify_hom`, so a wrong proposal can only cost a witness,
//! never produce a false one.

use crate::error::{Error, Result};
use crate::evolution::EvolutionAlgebra;
use crate::exactfield::{FieldDescriptor, FieldElement};
use crate::linalg::{unit_vector, vec_add, vec_axpy, vec_is_zero, vec_scale, vec_sub, Matrix, Subspace, Vector};
use crate::oracle::verify_hom;

type FE = FieldElement;

/// One way of reaching the normal form: its parameters, and the images of
/// the template's free basis vectors (node index, vector in E).
pub(crate) struct Cand {
    pub params: Vec<FE>,
    pub gens: Result<Vec<(usize, Vector)>>,
}

pub(crate) struct Analysis {
    pub variant: usize,
    pub cands: Vec<Cand>,
}

impl Analysis {
    fn single(variant: usize, gens: Result<Vec<(usize, Vector)>>) -> Self {
        Analysis {
            variant,
            cands: vec![Cand { params: vec![], gens }],
        }
    }
}

pub(crate) struct Ctx<'a> {
    e: &'a EvolutionAlgebra,
    f: FieldDescriptor,
    n: usize,
    blocks: Vec<Vec<usize>>,
}

fn root(x: &FE) -> Result<FE> {
    x.sqrt_if_square()
        .ok_or_else(|| Error::SqrtUnavailable(format!("square root of {x}")))
}

fn half(x: &FE) -> FE {
    x / x.descriptor().int(2)
}

/// λ with u = λ·v, if any (v nonzero).
fn ratio(u: &[FE], v: &[FE]) -> Option<FE> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let l = &u[k] / &v[k];
    (vec_scale(&l, v) == u).then_some(l)
}

type Form<'b> = &'b dyn Fn(&[FE], &[FE]) -> FE;

impl<'a> Ctx<'a> {
    pub fn new(e: &'a EvolutionAlgebra, blocks: Vec<Vec<usize>>) -> Self {
        Ctx {
            e,
            f: e.field(),
            n: e.dim(),
            blocks,
        }
    }

    fn unit(&self, i: usize) -> Vector {
        unit_vector(self.f, self.n, i)
    }

    fn units(&self, k: usize) -> Vec<Vector> {
        self.blocks[k].iter().map(|&i| self.unit(i)).collect()
    }

    /// Index of the single basis vector of block k.
    fn idx(&self, k: usize) -> usize {
        self.blocks[k][0]
    }

    fn sq(&self, v: &[FE]) -> Vector {
        self.e.square(v).expect("vectors live in the algebra")
    }

    fn mul(&self, v: &[FE], w: &[FE]) -> Vector {
        self.e.multiply(v, w).expect("vectors live in the algebra")
    }

    /// The components of v on block k.
    fn part(&self, v: &[FE], k: usize) -> Vector {
        let mut out = vec![self.f.zero(); self.n];
        for &i in &self.blocks[k] {
            out[i] = v[i].clone();
        }
        out
    }

    fn rank(&self, vs: &[Vector]) -> usize {
        Subspace::span(self.f, self.n, vs).map(|s| s.dim()).unwrap_or(0)
    }

    fn coords(&self, basis: &[Vector], v: &[FE]) -> Option<Vector> {
        Matrix::from_columns(self.f, self.n, basis).ok()?.solve(v).ok()?
    }

    /// Vectors of span(space) orthogonal to everything in `against`.
    fn perp(&self, space: &[Vector], against: &[Vector], form: Form) -> Vec<Vector> {
        if against.is_empty() {
            return space.to_vec();
        }
        let data: Vec<FE> = against
            .iter()
            .flat_map(|a| space.iter().map(move |v| form(v, a)))
            .collect();
        let m = Matrix::new(self.f, against.len(), space.len(), data).expect("sized above");
        m.kernel()
            .basis_vectors()
            .iter()
            .map(|k| {
                let mut out = vec![self.f.zero(); self.n];
                for (c, v) in k.iter().zip(space) {
                    out = vec_axpy(&out, c, v);
                }
                out
            })
            .collect()
    }
}

/// An orthogonal basis of anisotropic vectors for a nondegenerate span.
fn orth_basis(vs: &[Vector], form: Form) -> Vec<Vector> {
    let mut rest = vs.to_vec();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let pick = rest.iter().position(|v| !form(v, v).is_zero()).or_else(|| {
            // all isotropic: some pairwise sum is not
            for i in 0..rest.len() {
                for j in i + 1..rest.len() {
                    let s = vec_add(&rest[i], &rest[j]);
                    if !form(&s, &s).is_zero() {
                        rest[i] = s;
                        return Some(i);
                    }
                }
            }
            None
        });
        let Some(k) = pick else { break };
        let p = rest.remove(k);
        let q = form(&p, &p);
        rest = rest
            .into_iter()
            .map(|w| {
                let c = form(&w, &p) / &q;
                vec_axpy(&w, &-c, &p)
            })
            .collect();
        out.push(p);
    }
    out
}

/// An isotropic w with form(h, w) ≠ 0, for isotropic h in a nondegenerate span.
fn partner(h: &[FE], space: &[Vector], form: Form) -> Option<Vector> {
    space.iter().find_map(|w| {
        let b = form(h, w);
        if b.is_zero() {
            return None;
        }
        let c = form(w, w) / (b.descriptor().int(2) * b);
        Some(vec_axpy(w, &-c, h))
    })
}

/// v rescaled so that form(v, v) = target.
fn scaled(v: &[FE], target: &FE, form: Form) -> Result<Vector> {
    Ok(vec_scale(&root(&(target / form(v, v)))?, v))
}

/// The hyperbolic pair u = (h + t·w)/2, v = (h − t·w)/(2i), so u + iv = h.
fn hyperbolic(h: &[FE], t: &FE, w: &[FE]) -> Result<(Vector, Vector)> {
    let f = t.descriptor();
    let i = f.i()?;
    let tw = vec_scale(t, w);
    let u = vec_scale(&f.int(2).inv()?, &vec_add(h, &tw));
    let v = vec_scale(&(f.int(2) * i).inv()?, &vec_sub(h, &tw));
    Ok((u, v))
}

/// Completes the images of a template's basis from the proposed ones using
/// tᵢ² = Σ Aᵢⱼ tⱼ, and keeps the result only if it is an isomorphism.
pub(crate) fn assemble(t: &EvolutionAlgebra, e: &EvolutionAlgebra, gens: &[(usize, Vector)]) -> Option<Matrix> {
    let n = t.dim();
    let a = t.structure();
    let mut img: Vec<Option<Vector>> = vec![None; n];
    for (k, v) in gens {
        img[*k] = Some(v.clone());
    }
    let mut progress = true;
    while progress {
        progress = false;
        for i in 0..n {
            let Some(x) = img[i].clone() else { continue };
            let unknown: Vec<usize> = (0..n).filter(|&j| !a.get(i, j).is_zero() && img[j].is_none()).collect();
            if unknown.len() != 1 {
                continue;
            }
            let mut rest = e.square(&x).ok()?;
            for j in 0..n {
                if let (false, Some(y)) = (a.get(i, j).is_zero(), &img[j]) {
                    rest = vec_axpy(&rest, &-a.get(i, j), y);
                }
            }
            let j = unknown[0];
            img[j] = Some(vec_scale(&a.get(i, j).inv().ok()?, &rest));
            progress = true;
        }
    }
    let cols: Vec<Vector> = img.into_iter().collect::<Option<_>>()?;
    let m = Matrix::from_columns(t.field(), n, &cols).ok()?;
    matches!(verify_hom(t, e, &m), Ok(true)).then_some(m)
}

pub(crate) fn analyze(c: &Ctx) -> Result<(Vec<usize>, Analysis)> {
    let ty: Vec<usize> = c.blocks.iter().map(Vec::len).collect();
    let a = match ty.as_slice() {
        [1] => Analysis::single(1, Ok(vec![(0, c.unit(0))])),
        [1, _] => ub(c),
        [1, 1, 1] => Analysis::single(1, Ok(vec![(0, c.units(2)[0].clone())])),
        [1, 1, 2] | [1, 1, 3] => ubg(c),
        [1, 2, 1] | [1, 3, 1] => ubu(c),
        [1, 1, 1, 1] => chain4(c),
        [1, 1, 1, 2] => ubfg(c),
        [1, 2, 2] => t122(c)?,
        [1, 2, 1, 1] => t1211(c)?,
        [1, 1, 2, 1] => t1121(c)?,
        [1, 1, 1, 1, 1] => chain5(c)?,
        [2, 3] => t23(c),
        [2, 2, 1] => t221(c),
        [2, 1, 2] => t212(c),
        _ => {
            return Err(Error::Domain(format!(
                "no indecomposable canonical form of type {ty:?}"
            )))
        }
    };
    Ok((ty, a))
}

/// u₁² = … = u_n² = s.
fn ub(c: &Ctx) -> Analysis {
    let s = c.idx(0);
    let tops = c.units(1);
    let gens = (|| {
        let l0 = c.sq(&tops[0])[s].clone();
        tops.iter()
            .enumerate()
            .map(|(j, u)| Ok((j, vec_scale(&root(&(&l0 / &c.sq(u)[s]))?, u))))
            .collect()
    })();
    Analysis::single(1, gens)
}

/// uⱼ² = w + g′ⱼ s, w² = s, where the eigenvalues g may be moved by g ↦ (g − K)/m.
fn ubg(c: &Ctx) -> Analysis {
    let (s, w) = (c.idx(0), c.idx(1));
    let tops = c.units(2);
    let nt = tops.len();
    let a1 = c.sq(&c.unit(w))[s].clone();
    let sq: Vec<Vector> = tops.iter().map(|u| c.sq(u)).collect();
    let p: Vec<FE> = sq.iter().map(|v| v[w].clone()).collect();
    let g: Vec<FE> = sq.iter().zip(&p).map(|(v, pj)| &v[s] / &(&a1 * pj)).collect();
    let cand = |perm: &[usize], m: FE, k: FE, params: Vec<FE>| -> Cand {
        let gens = (|| {
            let mut out = Vec::new();
            for (j, &pj) in perm.iter().enumerate() {
                out.push((j, vec_scale(&root(&(&m / &p[pj]))?, &tops[pj])));
            }
            let wv = vec_axpy(&vec_scale(&m, &c.unit(w)), &(&k * &m * &a1), &c.unit(s));
            out.push((nt, wv));
            Ok(out)
        })();
        Cand { params, gens }
    };
    let one = c.f.one();
    let mut distinct = g.clone();
    distinct.sort();
    distinct.dedup();
    match distinct.len() {
        1 => Analysis {
            variant: 1,
            cands: vec![cand(&(0..nt).collect::<Vec<_>>(), one, g[0].clone(), vec![])],
        },
        2 if nt == 2 => Analysis {
            variant: 2,
            cands: [[0, 1], [1, 0]]
                .iter()
                .map(|pm| cand(pm, &g[pm[1]] - &g[pm[0]], g[pm[0]].clone(), vec![]))
                .collect(),
        },
        2 => {
            let odd = (0..3).find(|&j| (0..3).filter(|&k| g[k] == g[j]).count() == 1).unwrap();
            let eq: Vec<usize> = (0..3).filter(|&j| j != odd).collect();
            let perm = [eq[0], eq[1], odd];
            Analysis {
                variant: 2,
                cands: vec![cand(&perm, &g[odd] - &g[eq[0]], g[eq[0]].clone(), vec![])],
            }
        }
        _ => {
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            Analysis {
                variant: 3,
                cands: perms
                    .iter()
                    .map(|pm| {
                        let k = g[pm[1]].clone();
                        let m = &g[pm[2]] - &k;
                        let alpha = (&g[pm[0]] - &k) / &m;
                        cand(pm, m, k, vec![alpha])
                    })
                    .collect(),
            }
        }
    }
}

/// x² = w + f′ t + g′ s with w² = t, t² = s; (f, g) ↦ (f/m, g/m³ − k/m⁴).
fn ubfg(c: &Ctx) -> Analysis {
    let w = c.unit(c.idx(2));
    let t = c.sq(&w);
    let s = c.sq(&t);
    let tops = c.units(3);
    let basis = [w.clone(), t, s.clone()];
    let mut lam = Vec::new();
    let mut fs = Vec::new();
    let mut gs = Vec::new();
    for u in &tops {
        let k = c.coords(&basis, &c.sq(u)).expect("squares of the top block lie in ann³");
        fs.push(&k[1] / &k[0]);
        gs.push(&k[2] / &k[0]);
        lam.push(k[0].clone());
    }
    let cand = |perm: [usize; 2], m: Result<FE>, params: Vec<FE>| -> Cand {
        let gens = (|| {
            let m = m?;
            let k = &m * &gs[perm[1]];
            let mut out = Vec::new();
            for (j, &pj) in perm.iter().enumerate() {
                out.push((j, vec_scale(&root(&(&m / &lam[pj]))?, &tops[pj])));
            }
            out.push((2, vec_axpy(&vec_scale(&m, &w), &k, &s)));
            Ok(out)
        })();
        Cand { params, gens }
    };
    let zero = [fs[0].is_zero(), fs[1].is_zero()];
    match zero {
        [true, true] if gs[0] == gs[1] => Analysis {
            variant: 1,
            cands: vec![cand([0, 1], Ok(c.f.one()), vec![])],
        },
        [true, true] => Analysis {
            variant: 2,
            cands: [[0, 1], [1, 0]]
                .into_iter()
                .map(|pm| {
                    let m = (&gs[pm[0]] - &gs[pm[1]])
                        .nth_root(3)
                        .and_then(|r| r.ok_or_else(|| Error::SqrtUnavailable("cube root".into())));
                    cand(pm, m, vec![])
                })
                .collect(),
        },
        [false, true] | [true, false] => {
            let pm = if zero[1] { [0, 1] } else { [1, 0] };
            let m = fs[pm[0]].clone();
            let gamma = (&gs[pm[0]] - &gs[pm[1]]) / m.pow(3);
            Analysis {
                variant: 3,
                cands: vec![cand(pm, Ok(m), vec![gamma])],
            }
        }
        [false, false] => Analysis {
            variant: 4,
            cands: [[0, 1], [1, 0]]
                .into_iter()
                .map(|pm| {
                    let m = fs[pm[0]].clone();
                    let beta = &fs[pm[1]] / &m;
                    let gamma = (&gs[pm[0]] - &gs[pm[1]]) / m.pow(3);
                    cand(pm, Ok(m), vec![beta, gamma])
                })
                .collect(),
        },
    }
}

/// x² = u₁ (anisotropic) or x² = u₁ + i u₂ (isotropic), with uⱼ² = s.
fn ubu(c: &Ctx) -> Analysis {
    let s = c.idx(0);
    let us = c.units(1);
    let x = c.units(2)[0].clone();
    let q = |a: &[FE], b: &[FE]| c.mul(a, b)[s].clone();
    let h = c.sq(&x);
    let a = c.part(&h, 1);
    let n = us.len();
    if !q(&a, &a).is_zero() {
        let gens = (|| {
            let norm = q(&a, &a);
            let mut out = vec![(0, x.clone())];
            for (k, v) in orth_basis(&c.perp(&us, &[a.clone()], &q), &q).iter().enumerate() {
                out.push((2 + k, scaled(v, &norm, &q)?));
            }
            Ok(out)
        })();
        return Analysis::single(1, gens);
    }
    let gens = (|| {
        let w = partner(&a, &us, &q).expect("nondegenerate form");
        // stretching w sets form(u1, u1) = t·form(a, w)/2, which can match the
        // complement without a root
        let rest = c.perp(&us, &[a.clone(), w.clone()], &q);
        let t = match rest.first() {
            Some(r) if n == 3 => c.f.int(2) * q(r, r) / q(&a, &w),
            _ => c.f.one(),
        };
        let (u1, u2) = hyperbolic(&h, &t, &w)?;
        let mut out = vec![(0, x.clone()), (1, u1), (2, u2)];
        if n == 3 {
            out.push((4, rest[0].clone()));
        }
        Ok(out)
    })();
    Analysis::single(2, gens)
}

/// x² = y (+ z), y² = z, z² = s.
fn chain4(c: &Ctx) -> Analysis {
    let (x, y, z, s) = (c.idx(3), c.idx(2), c.idx(1), c.idx(0));
    let x2 = c.sq(&c.unit(x));
    let y2 = c.sq(&c.unit(y));
    let (d1, d2, d3) = (&x2[y], &x2[z], &x2[s]);
    let (c1, c2) = (&y2[z], &y2[s]);
    let v2 = !d2.is_zero();
    let gens = (|| {
        let t2 = if v2 { d2 / &(d1 * d1 * c1) } else { c.f.one() };
        let t = root(&t2)?;
        let ey = &t2 * d1;
        let ez = &ey * &ey * c1;
        let sz = &ey * &ey * c2;
        let cz = if v2 { c.f.one() } else { c.f.zero() };
        let sy = &t2 * d3 - &cz * &sz;
        let lift = |e: &FE, i: usize, sig: &FE| vec_axpy(&vec_scale(e, &c.unit(i)), sig, &c.unit(s));
        Ok(vec![
            (0, vec_scale(&t, &c.unit(x))),
            (1, lift(&ey, y, &sy)),
            (2, lift(&ez, z, &sz)),
        ])
    })();
    Analysis::single(if v2 { 2 } else { 1 }, gens)
}

/// x² = y + αz + βw, y² = z + γw, z² = w, w² = s with γ ∈ {0, 1}.
fn chain5(c: &Ctx) -> Result<Analysis> {
    let (x, y, z, w, s) = (c.idx(4), c.idx(3), c.idx(2), c.idx(1), c.idx(0));
    let x2 = c.sq(&c.unit(x));
    let y2 = c.sq(&c.unit(y));
    let z2 = c.sq(&c.unit(z));
    let (d1, d2, d3, d4) = (&x2[y], &x2[z], &x2[w], &x2[s]);
    let (c1, c2, c3) = (&y2[z], &y2[w], &y2[s]);
    let (b1, b2) = (&z2[w], &z2[s]);
    let zero = c.f.zero();
    let one = c.f.one();
    let a0 = c2 / &(b1 * c1 * c1 * d1 * d1);
    let b0 = d2 / &(d1 * d1 * c1);
    let c0 = d3 / &(d1.pow(4) * c1 * c1 * b1);
    // (variant, t², coefficient of z and of w in x², γ, params)
    let build = |t2: Result<FE>, cz: FE, cw: FE, gamma: FE| -> Result<Vec<(usize, Vector)>> {
        let t2 = t2?;
        let t = root(&t2)?;
        let ey = &t2 * d1;
        let ez = &ey * &ey * c1;
        let sw = &ez * &ez * b2;
        let sz = &ey * &ey * c3 - &gamma * &sw;
        let sy = &t2 * d4 - &cz * &sz - &cw * &sw;
        let lift = |e: &FE, i: usize, sig: &FE| vec_axpy(&vec_scale(e, &c.unit(i)), sig, &c.unit(s));
        Ok(vec![
            (0, vec_scale(&t, &c.unit(x))),
            (1, lift(&ey, y, &sy)),
            (2, lift(&ez, z, &sz)),
        ])
    };
    if !c2.is_zero() {
        let mut cands = Vec::new();
        match root(&a0) {
            Ok(tau) => {
                for tau in [tau.clone(), -&tau] {
                    let alpha = &b0 / &tau;
                    let beta = &c0 / &tau.pow(3);
                    let gens = build(Ok(tau), alpha.clone(), beta.clone(), one.clone());
                    cands.push(Cand {
                        params: vec![alpha, beta],
                        gens,
                    });
                }
            }
            Err(e) if b0.is_zero() && c0.is_zero() => cands.push(Cand {
                params: vec![zero.clone(), zero.clone()],
                gens: Err(e),
            }),
            Err(e) => return Err(e),
        }
        return Ok(Analysis { variant: 4, cands });
    }
    Ok(if !d2.is_zero() {
        let beta = &c0 / &b0.pow(3);
        Analysis {
            variant: 3,
            cands: vec![Cand {
                params: vec![beta.clone()],
                gens: build(Ok(b0.clone()), one.clone(), beta, zero.clone()),
            }],
        }
    } else if !d3.is_zero() {
        let t2 = c0
            .nth_root(3)
            .and_then(|r| r.ok_or_else(|| Error::SqrtUnavailable("cube root".into())));
        Analysis::single(2, build(t2, zero.clone(), one.clone(), zero.clone()))
    } else {
        Analysis::single(1, build(Ok(one.clone()), zero.clone(), zero.clone(), zero.clone()))
    })
}

/// Type [1,2,2]: x² = a + μs, y² = b + νs with a, b in U₂ and u² = v² = s.
fn t122(c: &Ctx) -> Result<Analysis> {
    let s = c.idx(0);
    let us = c.units(1);
    let tops = c.units(2);
    let q = |a: &[FE], b: &[FE]| c.mul(a, b)[s].clone();
    let (x0, y0) = (tops[0].clone(), tops[1].clone());
    let (hx, hy) = (c.sq(&x0), c.sq(&y0));
    let (a, b) = (c.part(&hx, 1), c.part(&hy, 1));
    let (qa, qb, bab) = (q(&a, &a), q(&b, &b), q(&a, &b));
    if c.rank(&[a.clone(), b.clone()]) == 2 {
        if qa.is_zero() && qb.is_zero() {
            let gens = (|| {
                let i = c.f.i()?;
                let two = c.f.int(2);
                let u = vec_scale(&two.inv()?, &vec_add(&hx, &hy));
                let v = vec_scale(&(&two * &i).inv()?, &vec_sub(&hx, &hy));
                Ok(vec![(0, x0.clone()), (1, y0.clone()), (2, u), (3, v)])
            })();
            return Ok(Analysis::single(6, gens));
        }
        let d = &qa * &qb - &bab * &bab;
        let mut cands = Vec::new();
        for (xx, yy, qx) in [(&x0, &y0, &qa), (&y0, &x0, &qb)] {
            if qx.is_zero() {
                continue;
            }
            let r = match root(&d) {
                Ok(r) => r,
                Err(e) if bab.is_zero() => {
                    cands.push(Cand {
                        params: vec![c.f.zero()],
                        gens: Err(e),
                    });
                    continue;
                }
                Err(e) => return Err(e),
            };
            for eps in [c.f.one(), -c.f.one()] {
                let delta = &eps / &r;
                let alpha = &bab * &delta;
                let gens = root(&(qx * &delta)).map(|dd| vec![(0, xx.clone()), (1, vec_scale(&dd, yy))]);
                cands.push(Cand {
                    params: vec![alpha],
                    gens,
                });
            }
        }
        return Ok(Analysis { variant: 1, cands });
    }
    let lam = ratio(&b, &a).expect("a and b are parallel and nonzero");
    let full = c.rank(&[hx.clone(), hy.clone()]) == 1;
    let (mu, nu) = (&hx[s], &hy[s]);
    if !qa.is_zero() {
        let w = c.perp(&us, &[a.clone()], &q).remove(0);
        if full {
            let gens = (|| {
                let y1 = vec_scale(&root(&lam.inv()?)?, &y0);
                Ok(vec![(0, x0.clone()), (1, y1), (3, scaled(&w, &qa, &q)?)])
            })();
            return Ok(Analysis::single(2, gens));
        }
        let gens = (|| {
            let c2 = (nu / &lam - mu) / &qa;
            let cc = root(&c2)?;
            let dd = root(&(&c2 / &lam))?;
            let v = scaled(&w, &(&c2 * &c2 * &qa), &q)?;
            Ok(vec![(0, vec_scale(&cc, &x0)), (1, vec_scale(&dd, &y0)), (3, v)])
        })();
        return Ok(Analysis::single(3, gens));
    }
    let gens = (|| {
        let w = partner(&a, &us, &q).expect("nondegenerate form");
        let t = if full {
            c.f.one()
        } else {
            c.f.int(2) * (nu / &lam - mu) / q(&a, &w)
        };
        let (u, v) = hyperbolic(&hx, &t, &w)?;
        let y1 = vec_scale(&root(&lam.inv()?)?, &y0);
        Ok(vec![(0, x0.clone()), (1, y1), (2, u), (3, v)])
    })();
    Ok(Analysis::single(if full { 4 } else { 5 }, gens))
}

/// Type [1,2,1,1]: x² = κy + a + μs, y² = b + νs, u² = v² = s.
fn t1211(c: &Ctx) -> Result<Analysis> {
    let s = c.idx(0);
    let us = c.units(1);
    let y0 = c.units(2)[0].clone();
    let x0 = c.units(3)[0].clone();
    let q = |a: &[FE], b: &[FE]| c.mul(a, b)[s].clone();
    let (hx, hy) = (c.sq(&x0), c.sq(&y0));
    let kappa = hx[c.idx(2)].clone();
    let (a, b) = (c.part(&hx, 1), c.part(&hy, 1));
    let (qa, qb, bab) = (q(&a, &a), q(&b, &b), q(&a, &b));
    let zero = c.f.zero();
    let one = c.f.one();
    // x' = c·x0, u' = y'², and y' = x'² − αu' − βv'
    let finish = |cc: &FE, alpha: &FE, beta: &FE, v: Vector| -> Vec<(usize, Vector)> {
        let x1 = vec_scale(cc, &x0);
        let c2 = cc * cc;
        let u = vec_scale(&(&c2 * &c2 * &kappa * &kappa), &hy);
        let y1 = vec_sub(&vec_sub(&c.sq(&x1), &vec_scale(alpha, &u)), &vec_scale(beta, &v));
        vec![(0, x1), (1, y1), (3, v)]
    };
    if !qb.is_zero() {
        let w = c.perp(&us, &[b.clone()], &q).remove(0);
        let norm_u = |c2: &FE| c2.pow(4) * kappa.pow(4) * &qb;
        if vec_is_zero(&a) {
            let gens = (|| Ok(finish(&one, &zero, &zero, scaled(&w, &norm_u(&one), &q)?)))();
            return Ok(Analysis::single(1, gens));
        }
        if bab.is_zero() {
            let gens = (|| {
                let r = root(&(&qa / &qb))?;
                let mut last = Err(Error::SqrtUnavailable("normalizing scale".into()));
                for sign in [r.clone(), -&r] {
                    let c2 = &sign / &kappa.pow(2);
                    if let Ok(cc) = root(&c2) {
                        last = Ok(finish(&cc, &zero, &one, vec_scale(&c2, &a)));
                        break;
                    }
                }
                last
            })();
            return Ok(Analysis::single(2, gens));
        }
        let ab = &bab / &qb;
        let aperp = vec_axpy(&a, &-&ab, &b);
        let beta2 = (&qa * &qb - &bab * &bab) / (&bab * &bab);
        let c2 = &ab / &kappa.pow(2);
        let betas = if beta2.is_zero() {
            vec![zero.clone()]
        } else {
            let r = root(&beta2)?;
            vec![r.clone(), -r]
        };
        let cands = betas
            .into_iter()
            .map(|beta| {
                let gens = (|| {
                    let cc = root(&c2)?;
                    let v = if beta.is_zero() {
                        scaled(&w, &(c2.pow(4) * kappa.pow(4) * &qb), &q)?
                    } else {
                        vec_scale(&(&c2 / &beta), &aperp)
                    };
                    Ok(finish(&cc, &one, &beta, v))
                })();
                Cand {
                    params: vec![beta],
                    gens,
                }
            })
            .collect();
        return Ok(Analysis { variant: 3, cands });
    }
    // y'² is isotropic: y'² = u' + iv'
    let parallel = c.rank(&[a.clone(), b.clone()]) == 1;
    let variant = if vec_is_zero(&a) {
        4
    } else if !qa.is_zero() {
        5
    } else if parallel {
        6
    } else {
        7
    };
    let gens = (|| {
        let i = c.f.i()?;
        let (cc, t, w, alpha, beta) = match variant {
            4 => (one.clone(), one.clone(), partner(&b, &us, &q).unwrap(), zero.clone(), zero.clone()),
            5 => {
                let w = partner(&b, &us, &q).unwrap();
                let k = c.coords(&[b.clone(), w.clone()], &a).unwrap();
                let c2 = c.f.int(2) * &k[0] / kappa.pow(2);
                let t = c.f.int(2) * &c2 * &k[1];
                (root(&c2)?, t, w, one.clone(), zero.clone())
            }
            6 => {
                let c2 = ratio(&a, &b).unwrap() / kappa.pow(2);
                (root(&c2)?, one.clone(), partner(&b, &us, &q).unwrap(), one.clone(), i.clone())
            }
            _ => (one.clone(), one.clone(), a.clone(), one.clone(), -&i),
        };
        let c2 = &cc * &cc;
        let h = vec_scale(&(&c2 * &c2 * &kappa * &kappa), &hy);
        let (u, v) = hyperbolic(&h, &t, &w)?;
        let x1 = vec_scale(&cc, &x0);
        let y1 = vec_sub(&vec_sub(&c.sq(&x1), &vec_scale(&alpha, &u)), &vec_scale(&beta, &v));
        Ok(vec![(0, x1), (1, y1), (2, u), (3, v)])
    })();
    Ok(Analysis::single(variant, gens))
}

/// Type [1,1,2,1]: w² = a₁s, y², z² ∈ span{w, s}, x² = k_y y + k_z z + m w + n s.
fn t1121(c: &Ctx) -> Result<Analysis> {
    let (s, w) = (c.idx(0), c.idx(1));
    let mid = c.units(2);
    let x0 = c.units(3)[0].clone();
    let wv = c.unit(w);
    let a1 = c.sq(&wv)[s].clone();
    let q3 = |a: &[FE], b: &[FE]| c.mul(a, b)[w].clone();
    let hx = c.sq(&x0);
    let k = c.part(&hx, 2);
    let m = hx[w].clone();
    let sq: Vec<Vector> = mid.iter().map(|v| c.sq(v)).collect();
    let p: Vec<FE> = sq.iter().map(|v| v[w].clone()).collect();
    let g: Vec<FE> = sq.iter().zip(&p).map(|(v, pj)| &v[s] / &(&a1 * pj)).collect();
    let zero = c.f.zero();
    let one = c.f.one();
    if g[0] == g[1] {
        // every square of U₃ is a multiple of dir = w + a₁g s
        let dir = vec_axpy(&wv, &(&a1 * &g[0]), &c.unit(s));
        let qk = q3(&k, &k);
        if !qk.is_zero() {
            let variant = if m.is_zero() { 1 } else { 2 };
            let gens = (|| {
                let c2 = if m.is_zero() { one.clone() } else { &m / &qk };
                let cc = root(&c2)?;
                let norm = &c2 * &c2 * &qk;
                let zeta = c.perp(&mid, &[k.clone()], &q3).remove(0);
                Ok(vec![
                    (0, vec_scale(&cc, &x0)),
                    (2, scaled(&zeta, &norm, &q3)?),
                    (3, vec_scale(&norm, &dir)),
                ])
            })();
            return Ok(Analysis::single(variant, gens));
        }
        let variant = if m.is_zero() { 3 } else { 4 };
        let gens = (|| {
            let w2 = partner(&k, &mid, &q3).expect("nondegenerate form");
            let bb = q3(&k, &w2);
            let t = if m.is_zero() { one.clone() } else { c.f.int(2) * &m / &bb };
            let big_w = vec_scale(&half(&(&t * &bb)), &dir);
            let mm = if m.is_zero() { zero.clone() } else { one.clone() };
            let h = vec_axpy(&hx, &-mm, &big_w);
            let (y1, z1) = hyperbolic(&h, &t, &w2)?;
            Ok(vec![(0, x0.clone()), (1, y1), (2, z1), (3, big_w)])
        })();
        return Ok(Analysis::single(variant, gens));
    }
    // distinct eigenvalues: y0, z0 are the only orthogonal directions
    let kc = [k[c.blocks[2][0]].clone(), k[c.blocks[2][1]].clone()];
    if kc[0].is_zero() || kc[1].is_zero() {
        let pi = if kc[0].is_zero() { 1 } else { 0 };
        let ri = 1 - pi;
        let mu = &g[ri] - &g[pi];
        let alpha2 = &m * &m / (&p[pi] * &kc[pi] * &kc[pi] * &mu);
        let alphas = if alpha2.is_zero() {
            vec![zero.clone()]
        } else {
            let r = root(&alpha2)?;
            vec![r.clone(), -r]
        };
        let cands = alphas
            .into_iter()
            .map(|alpha| {
                let gens = (|| {
                    let cp = if m.is_zero() {
                        root(&(&mu / &p[pi]))?
                    } else {
                        &alpha * &mu * &kc[pi] / &m
                    };
                    let cc = root(&(&cp / &kc[pi]))?;
                    let big_w = vec_axpy(&vec_scale(&mu, &wv), &(&mu * &sq[pi][s] / &p[pi]), &c.unit(s));
                    let cr = root(&(&mu / &p[ri]))?;
                    Ok(vec![
                        (0, vec_scale(&cc, &x0)),
                        (2, vec_scale(&cr, &mid[ri])),
                        (3, big_w),
                    ])
                })();
                Cand {
                    params: vec![alpha],
                    gens,
                }
            })
            .collect();
        return Ok(Analysis { variant: 5, cands });
    }
    let mut cands = Vec::new();
    let mut failure = None;
    for (pi, ri) in [(0usize, 1usize), (1, 0)] {
        let mu = &g[ri] - &g[pi];
        let beta2 = &p[pi] * &kc[pi] * &kc[pi] / (&p[ri] * &kc[ri] * &kc[ri]);
        let gamma2 = &m * &m / (&p[ri] * &kc[ri] * &kc[ri] * &mu);
        let (rb, rg) = match (root(&beta2), root(&gamma2)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => {
                failure = Some(e);
                continue;
            }
        };
        for beta in [rb.clone(), -&rb] {
            for gamma in [rg.clone(), -&rg] {
                let gens = (|| {
                    let c2 = if m.is_zero() {
                        root(&(&mu / &p[ri]))? / &kc[ri]
                    } else {
                        &gamma * &mu / &m
                    };
                    let cc = root(&c2)?;
                    let cp = &c2 * &kc[pi] / &beta;
                    let big_w = vec_axpy(&vec_scale(&mu, &wv), &(&mu * &sq[pi][s] / &p[pi]), &c.unit(s));
                    Ok(vec![
                        (0, vec_scale(&cc, &x0)),
                        (1, vec_scale(&cp, &mid[pi])),
                        (3, big_w),
                    ])
                })();
                cands.push(Cand {
                    params: vec![beta.clone(), gamma],
                    gens,
                });
            }
        }
    }
    if cands.is_empty() {
        return Err(failure.unwrap_or_else(|| Error::SqrtUnavailable("orbit parameters".into())));
    }
    Ok(Analysis { variant: 6, cands })
}

/// Type [2,3]: three squares in a 2-dim annihilator, pairwise independent.
fn t23(c: &Ctx) -> Analysis {
    let tops = c.units(1);
    let sq: Vec<Vector> = tops.iter().map(|v| c.sq(v)).collect();
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut last = Err(Error::SqrtUnavailable("normalizing scales".into()));
    for [ia, ib, ie] in perms {
        let Some(k) = c.coords(&[sq[ia].clone(), sq[ib].clone()], &sq[ie]) else { continue };
        if let (Ok(ra), Ok(rb)) = (root(&-&k[0]), root(&k[1])) {
            last = Ok(vec![
                (0, vec_scale(&ra, &tops[ia])),
                (1, vec_scale(&rb, &tops[ib])),
                (4, tops[ie].clone()),
            ]);
            break;
        }
    }
    Analysis::single(1, last)
}

/// Type [2,2,1]: x² = αy + βz + p with α, β ≠ 0.
fn t221(c: &Ctx) -> Analysis {
    let mid = c.units(1);
    let x0 = c.units(2)[0].clone();
    let hx = c.sq(&x0);
    let (iy, iz) = (c.blocks[1][0], c.blocks[1][1]);
    let p = c.part(&hx, 0);
    let b1 = vec_axpy(&p, &hx[iy], &mid[0]);
    let b2 = vec_scale(&hx[iz], &mid[1]);
    Analysis::single(1, Ok(vec![(0, x0), (1, b1), (2, b2)]))
}

/// Type [2,1,2]: a² = c, b² = c + e, c² = d.
fn t212(c: &Ctx) -> Analysis {
    let w = c.idx(1);
    let tops = c.units(2);
    let mut last = Err(Error::SqrtUnavailable("normalizing scale".into()));
    for (xx, yy) in [(&tops[0], &tops[1]), (&tops[1], &tops[0])] {
        let ratio = &c.sq(xx)[w] / &c.sq(yy)[w];
        if let Ok(eps) = root(&ratio) {
            last = Ok(vec![(0, xx.clone()), (1, vec_scale(&eps, yy))]);
            break;
        }
    }
    Analysis::single(1, last)
}
