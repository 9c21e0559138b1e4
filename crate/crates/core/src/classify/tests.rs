use super::*;

fn f13() -> FieldDescriptor {
    FieldDescriptor::prime(13).unwrap()
}

fn all_params(entry: &ClassEntry) -> Vec<Vec<FieldElement>> {
    let f = entry.field();
    let els: Vec<FieldElement> = f.elements().unwrap().collect();
    let mut out = vec![vec![]];
    for _ in 0..entry.arity() {
        out = out
            .into_iter()
            .flat_map(|p| {
                els.iter().map(move |x| {
                    let mut q = p.clone();
                    q.push(x.clone());
                    q
                })
            })
            .collect();
    }
    out.retain(|p| entry.in_domain(p));
    out
}

/// True when every normalization towards `label` needs a root F lacks.
fn blocked_by_roots(e: &EvolutionAlgebra, label: &CanonicalLabel) -> bool {
    let ctx = normal::Ctx::new(e, e.upper_series().blocks);
    let (_, an) = normal::analyze(&ctx).unwrap();
    an.cands
        .iter()
        .filter(|c| c.params == label.params)
        .all(|c| matches!(c.gens, Err(Error::SqrtUnavailable(_))))
}

#[test]
fn table_sizes() {
    let q = FieldDescriptor::rationals();
    let qi = FieldDescriptor::gaussian();
    let n: Vec<usize> = (1..=3).map(|d| canonical_table(d, q).unwrap().len()).collect();
    assert_eq!(n.iter().sum::<usize>(), 4);
    assert_eq!(canonical_table(4, qi).unwrap().len(), 7);
    assert!(matches!(canonical_table(4, q), Err(Error::FieldLacksI)));
    assert!(matches!(canonical_table(6, qi), Err(Error::UnsupportedDim(6))));
}

#[test]
fn every_template_has_its_type() {
    for d in 1..=5 {
        for entry in canonical_table(d, f13()).unwrap() {
            for p in all_params(&entry).into_iter().take(5) {
                let e = entry.structure_template(&p).unwrap();
                assert_eq!(e.upper_series().type_vector, entry.type_vector(), "{entry:?}");
            }
        }
    }
}

#[test]
fn labels_are_idempotent_with_witnesses_over_f13() {
    let mut missing = Vec::new();
    for d in 1..=5 {
        for entry in canonical_table(d, f13()).unwrap() {
            for p in all_params(&entry) {
                let e = entry.structure_template(&p).unwrap();
                let nf = normal_form(&e).unwrap_or_else(|err| panic!("{entry:?} {p:?}: {err}"));
                let want = entry.label(&p).unwrap();
                assert_eq!(nf.parts, vec![want.clone()], "{entry:?} {p:?}");
                if nf.map.is_none() && !blocked_by_roots(&e, &want) {
                    missing.push(format!("{want} from {p:?}"));
                }
            }
        }
    }
    assert!(missing.is_empty(), "no witness for:\n{}", missing.join("\n"));
}

#[test]
fn chain_of_length_four_is_first_variant() {
    let f = FieldDescriptor::gaussian();
    let e = EvolutionAlgebra::from_ints(f, &[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    match classify(&e).unwrap() {
        Classification::Indecomposable { label, witness_available } => {
            assert_eq!(label.type_vector, vec![1, 1, 1, 1]);
            assert_eq!(label.variant, 1);
            assert!(witness_available);
        }
        other => panic!("{other}"),
    }
}

#[test]
fn anharmonic_partners_share_a_label() {
    let f = FieldDescriptor::gaussian();
    let entry = canonical_table(5, f)
        .unwrap()
        .into_iter()
        .find(|c| c.type_vector() == [1, 1, 3] && c.arity() == 1)
        .unwrap();
    let a = FieldElement::parse("3", f).unwrap();
    let b = &f.one() - &a;
    let e1 = entry.structure_template(&[a]).unwrap();
    let e2 = entry.structure_template(&[b]).unwrap();
    assert_eq!(classify(&e1).unwrap(), classify(&e2).unwrap());
    let w = witness_isomorphism(&e1, &e2).unwrap().unwrap();
    assert!(verify_hom(&e1, &e2, &w).unwrap());
}

#[test]
fn distinct_dim3_algebras_have_no_witness() {
    let f = FieldDescriptor::rationals();
    let t = canonical_table(3, f).unwrap();
    let e1 = t[0].structure_template(&[]).unwrap();
    let e2 = t[1].structure_template(&[]).unwrap();
    assert_eq!(witness_isomorphism(&e1, &e2).unwrap(), None);
    assert!(witness_isomorphism(&e1, &e1).unwrap().is_some());
}

#[test]
fn label_display() {
    let f = f13();
    let l = CanonicalLabel { dim: 5, type_vector: vec![1, 1, 3], variant: 3, params: vec![f.int(2)] };
    assert_eq!(l.to_string(), "d5:[1,1,3]:v3(2)");
    let l = CanonicalLabel { dim: 3, type_vector: vec![1, 2], variant: 1, params: vec![] };
    assert_eq!(l.to_string(), "d3:[1,2]:v1");
}

#[test]
fn decomposed_sum_is_labeled_per_summand() {
    let f = FieldDescriptor::rationals();
    // two copies of the 2-dim chain, interleaved
    let e = EvolutionAlgebra::from_ints(f, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let c = classify(&e).unwrap();
    let ls = c.labels();
    assert!(c.is_decomposed());
    assert_eq!(ls.len(), 2);
    assert_eq!(ls[0], ls[1]);
    assert!(normal_form(&e).unwrap().map.is_some());
}

#[test]
fn rejects_non_nilpotent() {
    let f = FieldDescriptor::rationals();
    let e = EvolutionAlgebra::from_ints(f, &[&[1]]);
    assert!(matches!(classify(&e), Err(Error::NotNilpotent)));
}


fn sample_params(entry: &ClassEntry, rng: &mut impl rand::Rng) -> Vec<FieldElement> {
    loop {
        let p: Vec<FieldElement> =
            (0..entry.arity()).map(|_| crate::oracle::random_element(entry.field(), rng)).collect();
        if entry.in_domain(&p) {
            return p;
        }
    }
}

#[test]
fn labels_survive_natural_basis_changes() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for field in [f13(), FieldDescriptor::gaussian()] {
        for d in 1..=5 {
            for entry in canonical_table(d, field).unwrap() {
                for _ in 0..6 {
                    let p = sample_params(&entry, &mut rng);
                    let e = entry.structure_template(&p).unwrap();
                    let m = crate::oracle::random_natural_basis_change(&e, &mut rng).unwrap();
                    let moved = e.change_basis(&m).unwrap();
                    let nf = normal_form(&moved).unwrap();
                    assert_eq!(nf.parts, vec![entry.label(&p).unwrap()], "{entry:?} {p:?}");
                    if let Some(w) = nf.map {
                        assert!(verify_hom(&model_algebra(&nf.parts, field).unwrap(), &moved, &w).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn orbit_points_are_isomorphic_over_gaussian_rationals() {
    use rand::SeedableRng;
    let f = FieldDescriptor::gaussian();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let (mut found, mut blocked) = (0, 0);
    for entry in canonical_table(5, f).unwrap().into_iter().filter(|c| c.arity() > 0) {
        for _ in 0..4 {
            let p = sample_params(&entry, &mut rng);
            let e1 = entry.structure_template(&p).unwrap();
            for q in entry.param_orbit(&p) {
                let e2 = entry.structure_template(&q).unwrap();
                assert!(labels_equal(&entry.label(&p).unwrap(), &entry.label(&q).unwrap()));
                match witness_isomorphism(&e1, &e2) {
                    Ok(Some(w)) => {
                        assert!(verify_hom(&e1, &e2, &w).unwrap());
                        found += 1;
                    }
                    Err(Error::SqrtUnavailable(_)) => blocked += 1,
                    other => panic!("{entry:?} {p:?} -> {q:?}: {other:?}"),
                }
            }
        }
    }
    assert!(found > blocked, "found {found}, blocked {blocked}");
}
