//! The ten acceptance criteria, one line each. Runs without the libtest
//! harness so the lines always print; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use evoalg::classify::{self, canonical_table, labels_equal, CanonicalLabel, ClassEntry};
use evoalg::families::{self, FamilySpec};
use evoalg::oracle::{self, verify_hom, SearchBudget};
use evoalg::{EvolutionAlgebra, FieldDescriptor, FieldElement, Matrix, PowerKind, Subspace, Verdict};

type Check = Result<(), String>;

fn f13() -> FieldDescriptor {
    FieldDescriptor::prime(13).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(dims: std::ops::RangeInclusive<usize>, field: FieldDescriptor) -> Vec<ClassEntry> {
    dims.flat_map(|d| canonical_table(d, field).unwrap()).collect()
}

fn label_of(e: &EvolutionAlgebra) -> Result<Vec<CanonicalLabel>, String> {
    classify::classify(e).map(|c| c.labels()).map_err(|e| e.to_string())
}

fn sample_params(entry: &ClassEntry, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    loop {
        let p: Vec<FieldElement> =
            (0..entry.arity()).map(|_| oracle::random_element(entry.field(), rng)).collect();
        if entry.in_domain(&p) {
            return p;
        }
    }
}

/// A random nilpotent algebra: eᵢ² only reaches later indices of a random
/// order, so the graph is acyclic. `density` is the chance of each edge.
fn random_nilpotent(field: FieldDescriptor, n: usize, density: f64, rng: &mut ChaCha8Rng) -> EvolutionAlgebra {
    let mut order: Vec<usize> = (0..n).collect();
    for a in (1..n).rev() {
        order.swap(a, rng.gen_range(0..=a));
    }
    let mut m = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                m.set(order[a], order[b], oracle::random_element(field, rng));
            }
        }
    }
    EvolutionAlgebra::from_matrix(m).unwrap()
}

fn table_fidelity() -> Check {
    for entry in table(1..=5, f13()) {
        let e = entry.structure_template(&vec![f13().int(2); entry.arity()]).unwrap();
        let got = e.upper_series().type_vector;
        ensure(got == entry.type_vector(), || format!("{entry:?}: type {got:?}"))?;
        let profile = e.invariant_profile().map_err(|e| e.to_string())?;
        ensure(entry.property_holds(&profile) != Some(false), || {
            format!("{entry:?}: property {} fails", entry.property().unwrap())
        })?;
    }
    let with_property = table(4..=4, f13()).iter().filter(|e| e.property().is_some()).count();
    ensure(with_property == 6, || format!("{with_property} dim-4 entries carry a property, expected 6"))
}

fn idempotence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for field in [FieldDescriptor::gaussian(), f13()] {
        for entry in table(1..=5, field).into_iter().filter(|e| e.arity() > 0) {
            for _ in 0..50 {
                let p = sample_params(&entry, &mut rng);
                let want = entry.label(&p).unwrap();
                let got = label_of(&entry.structure_template(&p).unwrap())?;
                ensure(got == [want.clone()], || format!("{entry:?} {p:?}: {got:?} != {want}"))?;
            }
        }
    }
    Ok(())
}

fn census() -> Check {
    let qi = FieldDescriptor::gaussian();
    let counts: Vec<usize> = (1..=4).map(|d| canonical_table(d, qi).unwrap().len()).collect();
    ensure(counts == [1, 1, 2, 7], || format!("counts {counts:?}"))?;
    let mut labels = Vec::new();
    for entry in table(1..=4, qi) {
        let got = label_of(&entry.structure_template(&[]).unwrap())?;
        ensure(got == [entry.label(&[]).unwrap()], || format!("{entry:?} classifies as {got:?}"))?;
        labels.push(got[0].clone());
    }
    labels.sort();
    labels.dedup();
    ensure(labels.len() == 11, || "two table entries share a label".into())
}

fn anharmonic_orbits() -> Check {
    let f = f13();
    let entry = canonical_table(5, f)
        .unwrap()
        .into_iter()
        .find(|e| e.type_vector() == [1, 1, 3] && e.arity() == 1)
        .unwrap();
    let values: Vec<FieldElement> = (2..13).map(|a| f.int(a)).collect();
    let labels: Vec<CanonicalLabel> = values
        .iter()
        .map(|a| label_of(&entry.structure_template(std::slice::from_ref(a)).unwrap()).map(|l| l[0].clone()))
        .collect::<Result<_, _>>()?;
    let mut orbits: Vec<Vec<i64>> = Vec::new();
    for (k, l) in labels.iter().enumerate() {
        let val = k as i64 + 2;
        match orbits.iter_mut().find(|o| labels_equal(&labels[o[0] as usize - 2], l)) {
            Some(o) => o.push(val),
            None => orbits.push(vec![val]),
        }
    }
    orbits.sort();
    let want = vec![vec![2, 7, 12], vec![3, 5, 6, 8, 9, 11], vec![4, 10]];
    ensure(orbits == want, || format!("orbits {orbits:?}"))?;
    let mut js = Vec::new();
    for o in &orbits {
        let j: Vec<FieldElement> = o.iter().map(|&a| classify::j_invariant(&f.int(a)).unwrap()).collect();
        ensure(j.iter().all(|x| *x == j[0]), || format!("j not constant on {o:?}"))?;
        js.push(j[0].clone());
        // some pair in the orbit is isomorphic over F13 itself; pairs take
        // turns in rounds so one without an F13 witness cannot eat the budget
        let pairs: Vec<(i64, i64)> =
            o.iter().enumerate().flat_map(|(x, &a)| o[x + 1..].iter().map(move |&b| (a, b))).collect();
        let (round, mut spent, mut found) = (1000, 0u64, false);
        'rounds: for r in 0u64.. {
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if spent >= 1_000_000 {
                    break 'rounds;
                }
                let e1 = entry.structure_template(&[f.int(a)]).unwrap();
                let e2 = entry.structure_template(&[f.int(b)]).unwrap();
                let budget = SearchBudget::randomized(round, r * 1000 + k as u64);
                spent += round;
                if let Some(m) = oracle::randomized_iso(&e1, &e2, budget).map_err(|e| e.to_string())? {
                    ensure(verify_hom(&e1, &e2, &m).unwrap(), || "unverified witness".into())?;
                    found = true;
                    break 'rounds;
                }
            }
        }
        ensure(found, || format!("no witness inside orbit {o:?}"))?;
    }
    js.sort();
    js.dedup();
    ensure(js.len() == 3, || "j-invariant repeats across orbits".into())
}

/// The template over F3. A weight i on the edge into vertex c becomes 1 once
/// e_c is replaced by i·e_c, which negates the row of e_c.
fn over_f3(entry: &ClassEntry) -> EvolutionAlgebra {
    let t = entry.structure_template(&[]).unwrap();
    let qi = t.field();
    let n = t.dim();
    let mut rows: Vec<Vec<FieldElement>> = (0..n).map(|r| t.structure().row(r)).collect();
    let i = qi.i().unwrap();
    for c in 0..n {
        if let Some(r) = (0..n).find(|&r| rows[r][c] == i) {
            rows[r][c] = qi.one();
            rows[c] = rows[c].iter().map(|x| -x).collect();
        }
    }
    let f3 = FieldDescriptor::prime(3).unwrap();
    let data = rows
        .concat()
        .iter()
        .map(|x| {
            let v = if x.is_zero() { 0 } else if x.is_one() { 1 } else if (-x).is_one() { 2 } else { panic!("{x}") };
            f3.int(v)
        })
        .collect();
    EvolutionAlgebra::from_matrix(Matrix::new(f3, n, n, data).unwrap()).unwrap()
}

fn exhaustive_small() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut algs: Vec<(CanonicalLabel, EvolutionAlgebra)> = Vec::new();
    for entry in table(1..=4, FieldDescriptor::gaussian()) {
        let e = over_f3(&entry);
        let want = entry.label(&[]).unwrap();
        let got = label_of(&e)?;
        ensure(got == [want.clone()], || format!("{entry:?} over F3 classifies as {got:?}"))?;
        let m = oracle::random_natural_basis_change(&e, &mut rng).unwrap();
        let copy = e.change_basis(&m).unwrap();
        algs.push((want.clone(), e));
        algs.push((want, copy));
    }
    let (mut searched, mut witnessed) = (0, 0);
    for (a, (l1, e1)) in algs.iter().enumerate() {
        for (l2, e2) in &algs[a..] {
            if e1.dim() != e2.dim() {
                continue;
            }
            let w = oracle::exhaustive_iso(e1, e2, SearchBudget::exhaustive()).map_err(|e| e.to_string())?;
            ensure(w.is_some() == (l1 == l2), || format!("{l1} vs {l2}: witness {}", w.is_some()))?;
            if let Some(m) = w {
                ensure(verify_hom(e1, e2, &m).unwrap(), || format!("{l1}: unverified witness"))?;
                witnessed += 1;
            }
            searched += 1;
        }
    }
    // 11 labels, each with itself, its copy and the pair between them
    ensure(witnessed == 33, || format!("{witnessed} witnesses"))?;
    ensure(searched == 3 + 3 + 10 + 105, || format!("{searched} searches"))
}

fn scaling() -> Check {
    let f = f13();
    let v = |xs: &[i64]| xs.iter().map(|&x| f.int(x)).collect::<Vec<_>>();
    let specs = [
        FamilySpec::ubfg(v(&[1]), v(&[2]), v(&[3])).unwrap(),
        FamilySpec::ubfg(v(&[1, 3]), v(&[2, 5]), v(&[0, 1])).unwrap(),
    ];
    for spec in &specs {
        for (a, b) in [(1, 0), (1, 5), (4, 7)] {
            let m = families::scaling_isomorphism(spec, &f.int(a), &f.int(b)).map_err(|e| e.to_string())?;
            let src = families::build(spec).unwrap();
            let dst = families::build(&families::scaled_spec(spec, &f.int(a), &f.int(b)).unwrap()).unwrap();
            ensure(verify_hom(&src, &dst, &m).unwrap(), || format!("n = {}, ({a}, {b})", spec.n()))?;
        }
    }
    Ok(())
}

fn check_witness(e: &EvolutionAlgebra) -> Check {
    match e.decomposability_check() {
        Verdict::Decomposable { witness: Some((i, j)), .. } => {
            ensure(e.is_direct_sum_of_ideals(&i, &j), || format!("bad witness for {}", e.structure()))
        }
        other => Err(format!("{other:?} for\n{}", e.structure())),
    }
}

fn decomposability() -> Check {
    let f = f13();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let nz = |rng: &mut ChaCha8Rng| f.int(rng.gen_range(1..13));
    let mut done = 0;
    while done < 100 {
        // blocks U1 = {0, 1}, U2 = {2}, U3 = {3}, U4 = {4}, then a random relabeling
        let mut m = Matrix::zeros(f, 5, 5);
        m.set(4, 3, nz(&mut rng));
        m.set(3, 2, nz(&mut rng));
        for r in 2..5 {
            for c in 0..2 {
                m.set(r, c, oracle::random_element(f, &mut rng));
            }
        }
        let e = EvolutionAlgebra::from_matrix(m).unwrap();
        let mut perm: Vec<usize> = (0..5).collect();
        for a in (1..5).rev() {
            perm.swap(a, rng.gen_range(0..=a));
        }
        let e = e.permute(&perm);
        if e.upper_series().type_vector != [2, 1, 1, 1] {
            continue;
        }
        check_witness(&e)?;
        done += 1;
    }
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(3..=5);
        let e = random_nilpotent(f, n, 0.5, &mut rng);
        if 2 * e.annihilator().dim() < n {
            continue;
        }
        check_witness(&e)?;
        done += 1;
    }
    Ok(())
}

fn samples() -> Vec<EvolutionAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    (0..500)
        .map(|k| random_nilpotent(f13(), 1 + k % 5, 0.3 + 0.1 * (k % 5) as f64, &mut rng))
        .collect()
}

fn relative_annihilators() -> Check {
    let f = f13();
    for e in samples() {
        let s = e.upper_series();
        for i in 2..=s.chain.len() {
            let got = e.relative_annihilator(&s.chain[i - 1], &s.chain[i - 2]).map_err(|e| e.to_string())?;
            let idx: Vec<usize> = s.blocks[i - 1].iter().chain(&s.blocks[0]).copied().collect();
            let want = Subspace::coordinate(f, e.dim(), &idx);
            ensure(got == want, || format!("i = {i} on\n{}", e.structure()))?;
        }
    }
    Ok(())
}

fn nilpotency_agreement() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut all = samples();
    let mut bad = 0;
    while bad < 100 {
        let n = rng.gen_range(1..=5);
        let mut m = Matrix::zeros(f13(), n, n);
        for r in 0..n {
            for c in 0..n {
                if rng.gen_bool(0.4) {
                    m.set(r, c, oracle::random_element(f13(), &mut rng));
                }
            }
        }
        let e = EvolutionAlgebra::from_matrix(m).unwrap();
        if !e.upper_series().nilpotent {
            all.push(e);
            bad += 1;
        }
    }
    for e in &all {
        let right = e.power_chain_nilpotent(PowerKind::Right);
        let plenary = e.power_chain_nilpotent(PowerKind::Plenary);
        let series = e.upper_series().nilpotent;
        ensure(right == plenary && plenary == series, || {
            format!("right {right}, plenary {plenary}, series {series} on\n{}", e.structure())
        })?;
    }
    Ok(())
}

fn basis_change_invariance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for entry in table(1..=4, f13()) {
        let e = entry.structure_template(&[]).unwrap();
        let want = label_of(&e)?;
        for _ in 0..100 {
            let m = oracle::random_natural_basis_change(&e, &mut rng).unwrap();
            let moved = e.change_basis(&m).map_err(|e| e.to_string())?;
            let got = label_of(&moved)?;
            ensure(got == want, || format!("{entry:?}: {got:?} after\n{m}"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 10] = [
        ("table fidelity", table_fidelity, Some(Duration::from_secs(5))),
        ("classifier idempotence", idempotence, Some(Duration::from_secs(30))),
        ("dim <= 4 census", census, None),
        ("anharmonic orbits over F13", anharmonic_orbits, Some(Duration::from_secs(120))),
        ("exhaustive separation over F3", exhaustive_small, Some(Duration::from_secs(600))),
        ("scaling isomorphisms", scaling, Some(Duration::from_secs(1))),
        ("decomposability", decomposability, Some(Duration::from_secs(30))),
        ("relative annihilators", relative_annihilators, None),
        ("nilpotency agreement", nilpotency_agreement, None),
        ("basis-change invariance", basis_change_invariance, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if let (Ok(()), Some(l)) = (&outcome, limit) {
            if took > l {
                outcome = Err(format!("took {took:.2?}, limit {l:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("acceptance {:>2} {name}: PASS ({took:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {:>2} {name}: FAIL ({took:.2?}) {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
