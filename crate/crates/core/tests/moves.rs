use vparity::moves::{fuzz_trial, verify_parity_axioms, verify_parity_axioms_with, Axiom, MoveClass, WalkConfig};
use vparity::{parse, two_colour_parity, GaussDiagram, Parity, ParityAssignment, Result, TwoColouring};

fn trefoil() -> GaussDiagram {
    parse("O1+ O2+ U1+ U2+").unwrap()
}

#[test]
fn trefoil_thousand_steps_pass() {
    let cfg = WalkConfig {
        steps: 1000,
        seed: 1,
        max_chords: 10,
    };
    let r = verify_parity_axioms(&trefoil(), &cfg).unwrap();
    assert!(r.passed(), "{}", r.violation.unwrap());
    assert_eq!(r.steps, 1000);
    eprintln!("{:?} r3 odd counts {:?}", r.moves, r.r3_odd_counts);
    assert!(r.moves.get(&MoveClass::R3).copied().unwrap_or(0) > 0);
}

/// Flips the parity of whichever chord sits at the basepoint of component 0.
fn corrupted(d: &GaussDiagram, c: &TwoColouring) -> Result<ParityAssignment> {
    let p = two_colour_parity(d, c)?;
    let Some(first) = d.circles()[0].first() else {
        return Ok(p);
    };
    let label = d.chords()[first.chord].label;
    let mut values = p.values().clone();
    let v = values.get_mut(&label).unwrap();
    *v = if v.is_odd() { Parity::Even } else { Parity::Odd };
    Ok(ParityAssignment::new(p.scheme.clone(), values))
}

#[test]
fn corrupted_parity_is_caught() {
    let cfg = WalkConfig {
        steps: 1000,
        seed: 3,
        max_chords: 10,
    };
    let r = verify_parity_axioms_with(&trefoil(), &cfg, &corrupted, true).unwrap();
    let v = r.violation.expect("corruption must be detected");
    assert_ne!(v.axiom, Axiom::R3Strong);
    assert!(!v.before.is_empty());
}

#[test]
fn degenerate_start_rejected() {
    let d = parse("O1+ / U1+").unwrap();
    let cfg = WalkConfig {
        steps: 10,
        seed: 0,
        max_chords: 6,
    };
    assert!(verify_parity_axioms(&d, &cfg).is_err());
}

#[test]
fn fuzz_trial_on_links() {
    for (i, code) in ["O1+ U2+ / O2+ U1+", "O1+ U2- / U1+ O2- / _", "O1+ O2+ U1+ U2+"]
        .iter()
        .enumerate()
    {
        let d = parse(code).unwrap();
        let t = fuzz_trial(
            &d,
            &WalkConfig {
                steps: 300,
                seed: 100 + i as u64,
                max_chords: 12,
            },
        )
        .unwrap();
        assert!(
            t.passed(),
            "{code}: {:?} {:?} {:?}",
            t.two_colour.violation,
            t.naive.violation,
            t.drift
        );
        assert_eq!(t.moves.len(), 300);
    }
}

/// Three mutually crossing components: the naive parity makes every chord
/// of the triangle odd, which a weak parity allows and a strong one does not.
#[test]
fn naive_parity_is_weak_only() {
    let d = parse("O1+ O2+ / U1+ O3+ / U2+ U3+").unwrap();
    let naive = |d: &GaussDiagram, _: &TwoColouring| Ok(vparity::naive_parity(d));
    let cfg = WalkConfig {
        steps: 400,
        seed: 9,
        max_chords: 8,
    };
    let weak = verify_parity_axioms_with(&d, &cfg, &naive, false).unwrap();
    assert!(weak.passed());
    assert!(weak.r3_odd_counts[3] > 0);
    let strong = verify_parity_axioms_with(&d, &cfg, &naive, true).unwrap();
    assert_eq!(strong.violation.unwrap().axiom, Axiom::R3Strong);
}

#[test]
fn hopf_walk_keeps_j2() {
    let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
    for d in vparity::moves::random_walk(&hopf, 1000, 21, 10) {
        assert_eq!(vparity::report(&d).j2, Some(vec![0, 2]), "{}", vparity::serialize(&d));
    }
}

#[test]
fn hopf_axioms_both_parities() {
    let hopf = parse("O1+ U2+ / O2+ U1+").unwrap();
    let cfg = WalkConfig {
        steps: 1000,
        seed: 4,
        max_chords: 10,
    };
    assert!(verify_parity_axioms(&hopf, &cfg).unwrap().passed());
    let naive = |d: &GaussDiagram, _: &TwoColouring| Ok(vparity::naive_parity(d));
    assert!(verify_parity_axioms_with(&hopf, &cfg, &naive, false).unwrap().passed());
}
