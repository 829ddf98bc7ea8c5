use mfs::witness::{
    witness_case_ii_base, witness_case_iii, witness_hook_case, witness_wellordered_case, MultiplicityWitness,
};
use mfs::{classify, find_witness, lr_coefficient, witness_via_reduction, Frame, Partition, RichardsonQuadruple};

fn frames(max: usize) -> impl Iterator<Item = Frame> {
    (1..=max).flat_map(move |l| (1..=max).map(move |k| Frame::new(l, k)))
}

/// Basic quadruples in frames up to `max × max` accepted by `keep`.
fn basic(max: usize, keep: impl Fn(&Partition, &Partition, Frame) -> bool) -> Vec<RichardsonQuadruple> {
    let mut out = Vec::new();
    for f in frames(max) {
        let parts = f.partitions();
        for lam in &parts {
            for mu in &parts {
                if !keep(lam, mu, f) {
                    continue;
                }
                if let Ok(q) = RichardsonQuadruple::new(lam.clone(), mu.clone(), f) {
                    if q.is_basic() {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

fn check(q: &RichardsonQuadruple, w: &MultiplicityWitness) {
    let [f, g] = w.fillings();
    assert!(f.is_valid() && g.is_valid(), "{q}");
    assert_ne!(f, g, "{q}");
    assert_eq!(f.shape(), g.shape(), "{q}");
    assert_eq!(f.shape().inner(), q.lam(), "{q}");
    assert_eq!(f.content().as_ref(), Some(q.mu()), "{q}");
    assert!(w.nu().fits(q.frame()), "{q}");
    assert!(lr_coefficient(q.lam(), q.mu(), w.nu(), Some(2)) >= 2, "{q}");
}

fn q(lam: &str, mu: &str, l: usize, k: usize) -> RichardsonQuadruple {
    RichardsonQuadruple::new(lam.parse().unwrap(), mu.parse().unwrap(), Frame::new(l, k)).unwrap()
}

#[test]
fn search_finds_witnesses_exactly_when_classified() {
    for f in frames(5) {
        let parts = f.partitions();
        for lam in &parts {
            for mu in &parts {
                let Ok(r) = RichardsonQuadruple::new(lam.clone(), mu.clone(), f) else {
                    continue;
                };
                let has = classify(lam, mu, f).unwrap().has_multiplicity();
                match find_witness(&r) {
                    Some(w) => {
                        assert!(has, "{r}");
                        check(&r, &w);
                    }
                    None => assert!(!has, "{r}"),
                }
            }
        }
    }
}

#[test]
fn reduction_driver_up_to_5x5() {
    for f in frames(5) {
        let parts = f.partitions();
        for lam in &parts {
            for mu in &parts {
                let Ok(r) = RichardsonQuadruple::new(lam.clone(), mu.clone(), f) else {
                    continue;
                };
                if classify(lam, mu, f).unwrap().has_multiplicity() {
                    let w = witness_via_reduction(&r).unwrap();
                    check(&r, &w);
                    assert!(!w.steps().is_empty());
                } else {
                    assert!(witness_via_reduction(&r).is_err());
                }
            }
        }
    }
}

#[test]
fn reduction_driver_examples() {
    for r in [
        q("4,2,2,1", "2,2,2", 5, 5),
        q("6,5,4,3,2,1,1", "7,6,6,6,5,2", 7, 9),
        q("4,3,2,1", "4,4,2,2,1", 6, 5),
        q("11,11,11,7,7,4,4,2,2", "12,1^9", 11, 13),
    ] {
        let w = witness_via_reduction(&r).unwrap();
        check(&r, &w);
    }
    let w = witness_via_reduction(&q("6,5,4,3,2,1,1", "7,6,6,6,5,2", 7, 9)).unwrap();
    assert!(w.steps()[0].starts_with("basic demolition"));
}

#[test]
fn hook_construction_on_every_hook_instance() {
    let cases = basic(6, |lam, mu, _| mu.is_hook() && lam.distinct_part_sizes() >= 2);
    assert!(cases.len() > 1000);
    for r in &cases {
        check(r, &witness_hook_case(r).unwrap());
    }
}

#[test]
fn hook_construction_examples() {
    for r in [q("2,1", "2,1", 4, 4), q("3,3,1", "3,1", 5, 5), q("3,1,1", "2,1", 4, 4)] {
        check(&r, &witness_hook_case(&r).unwrap());
    }
    assert!(witness_hook_case(&q("2,1", "2,2", 4, 4)).is_err());
    assert!(witness_hook_case(&q("2", "2,1", 4, 4)).is_err());
}

#[test]
fn wellordered_construction_on_every_wellordered_instance() {
    let cases = basic(6, |lam, mu, _| lam.is_fat_hook() && mu.is_fat_hook());
    let mut tried = 0;
    for r in &cases {
        if r.is_well_ordered().unwrap() || r.transpose().is_well_ordered().unwrap() {
            tried += 1;
            check(r, &witness_wellordered_case(r).unwrap());
        }
    }
    assert!(tried > 1000);
}

#[test]
fn wellordered_construction_when_the_literal_column_is_too_short() {
    // Here the column under B would be empty and both fillings would agree.
    let r = q("3,2", "3,2", 4, 4);
    assert!(r.is_well_ordered().unwrap());
    let w = witness_wellordered_case(&r).unwrap();
    check(&r, &w);
    assert_eq!(*w.nu(), "4,3,2,1".parse().unwrap());
}

#[test]
fn case_ii_constructions() {
    let cases = basic(7, |lam, mu, f| {
        let (l, k) = (f.rows, f.cols);
        if !mu.is_rectangle() || lam.distinct_part_sizes() < 3 || mu.shortness(f).unwrap() < 2 {
            return false;
        }
        let (g, h) = (mu.first(), mu.len());
        let table = |rows: usize, cols: usize| {
            let mut p = vec![cols - 1, 2];
            p.extend(std::iter::repeat_n(1, rows - 3));
            Partition::from_unsorted(p)
        };
        g == 2 || h == 2 || (g == k - 2 && *lam == table(l, k)) || (h == l - 2 && lam.conjugate() == table(k, l))
    });
    assert!(cases.len() > 1000);
    for r in &cases {
        check(r, &witness_case_ii_base(r).unwrap());
    }
    for r in [q("4,2,1", "3,3", 6, 6), q("4,2,1,1,1", "3,3,3", 6, 5), q("4,2,1", "2,2,2", 6, 6)] {
        check(&r, &witness_case_ii_base(&r).unwrap());
    }
    // (4,2,1,1) against (3,3,3) in 6x6 is not a base configuration.
    assert!(witness_case_ii_base(&q("5,2,1,1", "3,3,3", 6, 6)).is_err());
}

#[test]
fn case_iii_constructions() {
    let cases = basic(8, |lam, mu, f| {
        if !lam.is_fat_hook() || !mu.is_rectangle() {
            return false;
        }
        if lam.shortness(f).unwrap() < 2 || mu.shortness(f).unwrap() < 3 {
            return false;
        }
        let in_range = |lam: &Partition, mu: &Partition, l: usize, k: usize| {
            let a = *lam.parts().last().unwrap();
            let d = lam.parts().iter().filter(|&&p| p == lam.first()).count();
            mu.first() <= k - a && mu.len() + d < l
        };
        in_range(lam, mu, f.rows, f.cols) || in_range(&lam.conjugate(), &mu.conjugate(), f.cols, f.rows)
    });
    assert!(cases.len() > 400);
    for r in &cases {
        check(r, &witness_case_iii(r).unwrap());
    }
    let r = q("8^2,3^5", "7^5", 12, 11);
    let w = witness_case_iii(&r).unwrap();
    check(&r, &w);
    // G differs from F only in the bottom entries of columns c-1 = 7 and c = 8.
    let [f, g] = w.fillings();
    let differ: Vec<(usize, usize)> = (1..=12)
        .flat_map(|row| (1..=11).map(move |col| (row, col)))
        .filter(|&(row, col)| f.entry(row, col) != g.entry(row, col))
        .collect();
    assert_eq!(differ.len(), 2);
    assert!(differ.iter().all(|&(_, col)| col == 7 || col == 8));
}
