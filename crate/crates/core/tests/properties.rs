use mfs::lr::{enumerate_lr_fillings, is_ballot};
use mfs::{
    classify, expand_product, lr_coefficient, overlaps, Expansion, Frame, Partition, RichardsonQuadruple, SkewShape,
};
use proptest::prelude::*;

fn frames(max: usize) -> impl Iterator<Item = Frame> {
    (1..=max).flat_map(move |l| (1..=max).map(move |k| Frame::new(l, k)))
}

fn pairs(f: Frame) -> Vec<(Partition, Partition)> {
    let parts = f.partitions();
    let mut out = Vec::new();
    for lam in &parts {
        for mu in &parts {
            out.push((lam.clone(), mu.clone()));
        }
    }
    out
}

/// All partitions of `n` with parts at most `max`.
fn partitions_of(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions_of(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn conjugate_terms(e: &Expansion) -> Vec<(Partition, u64)> {
    let mut v: Vec<_> = e.terms().iter().map(|(nu, &c)| (nu.conjugate(), c)).collect();
    v.sort();
    v
}

fn arb_partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn arb_fitting() -> impl Strategy<Value = (Partition, Frame)> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(l, k)| (arb_partition(l, k), Just(Frame::new(l, k))))
}

#[test]
fn conjugate_is_an_involution_up_to_size_20() {
    for n in 0..=20 {
        for parts in partitions_of(n, n) {
            let p = Partition::new(parts).unwrap();
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().size(), n);
        }
    }
}

#[test]
fn shortness_transposes() {
    for f in frames(6) {
        for p in f.partitions() {
            assert_eq!(p.shortness(f).unwrap(), p.conjugate().shortness(f.transpose()).unwrap(), "{p} in {f}");
        }
    }
}

#[test]
fn overlap_is_symmetric() {
    for f in frames(5) {
        for (lam, mu) in pairs(f) {
            assert_eq!(overlaps(&lam, &mu, f), overlaps(&mu, &lam, f), "({lam}), ({mu}) in {f}");
        }
    }
}

#[test]
fn products_commute_and_transpose() {
    for f in frames(4) {
        for (lam, mu) in pairs(f) {
            let e = expand_product(&lam, &mu, f).unwrap();
            assert_eq!(e.terms(), expand_product(&mu, &lam, f).unwrap().terms());
            let t = expand_product(&lam.conjugate(), &mu.conjugate(), f.transpose()).unwrap();
            let mut want: Vec<_> = t.terms().iter().map(|(nu, &c)| (nu.clone(), c)).collect();
            want.sort();
            assert_eq!(conjugate_terms(&e), want, "({lam}) x ({mu}) in {f}");
        }
    }
}

#[test]
fn enumeration_matches_coefficient() {
    for f in frames(4) {
        for (lam, mu) in pairs(f) {
            for nu in f.partitions() {
                if !nu.contains(&lam) || lam.size() + mu.size() != nu.size() {
                    continue;
                }
                let shape = SkewShape::new(nu.clone(), lam.clone()).unwrap();
                let all: Vec<_> = enumerate_lr_fillings(shape, &mu).collect();
                assert_eq!(all.len() as u64, lr_coefficient(&lam, &mu, &nu, None));
                for (i, filling) in all.iter().enumerate() {
                    assert!(filling.is_valid());
                    assert_eq!(filling.content().as_ref(), Some(&mu));
                    assert!(all[..i].iter().all(|g| g != filling));
                }
            }
        }
    }
}

#[test]
fn classify_respects_symmetries() {
    for f in frames(5) {
        for (lam, mu) in pairs(f) {
            let v = classify(&lam, &mu, f).unwrap();
            let swapped = classify(&mu, &lam, f).unwrap();
            let conj = classify(&lam.conjugate(), &mu.conjugate(), f.transpose()).unwrap();
            assert_eq!(v.outcome.label(), swapped.outcome.label(), "({lam}), ({mu}), {f}");
            assert_eq!(v.outcome.label(), conj.outcome.label(), "({lam}), ({mu}), {f}");
            if let Some(d) = &v.demolished {
                let again = classify(d.lam(), d.mu(), d.frame()).unwrap();
                assert_eq!(again.outcome, v.outcome, "({lam}), ({mu}), {f}");
            }
        }
    }
}

#[test]
fn product_terms_fit_the_frame() {
    for f in frames(4) {
        for (lam, mu) in pairs(f) {
            for nu in expand_product(&lam, &mu, f).unwrap().terms().keys() {
                assert!(nu.fits(f));
            }
        }
    }
}

#[test]
fn demolitions_keep_shapes_in_frame() {
    for f in frames(5) {
        for (lam, mu) in pairs(f) {
            let Ok(q) = RichardsonQuadruple::new(lam, mu, f) else {
                continue;
            };
            let d = q.basic_demolition();
            assert!(d.is_basic());
            assert!(d.lam().fits(d.frame()) && d.mu().fits(d.frame()));
            assert_eq!(d.basic_demolition(), d);
            for line in q.stembridge_lines() {
                let s = q.stembridge_demolish(line).unwrap();
                assert_eq!(s.lam().size() + s.mu().size() + line_len(&q, line), q.lam().size() + q.mu().size());
            }
        }
    }
}

fn line_len(q: &RichardsonQuadruple, line: mfs::LineRef) -> usize {
    match line.axis {
        mfs::Axis::Row => q.lam().part(line.index - 1) + q.mu().part(q.rows() - line.index),
        mfs::Axis::Column => {
            q.lam().conjugate().part(line.index - 1) + q.mu().conjugate().part(q.cols() - line.index)
        }
    }
}

proptest! {
    #[test]
    fn parse_display_round_trip(p in arb_partition(10, 12)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rotate_complement_is_an_involution((p, f) in arb_fitting()) {
        let r = p.rotate_complement(f).unwrap();
        prop_assert!(r.fits(f));
        prop_assert_eq!(r.size() + p.size(), f.rows * f.cols);
        prop_assert_eq!(r.rotate_complement(f).unwrap(), p);
    }

    #[test]
    fn star_fits_and_drops_the_last_row((p, f) in arb_fitting()) {
        let s = p.star(f.rows).unwrap();
        prop_assert!(s.len() < f.rows.max(1));
        prop_assert!(s.first() <= p.first());
    }

    #[test]
    fn pieri_rule(lam in arb_partition(4, 5), m in 1usize..=4) {
        let row = Partition::new(vec![m]).unwrap();
        let f = Frame::new(lam.len() + 1, lam.first() + m);
        let e = expand_product(&lam, &row, f).unwrap();
        for nu in f.partitions() {
            let strip = nu.contains(&lam)
                && nu.size() == lam.size() + m
                && (1..nu.len()).all(|i| nu.part(i) <= lam.part(i - 1));
            prop_assert_eq!(e.coefficient(&nu), u64::from(strip), "({}) / ({})", nu, lam);
        }
    }

    #[test]
    fn ballot_prefixes(word in prop::collection::vec(1usize..=4, 0..12)) {
        let ok = (0..=word.len()).all(|n| {
            let prefix = &word[..n];
            (2..=4).all(|v| {
                prefix.iter().filter(|&&x| x == v).count() <= prefix.iter().filter(|&&x| x == v - 1).count()
            })
        });
        prop_assert_eq!(is_ballot(&word), ok);
    }
}
