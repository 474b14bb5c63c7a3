mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use surfbundle::homology::homology;
use surfbundle::search::{enumerate_products, find_fixed_classes, SearchConfig};
use surfbundle::symplectic::{BaseKind, HolonomyEntry, HolonomyProblem, TwistWord};

use common::Mat;

fn problem(base: BaseKind, h: usize, ws: &[&str]) -> HolonomyProblem {
    let entries = ws
        .iter()
        .map(|w| HolonomyEntry::Word(w.parse::<TwistWord>().unwrap()))
        .collect();
    HolonomyProblem::new(h, base, ws.len() / 2, entries).unwrap()
}

fn engine_matrices(p: &HolonomyProblem) -> Vec<Mat> {
    p.matrices().iter().map(|m| common::from_engine(m.matrix())).collect()
}

#[test]
fn twist_words_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for h in 2..=4 {
        for _ in 0..40 {
            let w = common::random_word(&mut rng, h, 10);
            let engine = w.parse::<TwistWord>().unwrap().evaluate(h).unwrap();
            assert_eq!(common::from_engine(engine.matrix()), common::word(&w, h), "{w}");
        }
    }
}

#[test]
fn golden_instance() {
    for (base, betti) in [(BaseKind::Closed, [1, 5, 8, 5, 1]), (BaseKind::OneBoundary, [1, 5, 8, 2, 0])] {
        let p = problem(base, 2, &["Ta1", "Ta1"]);
        let ms = engine_matrices(&p);
        let d = common::dims(&ms, base == BaseKind::Closed);
        assert_eq!((d.w, d.fix, d.k), (1, 3, 7));
        assert_eq!(common::betti(2, 1, base == BaseKind::Closed, d), betti);
        let r = homology(&p).unwrap();
        assert_eq!(r.betti, betti);
        assert_eq!((r.dims.w, r.dims.fix, r.dims.k), (1, 3, 7));
        if base == BaseKind::Closed {
            assert_eq!(d.rank_beta, Some(1));
            assert_eq!(r.dims.rank_beta, Some(1));
        }
    }
}

#[test]
fn beta_agrees_with_letter_walk() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let (p, ms) = common::random_problem(&mut rng, BaseKind::Closed);
        let r = homology(&p).unwrap();
        let beta = r.beta.unwrap();
        let walk = common::beta_walk(&ms);
        for (i, row) in walk.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(beta[(i, j)], surfbundle::Rational::from_integer(x.clone()));
            }
        }
    }
}

#[test]
fn search_counts_match_exhaustive_enumeration() {
    let p = problem(BaseKind::OneBoundary, 2, &["Ta1", "Tb1"]);
    let ms = engine_matrices(&p);
    let mut expected = Vec::new();
    for len in 1..=3 {
        let all = common::exhaustive_products(&ms, len);
        let cfg = SearchConfig::new(len);
        let found: HashSet<Mat> = enumerate_products(&p, &cfg)
            .unwrap()
            .iter()
            .map(|x| common::from_engine(x.matrix.matrix()))
            .collect();
        assert_eq!(found, all, "max_len {len}");
        expected.push(all.len());
    }
    assert_eq!(expected, vec![4, 16, 46]);
}

#[test]
fn hits_match_exhaustive_eigenvalue_check() {
    let anosov = [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]];
    let m: Mat = anosov.iter().map(|r| r.iter().map(|&x| common::int(x)).collect()).collect();
    let z = surfbundle::ZMatrix::from_rows(m.clone()).unwrap();
    let p = HolonomyProblem::new(
        2,
        BaseKind::Closed,
        1,
        vec![HolonomyEntry::Matrix(z.clone()), HolonomyEntry::Matrix(z)],
    )
    .unwrap();
    for len in 1..=2 {
        let out = find_fixed_classes(&p, &SearchConfig::new(len)).unwrap();
        let engine: HashSet<(Mat, usize)> = out
            .hits
            .iter()
            .map(|h| (common::from_engine(h.product.matrix()), h.fixed_space.dim()))
            .collect();
        let oracle: HashSet<(Mat, usize)> = common::exhaustive_products(&[m.clone(), m.clone()], len)
            .into_iter()
            .map(|x| {
                let d = common::nullity_minus_identity(&x);
                (x, d)
            })
            .filter(|(_, d)| *d > 0)
            .collect();
        assert_eq!(engine, oracle, "max_len {len}");
    }
}

fn check_against_oracle(p: &HolonomyProblem, ms: &[Mat]) -> Result<(), TestCaseError> {
    let closed = p.base() == BaseKind::Closed;
    let d = common::dims(ms, closed);
    let r = homology(p).unwrap();
    prop_assert_eq!((r.dims.w, r.dims.fix, r.dims.k, r.dims.rank_beta), (d.w, d.fix, d.k, d.rank_beta));
    prop_assert_eq!(r.betti, common::betti(p.fiber_genus(), p.base_genus(), closed, d));
    prop_assert!(r.all_pass());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn engine_matches_oracle(seed in any::<u64>(), closed in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = if closed { BaseKind::Closed } else { BaseKind::OneBoundary };
        let (p, ms) = common::random_problem(&mut rng, base);
        prop_assert_eq!(engine_matrices(&p), ms.clone());
        check_against_oracle(&p, &ms)?;
    }
}
