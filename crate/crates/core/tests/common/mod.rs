#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ramiq::cyclotomic::rational;
use ramiq::io::{example, CORPUS};
use ramiq::{CharacterTable, ClassFunction, Cyclotomic, FiniteGroup, Scenario};

pub fn corpus() -> Vec<(&'static str, Scenario)> {
    CORPUS
        .iter()
        .map(|(name, _)| (*name, example(name).unwrap_or_else(|e| panic!("{name}: {e}"))))
        .collect()
}

/// The surface scenarios of the corpus.
pub fn surfaces() -> Vec<(&'static str, Scenario)> {
    corpus().into_iter().filter(|(_, s)| s.ambient_dim == 2).collect()
}

/// `S₃` with `r = 1` of order 3 and `s = 3`, plus its character table.
pub fn s3() -> (Arc<FiniteGroup>, CharacterTable) {
    let s = example("s3_projective_line").unwrap();
    (s.group.clone(), s.table.clone())
}

/// The groups named in the test plan, each with a character table.
pub fn test_groups() -> Vec<(&'static str, CharacterTable)> {
    let abelian = |orders: &[usize]| CharacterTable::abelian(&FiniteGroup::abelian_product(orders).unwrap()).unwrap();
    vec![
        ("Z/2", abelian(&[2])),
        ("Z/4", abelian(&[4])),
        ("Z/6", abelian(&[6])),
        ("Klein four", abelian(&[2, 2])),
        ("S3", s3().1),
    ]
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> ramiq::Rational {
    rational(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

/// A class function with random values in `Q(ζ_e)`, `e` the exponent.
pub fn random_class_function(group: &Arc<FiniteGroup>, rng: &mut ChaCha8Rng) -> ClassFunction {
    let n = group.exponent() as u64;
    let values = (0..group.num_classes())
        .map(|_| {
            let terms: Vec<_> = (0..n).map(|_| small_rational(rng)).collect();
            Cyclotomic::from_powers(n, &terms).unwrap()
        })
        .collect();
    ClassFunction::new(group.clone(), values).unwrap()
}

/// A fresh path under the system temp directory.
pub fn temp_path(tag: &str) -> PathBuf {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let k = NEXT.fetch_add(1, Ordering::Relaxed);
    std::env::temp_dir().join(format!("ramiq-{}-{tag}-{k}.json", std::process::id()))
}
