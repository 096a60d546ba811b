use std::fs;

use satmut::arith::fp::{Fp, P1};
use satmut::arith::rational::{rat, Rational};
use satmut::arith::{Params, SparseMatrix};
use satmut::qgroup::cache::{cached_tower, Cache, StageKey};
use satmut::qgroup::persist::Persist;
use satmut::qgroup::tower::{base_stage, mid_stage, MidStage};
use satmut::qgroup::Tower;

#[test]
fn fp_tower_round_trips_through_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let params = Params::new(Fp::<P1>::new(1234567)).unwrap();
    let built = cached_tower(&cache, &params).unwrap();
    assert_eq!(cache.list().unwrap().len(), 3);
    let loaded = cached_tower(&cache, &params).unwrap();
    assert_eq!(built, loaded);
    assert_eq!(built, Tower::build(&params).unwrap());
    assert!(cache.verify().unwrap().iter().all(|c| c.ok));
}

#[test]
fn rational_stage_text_is_bit_exact() {
    let params = Params::new(rat(3, 2)).unwrap();
    let base = base_stage(&params).unwrap();
    let mid = mid_stage(&base).unwrap();
    let text = mid.to_text();
    let back = MidStage::from_text("mid", &text).unwrap();
    assert_eq!(back, mid);
    assert_eq!(back.to_text(), text);
}

#[test]
fn sparse_text_round_trip() {
    let m = SparseMatrix::from_triplets(3, 2, vec![(0, 1, rat(-5, 7)), (2, 0, rat(1, 1))]);
    let s = m.to_string();
    assert_eq!(s, "3 2 2\n0 1 -5/7\n2 0 1\n");
    assert_eq!(SparseMatrix::<Rational>::parse_text(&s).unwrap(), m);
}

#[test]
fn corrupt_entry_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let params = Params::new(Fp::<P1>::new(99)).unwrap();
    cached_tower(&cache, &params).unwrap();
    let key = StageKey::new("mid", &params);
    let path = dir.path().join(format!("{}.txt", key.name()));
    let mut text = fs::read_to_string(&path).unwrap();
    text.push_str("0 0 1\n");
    fs::write(&path, text).unwrap();
    let err = cached_tower(&cache, &params).unwrap_err().to_string();
    assert!(err.contains(&key.name()), "{err}");
    let checks = cache.verify().unwrap();
    assert_eq!(checks.iter().filter(|c| !c.ok).count(), 1);
}

#[test]
fn sample_points_get_separate_entries() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    for a in [5u64, 6] {
        cached_tower(&cache, &Params::new(Fp::<P1>::new(a)).unwrap()).unwrap();
    }
    assert_eq!(cache.list().unwrap().len(), 6);
    assert_eq!(cache.clear().unwrap(), 6);
}
