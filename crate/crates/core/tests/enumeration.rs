use std::collections::HashSet;

use asmshape::rational::q;
use asmshape::sixvertex::{
    asm_to_sixvertex, efp_event, enumerate_asms, sixvertex_to_asm, weighted_count, zero_block_event,
};

fn is_asm(n: usize, m: &[i8]) -> bool {
    let line_ok = |get: &dyn Fn(usize) -> i8| {
        let mut sum = 0;
        for k in 0..n {
            sum += get(k);
            if !(0..=1).contains(&sum) {
                return false;
            }
        }
        sum == 1
    };
    (0..n).all(|i| line_ok(&|k| m[i * n + k]) && line_ok(&|k| m[k * n + i]))
}

/// Every matrix over {-1, 0, 1}, filtered.
fn brute_force(n: usize) -> HashSet<Vec<i8>> {
    let cells = n * n;
    let mut out = HashSet::new();
    let mut m = vec![-1i8; cells];
    loop {
        if is_asm(n, &m) {
            out.insert(m.clone());
        }
        let mut k = 0;
        loop {
            if k == cells {
                return out;
            }
            if m[k] < 1 {
                m[k] += 1;
                break;
            }
            m[k] = -1;
            k += 1;
        }
    }
}

#[test]
fn enumeration_equals_brute_force() {
    for n in 1..=4 {
        let fast: HashSet<Vec<i8>> = enumerate_asms(n)
            .unwrap()
            .map(|m| m.entries().to_vec())
            .collect();
        assert_eq!(fast, brute_force(n), "n = {n}");
    }
}

#[test]
fn known_counts() {
    let plain = [1, 2, 7, 42, 429, 7436];
    for (k, &c) in plain.iter().enumerate() {
        assert_eq!(weighted_count(k + 1, &q(1)).unwrap(), q(c));
        let two = 2i64.pow((k * (k + 1) / 2) as u32);
        assert_eq!(weighted_count(k + 1, &q(2)).unwrap(), q(two));
    }
    assert_eq!(weighted_count(3, &q(3)).unwrap(), q(9));
    assert_eq!(weighted_count(4, &q(3)).unwrap(), q(90));
}

#[test]
fn arrow_and_block_events_coincide_up_to_five() {
    for n in 1..=5 {
        for m in enumerate_asms(n).unwrap() {
            let c = asm_to_sixvertex(&m);
            assert_eq!(sixvertex_to_asm(&c).unwrap(), m);
            for r in 1..=n {
                for s in 1..=n {
                    assert_eq!(efp_event(&c, r, s), zero_block_event(&m, r, s));
                }
            }
        }
    }
}
