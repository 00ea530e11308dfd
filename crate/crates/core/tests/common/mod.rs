#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use seifert::cf::gcd;
use seifert::normalize::{absorb_unit_pairs, insert_unit_pair};
use seifert::{mirror, reflect_pair, twist, Epsilon, FibreType, SeifertParams};

/// Parameter strings taken verbatim from worked examples, in bracket notation.
pub const VERBATIM: &[&str] = &[
    "{0;(o,4,(1,1));(1|0);((3,1),(5,2))}",
    "{0;(o1,0,(0,0));(0|);((5,2))}",
    "{0;(o1,0,(0,0));(0|);}",
    "{0;(o1,0,(0,0));(1|);}",
    "{0;(n1,1,(0,0));(0|);}",
    "{0;(o1,0,(1,0));(0|);}",
    "{0;(o1,0,(0,0));(1|);((2,1))}",
    "{0;(o,0,(1,1));(|0);}",
    "{0;(o1,0,(0,0));(2|);}",
    "{0;(o,0,(0,0));(|0,0);}",
    "{0;(n2,1,(0,0));(0|);}",
    "{0;(o1,0,(0,0));(0|);((2,1),(2,1))}",
    "{0;(o1,0,(0,0));(0,0|);}",
    "{3;(o1,0,(0,0));(|);}",
    "{0;(n1,1,(0,0));(|);}",
    "{1;(n1,1,(0,0));(|);}",
    "{0;(o1,0,(1,0));(|);}",
    "{-1;(o1,0,(0,0));(|);((2,1),(3,1),(3,1))}",
    "{-1;(o1,0,(0,0));(|);((2,1),(2,1),(5,1))}",
    "{5;(n2,1,(0,0));(|);}",
    "{-1;(o1,0,(0,0));(|);((2,1),(3,1),(11,2))}",
    "{1;(n3,2,(0,0));(|);((3,1))}",
    "{0;(n3,2,(0,0));(|);((3,2))}",
];

fn coprime_pair<R: Rng>(rng: &mut R) -> FibreType {
    let p = if rng.gen_bool(0.1) { 1 } else { rng.gen_range(2..=13) };
    loop {
        let q = rng.gen_range(-2 * p..=2 * p);
        if gcd(p, q) == 1 {
            return FibreType::new(p, q);
        }
    }
}

/// A random valid raw parameter set: `q` and `b` unrestricted, unit pairs
/// allowed, lists unsorted.
pub fn random_params<R: Rng>(rng: &mut R) -> SeifertParams {
    let epsilon = *Epsilon::ALL.choose(rng).unwrap();
    let g = epsilon.min_genus() + rng.gen_range(0..=3);
    let bordered = rng.gen_bool(0.4);
    let (t, k, m_minus) = if epsilon.is_mixed() {
        loop {
            let m_minus = if bordered { rng.gen_range(0..=3) } else { 0 };
            let t = rng.gen_range(0..=3);
            let k = rng.gen_range(0..=t);
            if (k + m_minus) % 2 == 0 && k + m_minus > 0 {
                break (t, k, m_minus);
            }
        }
    } else {
        (rng.gen_range(0..=2), 0, 0)
    };
    let m_plus = if bordered && (m_minus == 0 || rng.gen_bool(0.5)) { rng.gen_range(1..=2) } else { 0 };
    let r = rng.gen_range(0..=4);
    SeifertParams {
        b: rng.gen_range(-6..=6),
        epsilon,
        g,
        t,
        k,
        hplus: (0..m_plus).map(|_| rng.gen_range(0..=2)).collect(),
        kminus: (0..m_minus).map(|_| rng.gen_range(0..=2)).collect(),
        pairs: (0..r).map(|_| coprime_pair(rng)).collect(),
    }
}

/// Applies one random space-preserving move; returns a description of it.
pub fn random_move<R: Rng>(rng: &mut R, x: &SeifertParams) -> (SeifertParams, String) {
    loop {
        match rng.gen_range(0..6) {
            0 if x.r() > 0 => {
                let j = rng.gen_range(1..=x.r());
                let n = rng.gen_range(-5..=5);
                return (twist(x, j, n).unwrap(), format!("twist({j},{n})"));
            }
            1 if x.r() > 0 && !x.epsilon.complement_orientable() => {
                let j = rng.gen_range(1..=x.r());
                return (reflect_pair(x, j).unwrap(), format!("reflect({j})"));
            }
            2 if x.epsilon.complement_orientable() => return (mirror(x).unwrap(), "mirror".into()),
            3 => {
                let c = rng.gen_range(-3..=3);
                return (insert_unit_pair(x, c).unwrap(), format!("insert(1,{c})"));
            }
            4 => return (absorb_unit_pairs(x).unwrap(), "absorb".into()),
            5 => {
                let mut y = x.clone();
                y.pairs.shuffle(rng);
                y.hplus.shuffle(rng);
                y.kminus.shuffle(rng);
                return (y, "shuffle".into());
            }
            _ => {}
        }
    }
}

pub fn random_word<R: Rng>(rng: &mut R, x: &SeifertParams, max_len: usize) -> (SeifertParams, Vec<String>) {
    let len = rng.gen_range(0..=max_len);
    let mut y = x.clone();
    let mut word = Vec::with_capacity(len);
    for _ in 0..len {
        let (next, desc) = random_move(rng, &y);
        y = next;
        word.push(desc);
    }
    (y, word)
}
