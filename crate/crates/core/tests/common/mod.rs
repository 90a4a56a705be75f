#![allow(dead_code)]

use dynkin_stab::cover::{ChargePath, CoverState};
use dynkin_stab::gauss::{int, rat};
use dynkin_stab::{is_regular, CentralCharge, ClassVector, Diagram, Gauss};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn d(name: &str) -> Diagram {
    name.parse().unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A rational with numerator in `-range..=range` and denominator 1..=4.
pub fn small_rational(rng: &mut StdRng, range: i64) -> dynkin_stab::Rational {
    rat(rng.gen_range(-range..=range), rng.gen_range(1..=4))
}

/// A rational in about `[-3, 3]` with a denominator up to 97, so exact
/// coincidences between walls are rare.
pub fn fine_rational(rng: &mut StdRng) -> dynkin_stab::Rational {
    let q = rng.gen_range(7..=97);
    rat(rng.gen_range(-3 * q..=3 * q), q)
}

pub fn random_gauss(rng: &mut StdRng) -> Gauss {
    Gauss::new(small_rational(rng, 12), small_rational(rng, 12))
}

pub fn random_charge(rng: &mut StdRng, n: usize) -> CentralCharge {
    CentralCharge::new((0..n).map(|_| random_gauss(rng)).collect())
}

/// A regular charge with every `Im Z(e_i)` positive.
pub fn random_chamber_charge(rng: &mut StdRng, dd: &Diagram) -> CentralCharge {
    loop {
        let z = CentralCharge::new(
            (0..dd.size())
                .map(|_| {
                    Gauss::new(
                        small_rational(rng, 12),
                        rat(rng.gen_range(1..=12), rng.gen_range(1..=4)),
                    )
                })
                .collect(),
        );
        if is_regular(dd, &z).unwrap().regular {
            return z;
        }
    }
}

pub fn imaginary_root_charge(dd: &Diagram, z: &CentralCharge) -> Gauss {
    dynkin_stab::evaluate(z, dd.delta().unwrap().as_slice()).unwrap()
}

/// A random vertex for a charge path. For affine diagrams `Im Z(δ) ≥ 1`,
/// keeping the whole polyline away from the real-δ locus.
pub fn random_vertex(rng: &mut StdRng, dd: &Diagram) -> CentralCharge {
    loop {
        let z = CentralCharge::new(
            (0..dd.size())
                .map(|_| Gauss::new(fine_rational(rng), fine_rational(rng)))
                .collect(),
        );
        if !dd.is_affine() || imaginary_root_charge(dd, &z).im >= int(1) {
            return z;
        }
    }
}

pub fn random_path(
    rng: &mut StdRng,
    dd: &Diagram,
    start: &CentralCharge,
    segments: usize,
) -> ChargePath {
    let mut v = vec![start.clone()];
    for _ in 0..segments {
        v.push(random_vertex(rng, dd));
    }
    ChargePath::new(v).unwrap()
}

/// Random chamber state of the given diagram, with affine charges keeping
/// `Im Z(δ) ≥ 1`.
pub fn random_start(rng: &mut StdRng, dd: &Diagram) -> CoverState {
    loop {
        let z = random_chamber_charge(rng, dd);
        if dd.is_affine() && imaginary_root_charge(dd, &z).im < int(1) {
            continue;
        }
        return dynkin_stab::initial_state(dd, &z).unwrap();
    }
}

/// Positive roots of a finite diagram grown by adding simple roots and
/// keeping the vectors of norm 2. Uses no reflections.
pub fn positive_roots_by_height(dd: &Diagram) -> Vec<ClassVector> {
    let n = dd.size();
    let e = dd.euler_matrix();
    let norm = |v: &[i64]| -> i64 {
        (0..n)
            .map(|i| (0..n).map(|j| v[i] * e[i][j] * v[j]).sum::<i64>())
            .sum()
    };
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = level.clone();
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for b in &level {
            for i in 0..n {
                let mut c = b.clone();
                c[i] += 1;
                if norm(&c) == 2 && !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.into_iter().map(ClassVector).collect()
}

/// Determinant by cofactor expansion over `i128`, for small matrices.
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return i128::from(m[0][0]);
    }
    let mut total = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, x)| *x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * i128::from(m[0][j]) * det(&minor);
    }
    total
}

pub fn chi(dd: &Diagram, x: &[i64], y: &[i64]) -> i64 {
    let e = dd.euler_matrix();
    let n = dd.size();
    (0..n)
        .map(|i| (0..n).map(|j| x[i] * e[i][j] * y[j]).sum::<i64>())
        .sum()
}
