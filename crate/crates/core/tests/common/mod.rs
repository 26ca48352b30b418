//! Independent oracles. Nothing here calls into the root enumeration of the
//! library; Cartan matrices are written out by hand and roots are generated by
//! closing the simple roots under simple reflections.

#![allow(dead_code)]

use std::collections::BTreeSet;

use orbitsym::Family;

fn link(a: &mut [Vec<i64>], i: usize, j: usize, aij: i64, aji: i64) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
}

fn chain(a: &mut [Vec<i64>], upto: usize) {
    for i in 1..upto {
        link(a, i, i + 1, -1, -1);
    }
}

/// Bourbaki Cartan matrix, `a_ij = 2(α_i, α_j)/(α_i, α_i)`.
pub fn cartan(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    match family {
        Family::A => chain(&mut a, n),
        // α_n short
        Family::B | Family::BC if n >= 2 => {
            chain(&mut a, n - 1);
            link(&mut a, n - 1, n, -1, -2);
        }
        // α_n long
        Family::C if n >= 2 => {
            chain(&mut a, n - 1);
            link(&mut a, n - 1, n, -2, -1);
        }
        Family::B | Family::BC | Family::C => {}
        Family::D => {
            chain(&mut a, n - 1);
            link(&mut a, n - 2, n, -1, -1);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            link(&mut a, 1, 3, -1, -1);
            link(&mut a, 2, 4, -1, -1);
            for i in 3..n {
                link(&mut a, i, i + 1, -1, -1);
            }
        }
        // α_1, α_2 long
        Family::F4 => {
            link(&mut a, 1, 2, -1, -1);
            link(&mut a, 2, 3, -1, -2);
            link(&mut a, 3, 4, -1, -1);
        }
        // α_1 short
        Family::G2 => link(&mut a, 1, 2, -3, -1),
    }
    a
}

/// Positive roots of the reduced system with Cartan matrix `a`, as simple
/// coefficient vectors, by closing `{α_i}` under `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`.
pub fn closure_positive_roots(a: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    while let Some(beta) = stack.pop() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..n {
            // ⟨β, α_i^∨⟩ = Σ_j n_j a_ij
            let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if !seen.contains(&image) {
                stack.push(image);
            }
        }
    }
    seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect()
}

/// Closed-form `|Δ⁺|`.
pub fn positive_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::BC => n * n + n,
        Family::D => n * (n - 1),
        Family::E6 => 36,
        Family::E7 => 63,
        Family::E8 => 120,
        Family::F4 => 24,
        Family::G2 => 6,
    }
}

/// `BC_n` as `B_n` together with twice each short root.
pub fn bc_positive_roots(n: usize) -> BTreeSet<Vec<i64>> {
    let b = closure_positive_roots(&cartan(Family::B, n));
    let mut out = b.clone();
    for r in &b {
        // short roots of B_n are θ_i = α_i + … + α_n: coefficient 1 on α_n
        if r[n - 1] == 1 && r.iter().all(|&x| x <= 1) {
            out.insert(r.iter().map(|x| 2 * x).collect());
        }
    }
    out
}

/// Ranks at which each family is enumerated, up to `max`.
pub fn ranks(family: Family, max: usize) -> Vec<usize> {
    match family.fixed_rank() {
        Some(r) if r <= max => vec![r],
        Some(_) => vec![],
        None => (family.min_rank()..=max).collect(),
    }
}

/// Highest root in terms of fundamental weights, `n`-independent families
/// included: `δ = Σ w_i λ_i`.
pub fn highest_root_weights(family: Family, n: usize) -> Vec<i64> {
    let mut w = vec![0; n];
    match family {
        Family::A if n == 1 => w[0] = 2,
        Family::A => {
            w[0] = 1;
            w[n - 1] = 1;
        }
        Family::B | Family::D => w[1] = 1,
        Family::C => w[0] = 2,
        Family::G2 | Family::E6 => w[1] = 1,
        Family::F4 | Family::E7 => w[0] = 1,
        Family::E8 => w[7] = 1,
        Family::BC => unreachable!("not a reduced system"),
    }
    w
}
