//! Multiplicative number theory needed by the series layer: divisor sums,
//! totients, the psi function, Bernoulli numbers, cusp counting, and the
//! coset-representative family for the level-d Hecke double coset.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use polycore::Rat;

/// Divisors of n in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are not a finite set");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Sum of k-th powers of divisors of n.
pub fn sigma(k: u32, n: u64) -> BigInt {
    divisors(n)
        .into_iter()
        .map(|d| BigInt::from(d).pow(k))
        .sum()
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The psi function d * prod_{p | d} (1 + 1/p); multiplicative, and the
/// index of the level-d congruence subgroup.
pub fn dedekind_psi(d: u64) -> u64 {
    assert!(d >= 1);
    let mut result = d;
    let mut m = d;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result += result / p;
        }
        p += 1;
    }
    if m > 1 {
        result += result / m;
    }
    result
}

/// Absolute value of the (2k)-th Bernoulli number, via the defining
/// recurrence sum_{j<=m} C(m+1,j) B_j = 0 with B_0 = 1, B_1 = -1/2.
pub fn bernoulli_abs(k: u32) -> Rat {
    assert!(k >= 1);
    let m = (2 * k) as usize;
    let mut b: Vec<Rat> = Vec::with_capacity(m + 1);
    b.push(Rat::one());
    for n in 1..=m {
        // binomial(n+1, j) accumulated incrementally; B_n = -sum/(n+1).
        let mut acc = Rat::zero();
        let mut binom = BigInt::one(); // C(n+1, 0)
        for (j, bj) in b.iter().enumerate() {
            acc += Rat::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from((n + 1 - j) as u64) / BigInt::from((j + 1) as u64);
        }
        b.push(-acc / Rat::from_integer(BigInt::from((n + 1) as u64)));
    }
    let out = b.pop().expect("recurrence filled");
    if out < Rat::zero() {
        -out
    } else {
        out
    }
}

/// Number of cusp classes at level d: sum over a | d of phi(gcd(a, d/a)).
pub fn cusp_count(d: u64) -> u64 {
    divisors(d)
        .into_iter()
        .map(|a| euler_phi(num_integer::gcd(a, d / a).max(1)))
        .sum()
}

/// Independent cusp count: classes of bottom rows (c : e) over Z/d under
/// the unit action, folded by the right translation (c, e) -> (c, c + e).
/// Counting the orbits of that translation on the projective line over Z/d
/// counts cusp classes without ever invoking the phi-gcd formula.
pub fn cusp_count_brute_force(d: u64) -> u64 {
    assert!(d >= 1);
    if d == 1 {
        return 1;
    }
    let units: Vec<u64> = (1..d).filter(|u| num_integer::gcd(*u, d) == 1).collect();
    let canon = |c: u64, e: u64| -> (u64, u64) {
        units
            .iter()
            .map(|u| ((u * c) % d, (u * e) % d))
            .min()
            .expect("unit group is nonempty")
    };
    let mut classes: Vec<(u64, u64)> = Vec::new();
    for c in 0..d {
        for e in 0..d {
            if num_integer::gcd(num_integer::gcd(c, e), d) == 1 {
                let rep = canon(c, e);
                if !classes.contains(&rep) {
                    classes.push(rep);
                }
            }
        }
    }
    let mut seen = vec![false; classes.len()];
    let mut orbits = 0;
    for start in 0..classes.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            let (c, e) = classes[cur];
            let next = canon(c, (c + e) % d);
            cur = classes.iter().position(|&x| x == next).expect("closed orbit");
        }
    }
    orbits
}

/// Every (a, b, e) with ab = d and 0 <= e < b, no coprimality condition;
/// there are sigma_1(d) of them.
pub fn coset_family(d: u64) -> Vec<(u64, u64, u64)> {
    assert!(d >= 1);
    let mut out = Vec::new();
    for a in divisors(d) {
        let b = d / a;
        for e in 0..b {
            out.push((a, b, e));
        }
    }
    out
}

/// The triples (a, b, e) with ab = d, 0 <= e < b, gcd(a, b, e) = 1 — one
/// per class of the level-d double coset; there are psi(d) of them.
pub fn coset_reps(d: u64) -> Vec<(u64, u64, u64)> {
    coset_family(d)
        .into_iter()
        .filter(|&(a, b, e)| num_integer::gcd(num_integer::gcd(a, b), e) == 1)
        .collect()
}
