use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::QuarticModel;

/// Whether `d·y² = P(x)` has a real point, counting the points at infinity.
pub fn solvable_real(model: &QuarticModel) -> bool {
    let [c4, ..] = model.coefficients();
    c4.is_positive() == model.d().is_positive() || real_root_count(model) > 0
}

/// Number of distinct real roots of `P`, by Sturm's theorem.
pub fn real_root_count(model: &QuarticModel) -> usize {
    let p: Vec<BigRational> = model
        .coefficients()
        .iter()
        .rev()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let mut chain = vec![p.clone(), derivative(&p)];
    loop {
        let n = chain.len();
        let r = remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    let at_pos: Vec<bool> = chain
        .iter()
        .map(|f| f.last().unwrap().is_positive())
        .collect();
    let at_neg: Vec<bool> = chain
        .iter()
        .map(|f| f.last().unwrap().is_positive() == (f.len() % 2 == 1))
        .collect();
    sign_changes(&at_neg) - sign_changes(&at_pos)
}

fn sign_changes(signs: &[bool]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn derivative(f: &[BigRational]) -> Vec<BigRational> {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Remainder of `f` by `g` (ascending, trimmed; `g` nonzero).
fn remainder(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    let mut r = f.to_vec();
    let lead = g.last().unwrap();
    while r.len() >= g.len() {
        let q = r.last().unwrap() / lead;
        let shift = r.len() - g.len();
        for (i, gc) in g.iter().enumerate() {
            r[shift + i] -= &q * gc;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}
