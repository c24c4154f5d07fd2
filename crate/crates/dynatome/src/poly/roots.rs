//! Exact rational roots of integer polynomials.
//!
//! The usual divisor-enumeration method needs the trailing and leading
//! coefficients factored, which gets prohibitively expensive for the
//! discriminant-sized coefficients produced here. Instead:
//!
//! 1. strip zero roots, pass to the primitive part, and apply the monic
//!    substitution y = lc·x (rational roots of the original are integer
//!    roots of the transform divided by lc);
//! 2. isolate the real roots of the squarefree part with a Sturm chain,
//!    bisecting until every interval is narrower than 1, so it contains
//!    at most one integer candidate;
//! 3. test the candidate exactly; on success deflate and restart, which
//!    also yields multiplicities.
//!
//! A monic integer polynomial has no non-integer rational roots, so
//! checking integer candidates inside the isolating intervals is
//! complete. The divisor method survives in the tests as an independent
//! oracle on small inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd;
use super::IntPoly;
use crate::arith::int;

/// Exact rational roots with multiplicities, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots {
    /// (root, multiplicity) pairs in increasing root order.
    pub roots: Vec<(BigRational, u32)>,
    /// Whether the polynomial factors into linear terms over ℚ.
    pub splits_over_q: bool,
    /// Whether in addition every root is an integer.
    pub splits_over_z: bool,
}

/// Sturm chain of a squarefree polynomial, over ℚ for simplicity.
struct SturmChain {
    chain: Vec<Vec<BigRational>>, // ascending coefficients each
}

fn rat_deg(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn rat_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Remainder of polynomial division over ℚ (dense ascending).
fn rat_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = rat_deg(b).expect("division by zero polynomial");
    let lb = b[db].clone();
    let mut r: Vec<BigRational> = a.to_vec();
    loop {
        let Some(dr) = rat_deg(&r) else { break };
        if dr < db {
            break;
        }
        let f = &r[dr] / &lb;
        for k in 0..db {
            let sub = &f * &b[k];
            r[dr - db + k] -= sub;
        }
        r[dr] = BigRational::zero();
    }
    r.truncate(rat_deg(&r).map_or(0, |d| d + 1));
    r
}

impl SturmChain {
    fn new(p: &IntPoly) -> Self {
        let to_rat = |q: &IntPoly| -> Vec<BigRational> {
            q.coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect()
        };
        let mut chain = vec![to_rat(p)];
        let d = to_rat(&p.derivative());
        if rat_deg(&d).is_some() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let r = rat_rem(&chain[chain.len() - 2], &chain[chain.len() - 1]);
            match rat_deg(&r) {
                None => break,
                Some(_) => chain.push(r.iter().map(|c| -c).collect()),
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None; // sign as is_positive
        for p in &self.chain {
            let v = rat_eval(p, x);
            if v.is_zero() {
                continue;
            }
            let s = v.is_positive();
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in the open interval (a, b),
    /// assuming neither endpoint is a root of the first chain element.
    fn roots_between(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// All integer roots of a monic squarefree polynomial, sorted ascending.
/// `root_bound_hint` may give a tighter bound on |roots| than the Cauchy
/// bound computed from the coefficients.
fn integer_roots_monic_squarefree(s: &IntPoly, root_bound_hint: Option<&BigInt>) -> Vec<BigInt> {
    let mut s = s.clone();
    let mut found = Vec::new();
    'restart: loop {
        let deg = s.degree().expect("zero polynomial has no root set");
        debug_assert!(s.is_monic());
        if deg == 0 {
            break;
        }
        if deg == 1 {
            found.push(-s.coeff(0));
            break;
        }
        // Cauchy: all roots have |x| ≤ 1 + max |s_i| (monic)
        let mut cauchy = BigInt::zero();
        for c in &s.coeffs()[..deg] {
            let a = c.abs();
            if a > cauchy {
                cauchy = a;
            }
        }
        cauchy += 1;
        let bound = match root_bound_hint {
            Some(h) if h < &cauchy => h.clone(),
            _ => cauchy,
        };
        let chain = SturmChain::new(&s);
        let lo = BigRational::from(-&bound - 1);
        let hi = BigRational::from(&bound + 1);
        let total = chain.roots_between(&lo, &hi);
        let mut work = vec![(lo, hi, total)];
        while let Some((lo, hi, count)) = work.pop() {
            if count == 0 {
                continue;
            }
            if &hi - &lo < BigRational::one() {
                // at most one integer candidate in (lo, hi)
                let k = hi.floor().to_integer();
                let kr = BigRational::from(k.clone());
                if kr > lo && kr < hi && s.eval(&k).is_zero() {
                    found.push(k.clone());
                    s = s
                        .exact_div(&IntPoly::new(vec![-k, BigInt::one()]))
                        .expect("verified root must divide");
                    continue 'restart;
                }
                continue; // only irrational roots here
            }
            let mid = (&lo + &hi) / BigRational::from(int(2));
            let vm = rat_eval(&chain.chain[0], &mid);
            if vm.is_zero() {
                // rational root of a monic integer polynomial is integral
                assert!(mid.is_integer(), "monic integer polynomial with non-integer rational root");
                let k = mid.to_integer();
                found.push(k.clone());
                s = s
                    .exact_div(&IntPoly::new(vec![-k, BigInt::one()]))
                    .expect("verified root must divide");
                continue 'restart;
            }
            let left = chain.roots_between(&lo, &mid);
            work.push((lo, mid.clone(), left));
            work.push((mid, hi, count - left));
        }
        break;
    }
    found.sort();
    found
}

/// Exact rational roots of a nonzero integer polynomial.
pub fn rational_roots(p: &IntPoly) -> RationalRoots {
    assert!(!p.is_zero(), "rational roots of the zero polynomial");
    let deg = p.degree().unwrap();
    if deg == 0 {
        return RationalRoots {
            roots: Vec::new(),
            splits_over_q: true,
            splits_over_z: true,
        };
    }
    // strip zero roots
    let k0 = p.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let mut roots: Vec<(BigRational, u32)> = Vec::new();
    if k0 > 0 {
        roots.push((BigRational::zero(), k0 as u32));
    }
    let w = IntPoly::new(p.coeffs()[k0..].to_vec()).primitive_part();
    if let Some(m) = w.degree().filter(|&m| m >= 1) {
        let lc = w.leading_coeff();
        // monic transform q(y) = lc^(m−1) · w(y / lc)
        let mut qc = Vec::with_capacity(m + 1);
        let mut lpow = vec![BigInt::one()];
        for _ in 0..m {
            let last = lpow.last().unwrap() * &lc;
            lpow.push(last);
        }
        for (i, c) in w.coeffs()[..m].iter().enumerate() {
            qc.push(c * &lpow[m - 1 - i]);
        }
        qc.push(BigInt::one());
        let q = IntPoly::new(qc);
        debug_assert!(q.is_monic());
        let sq = q
            .exact_div(&gcd::gcd(&q, &q.derivative()))
            .expect("gcd divides");
        debug_assert!(sq.is_monic());
        // |x| ≤ 1 + max|w_i| / |lc| gives |y| ≤ |lc| + max|w_i|
        let mut wmax = BigInt::zero();
        for c in &w.coeffs()[..m] {
            let a = c.abs();
            if a > wmax {
                wmax = a;
            }
        }
        let hint = lc.abs() + wmax;
        for y0 in integer_roots_monic_squarefree(&sq, Some(&hint)) {
            let x0 = BigRational::new(y0, lc.clone());
            // multiplicity by repeated exact division of w
            let lin = IntPoly::new(vec![-x0.numer().clone(), x0.denom().clone()]);
            let mut mult = 0u32;
            let mut rest = w.clone();
            while let Ok(qq) = rest.exact_div(&lin) {
                mult += 1;
                rest = qq;
            }
            assert!(mult >= 1, "isolated root must divide");
            roots.push((x0, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let total: u32 = roots.iter().map(|(_, m)| m).sum();
    let splits_over_q = total as usize == deg;
    let splits_over_z = splits_over_q && roots.iter().all(|(r, _)| r.is_integer());
    RationalRoots {
        roots,
        splits_over_q,
        splits_over_z,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn roots_of(q: &IntPoly) -> Vec<(BigRational, u32)> {
        rational_roots(q).roots
    }

    #[test]
    fn mixed_rational_roots() {
        // 5(2x−3)²(x+1)(x²+1)
        let q = &(&p(&[-3, 2]).pow(2) * &p(&[1, 1])).scale(&int(5)) * &p(&[1, 0, 1]);
        let rr = rational_roots(&q);
        assert_eq!(rr.roots, vec![(rat(-1, 1), 1), (rat(3, 2), 2)]);
        assert!(!rr.splits_over_q);
        assert!(!rr.splits_over_z);
    }

    #[test]
    fn splitting_flags() {
        let q = &p(&[-2, 1]) * &p(&[5, 1]).pow(3); // (x−2)(x+5)³
        let rr = rational_roots(&q);
        assert_eq!(rr.roots, vec![(rat(-5, 1), 3), (rat(2, 1), 1)]);
        assert!(rr.splits_over_q && rr.splits_over_z);

        let rr = rational_roots(&p(&[-2, 0, 1])); // x²−2
        assert!(rr.roots.is_empty());
        assert!(!rr.splits_over_q);

        let rr = rational_roots(&p(&[1, -5, 6])); // (2x−1)(3x−1)
        assert_eq!(rr.roots, vec![(rat(1, 3), 1), (rat(1, 2), 1)]);
        assert!(rr.splits_over_q);
        assert!(!rr.splits_over_z);

        let rr = rational_roots(&p(&[0, 0, 0, 1])); // x³
        assert_eq!(rr.roots, vec![(rat(0, 1), 3)]);
        assert!(rr.splits_over_z);

        let rr = rational_roots(&p(&[7]));
        assert!(rr.roots.is_empty() && rr.splits_over_q && rr.splits_over_z);

        // negative leading coefficient
        let rr = rational_roots(&p(&[-2, 3, -1])); // −(x−1)(x−2)
        assert_eq!(rr.roots, vec![(rat(1, 1), 1), (rat(2, 1), 1)]);
        assert!(rr.splits_over_z);
    }

    #[test]
    fn large_root_and_bounds() {
        // root at 10⁶ and at the Cauchy-bound edge
        let q = &p(&[-1_000_000, 1]) * &p(&[3, 1]);
        assert_eq!(roots_of(&q), vec![(rat(-3, 1), 1), (rat(1_000_000, 1), 1)]);
        assert_eq!(roots_of(&p(&[-9, 0, 1])), vec![(rat(-3, 1), 1), (rat(3, 1), 1)]);
    }

    /// Divisor-enumeration oracle: every rational root of a primitive
    /// polynomial is ±(divisor of trailing)/(divisor of leading).
    fn divisor_oracle(q: &IntPoly) -> Vec<BigRational> {
        use num_traits::ToPrimitive;
        let k0 = q.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let w = IntPoly::new(q.coeffs()[k0..].to_vec());
        let mut out: Vec<BigRational> = Vec::new();
        if k0 > 0 {
            out.push(BigRational::zero());
        }
        if w.degree() == Some(0) {
            return out;
        }
        let a0 = w.coeff(0).abs().to_i64().unwrap();
        let an = w.leading_coeff().abs().to_i64().unwrap();
        for num in 1..=a0 {
            if a0 % num != 0 {
                continue;
            }
            for den in 1..=an {
                if an % den != 0 {
                    continue;
                }
                for sgn in [1i64, -1] {
                    let cand = rat(sgn * num, den);
                    if w.eval_rat(&cand).is_zero() && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn agrees_with_divisor_oracle(coeffs in prop::collection::vec(-30i64..=30, 1..=7)) {
            let q = IntPoly::from_i64(&coeffs);
            prop_assume!(!q.is_zero());
            let sturm: Vec<BigRational> = roots_of(&q).into_iter().map(|(r, _)| r).collect();
            prop_assert_eq!(sturm, divisor_oracle(&q));
        }

        #[test]
        fn finds_constructed_roots(
            nums in prop::collection::vec(-9i64..=9, 1..=3),
            dens in prop::collection::vec(1i64..=5, 3),
            with_quadratic in any::<bool>(),
        ) {
            let mut q = IntPoly::one();
            for (i, n) in nums.iter().enumerate() {
                q = &q * &IntPoly::from_i64(&[-n, dens[i]]);
            }
            if with_quadratic {
                q = &q * &IntPoly::from_i64(&[1, 0, 1]);
            }
            let rr = rational_roots(&q);
            let total: u32 = rr.roots.iter().map(|(_, m)| m).sum();
            prop_assert_eq!(total as usize, nums.len());
            prop_assert_eq!(rr.splits_over_q, !with_quadratic);
            for (i, n) in nums.iter().enumerate() {
                let target = rat(*n, dens[i]);
                prop_assert!(rr.roots.iter().any(|(r, _)| *r == target));
            }
        }
    }
}
