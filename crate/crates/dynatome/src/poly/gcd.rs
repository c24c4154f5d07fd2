//! Gcd, separability and squarefree structure over ℤ[x].
//!
//! The gcd uses the primitive polynomial remainder sequence: contents are
//! handled by integer gcds, primitive parts by pseudo-division. Yun's
//! algorithm yields the squarefree decomposition; every division it
//! performs is exact in ℤ[x] by Gauss's lemma, and this is checked.

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_traits::Signed;

use super::IntPoly;

/// Pseudo-remainder: lc(b)^(δ+1)·a mod b with δ = deg a − deg b.
/// Requires b ≠ 0 and deg a ≥ deg b.
pub fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo_rem by zero polynomial");
    let da = a.degree().expect("pseudo_rem of zero polynomial");
    assert!(da >= db, "pseudo_rem requires deg a >= deg b");
    let lc = b.leading_coeff();
    let mut e = (da - db + 1) as u32;
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let top = r.leading_coeff();
        r = &r.scale(&lc) - &b.scale(&top).shift(dr - db);
        e -= 1;
    }
    // make the total scaling exactly lc^(δ+1) even when degrees skip
    if e > 0 {
        r = r.scale(&num_traits::pow::pow(lc, e as usize));
    }
    r
}

/// Gcd in ℤ[x], normalized primitive-times-content with positive leading
/// coefficient; gcd(0, 0) = 0.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    fn normalize(p: &IntPoly) -> IntPoly {
        let c = p.signed_content().abs();
        if p.is_zero() {
            IntPoly::zero()
        } else {
            p.primitive_part().scale(&c)
        }
    }
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let cg = a.content().gcd(&b.content());
    let (mut p, mut q) = (a.primitive_part(), b.primitive_part());
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = pseudo_rem(&p, &q).primitive_part();
        p = q;
        q = r;
    }
    p.primitive_part().scale(&cg)
}

/// Whether a nonzero polynomial has no repeated roots (over ℚ̄).
pub fn is_separable(p: &IntPoly) -> bool {
    assert!(!p.is_zero(), "separability of the zero polynomial");
    if p.degree() == Some(0) {
        return true;
    }
    gcd(p, &p.derivative()).degree() == Some(0)
}

/// Squarefree decomposition by Yun's algorithm:
/// p = content · ∏ fᵢ^(mᵢ) with the fᵢ primitive, separable, pairwise
/// coprime, positive leading coefficients, and distinct multiplicities.
/// The content carries the sign. Factors are returned by increasing
/// multiplicity; constant p yields an empty factor list.
pub fn squarefree_decomposition(p: &IntPoly) -> (BigInt, Vec<(IntPoly, u32)>) {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let content = p.signed_content();
    let a = p.primitive_part();
    if a.degree() == Some(0) {
        return (content, Vec::new());
    }
    let exact = |n: &IntPoly, d: &IntPoly| -> IntPoly {
        n.exact_div(d)
            .expect("Yun division is exact by Gauss's lemma")
    };
    let g = gcd(&a, &a.derivative());
    if g.degree() == Some(0) {
        return (content, vec![(a, 1)]);
    }
    let mut b = exact(&a, &g);
    let c = exact(&a.derivative(), &g);
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        let f = gcd(&b, &d);
        if f.degree().map_or(false, |deg| deg > 0) {
            out.push((f.clone(), i));
        }
        b = exact(&b, &f);
        if b.degree() == Some(0) {
            break;
        }
        let cnext = exact(&d, &f);
        d = &cnext - &b.derivative();
        i += 1;
    }
    (content, out)
}
