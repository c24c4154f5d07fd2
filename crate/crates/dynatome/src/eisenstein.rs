//! Arithmetic in ℤ[j] (j a primitive cube root of unity) and the
//! bounded searches behind the cube-equation non-existence results.
//!
//! The ring 𝔸 = ℤ[j] is Euclidean under the norm a² − ab + b², with
//! unit group {±1, ±j, ±j²} and ramified prime λ = 1 − j of norm 3
//! (λ² = −3j, 3 = −j²λ²). The quotient 𝔸/λ is 𝔸 → ℤ/3 via a + bj ↦
//! a + b, represented on {−1, 0, 1}; the 27-element quotient 𝔸/λ³ has
//! exactly three cube classes, namely those of −1, 0, 1.
//!
//! On top of that arithmetic the module runs the exhaustive searches
//! used to rule out nontrivial solutions of x³ + u·y³ = 4·v·z³ over
//! ℤ[j] (and x³ + y³ = 4z³ over ℤ): a cube is always within distance 2
//! of the sublattice λ³𝔸, while the points 4u sit at distance √7 > 2
//! from it, which is what powers the descent. Each of those distance
//! facts is itself verified by finite enumeration here.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::int;
use crate::error::{Error, Result};

/// An Eisenstein integer a + b·j with j² = −1 − j.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        EisensteinInt { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        EisensteinInt::new(int(a), int(b))
    }

    pub fn zero() -> Self {
        EisensteinInt::from_i64(0, 0)
    }

    pub fn one() -> Self {
        EisensteinInt::from_i64(1, 0)
    }

    pub fn j() -> Self {
        EisensteinInt::from_i64(0, 1)
    }

    /// λ = 1 − j, the ramified prime above 3.
    pub fn lambda() -> Self {
        EisensteinInt::from_i64(1, -1)
    }

    /// The unit group {±1, ±j, ±j²} (j² = −1 − j).
    pub fn units() -> [EisensteinInt; 6] {
        [
            EisensteinInt::from_i64(1, 0),
            EisensteinInt::from_i64(-1, 0),
            EisensteinInt::from_i64(0, 1),
            EisensteinInt::from_i64(0, -1),
            EisensteinInt::from_i64(-1, -1),
            EisensteinInt::from_i64(1, 1),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// N(a + bj) = a² − ab + b² ≥ 0, zero only at 0.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Complex conjugate: a + bj ↦ (a − b) − bj.
    pub fn conj(&self) -> Self {
        EisensteinInt::new(&self.a - &self.b, -self.b.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = EisensteinInt::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl std::fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}j", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}j", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}j", self.a, self.b)
        }
    }
}

impl std::ops::Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl std::ops::Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl std::ops::Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-self.a.clone(), -self.b.clone())
    }
}

impl std::ops::Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        // (a + bj)(c + dj) = ac − bd + (ad + bc − bd)j
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        EisensteinInt::new(ac - &bd, ad + bc - bd)
    }
}

/// Rounds p/q (q > 0) to the nearest integer, ties toward zero.
fn round_nearest(p: &BigInt, q: &BigInt) -> BigInt {
    let (f, rem) = p.div_mod_floor(q);
    let twice = &rem * 2;
    if &twice < q {
        f
    } else if &twice > q {
        f + 1
    } else if f.is_negative() {
        f + 1
    } else {
        f
    }
}

/// Euclidean division x = qy + r with N(r) < N(y); the quotient rounds
/// x/y to the nearest lattice point, ties toward zero per coordinate.
pub fn euclidean_div(x: &EisensteinInt, y: &EisensteinInt) -> Result<(EisensteinInt, EisensteinInt)> {
    if y.is_zero() {
        return Err(Error::DivByZero);
    }
    let n = y.norm();
    let num = x * &y.conj();
    let q = EisensteinInt::new(round_nearest(&num.a, &n), round_nearest(&num.b, &n));
    let r = x - &(&q * y);
    debug_assert!(r.norm() < n);
    Ok((q, r))
}

/// The representative of x mod λ in {−1, 0, 1} (𝔸/λ ≅ ℤ/3 via
/// a + bj ↦ a + b, because j ≡ 1 mod λ).
pub fn residue_mod_lambda(x: &EisensteinInt) -> i32 {
    let s = (&x.a + &x.b).mod_floor(&int(3));
    if s.is_zero() {
        0
    } else if s.is_one() {
        1
    } else {
        -1
    }
}

/// Canonical representative of x mod λ³ as (k, m) with x ≡ k + m·j,
/// 0 ≤ k < 3, 0 ≤ m < 9. The lattice λ³𝔸 has Hermite basis
/// {3 + 6j, 9j}, so reduction subtracts multiples of those two vectors.
pub fn canonical_mod_lambda_cubed(x: &EisensteinInt) -> (u32, u32) {
    let three = int(3);
    let k = x.a.mod_floor(&three);
    let t = (&x.a - &k) / &three;
    let m = (&x.b - int(6) * t).mod_floor(&int(9));
    let k: u32 = k.to_string().parse().unwrap();
    let m: u32 = m.to_string().parse().unwrap();
    (k, m)
}

/// Multiplies two polynomials with Eisenstein-integer coefficients
/// (ascending); used for the cube-expansion identity.
fn eis_poly_mul(a: &[EisensteinInt], b: &[EisensteinInt]) -> Vec<EisensteinInt> {
    let mut out = vec![EisensteinInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Report of the cube-class enumeration mod λ³.
#[derive(Debug, Clone)]
pub struct CubeResidueReport {
    /// Number of residue classes enumerated (27).
    pub num_classes: usize,
    /// Distinct canonical cubes, sorted — expected the classes of
    /// {−1, 0, 1}.
    pub cube_classes: Vec<(u32, u32)>,
    /// The cube image is exactly {class(−1), class(0), class(1)}.
    pub image_is_pm_one_zero: bool,
    /// x³ ≡ (x mod λ) mod λ³ for every class: the residue of x mod λ,
    /// read in {−1, 0, 1}, already determines the cube mod λ³.
    pub refined_ok: bool,
    /// (1 + λb)³ − 1 = λ³·b·(b+1)·(b+1+j) holds in 𝔸[b].
    pub binomial_identity_ok: bool,
}

impl CubeResidueReport {
    pub fn pass(&self) -> bool {
        self.num_classes == 27
            && self.image_is_pm_one_zero
            && self.refined_ok
            && self.binomial_identity_ok
    }
}

/// Enumerates the 27 residue classes mod λ³, cubes each, and checks the
/// cube image and its refinement.
pub fn cube_residue_check() -> CubeResidueReport {
    let mut cube_classes: Vec<(u32, u32)> = Vec::new();
    let mut refined_ok = true;
    let mut num_classes = 0;
    for k in 0..3i64 {
        for m in 0..9i64 {
            num_classes += 1;
            let x = EisensteinInt::from_i64(k, m);
            let cube = x.pow(3);
            let cls = canonical_mod_lambda_cubed(&cube);
            if !cube_classes.contains(&cls) {
                cube_classes.push(cls);
            }
            let residue = EisensteinInt::from_i64(residue_mod_lambda(&x) as i64, 0);
            if canonical_mod_lambda_cubed(&(&cube - &residue)) != (0, 0) {
                refined_ok = false;
            }
        }
    }
    cube_classes.sort_unstable();
    let mut expected: Vec<(u32, u32)> = [-1i64, 0, 1]
        .iter()
        .map(|&v| canonical_mod_lambda_cubed(&EisensteinInt::from_i64(v, 0)))
        .collect();
    expected.sort_unstable();
    let image_is_pm_one_zero = cube_classes == expected;

    // (1 + λb)³ − 1 = λ³·b·(b+1)·(b+1+j) as polynomials in b
    let lam = EisensteinInt::lambda();
    let one_plus = vec![EisensteinInt::one(), lam.clone()];
    let mut lhs = eis_poly_mul(&eis_poly_mul(&one_plus, &one_plus), &one_plus);
    lhs[0] = &lhs[0] - &EisensteinInt::one();
    let lam3 = lam.pow(3);
    let b_factor = vec![EisensteinInt::zero(), EisensteinInt::one()];
    let b1 = vec![EisensteinInt::one(), EisensteinInt::one()];
    let b1j = vec![
        &EisensteinInt::one() + &EisensteinInt::j(),
        EisensteinInt::one(),
    ];
    let rhs: Vec<EisensteinInt> = eis_poly_mul(&eis_poly_mul(&b_factor, &b1), &b1j)
        .iter()
        .map(|c| c * &lam3)
        .collect();
    let binomial_identity_ok = lhs == rhs;

    CubeResidueReport {
        num_classes,
        cube_classes,
        image_is_pm_one_zero,
        refined_ok,
        binomial_identity_ok,
    }
}

/// Minimum of N(4u − λ³w) over units u and lattice points w: the
/// distance from 4𝔸^× to λ³𝔸 squared. Expected 7, so the distance
/// √7 exceeds 2.
#[derive(Debug, Clone)]
pub struct DistanceCheck {
    pub min_norm: BigInt,
    /// min distance > 2, i.e. min norm > 4.
    pub exceeds_two: bool,
}

/// Exhaustively minimizes N(4u − λ³w) over all units u and w in a
/// coordinate ball; radius 6 already dominates (N(λ³w) = 27·N(w) grows
/// past any |4u| well inside it).
pub fn lambda_cubed_distance_check() -> DistanceCheck {
    let lam3 = EisensteinInt::lambda().pow(3);
    let mut min_norm: Option<BigInt> = None;
    for u in EisensteinInt::units() {
        let four_u = EisensteinInt::new(int(4) * &u.a, int(4) * &u.b);
        for wa in -6..=6i64 {
            for wb in -6..=6i64 {
                let w = EisensteinInt::from_i64(wa, wb);
                let n = (&four_u - &(&lam3 * &w)).norm();
                if min_norm.as_ref().map_or(true, |m| n < *m) {
                    min_norm = Some(n);
                }
            }
        }
    }
    let min_norm = min_norm.unwrap();
    let exceeds_two = min_norm > int(4);
    DistanceCheck {
        min_norm,
        exceeds_two,
    }
}

/// Checks that x³ + u·y³ lies within distance 2 of the lattice λ³𝔸
/// (norm distance ≤ 4) for every unit u and all x, y with coordinates
/// in [−radius, radius]. The nearest lattice multiple is found from the
/// rounded Euclidean quotient and its 3×3 neighborhood, which is
/// exhaustive: the true nearest multiple differs from the rounded one
/// by a vector of norm < 4, hence by coordinates in {−1, 0, 1}.
pub fn near_cube_distance_check(radius: i64) -> Result<NearCubeCheck> {
    let lam3 = EisensteinInt::lambda().pow(3);
    let mut max_min = BigInt::zero();
    for xa in -radius..=radius {
        for xb in -radius..=radius {
            let xc = EisensteinInt::from_i64(xa, xb).pow(3);
            for ya in -radius..=radius {
                for yb in -radius..=radius {
                    let yc = EisensteinInt::from_i64(ya, yb).pow(3);
                    for u in EisensteinInt::units() {
                        let s = &xc + &(&u * &yc);
                        let (q, _) = euclidean_div(&s, &lam3)?;
                        let mut best: Option<BigInt> = None;
                        for da in -1..=1i64 {
                            for db in -1..=1i64 {
                                let qq = &q + &EisensteinInt::from_i64(da, db);
                                let n = (&s - &(&qq * &lam3)).norm();
                                if best.as_ref().map_or(true, |m| n < *m) {
                                    best = Some(n);
                                }
                            }
                        }
                        let best = best.unwrap();
                        if best > max_min {
                            max_min = best;
                        }
                    }
                }
            }
        }
    }
    let within_two = max_min <= int(4);
    Ok(NearCubeCheck {
        radius,
        max_norm_distance: max_min,
        within_two,
    })
}

#[derive(Debug, Clone)]
pub struct NearCubeCheck {
    pub radius: i64,
    /// Largest (over all x, y, u) squared distance from x³ + u·y³ to
    /// the lattice λ³𝔸.
    pub max_norm_distance: BigInt,
    pub within_two: bool,
}

/// One solution of x³ + u·y³ = 4·v·z³, coordinates in the (1, j) basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DescentSolution {
    pub x: (i64, i64),
    pub y: (i64, i64),
    pub z: (i64, i64),
    pub u: (i64, i64),
    pub v: (i64, i64),
}

/// Result of the exhaustive solution searches.
#[derive(Debug, Clone)]
pub struct DescentReport {
    /// Coordinate bound for the ℤ[j] search.
    pub bound: i64,
    /// Every (x, y, z, u, v) with x³ + u·y³ = 4·v·z³ in the ball.
    pub solutions: Vec<DescentSolution>,
    /// All solutions have z = 0.
    pub all_trivial: bool,
    /// Bound used for the rational special case (bound²).
    pub rational_bound: i64,
    /// Solutions of x³ + y³ = 4z³ over ℤ in the rational box.
    pub rational_solutions: Vec<(i64, i64, i64)>,
    pub rational_all_trivial: bool,
}

fn emul(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0 - x.1 * y.1)
}

fn ecube(x: (i64, i64)) -> (i64, i64) {
    emul(emul(x, x), x)
}

const UNIT_PAIRS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (-1, -1), (1, 1)];

/// Integer cube root of t (sign-preserving), or None if t is not a cube.
fn icbrt_exact(t: i64) -> Option<i64> {
    let approx = (t as f64).cbrt().round() as i64;
    for y in approx - 2..=approx + 2 {
        if y * y * y == t {
            return Some(y);
        }
    }
    None
}

/// Exhaustively solves x³ + u·y³ = 4·v·z³ over ℤ[j] with coordinate
/// magnitudes ≤ bound and u, v units, then the rational special case
/// x³ + y³ = 4z³ with |x|, |y|, |z| ≤ bound². The searches exist to
/// certify there are no z ≠ 0 solutions; the report's triviality flags
/// say whether that held.
pub fn descent_search(bound: i64, threads: usize) -> Result<DescentReport> {
    if bound < 1 {
        return Err(Error::BadParam("descent search needs bound >= 1".into()));
    }
    let threads = threads.max(1);
    let side = (2 * bound + 1) as usize;
    let points: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|a| (-bound..=bound).map(move |b| (a, b)))
        .collect();
    let cubes: Vec<(i64, i64)> = points.iter().map(|&p| ecube(p)).collect();

    // right-hand sides 4·v·z³ indexed by value
    let mut targets: HashMap<(i64, i64), Vec<((i64, i64), (i64, i64))>> = HashMap::new();
    for (zi, &z) in points.iter().enumerate() {
        let zc = cubes[zi];
        for &v in &UNIT_PAIRS {
            let t = emul((4, 0), emul(v, zc));
            targets.entry(t).or_default().push((z, v));
        }
    }

    // u·y³ for every (y, u)
    let uy: Vec<((i64, i64), (i64, i64), (i64, i64))> = points
        .iter()
        .enumerate()
        .flat_map(|(yi, &y)| {
            let yc = cubes[yi];
            UNIT_PAIRS.iter().map(move |&u| (y, u, emul(u, yc)))
        })
        .collect();

    let chunk = side * side / threads + 1;
    let shards: Vec<Vec<DescentSolution>> = std::thread::scope(|scope| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .zip(cubes.chunks(chunk))
            .map(|(pts, cbs)| {
                let targets = &targets;
                let uy = &uy;
                scope.spawn(move || {
                    let mut found = Vec::new();
                    for (&x, &xc) in pts.iter().zip(cbs.iter()) {
                        for &(y, u, uyc) in uy.iter() {
                            let s = (xc.0 + uyc.0, xc.1 + uyc.1);
                            if let Some(hits) = targets.get(&s) {
                                for &(z, v) in hits {
                                    found.push(DescentSolution { x, y, z, u, v });
                                }
                            }
                        }
                    }
                    found
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let solutions: Vec<DescentSolution> = shards.into_iter().flatten().collect();
    let all_trivial = solutions.iter().all(|s| s.z == (0, 0));

    let rb = bound * bound;
    let mut rational_solutions = Vec::new();
    for z in -rb..=rb {
        let rhs = 4 * z * z * z;
        for x in -rb..=rb {
            let t = rhs - x * x * x;
            if let Some(y) = icbrt_exact(t) {
                if y.abs() <= rb {
                    rational_solutions.push((x, y, z));
                }
            }
        }
    }
    let rational_all_trivial = rational_solutions.iter().all(|&(_, _, z)| z == 0);

    Ok(DescentReport {
        bound,
        solutions,
        all_trivial,
        rational_bound: rb,
        rational_solutions,
        rational_all_trivial,
    })
}
