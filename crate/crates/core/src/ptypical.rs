//! p-typical symmetric functions and p-typical Boolean Witt vectors.
//!
//! The p-typical symmetric functions form the subalgebra of Λ_ℕ generated
//! by d_{i,j} = d^∘i ∘ ψ^∘j, where ψ = Σ x_i^p and
//! d = ((Σ x_i)^p − Σ x_i^p)/p. The relations d_{i,j}^p = p·d_{i+1,j} +
//! d_{i,j+1} generate all relations, so over 𝔹 a p-typical Witt vector is
//! an array a_{i,j} ∈ {0,1} with a_{i,j} = 0 ⇔ a_{i,j+1} = a_{i+1,j} = 0,
//! i.e. a point of ℕ² ∪ {∞} through the quadrant-of-zeros description
//! a_{i,j} = 0 ⇔ i ≥ x, j ≥ y.
//!
//! The semiring laws on ℕ² ∪ {∞} are forced by a short list of generator
//! laws together with the semiring axioms and the monotone decomposition
//! (x, y) = (x, 0) + (0, y); the closure worked out here is total, and the
//! coproduct-based checker re-derives every value from first principles by
//! expanding Δ⁺/Δ× of d_{i,j} in the restricted d-monomial basis.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num::{BigInt, BigRational, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Result, WittError};
use crate::monomial::{
    coproduct_add_m, coproduct_mul_m, mono_product, plethysm_expand, SymFuncM, TensorM,
};
use crate::partitions::Partition;

// ---------------------------------------------------------------------------
// The generators d_{i,j}
// ---------------------------------------------------------------------------

/// d = ((Σ x_i)^p − Σ x_i^p)/p, expanded in `nvars` variables and collected
/// into the monomial basis; exact divisibility by p is checked
/// coefficientwise rather than assumed.
pub fn d_poly(p: u32, nvars: usize) -> Result<SymFuncM> {
    if !is_prime(p) {
        return Err(WittError::InvalidInput(format!("{p} is not prime")));
    }
    if nvars < p as usize {
        return Err(WittError::InvalidInput(format!(
            "need at least p = {p} variables to expand d faithfully"
        )));
    }
    // (x_1 + … + x_n)^p as a map from exponent vectors to coefficients.
    let mut power: HashMap<Vec<u32>, u64> = HashMap::new();
    power.insert(vec![0; nvars], 1);
    for _ in 0..p {
        let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
        for (expo, c) in &power {
            for v in 0..nvars {
                let mut e = expo.clone();
                e[v] += 1;
                *next.entry(e).or_insert(0) += c;
            }
        }
        power = next;
    }
    // Subtract Σ x_i^p.
    for v in 0..nvars {
        let mut e = vec![0; nvars];
        e[v] = p;
        let c = power.get_mut(&e).expect("pure powers occur in the expansion");
        *c = c.checked_sub(1).expect("pure power coefficient is at least 1");
    }
    // Collect into m_λ coordinates and divide by p.
    let mut out = SymFuncM::zero();
    let mut seen: HashMap<Partition, u64> = HashMap::new();
    for (expo, c) in &power {
        if *c == 0 {
            continue;
        }
        let lambda = Partition::from_unsorted(expo.clone());
        // Each m_λ aggregates all rearrangements; record the coefficient of
        // the sorted representative only.
        let sorted: Vec<u32> = {
            let mut s = expo.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            s
        };
        if sorted != *expo {
            continue;
        }
        seen.insert(lambda, *c);
    }
    for (lambda, c) in seen {
        if c % (p as u64) != 0 {
            return Err(WittError::PropertyViolation(format!(
                "coefficient {c} of m_{lambda} in (Σx)^p − Σx^p is not divisible by {p}"
            )));
        }
        out.add_assign_term(lambda, c / p as u64);
    }
    Ok(out)
}

static DIJ_CACHE: Lazy<Mutex<HashMap<(u32, u32, u32), SymFuncM>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// d_{i,j} = d^∘i ∘ ψ^∘j, of degree p^{i+j}, computed by iterated windowed
/// plethysm. The cap bounds the degree and hence the cost.
pub fn d_ij(p: u32, i: u32, j: u32, degcap: u32) -> Result<SymFuncM> {
    if !is_prime(p) {
        return Err(WittError::InvalidInput(format!("{p} is not prime")));
    }
    let deg = p
        .checked_pow(i + j)
        .filter(|&d| d <= degcap)
        .ok_or_else(|| {
            WittError::InvalidInput(format!(
                "d_{{{i},{j}}} for p = {p} has degree p^{} beyond the cap {degcap}",
                i + j
            ))
        })?;
    if let Some(hit) = DIJ_CACHE.lock().unwrap().get(&(p, i, j)) {
        return Ok(hit.clone());
    }
    // ψ^∘j = m_{(p^j)}; then apply d on the outside i times.
    let mut f = SymFuncM::monomial(Partition::new(vec![p.pow(j)]));
    if j == 0 {
        f = SymFuncM::monomial(Partition::new(vec![1]));
    }
    let d = d_poly(p, p as usize)?;
    for step in 0..i {
        let target = p.pow(step + 1 + j);
        f = plethysm_expand(&d, &f, target as usize, target)?;
    }
    debug_assert_eq!(f.degree(), Some(deg));
    DIJ_CACHE.lock().unwrap().insert((p, i, j), f.clone());
    Ok(f)
}

/// Check d_{i,j}^p = p·d_{i+1,j} + d_{i,j+1} exactly in the monomial basis.
pub fn verify_relation(p: u32, i: u32, j: u32, degcap: u32) -> Result<bool> {
    let base = d_ij(p, i, j, degcap)?;
    let left = {
        let mut acc = SymFuncM::one();
        for _ in 0..p {
            acc = mono_product(&acc, &base);
        }
        acc
    };
    let right = d_ij(p, i + 1, j, degcap)?
        .scale(p as u64)
        .add(&d_ij(p, i, j + 1, degcap)?);
    Ok(left == right)
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0)
}

// ---------------------------------------------------------------------------
// The carrier ℕ² ∪ {∞}
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PTypVal {
    Finite { x: u32, y: u32 },
    Infinity,
}

/// A p-typical Boolean Witt vector; the prime is carried as context so
/// that elements of different primes cannot be combined silently.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PTypicalBoolWitt {
    pub p: u32,
    pub value: PTypVal,
}

impl PTypicalBoolWitt {
    pub fn finite(p: u32, x: u32, y: u32) -> Self {
        PTypicalBoolWitt { p, value: PTypVal::Finite { x, y } }
    }

    pub fn infinity(p: u32) -> Self {
        PTypicalBoolWitt { p, value: PTypVal::Infinity }
    }

    /// The array entry a_{i,j} = a(d_{i,j}).
    pub fn array_bit(&self, i: u32, j: u32) -> bool {
        match self.value {
            PTypVal::Infinity => true,
            PTypVal::Finite { x, y } => !(i >= x && j >= y),
        }
    }
}

/// Largest n whose image in W_(p)(𝔹) is still finite: d(n) = (n^p − n)/p
/// vanishes exactly for n ≤ 1 when p ≥ 3 and reaches 0 after one step from
/// n = 2 when p = 2.
fn nat_cutoff(p: u32) -> u32 {
    if p == 2 {
        2
    } else {
        1
    }
}

/// The image of n ∈ ℕ under ℕ → W_(p)(𝔹): (n, 0) for n up to the cutoff,
/// ∞ beyond it.
pub fn from_nat_p(p: u32, n: u32) -> PTypicalBoolWitt {
    if n <= nat_cutoff(p) {
        PTypicalBoolWitt::finite(p, n, 0)
    } else {
        PTypicalBoolWitt::infinity(p)
    }
}

fn require_same_prime(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> Result<u32> {
    if a.p != b.p {
        return Err(WittError::InvalidInput(format!(
            "cannot combine p-typical Witt vectors for p = {} and p = {}",
            a.p, b.p
        )));
    }
    Ok(a.p)
}

/// Addition, as forced by the generator laws. Writing
/// (x,y) = (x,0) + (0,y) and regrouping, the sum is
/// ((x,0)+(x′,0)) + (0, max(y,y′)); the first summand is (x+x′, 0) when one
/// side is 0 or when the total stays within the ℕ-image cutoff, and ∞
/// otherwise (for x, x′ ≥ 1 it dominates 1+1, whose image is already ∞
/// beyond the cutoff).
pub fn add_p(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> Result<PTypicalBoolWitt> {
    let p = require_same_prime(a, b)?;
    Ok(match (a.value, b.value) {
        (PTypVal::Infinity, _) | (_, PTypVal::Infinity) => PTypicalBoolWitt::infinity(p),
        (PTypVal::Finite { x, y }, PTypVal::Finite { x: x2, y: y2 }) => {
            let t = y.max(y2);
            if x == 0 || x2 == 0 || x + x2 <= nat_cutoff(p) {
                PTypicalBoolWitt::finite(p, x + x2, t)
            } else {
                PTypicalBoolWitt::infinity(p)
            }
        }
    })
}

/// Multiplication, likewise forced: expanding
/// ((x,0)+(0,y))((x′,0)+(0,y′)) with the generator laws gives
/// (xx′, max([x≥1]·y′, [x′≥1]·y, min(y,y′))) when x ≤ 1 or x′ ≤ 1, and ∞
/// when x, x′ ≥ 2 (the (x,0)(x′,0) term already dominates (2,0)², which is
/// ∞ for every p). ∞ multiplies to ∞ against anything with x ≥ 1, and
/// ∞·(0,y) = (0,y); in particular ∞·0 = 0.
pub fn mul_p(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> Result<PTypicalBoolWitt> {
    let p = require_same_prime(a, b)?;
    Ok(match (a.value, b.value) {
        (PTypVal::Infinity, PTypVal::Infinity) => PTypicalBoolWitt::infinity(p),
        (PTypVal::Infinity, PTypVal::Finite { x, y })
        | (PTypVal::Finite { x, y }, PTypVal::Infinity) => {
            if x >= 1 {
                PTypicalBoolWitt::infinity(p)
            } else {
                PTypicalBoolWitt::finite(p, 0, y)
            }
        }
        (PTypVal::Finite { x, y }, PTypVal::Finite { x: x2, y: y2 }) => {
            if x >= 2 && x2 >= 2 {
                PTypicalBoolWitt::infinity(p)
            } else {
                let mut t = y.min(y2);
                if x >= 1 {
                    t = t.max(y2);
                }
                if x2 >= 1 {
                    t = t.max(y);
                }
                PTypicalBoolWitt::finite(p, x * x2, t)
            }
        }
    })
}

/// Componentwise order with ∞ terminal.
pub fn leq_p(a: PTypicalBoolWitt, b: PTypicalBoolWitt) -> Result<bool> {
    require_same_prime(a, b)?;
    Ok(match (a.value, b.value) {
        (_, PTypVal::Infinity) => true,
        (PTypVal::Infinity, PTypVal::Finite { .. }) => false,
        (PTypVal::Finite { x, y }, PTypVal::Finite { x: x2, y: y2 }) => x <= x2 && y <= y2,
    })
}

/// The canonical map W(𝔹) → W_(p)(𝔹): (x, y) with x within the ℕ-image
/// cutoff goes to (x, z) with z minimal such that p^z > y; everything else
/// goes to ∞.
pub fn from_big_witt(w: crate::boolwitt::BoolWitt, p: u32) -> PTypicalBoolWitt {
    use crate::boolwitt::BoolWitt;
    match w {
        BoolWitt::Infinity => PTypicalBoolWitt::infinity(p),
        BoolWitt::Finite { x, y } => {
            if x > nat_cutoff(p) {
                PTypicalBoolWitt::infinity(p)
            } else {
                let mut z = 0u32;
                let mut pw: u64 = 1;
                while pw <= y as u64 {
                    pw *= p as u64;
                    z += 1;
                }
                PTypicalBoolWitt::finite(p, x, z)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// First-principles law checking
// ---------------------------------------------------------------------------

/// A restricted d-monomial ∏ d_{i,j}^{e_{i,j}} with 0 ≤ e_{i,j} ≤ p−1;
/// these form an ℕ-basis of the p-typical symmetric functions. Stored as
/// sorted ((i,j), e) pairs with e ≥ 1.
type DMonomial = Vec<((u32, u32), u32)>;

/// All restricted d-monomials of exact degree `deg` over indices with
/// p^{i+j} ≤ deg.
fn restricted_monomials(p: u32, deg: u32) -> Vec<DMonomial> {
    let mut indices: Vec<(u32, u32)> = Vec::new();
    let mut level = 0;
    while p.pow(level) <= deg {
        for i in 0..=level {
            indices.push((i, level - i));
        }
        level += 1;
    }
    let mut out = Vec::new();
    let mut current: DMonomial = Vec::new();
    fn rec(
        p: u32,
        indices: &[(u32, u32)],
        pos: usize,
        remaining: u32,
        current: &mut DMonomial,
        out: &mut Vec<DMonomial>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if pos == indices.len() {
            return;
        }
        let (i, j) = indices[pos];
        let unit = p.pow(i + j);
        let max_e = (p - 1).min(remaining / unit);
        for e in (0..=max_e).rev() {
            if e > 0 {
                current.push(((i, j), e));
            }
            rec(p, indices, pos + 1, remaining - e * unit, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }
    rec(p, &indices, 0, deg, &mut current, &mut out);
    out
}

static DMONO_CACHE: Lazy<Mutex<HashMap<(u32, DMonomial), SymFuncM>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Monomial-basis expansion of a restricted d-monomial.
fn d_monomial_expansion(p: u32, m: &DMonomial, degcap: u32) -> Result<SymFuncM> {
    if let Some(hit) = DMONO_CACHE.lock().unwrap().get(&(p, m.clone())) {
        return Ok(hit.clone());
    }
    let mut acc = SymFuncM::one();
    for &((i, j), e) in m {
        let factor = d_ij(p, i, j, degcap)?;
        for _ in 0..e {
            acc = mono_product(&acc, &factor);
        }
    }
    DMONO_CACHE
        .lock()
        .unwrap()
        .insert((p, m.clone()), acc.clone());
    Ok(acc)
}

/// Evaluate a Witt vector on a restricted d-monomial: a(∏ d^e) = ∏ a(d)^e,
/// which in 𝔹 is the conjunction of the involved array bits.
fn eval_d_monomial(w: PTypicalBoolWitt, m: &DMonomial) -> bool {
    m.iter().all(|&((i, j), _)| w.array_bit(i, j))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PTypOp {
    Add,
    Mul,
}

/// Express a tensor (in m ⊗ m coordinates) in the basis of pairs of
/// restricted d-monomials of complementary degrees, by exact rational
/// elimination. The pairs form a linearly independent family, so a
/// solution, if one exists, is unique; it must consist of nonnegative
/// integers.
fn solve_in_d_basis(
    p: u32,
    tensor: &TensorM,
    deg: u32,
    op: PTypOp,
) -> Result<Vec<(DMonomial, DMonomial, u64)>> {
    // Candidate column vectors. Δ⁺ of a degree-`deg` element splits the
    // degree across the two legs; Δ× keeps full degree on both.
    let degree_pairs: Vec<(u32, u32)> = match op {
        PTypOp::Add => (0..=deg).map(|l| (l, deg - l)).collect(),
        PTypOp::Mul => vec![(deg, deg)],
    };
    let mut columns: Vec<(DMonomial, DMonomial, Vec<(Partition, Partition, u64)>)> = Vec::new();
    for (left_deg, right_deg) in degree_pairs {
        let lefts = restricted_monomials(p, left_deg);
        let rights = restricted_monomials(p, right_deg);
        for l in &lefts {
            let lx = d_monomial_expansion(p, l, deg)?;
            for r in &rights {
                let rx = d_monomial_expansion(p, r, deg)?;
                let mut coords = Vec::new();
                for (lam, cl) in lx.iter() {
                    for (mu, cr) in rx.iter() {
                        coords.push((lam.clone(), mu.clone(), cl * cr));
                    }
                }
                columns.push((l.clone(), r.clone(), coords));
            }
        }
    }
    // Row index: every coordinate appearing in the target or any column.
    let mut row_index: HashMap<(Partition, Partition), usize> = HashMap::new();
    let add_row = |key: (Partition, Partition), idx: &mut HashMap<(Partition, Partition), usize>| {
        let next = idx.len();
        idx.entry(key).or_insert(next);
    };
    for ((lam, mu), _) in tensor.iter() {
        add_row((lam.clone(), mu.clone()), &mut row_index);
    }
    for (_, _, coords) in &columns {
        for (lam, mu, _) in coords {
            add_row((lam.clone(), mu.clone()), &mut row_index);
        }
    }
    let nrows = row_index.len();
    let ncols = columns.len();
    let mut mat: Vec<Vec<BigRational>> =
        vec![vec![BigRational::zero(); ncols + 1]; nrows];
    for (c, (_, _, coords)) in columns.iter().enumerate() {
        for (lam, mu, v) in coords {
            let r = row_index[&(lam.clone(), mu.clone())];
            mat[r][c] = BigRational::from(BigInt::from(*v));
        }
    }
    for ((lam, mu), v) in tensor.iter() {
        let r = row_index[&(lam.clone(), mu.clone())];
        mat[r][ncols] = BigRational::from(BigInt::from(v));
    }
    // Gaussian elimination.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pr);
        let inv = mat[row][col].clone();
        for c in col..=ncols {
            mat[row][c] = &mat[row][c] / &inv;
        }
        for r in 0..nrows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..=ncols {
                    let delta = &factor * &mat[row][c];
                    mat[r][c] = &mat[r][c] - delta;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == nrows {
            break;
        }
    }
    // Consistency: no leftover nonzero RHS.
    for r in row..nrows {
        if !mat[r][ncols].is_zero() {
            return Err(WittError::PropertyViolation(
                "coproduct of a p-typical generator does not lie in the span of \
                 restricted d-monomial pairs"
                    .into(),
            ));
        }
    }
    let mut out = Vec::new();
    for (c, col) in columns.iter().enumerate() {
        let value = match pivot_of_col[c] {
            Some(r) => mat[r][ncols].clone(),
            None => BigRational::zero(),
        };
        if value.is_negative() || !value.is_integer() {
            return Err(WittError::PropertyViolation(format!(
                "non-ℕ coefficient {value} in the d-basis expansion"
            )));
        }
        let as_int = value.to_integer();
        if !as_int.is_zero() {
            let small: u64 = as_int.try_into().map_err(|_| {
                WittError::PropertyViolation("d-basis coefficient overflows u64".into())
            })?;
            out.push((col.0.clone(), col.1.clone(), small));
        }
    }
    Ok(out)
}

/// Compute (a ∘ b)(d_{i,j}) for all i+j ≤ window_k from first principles:
/// expand Δ^op(d_{i,j}) in the monomial basis, re-express it in restricted
/// d-monomial pairs, and pair against (a ⊗ b). The resulting array on the
/// triangle is then matched to the ℕ² ∪ {∞} description; a corner that
/// cannot be identified inside the triangle is an explicit indeterminate
/// error. Must agree with `add_p` / `mul_p`.
pub fn law_check_p_via_coproduct(
    a: PTypicalBoolWitt,
    b: PTypicalBoolWitt,
    op: PTypOp,
    window_k: u32,
) -> Result<PTypicalBoolWitt> {
    let p = require_same_prime(a, b)?;
    let feasibility = match p {
        2 => 3,
        3 => 2,
        _ => 1,
    };
    if window_k > feasibility {
        return Err(WittError::InvalidInput(format!(
            "window_k = {window_k} exceeds the degree feasibility {feasibility} for p = {p}"
        )));
    }
    let mut bits: Vec<Vec<bool>> = Vec::new();
    for i in 0..=window_k {
        let mut row = Vec::new();
        for j in 0..=(window_k - i) {
            let expansion = coproduct_in_d_basis(p, i, j, op)?;
            let bit = expansion
                .iter()
                .any(|(l, r, _)| eval_d_monomial(a, l) && eval_d_monomial(b, r));
            row.push(bit);
        }
        bits.push(row);
    }
    reconstruct_from_triangle(&bits, p, window_k)
}

static COPROD_D_CACHE: Lazy<Mutex<HashMap<(u32, u32, u32, PTypOp), Vec<(DMonomial, DMonomial, u64)>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Δ⁺ or Δ× of d_{i,j}, expanded in pairs of restricted d-monomials. This
/// depends only on (p, i, j, op), not on the Witt vectors being combined,
/// so it is computed once and cached.
fn coproduct_in_d_basis(
    p: u32,
    i: u32,
    j: u32,
    op: PTypOp,
) -> Result<Vec<(DMonomial, DMonomial, u64)>> {
    if let Some(hit) = COPROD_D_CACHE.lock().unwrap().get(&(p, i, j, op)) {
        return Ok(hit.clone());
    }
    let deg = p.pow(i + j);
    let dij = d_ij(p, i, j, deg)?;
    // Linear extension of the monomial coproduct over the expansion of
    // d_{i,j}.
    let mut tensor = TensorM::zero();
    for (lam, c) in dij.iter() {
        let part = match op {
            PTypOp::Add => coproduct_add_m(lam),
            PTypOp::Mul => coproduct_mul_m(lam, lam.size() as usize)?,
        };
        for ((mu, nu), cc) in part.iter() {
            tensor.add_assign_term(mu.clone(), nu.clone(), c * cc);
        }
    }
    let expansion = solve_in_d_basis(p, &tensor, deg, op)?;
    COPROD_D_CACHE
        .lock()
        .unwrap()
        .insert((p, i, j, op), expansion.clone());
    Ok(expansion)
}

/// Identify the ℕ² ∪ {∞} description from array bits on the triangle
/// i + j ≤ k. The zero set of a genuine Witt vector is a quadrant; an empty
/// zero set means ∞ only if the answer is a-priori within the triangle,
/// which the caller guarantees by choosing k; a non-quadrant zero set is a
/// property violation.
fn reconstruct_from_triangle(bits: &[Vec<bool>], p: u32, k: u32) -> Result<PTypicalBoolWitt> {
    let mut zeros = Vec::new();
    for (i, row) in bits.iter().enumerate() {
        for (j, &bit) in row.iter().enumerate() {
            if !bit {
                zeros.push((i as u32, j as u32));
            }
        }
    }
    if zeros.is_empty() {
        // Any finite (x, y) with x + y ≤ k would have produced the zero
        // a_{x,y}; finite answers beyond the triangle are indistinguishable
        // from ∞ here, so the caller must not rely on this branch for them.
        return Ok(PTypicalBoolWitt::infinity(p));
    }
    let x = zeros.iter().map(|&(i, _)| i).min().unwrap();
    let y = zeros.iter().map(|&(_, j)| j).min().unwrap();
    for i in 0..=k {
        for j in 0..=(k - i) {
            let expected = i >= x && j >= y;
            if zeros.contains(&(i, j)) != expected {
                return Err(WittError::PropertyViolation(format!(
                    "triangle zero set is not a quadrant: corner ({x},{y}) but ({i},{j}) \
                     disagrees"
                )));
            }
        }
    }
    if x + y > k {
        return Err(WittError::Indeterminate(format!(
            "corner ({x},{y}) sits outside the triangle i+j ≤ {k}"
        )));
    }
    Ok(PTypicalBoolWitt::finite(p, x, y))
}

// ---------------------------------------------------------------------------
// Truncated p-typical Witt vectors
// ---------------------------------------------------------------------------

/// A {0,1}-array on the triangle T_k = {(i,j) : i+j ≤ k} satisfying the
/// truncated carrier condition a_{i,j} = 0 ⇔ a_{i,j+1} = a_{i+1,j} = 0 for
/// i+j ≤ k−1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedArray {
    pub k: u32,
    /// bits[i][j] for j ≤ k − i.
    pub bits: Vec<Vec<bool>>,
}

impl TruncatedArray {
    pub fn new(k: u32, bits: Vec<Vec<bool>>) -> Result<Self> {
        let t = TruncatedArray { k, bits };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        if self.bits.len() != self.k as usize + 1 {
            return Err(WittError::InvalidInput(format!(
                "expected {} rows, got {}",
                self.k + 1,
                self.bits.len()
            )));
        }
        for (i, row) in self.bits.iter().enumerate() {
            if row.len() != (self.k as usize + 1 - i) {
                return Err(WittError::InvalidInput(format!(
                    "row {i} should have {} entries",
                    self.k as usize + 1 - i
                )));
            }
        }
        for i in 0..self.k as usize {
            for j in 0..(self.k as usize - i) {
                let here = self.bits[i][j];
                let right = self.bits[i][j + 1];
                let down = self.bits[i + 1][j];
                if (!here) != (!right && !down) {
                    return Err(WittError::InvalidInput(format!(
                        "carrier condition fails at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn bit(&self, i: u32, j: u32) -> bool {
        self.bits[i as usize][j as usize]
    }

    /// Restriction of a full Witt vector to the triangle.
    pub fn from_witt(w: PTypicalBoolWitt, k: u32) -> Self {
        let bits = (0..=k)
            .map(|i| (0..=(k - i)).map(|j| w.array_bit(i, j)).collect())
            .collect();
        TruncatedArray { k, bits }
    }

    /// The triangle from text like `0;11;110`: groups from the longest
    /// diagonal upward, group g listing a_{k−g, 0..g}.
    pub fn restriction(&self, k: u32) -> TruncatedArray {
        assert!(k <= self.k);
        TruncatedArray {
            k,
            bits: (0..=k)
                .map(|i| (0..=(k - i)).map(|j| self.bit(i, j)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for TruncatedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in 0..=self.k {
            if g > 0 {
                write!(f, ";")?;
            }
            for j in 0..=g {
                write!(f, "{}", if self.bit(self.k - g, j) { 1 } else { 0 })?;
            }
        }
        Ok(())
    }
}

impl FromStr for TruncatedArray {
    type Err = WittError;
    fn from_str(s: &str) -> Result<Self> {
        let groups: Vec<&str> = s.trim().split(';').collect();
        let k = groups.len() as u32 - 1;
        let mut bits: Vec<Vec<bool>> = (0..=k)
            .map(|i| vec![false; (k - i) as usize + 1])
            .collect();
        for (g, group) in groups.iter().enumerate() {
            if group.len() != g + 1 {
                return Err(WittError::InvalidInput(format!(
                    "group {g} should have {} bits, got `{group}`",
                    g + 1
                )));
            }
            for (j, ch) in group.chars().enumerate() {
                let v = match ch {
                    '0' => false,
                    '1' => true,
                    _ => {
                        return Err(WittError::InvalidInput(format!(
                            "invalid bit `{ch}` in truncated array"
                        )))
                    }
                };
                bits[k as usize - g][j] = v;
            }
        }
        TruncatedArray::new(k, bits)
    }
}

/// All truncated arrays on T_k. The count grows like 2^{k²/2}, so k is
/// capped at 6.
pub fn enumerate_truncated(k: u32) -> Result<Vec<TruncatedArray>> {
    if k > 6 {
        return Err(WittError::InvalidInput(format!(
            "truncated enumeration is limited to k ≤ 6, got {k}"
        )));
    }
    let mut out = Vec::new();
    let cells: Vec<(usize, usize)> = (0..=k as usize)
        .flat_map(|i| (0..=(k as usize - i)).map(move |j| (i, j)))
        .collect();
    let mut bits: Vec<Vec<bool>> = (0..=k as usize)
        .map(|i| vec![false; k as usize + 1 - i])
        .collect();
    fn rec(
        k: u32,
        cells: &[(usize, usize)],
        pos: usize,
        bits: &mut Vec<Vec<bool>>,
        out: &mut Vec<TruncatedArray>,
    ) {
        if pos == cells.len() {
            let cand = TruncatedArray { k, bits: bits.clone() };
            if cand.validate().is_ok() {
                out.push(cand);
            }
            return;
        }
        let (i, j) = cells[pos];
        for v in [false, true] {
            bits[i][j] = v;
            rec(k, cells, pos + 1, bits, out);
        }
    }
    rec(k, &cells, 0, &mut bits, &mut out);
    Ok(out)
}

/// All valid extensions of `t` to the larger triangle T_{k′}.
pub fn lifts(t: &TruncatedArray, k_prime: u32) -> Result<Vec<TruncatedArray>> {
    if k_prime < t.k {
        return Err(WittError::InvalidInput(
            "lift target must be at least the current length".into(),
        ));
    }
    if k_prime > 6 {
        return Err(WittError::InvalidInput(format!(
            "lift search is limited to k ≤ 6, got {k_prime}"
        )));
    }
    Ok(enumerate_truncated(k_prime)?
        .into_iter()
        .filter(|cand| cand.restriction(t.k) == *t)
        .collect())
}

// ---------------------------------------------------------------------------
// Text encoding
// ---------------------------------------------------------------------------

impl fmt::Display for PTypicalBoolWitt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            PTypVal::Finite { x, y } => write!(f, "p={}:({x},{y})", self.p),
            PTypVal::Infinity => write!(f, "p={}:inf", self.p),
        }
    }
}

impl FromStr for PTypicalBoolWitt {
    type Err = WittError;
    fn from_str(s: &str) -> Result<Self> {
        let (ps, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| WittError::InvalidInput(format!("expected `p=<prime>:…`, got `{s}`")))?;
        let p = ps
            .strip_prefix("p=")
            .and_then(|t| t.parse::<u32>().ok())
            .filter(|&p| is_prime(p))
            .ok_or_else(|| WittError::InvalidInput(format!("bad prime prefix in `{s}`")))?;
        let w: crate::boolwitt::BoolWitt = rest.parse()?;
        Ok(match w {
            crate::boolwitt::BoolWitt::Infinity => PTypicalBoolWitt::infinity(p),
            crate::boolwitt::BoolWitt::Finite { x, y } => PTypicalBoolWitt::finite(p, x, y),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolwitt::BoolWitt;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn d_poly_examples() {
        let d2 = d_poly(2, 4).unwrap();
        assert_eq!(d2, SymFuncM::monomial(p(&[1, 1])));
        let d3 = d_poly(3, 5).unwrap();
        assert_eq!(d3.coeff(&p(&[2, 1])), 1);
        assert_eq!(d3.coeff(&p(&[1, 1, 1])), 2);
        assert_eq!(d3.iter().count(), 2);
        assert!(d_poly(4, 6).is_err());
        assert!(d_poly(3, 2).is_err());
    }

    #[test]
    fn d_ij_examples() {
        assert_eq!(d_ij(2, 0, 0, 16).unwrap(), SymFuncM::monomial(p(&[1])));
        assert_eq!(d_ij(2, 0, 1, 16).unwrap(), SymFuncM::monomial(p(&[2])));
        assert_eq!(d_ij(2, 1, 0, 16).unwrap(), d_poly(2, 2).unwrap());
        assert_eq!(d_ij(3, 0, 1, 16).unwrap(), SymFuncM::monomial(p(&[3])));
        assert!(d_ij(2, 3, 2, 16).is_err());
    }

    #[test]
    fn defining_relation_holds() {
        // Left-hand degrees p^{i+j+1} reach 8 (p = 2) and 9 (p = 3); the
        // next depth needs degree-16 plethysms, which are out of reach.
        for (pp, maxsum) in [(2u32, 2u32), (3, 1)] {
            for i in 0..=maxsum {
                for j in 0..=(maxsum - i) {
                    assert!(
                        verify_relation(pp, i, j, 16).unwrap(),
                        "relation fails for p={pp}, (i,j)=({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn from_nat_and_cutoffs() {
        assert_eq!(from_nat_p(3, 0), PTypicalBoolWitt::finite(3, 0, 0));
        assert_eq!(from_nat_p(3, 1), PTypicalBoolWitt::finite(3, 1, 0));
        assert_eq!(from_nat_p(3, 2), PTypicalBoolWitt::infinity(3));
        assert_eq!(from_nat_p(2, 2), PTypicalBoolWitt::finite(2, 2, 0));
        assert_eq!(from_nat_p(2, 3), PTypicalBoolWitt::infinity(2));
    }

    #[test]
    fn arithmetic_examples() {
        let w = |x, y| PTypicalBoolWitt::finite(3, x, y);
        let inf = PTypicalBoolWitt::infinity(3);
        assert_eq!(add_p(w(0, 2), w(0, 3)).unwrap(), w(0, 3));
        assert_eq!(add_p(w(1, 0), w(0, 1)).unwrap(), w(1, 1));
        assert_eq!(add_p(w(1, 0), w(1, 0)).unwrap(), inf);
        assert_eq!(add_p(w(2, 0), w(2, 0)).unwrap(), inf);
        assert_eq!(mul_p(w(0, 1), w(0, 2)).unwrap(), w(0, 1));
        assert_eq!(mul_p(w(1, 0), w(2, 5)).unwrap(), w(2, 5));
        assert_eq!(mul_p(w(2, 0), w(2, 0)).unwrap(), inf);
        assert_eq!(mul_p(inf, w(0, 4)).unwrap(), w(0, 4));
        assert_eq!(mul_p(inf, w(0, 0)).unwrap(), w(0, 0));
        assert_eq!(mul_p(inf, w(1, 0)).unwrap(), inf);
        // p = 2 keeps 1+1 finite.
        let v = |x, y| PTypicalBoolWitt::finite(2, x, y);
        assert_eq!(add_p(v(1, 0), v(1, 0)).unwrap(), v(2, 0));
        assert_eq!(add_p(v(1, 0), v(2, 0)).unwrap(), PTypicalBoolWitt::infinity(2));
        assert!(add_p(w(0, 0), v(0, 0)).is_err());
    }

    #[test]
    fn semiring_axioms_hold() {
        for pp in [2u32, 3] {
            let mut elems: Vec<PTypicalBoolWitt> = (0..=2)
                .flat_map(|x| (0..=2).map(move |y| PTypicalBoolWitt::finite(pp, x, y)))
                .collect();
            elems.push(PTypicalBoolWitt::infinity(pp));
            let zero = PTypicalBoolWitt::finite(pp, 0, 0);
            let one = PTypicalBoolWitt::finite(pp, 1, 0);
            for &a in &elems {
                assert_eq!(add_p(a, zero).unwrap(), a);
                assert_eq!(mul_p(a, one).unwrap(), a);
                assert_eq!(mul_p(a, zero).unwrap(), zero);
                for &b in &elems {
                    assert_eq!(add_p(a, b).unwrap(), add_p(b, a).unwrap());
                    assert_eq!(mul_p(a, b).unwrap(), mul_p(b, a).unwrap());
                    for &c in &elems {
                        assert_eq!(
                            add_p(add_p(a, b).unwrap(), c).unwrap(),
                            add_p(a, add_p(b, c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            mul_p(mul_p(a, b).unwrap(), c).unwrap(),
                            mul_p(a, mul_p(b, c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            mul_p(a, add_p(b, c).unwrap()).unwrap(),
                            add_p(mul_p(a, b).unwrap(), mul_p(a, c).unwrap()).unwrap(),
                            "distributivity at {a}, {b}, {c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn law_tables_independent_of_p_for_odd_primes() {
        let lift = |w: PTypicalBoolWitt, q: u32| match w.value {
            PTypVal::Finite { x, y } => PTypicalBoolWitt::finite(q, x, y),
            PTypVal::Infinity => PTypicalBoolWitt::infinity(q),
        };
        let mut coords: Vec<PTypVal> = (0..=3)
            .flat_map(|x| (0..=3).map(move |y| PTypVal::Finite { x, y }))
            .collect();
        coords.push(PTypVal::Infinity);
        for &av in &coords {
            for &bv in &coords {
                let a3 = PTypicalBoolWitt { p: 3, value: av };
                let b3 = PTypicalBoolWitt { p: 3, value: bv };
                let a5 = PTypicalBoolWitt { p: 5, value: av };
                let b5 = PTypicalBoolWitt { p: 5, value: bv };
                assert_eq!(lift(add_p(a3, b3).unwrap(), 5), add_p(a5, b5).unwrap());
                assert_eq!(lift(mul_p(a3, b3).unwrap(), 5), mul_p(a5, b5).unwrap());
            }
        }
    }

    #[test]
    fn law_check_reproduces_tables() {
        // p = 3, triangle k = 2: all pairs whose expected answer (finite
        // with x+y ≤ 2, or ∞) is identifiable.
        let cases3 = [
            ((0, 1), (0, 2), PTypOp::Add),
            ((1, 0), (0, 1), PTypOp::Add),
            ((1, 0), (1, 0), PTypOp::Add),
            ((2, 0), (2, 0), PTypOp::Add),
            ((0, 1), (0, 2), PTypOp::Mul),
            ((1, 0), (0, 2), PTypOp::Mul),
            ((1, 1), (1, 1), PTypOp::Mul),
            ((2, 0), (2, 0), PTypOp::Mul),
        ];
        for &((xa, ya), (xb, yb), op) in &cases3 {
            let a = PTypicalBoolWitt::finite(3, xa, ya);
            let b = PTypicalBoolWitt::finite(3, xb, yb);
            let expected = match op {
                PTypOp::Add => add_p(a, b).unwrap(),
                PTypOp::Mul => mul_p(a, b).unwrap(),
            };
            assert_eq!(
                law_check_p_via_coproduct(a, b, op, 2).unwrap(),
                expected,
                "p=3 law check mismatch at {a} {op:?} {b}"
            );
        }
        // ∞ cases.
        let inf = PTypicalBoolWitt::infinity(3);
        assert_eq!(
            law_check_p_via_coproduct(inf, PTypicalBoolWitt::finite(3, 0, 1), PTypOp::Mul, 2)
                .unwrap(),
            PTypicalBoolWitt::finite(3, 0, 1)
        );
        assert_eq!(
            law_check_p_via_coproduct(inf, PTypicalBoolWitt::finite(3, 1, 0), PTypOp::Add, 2)
                .unwrap(),
            inf
        );
        // p = 2 with the deeper triangle.
        let v = |x, y| PTypicalBoolWitt::finite(2, x, y);
        assert_eq!(
            law_check_p_via_coproduct(v(1, 0), v(1, 0), PTypOp::Add, 3).unwrap(),
            v(2, 0)
        );
        assert_eq!(
            law_check_p_via_coproduct(v(1, 1), v(1, 1), PTypOp::Mul, 3).unwrap(),
            v(1, 1)
        );
        assert_eq!(
            law_check_p_via_coproduct(v(1, 0), v(2, 0), PTypOp::Add, 3).unwrap(),
            PTypicalBoolWitt::infinity(2)
        );
    }

    #[test]
    fn carrier_equation_on_arrays() {
        let mut elems: Vec<PTypicalBoolWitt> = (0..=3)
            .flat_map(|x| (0..=3).map(move |y| PTypicalBoolWitt::finite(3, x, y)))
            .collect();
        elems.push(PTypicalBoolWitt::infinity(3));
        for w in &elems {
            for i in 0..=6u32 {
                for j in 0..=(6 - i) {
                    let here = w.array_bit(i, j);
                    let right = w.array_bit(i, j + 1);
                    let down = w.array_bit(i + 1, j);
                    assert_eq!(!here, !right && !down, "carrier equation at ({i},{j}) for {w}");
                }
            }
        }
    }

    #[test]
    fn truncated_arrays_and_counterexample() {
        let all2 = enumerate_truncated(2).unwrap();
        // Every genuine Witt vector restricts to a valid array.
        for x in 0..=3u32 {
            for y in 0..=3 {
                let t = TruncatedArray::from_witt(PTypicalBoolWitt::finite(3, x, y), 2);
                assert!(all2.contains(&t));
            }
        }
        // The two-block triangle 0;11;110.
        let cex: TruncatedArray = "0;11;110".parse().unwrap();
        assert!(all2.contains(&cex));
        assert!(!cex.bit(2, 0) && !cex.bit(0, 2) && cex.bit(1, 1));
        // It is not the restriction of any ℕ²∪{∞} point…
        let mut from_witt = Vec::new();
        for x in 0..=3u32 {
            for y in 0..=3 {
                from_witt.push(TruncatedArray::from_witt(
                    PTypicalBoolWitt::finite(3, x, y),
                    2,
                ));
            }
        }
        from_witt.push(TruncatedArray::from_witt(PTypicalBoolWitt::infinity(3), 2));
        assert!(!from_witt.contains(&cex));
        // …and it admits no lift to the length-4 triangle.
        assert!(lifts(&cex, 4).unwrap().is_empty());
        // Round trip of the text form.
        assert_eq!(cex.to_string(), "0;11;110");
    }

    #[test]
    fn from_big_witt_examples_and_morphism() {
        assert_eq!(
            from_big_witt(BoolWitt::finite(1, 5), 2),
            PTypicalBoolWitt::finite(2, 1, 3)
        );
        assert_eq!(
            from_big_witt(BoolWitt::finite(1, 0), 3),
            PTypicalBoolWitt::finite(3, 1, 0)
        );
        assert_eq!(from_big_witt(BoolWitt::finite(2, 0), 3), PTypicalBoolWitt::infinity(3));
        assert_eq!(from_big_witt(BoolWitt::finite(2, 0), 2), PTypicalBoolWitt::finite(2, 2, 0));
        assert_eq!(from_big_witt(BoolWitt::Infinity, 3), PTypicalBoolWitt::infinity(3));

        for pp in [2u32, 3] {
            let mut elems: Vec<BoolWitt> = (0..=3)
                .flat_map(|x| (0..=3).map(move |y| BoolWitt::finite(x, y)))
                .collect();
            elems.push(BoolWitt::Infinity);
            for &a in &elems {
                for &b in &elems {
                    use crate::boolwitt::{add_w, mul_w};
                    assert_eq!(
                        from_big_witt(add_w(a, b), pp),
                        add_p(from_big_witt(a, pp), from_big_witt(b, pp)).unwrap(),
                        "additivity fails at {a}+{b}, p={pp}"
                    );
                    assert_eq!(
                        from_big_witt(mul_w(a, b), pp),
                        mul_p(from_big_witt(a, pp), from_big_witt(b, pp)).unwrap(),
                        "multiplicativity fails at {a}·{b}, p={pp}"
                    );
                }
            }
        }
    }

    #[test]
    fn order_is_componentwise() {
        let w = |x, y| PTypicalBoolWitt::finite(3, x, y);
        let inf = PTypicalBoolWitt::infinity(3);
        assert!(leq_p(w(1, 2), w(2, 2)).unwrap());
        assert!(!leq_p(w(1, 2), w(2, 1)).unwrap());
        assert!(leq_p(w(5, 5), inf).unwrap());
        assert!(!leq_p(inf, w(5, 5)).unwrap());
        // a ≼ a + c.
        let mut elems: Vec<PTypicalBoolWitt> = (0..=2)
            .flat_map(|x| (0..=2).map(move |y| w(x, y)))
            .collect();
        elems.push(inf);
        for &a in &elems {
            for &c in &elems {
                assert!(leq_p(a, add_p(a, c).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        for s in ["p=3:(1,2)", "p=2:(0,0)", "p=5:inf"] {
            let w: PTypicalBoolWitt = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
        }
        assert!("p=4:(1,2)".parse::<PTypicalBoolWitt>().is_err());
        assert!("(1,2)".parse::<PTypicalBoolWitt>().is_err());
    }
}

