//! ℕ-linear symmetric functions in the monomial basis.
//!
//! Products are computed combinatorially (matchings of parts against
//! positions) and double-checked by a brute-force polynomial-expansion
//! oracle; the coproducts Δ⁺ (disjoint-union alphabet) and Δ× (product
//! alphabet) are computed exactly, and plethysm is available in windowed
//! form. Everything lives over ℕ: coefficients are unsigned and exact.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::error::{Result, WittError};
use crate::partitions::{partitions_of, Partition};

/// A symmetric function with nonnegative integer coefficients in the
/// monomial basis. Zero coefficients are never stored; the zero function is
/// the empty map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFuncM {
    coeffs: BTreeMap<Partition, u64>,
}

impl SymFuncM {
    pub fn zero() -> Self {
        SymFuncM::default()
    }

    /// The constant 1 = m_0.
    pub fn one() -> Self {
        SymFuncM::monomial(Partition::zero())
    }

    /// The basis element m_λ.
    pub fn monomial(lambda: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, 1);
        SymFuncM { coeffs }
    }

    /// The elementary symmetric function e_n = m_{1^n}.
    pub fn e(n: u32) -> Self {
        SymFuncM::monomial(Partition::rect(1, n))
    }

    /// The power sum ψ_n = m_{(n)} for n ≥ 1.
    pub fn psi(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(WittError::InvalidInput("psi(0) is not defined".into()));
        }
        Ok(SymFuncM::monomial(Partition::rect(n, 1)))
    }

    pub fn from_coeffs(coeffs: BTreeMap<Partition, u64>) -> Self {
        let coeffs = coeffs.into_iter().filter(|&(_, c)| c != 0).collect();
        SymFuncM { coeffs }
    }

    pub fn coeff(&self, lambda: &Partition) -> u64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.coeffs.iter().map(|(l, &c)| (l, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Max size of a support partition; None for the zero function.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|l| l.size()).max()
    }

    pub fn add_assign_term(&mut self, lambda: Partition, c: u64) {
        if c == 0 {
            return;
        }
        *self.coeffs.entry(lambda).or_insert(0) += c;
    }

    pub fn add(&self, other: &SymFuncM) -> SymFuncM {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_assign_term(l.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: u64) -> SymFuncM {
        if c == 0 {
            return SymFuncM::zero();
        }
        SymFuncM {
            coeffs: self.coeffs.iter().map(|(l, k)| (l.clone(), k * c)).collect(),
        }
    }

    /// Counit ε⁺: evaluation at the empty alphabet, i.e. the m_0 coefficient.
    pub fn counit(&self) -> u64 {
        self.coeff(&Partition::zero())
    }
}

impl fmt::Display for SymFuncM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "m{l}")?;
        }
        Ok(())
    }
}

/// An element of Λ_ℕ ⊗ Λ_ℕ in the monomial ⊗ monomial basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorM {
    coeffs: BTreeMap<(Partition, Partition), u64>,
}

impl TensorM {
    pub fn zero() -> Self {
        TensorM::default()
    }

    pub fn add_assign_term(&mut self, mu: Partition, nu: Partition, c: u64) {
        if c == 0 {
            return;
        }
        *self.coeffs.entry((mu, nu)).or_insert(0) += c;
    }

    pub fn coeff(&self, mu: &Partition, nu: &Partition) -> u64 {
        self.coeffs
            .get(&(mu.clone(), nu.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), u64)> {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    /// Swap the two tensor factors.
    pub fn flip(&self) -> TensorM {
        let mut out = TensorM::zero();
        for ((a, b), c) in self.coeffs.iter() {
            out.add_assign_term(b.clone(), a.clone(), *c);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

static PRODUCT_CACHE: Lazy<Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, u64>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The exact product m_λ · m_μ as a coefficient map.
///
/// The coefficient of m_ν equals the number of pairs of vectors (a, b) with
/// a + b = (ν₁, ν₂, …), where the nonzero entries of a form the multiset of
/// parts of λ and those of b the multiset of parts of μ. The pairs are
/// enumerated jointly, position by position, deduplicating placements of
/// repeated parts, so each distinct matching is counted exactly once.
pub fn mono_basis_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    // The product is symmetric; normalize the cache key.
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(hit) = PRODUCT_CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }

    // Remaining parts of each factor, grouped as (value, count), descending.
    let group = |p: &Partition| -> Vec<(u32, u32)> {
        let mut g: Vec<(u32, u32)> = Vec::new();
        for &v in p.parts() {
            match g.last_mut() {
                Some((val, cnt)) if *val == v => *cnt += 1,
                _ => g.push((v, 1)),
            }
        }
        g
    };
    let mut la = group(&key.0);
    let mut mb = group(&key.1);
    let mut sums: Vec<u32> = Vec::new();
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    fill_positions(&mut la, &mut mb, u32::MAX, &mut sums, &mut out);

    PRODUCT_CACHE.lock().unwrap().insert(key, out.clone());
    out
}

fn fill_positions(
    la: &mut Vec<(u32, u32)>,
    mb: &mut Vec<(u32, u32)>,
    bound: u32,
    sums: &mut Vec<u32>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if la.iter().all(|&(_, c)| c == 0) && mb.iter().all(|&(_, c)| c == 0) {
        *out.entry(Partition::new(sums.clone())).or_insert(0) += 1;
        return;
    }
    // Candidate contributions at the current position: a part of λ, a part
    // of μ, or one of each; skipping the position entirely is never valid
    // while parts remain (the sum sequence must stay weakly decreasing).
    let a_choices: Vec<Option<usize>> = std::iter::once(None)
        .chain((0..la.len()).filter(|&i| la[i].1 > 0).map(Some))
        .collect();
    for a_idx in a_choices {
        let a_val = a_idx.map_or(0, |i| la[i].0);
        if a_val > bound {
            continue;
        }
        if let Some(i) = a_idx {
            la[i].1 -= 1;
        }
        let b_choices: Vec<Option<usize>> = std::iter::once(None)
            .chain((0..mb.len()).filter(|&j| mb[j].1 > 0).map(Some))
            .collect();
        for b_idx in b_choices {
            let b_val = b_idx.map_or(0, |j| mb[j].0);
            let s = a_val + b_val;
            if s == 0 || s > bound {
                continue;
            }
            if let Some(j) = b_idx {
                mb[j].1 -= 1;
            }
            sums.push(s);
            fill_positions(la, mb, s, sums, out);
            sums.pop();
            if let Some(j) = b_idx {
                mb[j].1 += 1;
            }
        }
        if let Some(i) = a_idx {
            la[i].1 += 1;
        }
    }
}

/// Bilinear extension of the basis product to arbitrary elements of Λ_ℕ.
pub fn mono_product(f: &SymFuncM, g: &SymFuncM) -> SymFuncM {
    let mut out = SymFuncM::zero();
    for (l, cl) in f.iter() {
        for (m, cm) in g.iter() {
            for (nu, c) in mono_basis_product(l, m) {
                out.add_assign_term(nu, c * cl * cm);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Honest polynomial expansion (the oracle path)
// ---------------------------------------------------------------------------

/// All distinct monomials of m_λ in `nvars` variables, as exponent vectors.
pub fn monomials_of(lambda: &Partition, nvars: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if lambda.length() > nvars {
        return out;
    }
    let mut expt = vec![0u32; nvars];
    place_parts(lambda.parts(), 0, &mut expt, &mut out);
    out
}

fn place_parts(parts: &[u32], from: usize, expt: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts.is_empty() {
        out.push(expt.clone());
        return;
    }
    // Place all copies of the current (largest) value at once, choosing an
    // increasing sequence of free positions so equal parts are not
    // distinguished.
    let val = parts[0];
    let run = parts.iter().take_while(|&&p| p == val).count();
    let rest = &parts[run..];
    let free: Vec<usize> = (0..expt.len()).filter(|&i| expt[i] == 0).collect();
    if free.len() < run {
        return;
    }
    let mut choice = Vec::with_capacity(run);
    choose_positions(&free, run, 0, &mut choice, &mut |positions: &[usize]| {
        for &p in positions {
            expt[p] = val;
        }
        place_parts(rest, from, expt, out);
        for &p in positions {
            expt[p] = 0;
        }
    });
}

fn choose_positions(
    free: &[usize],
    need: usize,
    start: usize,
    acc: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if acc.len() == need {
        visit(acc);
        return;
    }
    for i in start..free.len() {
        if free.len() - i < need - acc.len() {
            break;
        }
        acc.push(free[i]);
        choose_positions(free, need, i + 1, acc, visit);
        acc.pop();
    }
}

/// Expand f as an honest polynomial in `nvars` variables.
fn expand_polynomial(f: &SymFuncM, nvars: usize) -> HashMap<Vec<u32>, u64> {
    let mut poly: HashMap<Vec<u32>, u64> = HashMap::new();
    for (l, c) in f.iter() {
        for mono in monomials_of(l, nvars) {
            *poly.entry(mono).or_insert(0) += c;
        }
    }
    poly
}

/// Collect a symmetric polynomial back into the monomial basis, reading the
/// coefficient of m_ν off the sorted ("leading") exponent vector for ν.
fn collect_symmetric(poly: &HashMap<Vec<u32>, u64>) -> SymFuncM {
    let mut out = SymFuncM::zero();
    for (expt, &c) in poly {
        if expt.windows(2).all(|w| w[0] >= w[1]) {
            out.add_assign_term(Partition::new(expt.clone()), c);
        }
    }
    out
}

/// Independent verification oracle for `mono_product`: expand both factors
/// as polynomials in `nvars` variables, multiply, and re-collect.
pub fn mono_product_oracle(f: &SymFuncM, g: &SymFuncM, nvars: usize) -> Result<SymFuncM> {
    let need = (f.degree().unwrap_or(0) + g.degree().unwrap_or(0)) as usize;
    if nvars < need {
        return Err(WittError::InvalidInput(format!(
            "oracle needs at least {need} variables for faithful collection, got {nvars}"
        )));
    }
    let pf = expand_polynomial(f, nvars);
    let pg = expand_polynomial(g, nvars);
    let mut prod: HashMap<Vec<u32>, u64> = HashMap::new();
    for (ef, cf) in &pf {
        for (eg, cg) in &pg {
            let sum: Vec<u32> = ef.iter().zip(eg).map(|(a, b)| a + b).collect();
            *prod.entry(sum).or_insert(0) += cf * cg;
        }
    }
    Ok(collect_symmetric(&prod))
}

// ---------------------------------------------------------------------------
// Coproducts
// ---------------------------------------------------------------------------

/// Δ⁺(m_λ) = Σ m_μ ⊗ m_ν over all ways to split the multiset of parts of λ
/// into two partitions μ ⊎ ν = λ; every split has coefficient 1.
pub fn coproduct_add_m(lambda: &Partition) -> TensorM {
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &v in lambda.parts() {
        match groups.last_mut() {
            Some((val, cnt)) if *val == v => *cnt += 1,
            _ => groups.push((v, 1)),
        }
    }
    let mut out = TensorM::zero();
    let mut left: Vec<u32> = Vec::new();
    split_groups(&groups, 0, &mut left, lambda, &mut out);
    out
}

fn split_groups(
    groups: &[(u32, u32)],
    idx: usize,
    left: &mut Vec<u32>,
    lambda: &Partition,
    out: &mut TensorM,
) {
    if idx == groups.len() {
        let mu = Partition::new(left.clone());
        let mut right: Vec<u32> = Vec::new();
        let mut it = left.iter().copied().peekable();
        for &v in lambda.parts() {
            if it.peek() == Some(&v) {
                it.next();
            } else {
                right.push(v);
            }
        }
        out.add_assign_term(mu, Partition::new(right), 1);
        return;
    }
    let (val, cnt) = groups[idx];
    for take in 0..=cnt {
        for _ in 0..take {
            left.push(val);
        }
        split_groups(groups, idx + 1, left, lambda, out);
        for _ in 0..take {
            left.pop();
        }
    }
}

/// Two-alphabet oracle for Δ⁺: expand m_λ in the disjoint union of two
/// alphabets of `nvars` variables each and collect both sides.
pub fn coproduct_add_oracle(lambda: &Partition, nvars: usize) -> Result<TensorM> {
    if nvars < lambda.length() {
        return Err(WittError::InvalidInput(format!(
            "two-alphabet oracle needs at least {} variables per alphabet",
            lambda.length()
        )));
    }
    let mut out = TensorM::zero();
    for mono in monomials_of(lambda, 2 * nvars) {
        let (xs, ys) = mono.split_at(nvars);
        let sorted_desc = |v: &[u32]| v.windows(2).all(|w| w[0] >= w[1]);
        if sorted_desc(xs) && sorted_desc(ys) {
            out.add_assign_term(
                Partition::new(xs.to_vec()),
                Partition::new(ys.to_vec()),
                1,
            );
        }
    }
    Ok(out)
}

/// Δ×(m_λ): substitute the doubly indexed alphabet x_i·y_j and collect.
///
/// The coefficient of m_μ ⊗ m_ν is the number of matrices whose nonzero
/// entries form the multiset of parts of λ, with row-sum vector exactly
/// (μ₁, μ₂, …) and column-sum vector exactly (ν₁, ν₂, …) — i.e. the
/// monomials of the product-alphabet expansion whose exponent matrix has
/// both margins sorted.
pub fn coproduct_mul_m(lambda: &Partition, nvars: usize) -> Result<TensorM> {
    if (nvars as u32) < lambda.size() {
        return Err(WittError::InvalidInput(format!(
            "product-alphabet expansion needs at least {} variables per alphabet",
            lambda.size()
        )));
    }
    let n = lambda.size();
    let mut out = TensorM::zero();
    for mu in partitions_of(n) {
        for nu in partitions_of(n) {
            let c = count_margin_matrices(lambda, &mu, &nu, false);
            out.add_assign_term(mu.clone(), nu.clone(), c);
        }
    }
    Ok(out)
}

/// True iff m_μ ⊗ m_ν appears in Δ×(m_λ); decided without full counting.
pub fn coproduct_mul_supports(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    count_margin_matrices(lambda, mu, nu, true) > 0
}

/// Count matrices with nonzero-entry multiset λ, row sums μ and column sums
/// ν. With `existence_only`, stop after the first matrix found.
fn count_margin_matrices(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    existence_only: bool,
) -> u64 {
    if mu.size() != lambda.size() || nu.size() != lambda.size() {
        return 0;
    }
    let rows = mu.length();
    let cols = nu.length();
    if rows * cols < lambda.length() {
        return 0;
    }
    let mut remaining: Vec<(u32, u32)> = Vec::new();
    for &v in lambda.parts() {
        match remaining.last_mut() {
            Some((val, cnt)) if *val == v => *cnt += 1,
            _ => remaining.push((v, 1)),
        }
    }
    let mut col_left: Vec<u32> = (0..cols).map(|j| nu[j]).collect();
    let mut count = 0u64;
    fill_matrix(
        mu,
        &mut remaining,
        &mut col_left,
        0,
        0,
        mu[0],
        rows,
        cols,
        existence_only,
        &mut count,
    );
    count
}

#[allow(clippy::too_many_arguments)]
fn fill_matrix(
    mu: &Partition,
    remaining: &mut Vec<(u32, u32)>,
    col_left: &mut Vec<u32>,
    r: usize,
    c: usize,
    row_left: u32,
    rows: usize,
    cols: usize,
    existence_only: bool,
    count: &mut u64,
) {
    if existence_only && *count > 0 {
        return;
    }
    if r == rows {
        if remaining.iter().all(|&(_, k)| k == 0) && col_left.iter().all(|&x| x == 0) {
            *count += 1;
        }
        return;
    }
    if c == cols {
        if row_left == 0 {
            let next_left = if r + 1 < rows { mu[r + 1] } else { 0 };
            fill_matrix(
                mu,
                remaining,
                col_left,
                r + 1,
                0,
                next_left,
                rows,
                cols,
                existence_only,
                count,
            );
        }
        return;
    }
    // Entry (r, c): zero, or any distinct remaining part fitting both margins.
    fill_matrix(
        mu,
        remaining,
        col_left,
        r,
        c + 1,
        row_left,
        rows,
        cols,
        existence_only,
        count,
    );
    for i in 0..remaining.len() {
        let (val, cnt) = remaining[i];
        if cnt == 0 || val > row_left || val > col_left[c] {
            continue;
        }
        remaining[i].1 -= 1;
        col_left[c] -= val;
        fill_matrix(
            mu,
            remaining,
            col_left,
            r,
            c + 1,
            row_left - val,
            rows,
            cols,
            existence_only,
            count,
        );
        col_left[c] += val;
        remaining[i].1 += 1;
    }
}

// ---------------------------------------------------------------------------
// Plethysm
// ---------------------------------------------------------------------------

/// Windowed plethysm outer ∘ inner, truncated to total degree ≤ `degcap`.
///
/// The monomials of `inner` in `nvars` variables (with multiplicity) become
/// a new alphabet into which `outer` is substituted. Collection is faithful
/// for all degrees ≤ degcap provided nvars ≥ degcap, which is enforced.
pub fn plethysm_expand(
    outer: &SymFuncM,
    inner: &SymFuncM,
    nvars: usize,
    degcap: u32,
) -> Result<SymFuncM> {
    if inner.is_zero() {
        return Err(WittError::InvalidInput(
            "plethysm with zero inner function is not defined".into(),
        ));
    }
    if (nvars as u32) < degcap {
        return Err(WittError::Indeterminate(format!(
            "plethysm window too small: need nvars ≥ degcap = {degcap}, got {nvars}"
        )));
    }
    // The alphabet: each monomial of inner, repeated per its coefficient.
    let mut alphabet: Vec<Vec<u32>> = Vec::new();
    for (l, c) in inner.iter() {
        for mono in monomials_of(l, nvars) {
            for _ in 0..c {
                alphabet.push(mono.clone());
            }
        }
    }
    let degrees: Vec<u32> = alphabet.iter().map(|m| m.iter().sum()).collect();
    let min_deg: u32 = degrees.iter().copied().min().unwrap_or(0);
    let mut poly: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut used = vec![false; alphabet.len()];
    for (l, c) in outer.iter() {
        if l.size() * min_deg > degcap {
            continue;
        }
        // Group the parts of λ as (value, count); each group occupies a set
        // of distinct alphabet slots, chosen in increasing order so that
        // placements of repeated parts are not double-counted.
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &v in l.parts() {
            match groups.last_mut() {
                Some((val, cnt)) if *val == v => *cnt += 1,
                _ => groups.push((v, 1)),
            }
        }
        let mut expt = vec![0u32; nvars];
        substitute_groups(
            &groups,
            0,
            0,
            0,
            &alphabet,
            &degrees,
            0,
            degcap,
            &mut used,
            &mut expt,
            &mut |e: &[u32]| {
                *poly.entry(e.to_vec()).or_insert(0) += c;
            },
        );
    }
    Ok(collect_symmetric(&poly))
}

/// Place group `gi` of equal parts onto distinct free slots. `taken` slots
/// of the current group are already placed, the next one must have index
/// ≥ `from`; slots across different groups only need to be distinct.
#[allow(clippy::too_many_arguments)]
fn substitute_groups(
    groups: &[(u32, usize)],
    gi: usize,
    taken: usize,
    from: usize,
    alphabet: &[Vec<u32>],
    degrees: &[u32],
    used_degree: u32,
    degcap: u32,
    used: &mut Vec<bool>,
    expt: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if gi == groups.len() {
        visit(expt);
        return;
    }
    let (val, cnt) = groups[gi];
    if taken == cnt {
        substitute_groups(
            groups,
            gi + 1,
            0,
            0,
            alphabet,
            degrees,
            used_degree,
            degcap,
            used,
            expt,
            visit,
        );
        return;
    }
    for slot in from..alphabet.len() {
        if used[slot] {
            continue;
        }
        let add = degrees[slot] * val;
        if used_degree + add > degcap {
            continue;
        }
        used[slot] = true;
        for (x, a) in expt.iter_mut().zip(&alphabet[slot]) {
            *x += a * val;
        }
        substitute_groups(
            groups,
            gi,
            taken + 1,
            slot + 1,
            alphabet,
            degrees,
            used_degree + add,
            degcap,
            used,
            expt,
            visit,
        );
        for (x, a) in expt.iter_mut().zip(&alphabet[slot]) {
            *x -= a * val;
        }
        used[slot] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::PartitionWindow;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn m(parts: &[u32]) -> SymFuncM {
        SymFuncM::monomial(p(parts))
    }

    #[test]
    fn product_small_examples() {
        let prod = mono_product(&m(&[1]), &m(&[1]));
        assert_eq!(prod.coeff(&p(&[2])), 1);
        assert_eq!(prod.coeff(&p(&[1, 1])), 2);
        assert_eq!(prod.iter().count(), 2);

        let prod = mono_product(&m(&[2]), &m(&[1]));
        assert_eq!(prod.coeff(&p(&[3])), 1);
        assert_eq!(prod.coeff(&p(&[2, 1])), 1);
        assert_eq!(prod.iter().count(), 2);

        let f = m(&[3, 1]).add(&m(&[2]).scale(4));
        assert_eq!(mono_product(&SymFuncM::one(), &f), f);
    }

    #[test]
    fn product_matches_oracle_on_window() {
        let window = PartitionWindow::by_size(5).enumerate();
        for lam in &window {
            for mu in &window {
                if lam.size() + mu.size() > 5 {
                    continue;
                }
                let fast = mono_product(&SymFuncM::monomial(lam.clone()), &SymFuncM::monomial(mu.clone()));
                let slow = mono_product_oracle(
                    &SymFuncM::monomial(lam.clone()),
                    &SymFuncM::monomial(mu.clone()),
                    (lam.size() + mu.size()) as usize,
                )
                .unwrap();
                assert_eq!(fast, slow, "product mismatch at {lam} * {mu}");
            }
        }
    }

    #[test]
    fn oracle_rejects_insufficient_variables() {
        assert!(mono_product_oracle(&m(&[2, 1]), &m(&[1]), 3).is_err());
        assert!(mono_product_oracle(&m(&[2, 1]), &m(&[1]), 4).is_ok());
    }

    #[test]
    fn constituents_contain_both_factors() {
        let window = PartitionWindow::by_size(4).enumerate();
        for lam in &window {
            for mu in &window {
                let prod = mono_basis_product(lam, mu);
                for nu in prod.keys() {
                    assert!(nu.contains(lam) && nu.contains(mu));
                }
                if !lam.is_zero() && !mu.is_zero() {
                    assert!(prod.contains_key(&lam.part_sum(mu)));
                    assert!(prod.contains_key(&lam.interleave(mu)));
                    assert!(prod.len() >= 2, "expected ≥2 constituents for {lam} * {mu}");
                }
            }
        }
    }

    #[test]
    fn coproduct_add_examples() {
        let t = coproduct_add_m(&p(&[4]));
        assert_eq!(t.coeff(&p(&[4]), &Partition::zero()), 1);
        assert_eq!(t.coeff(&Partition::zero(), &p(&[4])), 1);
        assert_eq!(t.iter().count(), 2);

        let t = coproduct_add_m(&p(&[2, 1]));
        assert_eq!(t.coeff(&p(&[2, 1]), &Partition::zero()), 1);
        assert_eq!(t.coeff(&p(&[2]), &p(&[1])), 1);
        assert_eq!(t.coeff(&p(&[1]), &p(&[2])), 1);
        assert_eq!(t.coeff(&Partition::zero(), &p(&[2, 1])), 1);
        assert_eq!(t.iter().count(), 4);

        let t = coproduct_add_m(&Partition::zero());
        assert_eq!(t.coeff(&Partition::zero(), &Partition::zero()), 1);
        assert_eq!(t.iter().count(), 1);
    }

    #[test]
    fn coproduct_add_matches_two_alphabet_oracle() {
        for lam in PartitionWindow::by_size(6).enumerate() {
            let combinatorial = coproduct_add_m(&lam);
            let oracle = coproduct_add_oracle(&lam, lam.length().max(1)).unwrap();
            assert_eq!(combinatorial, oracle, "Δ⁺ mismatch at {lam}");
        }
    }

    #[test]
    fn coproduct_add_cocommutative_coassociative_counit() {
        for lam in PartitionWindow::by_size(6).enumerate() {
            let t = coproduct_add_m(&lam);
            assert_eq!(t, t.flip(), "cocommutativity fails at {lam}");

            // (ε⁺ ⊗ id) ∘ Δ⁺ = id.
            let mut restored = SymFuncM::zero();
            for ((a, b), c) in t.iter() {
                if a.is_zero() {
                    restored.add_assign_term(b.clone(), c);
                }
            }
            assert_eq!(restored, SymFuncM::monomial(lam.clone()));

            // Coassociativity: split counts must agree when re-splitting
            // either side. Compare the multiset of ordered triples.
            let mut left: BTreeMap<(Partition, Partition, Partition), u64> = BTreeMap::new();
            let mut right = left.clone();
            for ((a, b), c) in t.iter() {
                for ((a1, a2), c2) in coproduct_add_m(a).iter() {
                    *left.entry((a1.clone(), a2.clone(), b.clone())).or_insert(0) += c * c2;
                }
                for ((b1, b2), c2) in coproduct_add_m(b).iter() {
                    *right.entry((a.clone(), b1.clone(), b2.clone())).or_insert(0) += c * c2;
                }
            }
            assert_eq!(left, right, "coassociativity fails at {lam}");
        }
    }

    #[test]
    fn coproduct_mul_examples() {
        let t = coproduct_mul_m(&p(&[3]), 3).unwrap();
        assert_eq!(t.coeff(&p(&[3]), &p(&[3])), 1);
        assert_eq!(t.iter().count(), 1);

        let t = coproduct_mul_m(&p(&[1, 1]), 2).unwrap();
        assert_eq!(t.coeff(&p(&[1, 1]), &p(&[2])), 1);
        assert_eq!(t.coeff(&p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(t.coeff(&p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(t.iter().count(), 3);

        let t = coproduct_mul_m(&Partition::zero(), 1).unwrap();
        assert_eq!(t.coeff(&Partition::zero(), &Partition::zero()), 1);
    }

    #[test]
    fn coproduct_mul_support_agrees_with_full_tensor() {
        for lam in PartitionWindow::by_size(5).enumerate() {
            let t = coproduct_mul_m(&lam, lam.size().max(1) as usize).unwrap();
            for mu in partitions_of(lam.size()) {
                for nu in partitions_of(lam.size()) {
                    assert_eq!(
                        t.coeff(&mu, &nu) > 0,
                        coproduct_mul_supports(&lam, &mu, &nu),
                        "support mismatch at Δ×({lam}) term {mu} ⊗ {nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn coproduct_mul_grouplike_on_powersums() {
        // Δ×(ψ_n) = ψ_n ⊗ ψ_n.
        for n in 1..=6u32 {
            let t = coproduct_mul_m(&Partition::rect(n, 1), n as usize).unwrap();
            assert_eq!(t.coeff(&Partition::rect(n, 1), &Partition::rect(n, 1)), 1);
            assert_eq!(t.iter().count(), 1);
        }
    }

    #[test]
    fn plethysm_power_sum_scaling() {
        // ψ_r ∘ m_λ = m_{rλ}.
        for lam in PartitionWindow::by_size(4).enumerate() {
            if lam.is_zero() {
                continue;
            }
            for r in 1..=3u32 {
                let cap = lam.size() * r;
                let result = plethysm_expand(
                    &SymFuncM::psi(r).unwrap(),
                    &SymFuncM::monomial(lam.clone()),
                    cap as usize,
                    cap,
                )
                .unwrap();
                assert_eq!(
                    result,
                    SymFuncM::monomial(lam.scale(r).unwrap()),
                    "ψ_{r} ∘ m_{lam}"
                );
            }
        }
    }

    #[test]
    fn plethysm_psi_composition_and_unit() {
        let psi6 = plethysm_expand(&SymFuncM::psi(2).unwrap(), &SymFuncM::psi(3).unwrap(), 6, 6)
            .unwrap();
        assert_eq!(psi6, SymFuncM::psi(6).unwrap());

        let unit = plethysm_expand(&SymFuncM::one(), &m(&[2, 1]), 3, 3).unwrap();
        assert_eq!(unit, SymFuncM::one());

        assert!(plethysm_expand(&SymFuncM::one(), &SymFuncM::zero(), 3, 3).is_err());
        assert!(plethysm_expand(&SymFuncM::psi(2).unwrap(), &m(&[1]), 1, 2).is_err());
    }

    #[test]
    fn plethysm_matches_product_for_e2() {
        // e₂ ∘ f is the degree-2|f| part of (f² − ψ₂∘f)/2; check against an
        // independent expansion for f = m_(2).
        let f = m(&[2]);
        let e2f = plethysm_expand(&SymFuncM::e(2), &f, 4, 4).unwrap();
        // e₂ of the alphabet {x_i²} is Σ_{i<j} x_i²x_j² = m_(2,2).
        assert_eq!(e2f, m(&[2, 2]));
    }

    #[test]
    fn e_and_psi_definitions() {
        assert_eq!(SymFuncM::e(3), m(&[1, 1, 1]));
        assert_eq!(SymFuncM::e(0), SymFuncM::one());
        assert_eq!(SymFuncM::psi(4).unwrap(), m(&[4]));
        assert!(SymFuncM::psi(0).is_err());
    }

    #[test]
    fn primeids_interleaved_constituent_appears() {
        // The mixed sort of (λ₁+μ₁, …, λ_x+μ_x, λ_{x+1}, μ_{x+1}, …) is a
        // constituent of m_λ m_μ for every x ≥ 1.
        let window = PartitionWindow::by_size(4).enumerate();
        for lam in &window {
            for mu in &window {
                if lam.is_zero() || mu.is_zero() {
                    continue;
                }
                let prod = mono_basis_product(lam, mu);
                for x in 1..=(lam.length().max(mu.length())) {
                    let mut parts: Vec<u32> = (0..x).map(|i| lam[i] + mu[i]).collect();
                    parts.extend((x..lam.length()).map(|i| lam[i]));
                    parts.extend((x..mu.length()).map(|i| mu[i]));
                    let mixed = Partition::from_unsorted(parts);
                    assert!(
                        prod.contains_key(&mixed),
                        "mixed constituent {mixed} missing from {lam} * {mu} at x={x}"
                    );
                }
            }
        }
    }
}
