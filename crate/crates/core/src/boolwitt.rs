//! Big and Schur Witt vectors of the Boolean semiring.
//!
//! A Witt vector over 𝔹 = {0,1} (with 1+1 = 1) is a semiring map from the
//! symmetric functions to 𝔹, so it is determined by its partition kernel.
//! The big Witt vectors are parametrized by ℕ² ∪ {∞}: the finite point
//! (x, y) is the map sending m_λ to 0 exactly when λ_{x+1} ≥ y+1, i.e. its
//! kernel is the rectangle ideal I_(x,y); ∞ sends every m_λ to 1. The Schur
//! Witt vectors have the same carrier but a different arithmetic, that of
//! ℕ[η]/(η² = 1) adjoined with an absorbing ∞.
//!
//! Every arithmetic law implemented here can be re-derived from first
//! principles: addition and multiplication of Witt vectors are induced by
//! the coproducts Δ⁺ and Δ× on symmetric functions, so
//! (a·b)(m_λ) = (a ⊗ b)(Δ×(m_λ)) and likewise for +. The `law_check_*`
//! functions perform that computation on probe partitions and reconstruct
//! the answer from the observed kernel, reporting indeterminacy rather than
//! guessing when the probes cannot pin the answer down.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, WittError};
use crate::monomial::{coproduct_add_m, coproduct_mul_supports, plethysm_expand, SymFuncM};
use crate::partitions::{partitions_of, Partition, PartitionWindow};

/// A big Witt vector over 𝔹.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BoolWitt {
    Finite { x: u32, y: u32 },
    Infinity,
}

/// A Schur Witt vector over 𝔹: x + y·η in ℕ[η]/(η² = 1), or ∞.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SchurBoolWitt {
    Finite { x: u32, y: u32 },
    Infinity,
}

impl BoolWitt {
    pub fn finite(x: u32, y: u32) -> Self {
        BoolWitt::Finite { x, y }
    }

    pub fn zero() -> Self {
        BoolWitt::finite(0, 0)
    }

    pub fn one() -> Self {
        BoolWitt::finite(1, 0)
    }

    /// The image of n ∈ ℕ under the unique semiring map ℕ → W(𝔹).
    pub fn from_nat(n: u32) -> Self {
        BoolWitt::finite(n, 0)
    }

    /// Evaluate the Witt vector at the basis element m_λ.
    pub fn eval_m(&self, lambda: &Partition) -> bool {
        match *self {
            BoolWitt::Infinity => true,
            BoolWitt::Finite { x, y } => lambda[x as usize] < y + 1,
        }
    }

    /// Evaluate at an ℕ-combination of monomial basis elements; positive
    /// coefficients become 1 in 𝔹, and addition is "or".
    pub fn eval_sym(&self, f: &SymFuncM) -> bool {
        f.support().any(|nu| self.eval_m(nu))
    }
}

impl SchurBoolWitt {
    pub fn finite(x: u32, y: u32) -> Self {
        SchurBoolWitt::Finite { x, y }
    }

    pub fn zero() -> Self {
        SchurBoolWitt::finite(0, 0)
    }

    pub fn one() -> Self {
        SchurBoolWitt::finite(1, 0)
    }

    /// Evaluate the Schur Witt vector at s_λ. The kernel of x + y·η is the
    /// same rectangle ideal I_(x,y) as on the monomial side.
    pub fn eval_s(&self, lambda: &Partition) -> bool {
        match *self {
            SchurBoolWitt::Infinity => true,
            SchurBoolWitt::Finite { x, y } => lambda[x as usize] < y + 1,
        }
    }
}

/// η, the anti-Teichmüller lift of 1: sends s_{1^r} to 1 and every other
/// Schur basis element to 0.
pub fn anti_teichmuller_bool() -> SchurBoolWitt {
    SchurBoolWitt::finite(0, 1)
}

// ---------------------------------------------------------------------------
// Arithmetic on W(𝔹)
// ---------------------------------------------------------------------------

/// Addition: (x,y) + (x′,y′) = (x+x′, max(y,y′)); ∞ absorbs.
pub fn add_w(a: BoolWitt, b: BoolWitt) -> BoolWitt {
    match (a, b) {
        (BoolWitt::Infinity, _) | (_, BoolWitt::Infinity) => BoolWitt::Infinity,
        (BoolWitt::Finite { x, y }, BoolWitt::Finite { x: x2, y: y2 }) => {
            BoolWitt::finite(x + x2, y.max(y2))
        }
    }
}

/// Multiplication, completed by distributivity over (x,y) = (x,0) + (0,y)
/// from the generating laws (x,0)(x′,0) = (xx′,0), (0,y)(0,y′) = (0,min),
/// and n·(0,y) = (0,y) for n ≥ 1:
/// (x,y)(x′,y′) = (xx′, max([x≥1]·y′, [x′≥1]·y, min(y,y′))).
/// ∞ absorbs against everything except (0,y): ∞·(0,y) = (0,y); in
/// particular ∞·0 = 0.
pub fn mul_w(a: BoolWitt, b: BoolWitt) -> BoolWitt {
    match (a, b) {
        (BoolWitt::Infinity, BoolWitt::Infinity) => BoolWitt::Infinity,
        (BoolWitt::Infinity, BoolWitt::Finite { x, y })
        | (BoolWitt::Finite { x, y }, BoolWitt::Infinity) => {
            if x >= 1 {
                BoolWitt::Infinity
            } else {
                BoolWitt::finite(0, y)
            }
        }
        (BoolWitt::Finite { x, y }, BoolWitt::Finite { x: x2, y: y2 }) => {
            let mut t = y.min(y2);
            if x >= 1 {
                t = t.max(y2);
            }
            if x2 >= 1 {
                t = t.max(y);
            }
            BoolWitt::finite(x * x2, t)
        }
    }
}

/// The partial order: componentwise on ℕ², with ∞ on top. Coincides with
/// pointwise comparison of eval_m.
pub fn leq_w(a: BoolWitt, b: BoolWitt) -> bool {
    match (a, b) {
        (_, BoolWitt::Infinity) => true,
        (BoolWitt::Infinity, BoolWitt::Finite { .. }) => false,
        (BoolWitt::Finite { x, y }, BoolWitt::Finite { x: x2, y: y2 }) => x <= x2 && y <= y2,
    }
}

// ---------------------------------------------------------------------------
// Arithmetic on W^Sch(𝔹)
// ---------------------------------------------------------------------------

/// Addition in ℕ[η]/(η²=1) ∪ {∞}: componentwise, with ∞ absorbing.
pub fn add_s(a: SchurBoolWitt, b: SchurBoolWitt) -> SchurBoolWitt {
    match (a, b) {
        (SchurBoolWitt::Infinity, _) | (_, SchurBoolWitt::Infinity) => SchurBoolWitt::Infinity,
        (SchurBoolWitt::Finite { x, y }, SchurBoolWitt::Finite { x: x2, y: y2 }) => {
            SchurBoolWitt::finite(x + x2, y + y2)
        }
    }
}

/// Multiplication: (x + yη)(x′ + y′η) = (xx′ + yy′) + (xy′ + x′y)η, since
/// η² = 1; ∞ absorbs against every nonzero element, while ∞·0 = 0 (the
/// semiring axiom z·0 = 0 takes precedence over the absorbing law, which
/// holds only for nonzero factors).
pub fn mul_s(a: SchurBoolWitt, b: SchurBoolWitt) -> SchurBoolWitt {
    let zero = SchurBoolWitt::zero();
    match (a, b) {
        (SchurBoolWitt::Infinity, z) | (z, SchurBoolWitt::Infinity) => {
            if z == zero {
                zero
            } else {
                SchurBoolWitt::Infinity
            }
        }
        (SchurBoolWitt::Finite { x, y }, SchurBoolWitt::Finite { x: x2, y: y2 }) => {
            SchurBoolWitt::finite(x * x2 + y * y2, x * y2 + x2 * y)
        }
    }
}

/// The natural comparison map W(𝔹) → W^Sch(𝔹): ℕ maps to ℕ, everything
/// else collapses to ∞.
pub fn to_schur_witt(w: BoolWitt) -> SchurBoolWitt {
    match w {
        BoolWitt::Finite { x, y: 0 } => SchurBoolWitt::finite(x, 0),
        _ => SchurBoolWitt::Infinity,
    }
}

// ---------------------------------------------------------------------------
// Ghost map and Dorroh extension
// ---------------------------------------------------------------------------

/// A vector in the image of the ghost map 𝔹^∞: either constant 1, or 1 up
/// to a threshold and then 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GhostVector {
    AllOnes,
    /// 1 at positions r = 1..=threshold, 0 afterwards; threshold 0 is the
    /// zero vector.
    Threshold(u32),
}

impl GhostVector {
    /// The r-th ghost component, r ≥ 1.
    pub fn bit(&self, r: u32) -> bool {
        match *self {
            GhostVector::AllOnes => true,
            GhostVector::Threshold(t) => r <= t,
        }
    }
}

/// The ghost map: r ↦ eval at ψ_r = m_(r).
pub fn ghost(w: BoolWitt) -> GhostVector {
    match w {
        BoolWitt::Finite { x: 0, y } => GhostVector::Threshold(y),
        _ => GhostVector::AllOnes,
    }
}

/// An element of the Dorroh extension D(f) of ℕ by ℕ′ = ℕ ∪ {∞}, where ℕ′
/// has max as addition and min as multiplication, and f: ℕ → ℕ′ sends 0 to
/// 0 and everything else to ∞. `y = None` encodes ∞.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DorrohElement {
    pub x: u32,
    pub y: Option<u32>,
}

impl DorrohElement {
    pub fn new(x: u32, y: Option<u32>) -> Self {
        DorrohElement { x, y }
    }
}

fn nprime_max(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.max(b)),
        _ => None,
    }
}

fn nprime_min(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) | (None, Some(a)) => Some(a),
        (None, None) => None,
    }
}

fn dorroh_f(x: u32) -> Option<u32> {
    if x == 0 {
        Some(0)
    } else {
        None
    }
}

pub fn dorroh_add(p: DorrohElement, q: DorrohElement) -> DorrohElement {
    DorrohElement::new(p.x + q.x, nprime_max(p.y, q.y))
}

/// (x,y)(x′,y′) = (xx′, f(x)y′ + y f(x′) + yy′), with + = max and · = min
/// in ℕ′.
pub fn dorroh_mul(p: DorrohElement, q: DorrohElement) -> DorrohElement {
    let twist = nprime_max(
        nprime_max(
            nprime_min(dorroh_f(p.x), q.y),
            nprime_min(p.y, dorroh_f(q.x)),
        ),
        nprime_min(p.y, q.y),
    );
    DorrohElement::new(p.x * q.x, twist)
}

/// The projection D(f) ↠ W(𝔹), identifying every (x, ∞) with ∞.
pub fn dorroh_project(p: DorrohElement) -> BoolWitt {
    match p.y {
        Some(y) => BoolWitt::finite(p.x, y),
        None => BoolWitt::Infinity,
    }
}

// ---------------------------------------------------------------------------
// First-principles law checking via coproduct pairing
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WittOp {
    Add,
    Mul,
}

/// (a + b)(m_λ), computed from scratch: pair (a ⊗ b) against Δ⁺(m_λ). In 𝔹
/// the sum over splits becomes an existence statement.
pub fn pairing_add_bit(lambda: &Partition, a: BoolWitt, b: BoolWitt) -> bool {
    coproduct_add_m(lambda)
        .iter()
        .any(|((mu, nu), _)| a.eval_m(mu) && b.eval_m(nu))
}

/// (a · b)(m_λ) by brute force: pair (a ⊗ b) against Δ×(m_λ), deciding
/// support of each m_μ ⊗ m_ν by margin-matrix existence. Exponential in the
/// size of λ; used as ground truth to validate `pairing_mul_bit`.
pub fn pairing_mul_bit_bruteforce(lambda: &Partition, a: BoolWitt, b: BoolWitt) -> bool {
    if lambda.is_zero() {
        return a.eval_m(lambda) && b.eval_m(lambda);
    }
    let parts = partitions_of(lambda.size());
    for mu in &parts {
        if !a.eval_m(mu) {
            continue;
        }
        for nu in &parts {
            if !b.eval_m(nu) {
                continue;
            }
            if coproduct_mul_supports(lambda, mu, nu) {
                return true;
            }
        }
    }
    false
}

/// (a · b)(m_λ) in closed combinatorial form.
///
/// The support of Δ×(m_λ) consists of the pairs (row sums, column sums) of
/// matrices whose nonzero entries are exactly the parts of λ, one part per
/// cell. The pairing asks whether the parts can be arranged so that at most
/// x_a rows sum above y_a and at most x_b columns sum above y_b (rows and
/// columns are unlimited in number, so parts never need to share a line
/// unless forced). That reduces to three conditions: a part larger than y_a
/// must sit in one of the x_a unrestricted rows, a part larger than y_b in
/// one of the x_b unrestricted columns, and the parts needing both can
/// occupy at most x_a·x_b cells. ∞ lifts the corresponding restriction
/// entirely. Validated exhaustively against `pairing_mul_bit_bruteforce`.
pub fn pairing_mul_bit(lambda: &Partition, a: BoolWitt, b: BoolWitt) -> bool {
    // Extended coordinates: None means ∞ (no restriction on that side).
    let row = match a {
        BoolWitt::Infinity => None,
        BoolWitt::Finite { x, y } => Some((x, y)),
    };
    let col = match b {
        BoolWitt::Infinity => None,
        BoolWitt::Finite { x, y } => Some((x, y)),
    };
    if let Some((x, y)) = row {
        if x == 0 && lambda.max_part() > y {
            return false;
        }
    }
    if let Some((x, y)) = col {
        if x == 0 && lambda.max_part() > y {
            return false;
        }
    }
    match (row, col) {
        (Some((xa, ya)), Some((xb, yb))) => {
            let t = ya.max(yb);
            let needing_both = lambda.parts().iter().filter(|&&p| p > t).count();
            needing_both <= (xa as usize).saturating_mul(xb as usize)
        }
        // One side unrestricted: parts needing a big line on the other side
        // can each take their own, so only the x = 0 cases above can fail.
        _ => true,
    }
}

/// Reconstruct a Witt vector from a membership oracle on its kernel.
///
/// `bound = (X, Y)` is a promise from the caller: if the answer is finite,
/// its coordinates are at most (X, Y). The oracle is probed on every
/// rectangle (y+1)^(x+1) with x ≤ X, y ≤ Y; a finite answer (x, y) shows
/// the zero quadrant {(x', y') : x' ≥ x, y' ≥ y}, and an empty zero set
/// proves the answer is ∞ (given the promise). The zero set must be an
/// exact quadrant and the oracle must agree with the reconstructed vector
/// on every partition of `window`; any discrepancy is a property violation.
fn reconstruct_from_kernel(
    bit: &mut dyn FnMut(&Partition) -> bool,
    bound: (u32, u32),
    window: &PartitionWindow,
) -> Result<BoolWitt> {
    let (bx, by) = bound;
    let mut zeros = Vec::new();
    let mut grid = vec![vec![false; by as usize + 1]; bx as usize + 1];
    for x in 0..=bx {
        for y in 0..=by {
            let probe = Partition::rect(y + 1, x + 1);
            if !bit(&probe) {
                grid[x as usize][y as usize] = true;
                zeros.push((x, y));
            }
        }
    }
    let result = match zeros.iter().copied().min() {
        None => BoolWitt::Infinity,
        Some(_) => {
            let x0 = zeros.iter().map(|&(x, _)| x).min().unwrap();
            let y0 = zeros.iter().map(|&(_, y)| y).min().unwrap();
            for x in 0..=bx {
                for y in 0..=by {
                    if grid[x as usize][y as usize] != (x >= x0 && y >= y0) {
                        return Err(WittError::PropertyViolation(format!(
                            "kernel probe grid is not a quadrant: corner ({x0},{y0}) \
                             but probe ({x},{y}) reads {}",
                            grid[x as usize][y as usize]
                        )));
                    }
                }
            }
            BoolWitt::finite(x0, y0)
        }
    };
    for lam in window.enumerate() {
        if bit(&lam) != result.eval_m(&lam) {
            return Err(WittError::PropertyViolation(format!(
                "reconstructed {result} disagrees with the pairing at {lam}"
            )));
        }
    }
    Ok(result)
}

/// Coordinate promise for `law_check_via_coproduct`: an a-priori bound on
/// the result of a ∘ b, derived from the inputs without using the law
/// tables as such (only the monotone structure: finite inputs cannot
/// produce a finite result with larger coordinates than these).
pub fn result_coord_bound(a: BoolWitt, b: BoolWitt, op: WittOp) -> (u32, u32) {
    let coords = |w: BoolWitt| match w {
        BoolWitt::Finite { x, y } => (x, y),
        BoolWitt::Infinity => (0, 0),
    };
    let (xa, ya) = coords(a);
    let (xb, yb) = coords(b);
    match op {
        WittOp::Add => (xa + xb, ya + yb),
        WittOp::Mul => (xa * xb, ya + yb),
    }
}

/// Compute a ∘ b from first principles: pair a ⊗ b against the relevant
/// coproduct on probe partitions and reconstruct the answer from the
/// observed kernel. Must agree with `add_w` / `mul_w`.
pub fn law_check_via_coproduct(
    a: BoolWitt,
    b: BoolWitt,
    op: WittOp,
    window: &PartitionWindow,
) -> Result<BoolWitt> {
    let bound = result_coord_bound(a, b, op);
    match op {
        WittOp::Add => {
            reconstruct_from_kernel(&mut |lam| pairing_add_bit(lam, a, b), bound, window)
        }
        WittOp::Mul => {
            reconstruct_from_kernel(&mut |lam| pairing_mul_bit(lam, a, b), bound, window)
        }
    }
}

/// (a + b)(s_λ) from scratch on the Schur side: existence of a pair (μ, ν)
/// with c^λ_{μν} > 0, a(s_μ) = 1 and b(s_ν) = 1. The search enumerates
/// Littlewood–Richardson fillings of λ/μ directly, pruning as soon as the
/// running type already lies in the kernel of b (type multiplicities only
/// grow, and the kernel condition ν_{x+1} ≥ y+1 is monotone in them).
pub fn pairing_add_bit_s(lambda: &Partition, a: SchurBoolWitt, b: SchurBoolWitt) -> bool {
    // μ must avoid the kernel of a; enumerate sub-partitions of λ.
    let mut found = false;
    let mut mu_parts: Vec<u32> = Vec::new();
    search_mu(lambda, 0, &mut mu_parts, a, b, &mut found);
    found
}

fn search_mu(
    lambda: &Partition,
    row: usize,
    mu_parts: &mut Vec<u32>,
    a: SchurBoolWitt,
    b: SchurBoolWitt,
    found: &mut bool,
) {
    if *found {
        return;
    }
    if row == lambda.length() {
        let mut trimmed = mu_parts.clone();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        let mu = Partition::new(trimmed);
        if a.eval_s(&mu) && lr_filling_exists(lambda, &mu, b) {
            *found = true;
        }
        return;
    }
    let hi = lambda[row].min(if row == 0 { u32::MAX } else { mu_parts[row - 1] });
    for part in (0..=hi).rev() {
        mu_parts.push(part);
        search_mu(lambda, row + 1, mu_parts, a, b, found);
        mu_parts.pop();
        if *found {
            return;
        }
    }
}

/// Is there a Littlewood–Richardson filling of λ/μ whose type ν satisfies
/// b(s_ν) = 1? Cells are filled in reverse reading order with lattice and
/// semistandard constraints, bailing out of any branch whose type already
/// entered the kernel of b.
fn lr_filling_exists(lambda: &Partition, mu: &Partition, b: SchurBoolWitt) -> bool {
    let (bx, by) = match b {
        SchurBoolWitt::Infinity => return true,
        SchurBoolWitt::Finite { x, y } => (x, y),
    };
    let total = lambda.size() - mu.size();
    let rows = lambda.length();
    let mut grid: Vec<Vec<u32>> = (0..rows).map(|r| vec![0; lambda[r] as usize]).collect();
    let mut counts = vec![0u32; total as usize + 1];
    fn fill(
        lambda: &Partition,
        mu: &Partition,
        cell: usize,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        bx: u32,
        by: u32,
    ) -> bool {
        // Kernel pruning: ν_{bx+1} ≥ by+1 iff more than bx values occur
        // more than by times; multiplicities only grow as cells fill.
        let over = counts.iter().filter(|&&c| c > by).count();
        if over > bx as usize {
            return false;
        }
        let mut idx = cell;
        let mut pos: Option<(usize, usize)> = None;
        for r in 0..lambda.length() {
            let row_cells = (lambda[r] - mu[r]) as usize;
            if idx < row_cells {
                pos = Some((r, (lambda[r] as usize) - 1 - idx));
                break;
            }
            idx -= row_cells;
        }
        let Some((r, c)) = pos else {
            return true;
        };
        for v in 1..counts.len() as u32 {
            if v >= 2 && counts[v as usize] + 1 > counts[(v - 1) as usize] {
                continue;
            }
            if c + 1 < lambda[r] as usize && grid[r][c + 1] < v {
                continue;
            }
            if r >= 1 && (c as u32) < lambda[r - 1] && (c as u32) >= mu[r - 1] && grid[r - 1][c] >= v
            {
                continue;
            }
            grid[r][c] = v;
            counts[v as usize] += 1;
            if fill(lambda, mu, cell + 1, grid, counts, bx, by) {
                return true;
            }
            counts[v as usize] -= 1;
            grid[r][c] = 0;
        }
        false
    }
    fill(lambda, mu, 0, &mut grid, &mut counts, bx, by)
}

/// First-principles Schur-side addition via the Littlewood–Richardson
/// coproduct; must agree with `add_s`.
pub fn law_check_schur_via_coproduct(
    a: SchurBoolWitt,
    b: SchurBoolWitt,
    window: &PartitionWindow,
) -> Result<SchurBoolWitt> {
    let coords = |w: SchurBoolWitt| match w {
        SchurBoolWitt::Finite { x, y } => (x, y),
        SchurBoolWitt::Infinity => (0, 0),
    };
    let (xa, ya) = coords(a);
    let (xb, yb) = coords(b);
    let bound = (xa + xb, ya + yb);
    let w = reconstruct_from_kernel(&mut |lam| pairing_add_bit_s(lam, a, b), bound, window)?;
    Ok(match w {
        BoolWitt::Infinity => SchurBoolWitt::Infinity,
        BoolWitt::Finite { x, y } => SchurBoolWitt::finite(x, y),
    })
}

// ---------------------------------------------------------------------------
// Plethysm action
// ---------------------------------------------------------------------------

/// The action of m_λ on a big Witt vector: (m_λ ∘ w)(m_μ) = w(m_μ ∘ m_λ).
///
/// Closed forms exist for w = ∞ (result ∞) and w = (0, y) (result
/// (0, ⌊y/λ₁⌋)); for finite w with x ≥ 1 the answer is determined by
/// windowed kernel computation through `plethysm_expand`, probing with the
/// given coordinate bound and erroring if the probes cannot decide.
pub fn pleth_act_m(
    lambda: &Partition,
    w: BoolWitt,
    bound: (u32, u32),
    window: &PartitionWindow,
) -> Result<BoolWitt> {
    if lambda.is_zero() {
        return Err(WittError::InvalidInput(
            "the zero partition does not act by plethysm".into(),
        ));
    }
    match w {
        BoolWitt::Infinity => Ok(BoolWitt::Infinity),
        BoolWitt::Finite { x: 0, y } => Ok(BoolWitt::finite(0, y / lambda.max_part())),
        BoolWitt::Finite { .. } => {
            let mut bit = |mu: &Partition| -> bool {
                if mu.is_zero() {
                    return true;
                }
                let degcap = mu.size() * lambda.size();
                let expanded = plethysm_expand(
                    &SymFuncM::monomial(mu.clone()),
                    &SymFuncM::monomial(lambda.clone()),
                    degcap as usize,
                    degcap,
                )
                .expect("plethysm preconditions hold by construction");
                w.eval_sym(&expanded)
            };
            reconstruct_from_kernel(&mut bit, bound, window)
        }
    }
}

// ---------------------------------------------------------------------------
// Text encoding
// ---------------------------------------------------------------------------

impl fmt::Display for BoolWitt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoolWitt::Finite { x, y } => write!(f, "({x},{y})"),
            BoolWitt::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Display for SchurBoolWitt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchurBoolWitt::Finite { x, y } => write!(f, "({x},{y})"),
            SchurBoolWitt::Infinity => write!(f, "inf"),
        }
    }
}

fn parse_pair(s: &str) -> Result<Option<(u32, u32)>> {
    let s = s.trim();
    if s == "inf" {
        return Ok(None);
    }
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| {
            WittError::InvalidInput(format!("expected `(x,y)` or `inf`, got `{s}`"))
        })?;
    let (xs, ys) = inner.split_once(',').ok_or_else(|| {
        WittError::InvalidInput(format!("expected two comma-separated coordinates in `{s}`"))
    })?;
    let x = xs.trim().parse::<u32>().map_err(|e| {
        WittError::InvalidInput(format!("bad x coordinate in `{s}`: {e}"))
    })?;
    let y = ys.trim().parse::<u32>().map_err(|e| {
        WittError::InvalidInput(format!("bad y coordinate in `{s}`: {e}"))
    })?;
    Ok(Some((x, y)))
}

impl FromStr for BoolWitt {
    type Err = WittError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match parse_pair(s)? {
            None => BoolWitt::Infinity,
            Some((x, y)) => BoolWitt::finite(x, y),
        })
    }
}

impl FromStr for SchurBoolWitt {
    type Err = WittError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match parse_pair(s)? {
            None => SchurBoolWitt::Infinity,
            Some((x, y)) => SchurBoolWitt::finite(x, y),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn finite_range(n: u32) -> Vec<BoolWitt> {
        let mut out: Vec<BoolWitt> = (0..=n)
            .flat_map(|x| (0..=n).map(move |y| BoolWitt::finite(x, y)))
            .collect();
        out.push(BoolWitt::Infinity);
        out
    }

    fn finite_range_s(n: u32) -> Vec<SchurBoolWitt> {
        let mut out: Vec<SchurBoolWitt> = (0..=n)
            .flat_map(|x| (0..=n).map(move |y| SchurBoolWitt::finite(x, y)))
            .collect();
        out.push(SchurBoolWitt::Infinity);
        out
    }

    #[test]
    fn eval_examples() {
        assert!(!BoolWitt::finite(1, 1).eval_m(&p(&[2, 2])));
        assert!(BoolWitt::finite(1, 1).eval_m(&p(&[2, 1])));
        assert!(BoolWitt::Infinity.eval_m(&p(&[5, 5, 5])));
        assert!(BoolWitt::zero().eval_m(&Partition::zero()));
        assert!(!BoolWitt::zero().eval_m(&p(&[1])));
    }

    #[test]
    fn arithmetic_examples() {
        let w = |x, y| BoolWitt::finite(x, y);
        assert_eq!(add_w(w(2, 1), w(3, 2)), w(5, 2));
        assert_eq!(mul_w(w(0, 3), w(0, 5)), w(0, 3));
        assert_eq!(mul_w(w(2, 3), w(1, 1)), w(2, 3));
        assert_eq!(add_w(BoolWitt::Infinity, w(4, 4)), BoolWitt::Infinity);
        assert_eq!(mul_w(BoolWitt::Infinity, w(0, 2)), w(0, 2));
        assert_eq!(mul_w(BoolWitt::Infinity, BoolWitt::zero()), BoolWitt::zero());
        assert_eq!(mul_w(BoolWitt::Infinity, w(1, 0)), BoolWitt::Infinity);
        assert_eq!(
            add_w(BoolWitt::from_nat(2), BoolWitt::from_nat(3)),
            BoolWitt::from_nat(5)
        );
        assert_eq!(
            mul_w(BoolWitt::from_nat(2), BoolWitt::from_nat(3)),
            BoolWitt::from_nat(6)
        );
    }

    #[test]
    fn semiring_axioms_big() {
        let elems = finite_range(3);
        let zero = BoolWitt::zero();
        let one = BoolWitt::one();
        for &a in &elems {
            assert_eq!(add_w(a, zero), a);
            assert_eq!(mul_w(a, one), a);
            assert_eq!(mul_w(a, zero), zero);
            for &b in &elems {
                assert_eq!(add_w(a, b), add_w(b, a));
                assert_eq!(mul_w(a, b), mul_w(b, a));
                for &c in &elems {
                    assert_eq!(add_w(add_w(a, b), c), add_w(a, add_w(b, c)));
                    assert_eq!(mul_w(mul_w(a, b), c), mul_w(a, mul_w(b, c)));
                    assert_eq!(
                        mul_w(a, add_w(b, c)),
                        add_w(mul_w(a, b), mul_w(a, c)),
                        "distributivity at {a}, {b}, {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn semiring_axioms_schur() {
        let elems = finite_range_s(3);
        let zero = SchurBoolWitt::zero();
        let one = SchurBoolWitt::one();
        for &a in &elems {
            assert_eq!(add_s(a, zero), a);
            assert_eq!(mul_s(a, one), a);
            assert_eq!(mul_s(a, zero), zero);
            for &b in &elems {
                assert_eq!(add_s(a, b), add_s(b, a));
                assert_eq!(mul_s(a, b), mul_s(b, a));
                for &c in &elems {
                    assert_eq!(add_s(add_s(a, b), c), add_s(a, add_s(b, c)));
                    assert_eq!(mul_s(mul_s(a, b), c), mul_s(a, mul_s(b, c)));
                    assert_eq!(
                        mul_s(a, add_s(b, c)),
                        add_s(mul_s(a, b), mul_s(a, c)),
                        "distributivity at {a}, {b}, {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn mul_pairing_reduction_matches_bruteforce() {
        let elems = finite_range(2);
        for lam in PartitionWindow::by_size(7).enumerate() {
            for &a in &elems {
                for &b in &elems {
                    assert_eq!(
                        pairing_mul_bit(&lam, a, b),
                        pairing_mul_bit_bruteforce(&lam, a, b),
                        "mul pairing mismatch at λ={lam}, a={a}, b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn law_check_examples() {
        let window = PartitionWindow::by_size(8);
        assert_eq!(
            law_check_via_coproduct(
                BoolWitt::finite(1, 0),
                BoolWitt::finite(0, 1),
                WittOp::Add,
                &window
            )
            .unwrap(),
            BoolWitt::finite(1, 1)
        );
        assert_eq!(
            law_check_via_coproduct(
                BoolWitt::finite(0, 2),
                BoolWitt::finite(0, 3),
                WittOp::Mul,
                &window
            )
            .unwrap(),
            BoolWitt::finite(0, 2)
        );
        assert_eq!(
            law_check_via_coproduct(
                BoolWitt::Infinity,
                BoolWitt::finite(2, 2),
                WittOp::Add,
                &window
            )
            .unwrap(),
            BoolWitt::Infinity
        );
    }

    #[test]
    fn law_check_agrees_with_law_tables() {
        let elems = finite_range(2);
        let window = PartitionWindow::by_size(8);
        for &a in &elems {
            for &b in &elems {
                for op in [WittOp::Add, WittOp::Mul] {
                    let expected = match op {
                        WittOp::Add => add_w(a, b),
                        WittOp::Mul => mul_w(a, b),
                    };
                    assert_eq!(
                        law_check_via_coproduct(a, b, op, &window).unwrap(),
                        expected,
                        "law check mismatch at {a} {op:?} {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_law_check_agrees_with_addition() {
        let window = PartitionWindow::by_size(8);
        let mut elems: Vec<SchurBoolWitt> = (0..=2)
            .flat_map(|x| (0..=2).map(move |y| SchurBoolWitt::finite(x, y)))
            .collect();
        elems.push(SchurBoolWitt::Infinity);
        for &a in &elems {
            for &b in &elems {
                assert_eq!(
                    law_check_schur_via_coproduct(a, b, &window).unwrap(),
                    add_s(a, b),
                    "Schur law check mismatch at {a} + {b}"
                );
            }
        }
    }

    #[test]
    fn eta_behaves_as_anti_teichmuller() {
        let eta = anti_teichmuller_bool();
        assert!(eta.eval_s(&p(&[1, 1, 1])));
        assert!(!eta.eval_s(&p(&[2])));
        assert_eq!(mul_s(eta, eta), SchurBoolWitt::one());
        assert_eq!(mul_s(SchurBoolWitt::Infinity, eta), SchurBoolWitt::Infinity);
    }

    #[test]
    fn big_and_schur_differ_as_semirings() {
        // Same carrier, different laws: doubling (0,1).
        let a = add_w(BoolWitt::finite(0, 1), BoolWitt::finite(0, 1));
        let b = add_s(SchurBoolWitt::finite(0, 1), SchurBoolWitt::finite(0, 1));
        assert_eq!(a, BoolWitt::finite(0, 1));
        assert_eq!(b, SchurBoolWitt::finite(0, 2));
    }

    #[test]
    fn order_matches_pointwise_eval() {
        // Coordinates up to 3 are separated by rectangle evaluations of
        // size up to (3+1)·(3+1), so the window must reach size 16.
        let elems = finite_range(3);
        let window = PartitionWindow::by_size(16).enumerate();
        for &a in &elems {
            for &b in &elems {
                let pointwise = window.iter().all(|l| a.eval_m(l) <= b.eval_m(l));
                assert_eq!(leq_w(a, b), pointwise, "order mismatch at {a} ≼ {b}");
                assert!(leq_w(a, add_w(a, b)), "a ≼ a+c fails at {a}, {b}");
            }
        }
    }

    #[test]
    fn ghost_examples_and_morphism() {
        assert_eq!(ghost(BoolWitt::finite(0, 3)), GhostVector::Threshold(3));
        assert_eq!(ghost(BoolWitt::finite(2, 0)), GhostVector::AllOnes);
        assert_eq!(ghost(BoolWitt::finite(0, 0)), GhostVector::Threshold(0));
        assert_eq!(ghost(BoolWitt::Infinity), GhostVector::AllOnes);
        // ghost(w)(r) = eval at ψ_r = m_(r).
        for &w in &finite_range(3) {
            for r in 1..=8 {
                assert_eq!(ghost(w).bit(r), w.eval_m(&Partition::rect(r, 1)));
            }
        }
        // On the x = 0 range, ghost turns + into pointwise max and · into
        // pointwise min.
        for ya in 0..=4 {
            for yb in 0..=4 {
                let a = BoolWitt::finite(0, ya);
                let b = BoolWitt::finite(0, yb);
                for r in 1..=10 {
                    assert_eq!(
                        ghost(add_w(a, b)).bit(r),
                        ghost(a).bit(r) || ghost(b).bit(r)
                    );
                    assert_eq!(
                        ghost(mul_w(a, b)).bit(r),
                        ghost(a).bit(r) && ghost(b).bit(r)
                    );
                }
            }
        }
    }

    #[test]
    fn dorroh_extension_projects_onto_witt() {
        let elems: Vec<DorrohElement> = (0..=3)
            .flat_map(|x| {
                (0..=3)
                    .map(move |y| DorrohElement::new(x, Some(y)))
                    .chain(std::iter::once(DorrohElement::new(x, None)))
            })
            .collect();
        let one = DorrohElement::new(1, Some(0));
        for &a in &elems {
            assert_eq!(dorroh_mul(one, a), a);
            for &b in &elems {
                assert_eq!(
                    dorroh_project(dorroh_add(a, b)),
                    add_w(dorroh_project(a), dorroh_project(b))
                );
                assert_eq!(
                    dorroh_project(dorroh_mul(a, b)),
                    mul_w(dorroh_project(a), dorroh_project(b)),
                    "projection not multiplicative at ({},{:?})·({},{:?})",
                    a.x,
                    a.y,
                    b.x,
                    b.y
                );
            }
        }
        assert_eq!(
            dorroh_mul(DorrohElement::new(0, Some(2)), DorrohElement::new(0, Some(3))),
            DorrohElement::new(0, Some(2))
        );
        assert_eq!(dorroh_project(DorrohElement::new(2, None)), BoolWitt::Infinity);
    }

    #[test]
    fn to_schur_witt_is_a_morphism() {
        assert_eq!(to_schur_witt(BoolWitt::finite(3, 0)), SchurBoolWitt::finite(3, 0));
        assert_eq!(to_schur_witt(BoolWitt::finite(0, 1)), SchurBoolWitt::Infinity);
        assert_eq!(to_schur_witt(BoolWitt::Infinity), SchurBoolWitt::Infinity);
        for &a in &finite_range(3) {
            for &b in &finite_range(3) {
                assert_eq!(
                    to_schur_witt(add_w(a, b)),
                    add_s(to_schur_witt(a), to_schur_witt(b))
                );
                assert_eq!(
                    to_schur_witt(mul_w(a, b)),
                    mul_s(to_schur_witt(a), to_schur_witt(b)),
                    "comparison map not multiplicative at {a}·{b}"
                );
            }
        }
    }

    #[test]
    fn plethysm_action_examples() {
        let window = PartitionWindow::by_size(4);
        assert_eq!(
            pleth_act_m(&p(&[2]), BoolWitt::finite(0, 5), (1, 5), &window).unwrap(),
            BoolWitt::finite(0, 2)
        );
        assert_eq!(
            pleth_act_m(&p(&[3, 1]), BoolWitt::Infinity, (1, 1), &window).unwrap(),
            BoolWitt::Infinity
        );
        // m_(1) = ψ₁ acts as the identity, here recovered by windowed
        // kernel computation on finite vectors with x ≥ 1.
        for x in 1..=2 {
            for y in 0..=2 {
                let w = BoolWitt::finite(x, y);
                assert_eq!(
                    pleth_act_m(&p(&[1]), w, (x, y), &window).unwrap(),
                    w,
                    "ψ₁ should fix {w}"
                );
            }
        }
        assert!(pleth_act_m(&Partition::zero(), BoolWitt::zero(), (1, 1), &window).is_err());
    }

    #[test]
    fn text_roundtrip() {
        for s in ["(0,0)", "(3,1)", "inf"] {
            let w: BoolWitt = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
            let v: SchurBoolWitt = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("(1;2)".parse::<BoolWitt>().is_err());
        assert!("(1,-2)".parse::<BoolWitt>().is_err());
        assert!("infinite".parse::<BoolWitt>().is_err());
    }
}
