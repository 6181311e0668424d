//! Partition ideals and their primality.
//!
//! A partition ideal is an upward-closed set of partitions under
//! containment; it is stored by its antichain of minimal generators, so
//! membership is exact even though the ideal itself is infinite. The
//! rectangle ideals I_(x,y) = {λ : λ_{x+1} ≥ y+1} are exactly the nonempty
//! prime ideals, in both the monomial and the Schur sense. Primality of an
//! arbitrary ideal is decided constructively: for a non-rectangle ideal an
//! explicit violating pair is produced from the generators and then
//! verified against the exact product expansion; primality of a rectangle
//! ideal is re-checked exhaustively over a finite test window.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, WittError};
use crate::monomial::{mono_product, SymFuncM};
use crate::partitions::{Partition, PartitionWindow};
use crate::schur::{schur_product, SymFuncS};

/// An upward-closed set of partitions, stored by its minimal generators.
///
/// The empty generator list is the empty ideal; the single generator `[]`
/// (the zero partition) generates the ideal of all partitions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PartitionIdeal {
    generators: Vec<Partition>,
}

impl PartitionIdeal {
    /// Build an ideal from any generating set, reducing it to the antichain
    /// of minimal elements and sorting canonically.
    pub fn new(generators: Vec<Partition>) -> Self {
        let mut minimal: Vec<Partition> = Vec::new();
        for g in &generators {
            if generators.iter().any(|h| h != g && g.contains(h))
                || minimal.contains(g)
            {
                continue;
            }
            minimal.push(g.clone());
        }
        minimal.sort();
        PartitionIdeal { generators: minimal }
    }

    pub fn empty() -> Self {
        PartitionIdeal { generators: Vec::new() }
    }

    /// The ideal of all partitions.
    pub fn full() -> Self {
        PartitionIdeal::new(vec![Partition::zero()])
    }

    /// The rectangle ideal I_(x,y) = {λ : λ_{x+1} ≥ y+1}, generated by the
    /// rectangle (y+1)^(x+1).
    pub fn rectangle(x: u32, y: u32) -> Self {
        PartitionIdeal::new(vec![Partition::rect(y + 1, x + 1)])
    }

    pub fn generators(&self) -> &[Partition] {
        &self.generators
    }

    pub fn is_empty_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_full_ideal(&self) -> bool {
        self.generators.first().map_or(false, Partition::is_zero)
    }

    /// Exact membership: λ lies in the ideal iff it contains a generator.
    pub fn contains(&self, lambda: &Partition) -> bool {
        self.generators.iter().any(|g| lambda.contains(g))
    }

    /// If the ideal is I_(x,y) for some x, y, return (x, y).
    pub fn rectangle_coords(&self) -> Option<(u32, u32)> {
        match self.generators.as_slice() {
            [g] if !g.is_zero() && g.parts().iter().all(|&p| p == g.max_part()) => {
                Some((g.length() as u32 - 1, g.max_part() - 1))
            }
            _ => None,
        }
    }

    /// Recover an ideal from an explicit membership set over a window,
    /// checking upward-closure within the window first.
    pub fn from_member_set(members: &[Partition], window: &PartitionWindow) -> Result<Self> {
        let all = window.enumerate();
        for lam in &all {
            if members.contains(lam) {
                continue;
            }
            if let Some(below) = members.iter().find(|m| lam.contains(m)) {
                return Err(WittError::InvalidInput(format!(
                    "set is not upward closed in the window: {lam} contains member {below}"
                )));
            }
        }
        Ok(PartitionIdeal::new(members.to_vec()))
    }
}

impl fmt::Display for PartitionIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Outcome of a primality check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrimalityVerdict {
    /// No violating pair exists within the test window. For a rectangle
    /// ideal this agrees with the general theorem; for other ideals it is
    /// only a window statement.
    WindowPrime,
    /// The pair (λ, μ) violates primality: every constituent of the product
    /// lies in the ideal, but neither λ nor μ does. This is an exact
    /// certificate, independent of any window.
    NotPrime(Partition, Partition),
}

impl PrimalityVerdict {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimalityVerdict::WindowPrime)
    }
}

/// Basis selector for primality checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductBasis {
    Monomial,
    Schur,
}

/// Does the pair (λ, μ) violate primality of `ideal` in the given basis?
///
/// The product expansion is computed exactly; membership of each
/// constituent is decided from the generators, with no truncation.
pub fn violates_primality(
    ideal: &PartitionIdeal,
    lambda: &Partition,
    mu: &Partition,
    basis: ProductBasis,
) -> bool {
    if ideal.contains(lambda) || ideal.contains(mu) {
        return false;
    }
    let constituents: Vec<Partition> = match basis {
        ProductBasis::Monomial => mono_product(
            &SymFuncM::monomial(lambda.clone()),
            &SymFuncM::monomial(mu.clone()),
        )
        .iter()
        .map(|(nu, _)| nu.clone())
        .collect(),
        ProductBasis::Schur => schur_product(
            &SymFuncS::schur(lambda.clone()),
            &SymFuncS::schur(mu.clone()),
        )
        .iter()
        .map(|(nu, _)| nu.clone())
        .collect(),
    };
    constituents.iter().all(|nu| ideal.contains(nu))
}

/// Exhaustive primality check over all pairs from a test window.
pub fn primality_over_window(
    ideal: &PartitionIdeal,
    test_window: &PartitionWindow,
    basis: ProductBasis,
) -> Result<PrimalityVerdict> {
    if ideal.is_full_ideal() {
        return Err(WittError::InvalidInput(
            "the full ideal is excluded from primality by definition".into(),
        ));
    }
    let candidates: Vec<Partition> = test_window
        .enumerate()
        .into_iter()
        .filter(|l| !ideal.contains(l))
        .collect();
    for lam in &candidates {
        for mu in &candidates {
            if mu < lam {
                continue;
            }
            if violates_primality(ideal, lam, mu, basis) {
                return Ok(PrimalityVerdict::NotPrime(lam.clone(), mu.clone()));
            }
        }
    }
    Ok(PrimalityVerdict::WindowPrime)
}

/// For two incomparable partitions λ ⊄ μ ⊄ λ, the pair (λ̄, μ̄) obtained by
/// diminishing λ at a descent index i with λ_i > μ_i and μ at a descent
/// index j with μ_j > λ_j. Every constituent of the product of the barred
/// pair (in either basis) contains λ or μ.
pub fn incomparable_witness(lambda: &Partition, mu: &Partition) -> Result<(Partition, Partition)> {
    if lambda.contains(mu) || mu.contains(lambda) {
        return Err(WittError::InvalidInput(format!(
            "{lambda} and {mu} are comparable; no witness pair exists"
        )));
    }
    let diminish = |a: &Partition, b: &Partition| -> Partition {
        // Find i with a_i > b_i and a_i > a_{i+1}; one exists because
        // a ⊄ b forces some excess part, and the last position of any
        // maximal run of equal excess parts is a descent.
        for i in 0..a.length() {
            if a[i] > b[i] && a[i] > a[i + 1] {
                let mut parts = a.parts().to_vec();
                parts[i] -= 1;
                return Partition::new(parts);
            }
        }
        unreachable!("incomparable partitions always admit a diminishable index")
    };
    Ok((diminish(lambda, mu), diminish(mu, lambda)))
}

/// For a non-rectangle partition π, a pair (λ, μ) whose pointwise maximum
/// is π while neither contains π. Every constituent of the product of
/// (λ, μ) contains both, hence contains π; so the pair violates primality
/// of any ideal whose unique minimal element is π.
pub fn non_rectangle_witness(pi: &Partition) -> Result<(Partition, Partition)> {
    let i = (0..pi.length())
        .find(|&i| pi[i] > pi[i + 1] && pi[i + 1] > 0)
        .ok_or_else(|| {
            WittError::InvalidInput(format!("{pi} is a rectangle or zero; no witness pair"))
        })?;
    let lambda = Partition::new(pi.parts()[..=i].to_vec());
    let mu = Partition::new(
        pi.parts()
            .iter()
            .map(|&p| p.min(pi[i + 1]))
            .collect(),
    );
    Ok((lambda, mu))
}

/// Decide primality of a nonempty, non-full ideal constructively.
///
/// * A single rectangle generator: prime (verified exhaustively over the
///   test window).
/// * A single non-rectangle generator: not prime, with the witness from
///   [`non_rectangle_witness`] verified exactly.
/// * Two or more generators: not prime, with the witness from
///   [`incomparable_witness`] applied to the first two generators and
///   verified exactly.
pub fn classify_primality(
    ideal: &PartitionIdeal,
    test_window: &PartitionWindow,
    basis: ProductBasis,
) -> Result<PrimalityVerdict> {
    if ideal.is_empty_ideal() {
        // Vacuously prime: every product of basis elements has at least one
        // constituent, and no constituent lies in the empty ideal, so the
        // defining implication never has a true hypothesis.
        return Ok(PrimalityVerdict::WindowPrime);
    }
    if ideal.is_full_ideal() {
        return Err(WittError::InvalidInput(
            "the full ideal is excluded from primality by definition".into(),
        ));
    }
    let verdict = match ideal.generators() {
        [pi] => match non_rectangle_witness(pi) {
            Ok((lam, mu)) => PrimalityVerdict::NotPrime(lam, mu),
            Err(_) => return primality_over_window(ideal, test_window, basis),
        },
        [g1, g2, ..] => {
            let (lam, mu) = incomparable_witness(g1, g2)?;
            PrimalityVerdict::NotPrime(lam, mu)
        }
        [] => unreachable!(),
    };
    // A produced witness is always re-verified against the exact product.
    if let PrimalityVerdict::NotPrime(lam, mu) = &verdict {
        if !violates_primality(ideal, lam, mu, basis) {
            return Err(WittError::PropertyViolation(format!(
                "constructed witness ({lam}, {mu}) fails to violate primality of {ideal}"
            )));
        }
    }
    Ok(verdict)
}

/// Enumerate every partition ideal whose generators lie in the window, as
/// antichains of the containment order. The count grows exponentially, so
/// windows with more than 24 partitions are rejected.
pub fn enumerate_ideals(window: &PartitionWindow) -> Result<Vec<PartitionIdeal>> {
    let elements = window.enumerate();
    if elements.len() > 24 {
        return Err(WittError::InvalidInput(format!(
            "window holds {} partitions; antichain enumeration is limited to 24",
            elements.len()
        )));
    }
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::new();
    fn extend(
        elements: &[Partition],
        from: usize,
        current: &mut Vec<Partition>,
        out: &mut Vec<PartitionIdeal>,
    ) {
        out.push(PartitionIdeal {
            generators: {
                let mut g = current.clone();
                g.sort();
                g
            },
        });
        for k in from..elements.len() {
            let e = &elements[k];
            if current
                .iter()
                .all(|c| !c.contains(e) && !e.contains(c))
            {
                current.push(e.clone());
                extend(elements, k + 1, current, out);
                current.pop();
            }
        }
    }
    extend(&elements, 0, &mut current, &mut out);
    Ok(out)
}
