//! Closed-form values for named families, defect polynomial evaluations and
//! the union / join / corona bound reports.
//!
//! Naming: `k` is always a colour budget, `j` a bad-edge count and `lambda`
//! the number of available colours in a polynomial evaluation.

mod bounds;

use serde::Serialize;

use crate::error::{Error, Result};

pub use bounds::{corona_chromatic, corona_formula, join_bound, union_bound, BoundOp, BoundOptions, BoundReport, OperandSummary};

/// Colouring count attached to a family value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum CountClaim {
    /// Established count.
    Asserted(u128),
    /// Published count whose derivation looks incomplete; report it, never
    /// assert it.
    Disputed(u128),
    Unclaimed,
}

impl CountClaim {
    pub fn value(self) -> Option<u128> {
        match self {
            CountClaim::Asserted(v) | CountClaim::Disputed(v) => Some(v),
            CountClaim::Unclaimed => None,
        }
    }

    pub fn is_disputed(self) -> bool {
        matches!(self, CountClaim::Disputed(_))
    }
}

/// Closed-form `b_k` value of a named family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyResult {
    pub family: &'static str,
    pub n: usize,
    pub k: usize,
    pub min_bad: usize,
    pub colouring_count: CountClaim,
    /// Short description of the case the value comes from.
    pub provenance: &'static str,
}

pub fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// `λ (λ - 1) ... (λ - k + 1)`.
pub fn falling_factorial(lambda: u128, k: u128) -> u128 {
    if k > lambda {
        return 0;
    }
    (0..k).map(|i| lambda - i).product()
}

/// `b_1(P_n) = n - 1`.
pub fn bk_path(n: usize) -> Result<FamilyResult> {
    if n < 2 {
        return Err(Error::param(format!("path needs n >= 2, got {n}")));
    }
    Ok(FamilyResult {
        family: "path",
        n,
        k: 1,
        min_bad: n - 1,
        colouring_count: CountClaim::Asserted(1),
        provenance: "single colour on a path",
    })
}

/// Odd cycles with two colours: one bad edge, `2n` colourings.
pub fn bk_cycle_odd(n: usize) -> Result<FamilyResult> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::param(format!(
            "odd-cycle formula needs odd n >= 3, got {n}"
        )));
    }
    Ok(FamilyResult {
        family: "cycle",
        n,
        k: 2,
        min_bad: 1,
        colouring_count: CountClaim::Asserted(2 * n as u128),
        provenance: "odd cycle, two colours",
    })
}

/// Wheel `W_{1,n}` with `k = 2` (any `n`) or `k = 3` (odd `n`).
pub fn bk_wheel(n: usize, k: usize) -> Result<FamilyResult> {
    if n < 3 {
        return Err(Error::param(format!("wheel needs n >= 3, got {n}")));
    }
    let (min_bad, count, provenance) = match (k, n % 2) {
        (2, 0) => (n / 2, CountClaim::Asserted(4), "even wheel, two colours"),
        (2, _) => (n.div_ceil(2), CountClaim::Asserted(4 * n as u128), "odd wheel, two colours"),
        (3, 1) => (1, CountClaim::Disputed(3 * n as u128), "odd wheel, three colours"),
        _ => {
            return Err(Error::param(format!(
                "no wheel closed form for n = {n}, k = {k}"
            )))
        }
    };
    Ok(FamilyResult {
        family: "wheel",
        n,
        k,
        min_bad,
        colouring_count: count,
        provenance,
    })
}

/// Helm `H_{1,n}` with `k = 2` (any `n`) or `k = 3` (odd `n`).
pub fn bk_helm(n: usize, k: usize) -> Result<FamilyResult> {
    if n < 3 {
        return Err(Error::param(format!("helm needs n >= 3, got {n}")));
    }
    let (min_bad, count, provenance) = match (k, n % 2) {
        (2, 0) => (n / 2, CountClaim::Asserted(4), "even helm, two colours"),
        (2, _) => (n.div_ceil(2), CountClaim::Asserted(4 * n as u128), "odd helm, two colours"),
        (3, 1) => (
            1,
            CountClaim::Disputed(3 * n as u128 * (1u128 << n)),
            "odd helm, three colours",
        ),
        _ => {
            return Err(Error::param(format!(
                "no helm closed form for n = {n}, k = {k}"
            )))
        }
    };
    Ok(FamilyResult {
        family: "helm",
        n,
        k,
        min_bad,
        colouring_count: count,
        provenance,
    })
}

/// `K_n` with `k = n - x` colours: one class of size `x + 1` gives
/// `x (x + 1) / 2` bad edges, realised by `(n - x) C(n, x + 1) (n - x - 1)!`
/// labelled colourings.
pub fn bk_complete(n: usize, k: usize) -> Result<FamilyResult> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::param(format!(
            "complete-graph formula needs n >= 2 and 1 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    let x = (n - k) as u128;
    let n128 = n as u128;
    let count = (n128 - x) * binomial(n128, x + 1) * factorial(n128 - x - 1);
    Ok(FamilyResult {
        family: "complete",
        n,
        k,
        min_bad: (x * (x + 1) / 2) as usize,
        colouring_count: CountClaim::Asserted(count),
        provenance: "complete graph, one enlarged class",
    })
}

/// Number of `λ`-colourings of `C_n` (any colours, no class rule) with
/// exactly `j` bad edges: `C(n, j) [(λ-1)^(n-j) + (-1)^(n-j) (λ-1)]`.
pub fn defect_poly_cycle(n: usize, j: usize, lambda: usize) -> Result<u128> {
    if n < 3 || j > n || lambda < 1 {
        return Err(Error::param(format!(
            "need n >= 3, 0 <= j <= n, lambda >= 1; got n = {n}, j = {j}, lambda = {lambda}"
        )));
    }
    let l1 = lambda as i128 - 1;
    let e = (n - j) as u32;
    let sign = if e.is_multiple_of(2) { 1 } else { -1 };
    let inner = l1.pow(e) + sign * l1;
    let value = binomial(n as u128, j as u128) as i128 * inner;
    Ok(u128::try_from(value).expect("colouring counts are non-negative"))
}

/// `C(n, n - k + 1) λ^(k)`: labelled `λ`-colourings of `K_n` using exactly
/// `k` colours with one class of size `n - k + 1` and the rest singletons.
pub fn defect_poly_complete(n: usize, k: usize, lambda: usize) -> Result<u128> {
    check_complete_poly(n, k, lambda)?;
    Ok(binomial(n as u128, (n - k + 1) as u128) * falling_factorial(lambda as u128, k as u128))
}

/// The same count expanded as `C(λ, k) (n - x) C(n, x + 1) (n - x - 1)!`,
/// `x = n - k`: colour subsets times optimal colourings per subset.
pub fn defect_poly_complete_product(n: usize, k: usize, lambda: usize) -> Result<u128> {
    check_complete_poly(n, k, lambda)?;
    let (n, k, lambda) = (n as u128, k as u128, lambda as u128);
    let x = n - k;
    Ok(binomial(lambda, k) * (n - x) * binomial(n, x + 1) * factorial(n - x - 1))
}

fn check_complete_poly(n: usize, k: usize, lambda: usize) -> Result<()> {
    if n < 2 || k < 2 || k >= n || lambda < k {
        return Err(Error::param(format!(
            "need 2 <= k <= n - 1 and lambda >= k; got n = {n}, k = {k}, lambda = {lambda}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_values() {
        assert_eq!(bk_path(2).unwrap().min_bad, 1);
        assert_eq!(bk_path(5).unwrap().min_bad, 4);
        assert!(bk_path(1).is_err());
    }

    #[test]
    fn odd_cycle_values() {
        for (n, count) in [(3, 6), (5, 10), (9, 18)] {
            let r = bk_cycle_odd(n).unwrap();
            assert_eq!((r.min_bad, r.colouring_count), (1, CountClaim::Asserted(count)));
        }
        assert!(bk_cycle_odd(6).is_err());
    }

    #[test]
    fn wheel_and_helm_cases() {
        let w = bk_wheel(4, 2).unwrap();
        assert_eq!((w.min_bad, w.colouring_count), (2, CountClaim::Asserted(4)));
        let w = bk_wheel(5, 2).unwrap();
        assert_eq!((w.min_bad, w.colouring_count), (3, CountClaim::Asserted(20)));
        let w = bk_wheel(5, 3).unwrap();
        assert_eq!((w.min_bad, w.colouring_count), (1, CountClaim::Disputed(15)));
        assert!(bk_wheel(4, 3).is_err());

        let h = bk_helm(3, 3).unwrap();
        assert_eq!((h.min_bad, h.colouring_count), (1, CountClaim::Disputed(72)));
        assert_eq!(bk_helm(5, 2).unwrap().colouring_count, CountClaim::Asserted(20));
    }

    #[test]
    fn complete_values() {
        let r = bk_complete(5, 4).unwrap();
        assert_eq!((r.min_bad, r.colouring_count), (1, CountClaim::Asserted(240)));
        let r = bk_complete(4, 2).unwrap();
        assert_eq!((r.min_bad, r.colouring_count), (3, CountClaim::Asserted(8)));
        let r = bk_complete(2, 1).unwrap();
        assert_eq!((r.min_bad, r.colouring_count), (1, CountClaim::Asserted(1)));
        assert!(bk_complete(4, 4).is_err());
    }

    #[test]
    fn cycle_polynomial_values() {
        assert_eq!(defect_poly_cycle(5, 1, 2).unwrap(), 10);
        assert_eq!(defect_poly_cycle(3, 0, 3).unwrap(), 6);
        assert_eq!(defect_poly_cycle(4, 4, 1).unwrap(), 1);
        assert_eq!(defect_poly_cycle(6, 5, 3).unwrap(), 0);
        assert!(defect_poly_cycle(2, 0, 2).is_err());
        assert!(defect_poly_cycle(4, 5, 2).is_err());
    }

    #[test]
    fn complete_polynomial_values() {
        assert_eq!(defect_poly_complete(4, 3, 3).unwrap(), 36);
        assert_eq!(defect_poly_complete(5, 4, 4).unwrap(), 240);
        assert_eq!(defect_poly_complete(3, 2, 2).unwrap(), 6);
        assert_eq!(defect_poly_complete_product(5, 4, 4).unwrap(), 240);
        assert!(defect_poly_complete(4, 3, 2).is_err());
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(factorial(0), 1);
        assert_eq!(falling_factorial(5, 3), 60);
        assert_eq!(falling_factorial(2, 3), 0);
    }
}
