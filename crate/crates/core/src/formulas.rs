//! Closed-form γ and ζ values for paths, cycles, sun graphs, joins and
//! complete multipartite graphs, plus the general bounds on ζ.
//!
//! Each value carries a [`Status`]: the cycle values for `n ≢ 0 (mod 3)` are
//! an open conjecture and are reported as such, never as established facts.

use std::fmt;

use serde::Serialize;

use crate::count::{binomial, Count};
use crate::engine::GammaReport;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Proven,
    Conjectured,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Proven => "PROVEN",
            Status::Conjectured => "CONJECTURED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyValue<C> {
    pub gamma: Option<usize>,
    pub zeta: C,
    pub status: Status,
    /// Name of the result the value comes from.
    pub source: &'static str,
}

impl<C> FamilyValue<C> {
    fn proven(gamma: usize, zeta: C, source: &'static str) -> Self {
        FamilyValue { gamma: Some(gamma), zeta, status: Status::Proven, source }
    }
}

pub const PATH_SOURCE: &str = "path closed form";
pub const CYCLE_SOURCE: &str = "cycle closed form (n = 3k)";
pub const CYCLE_CONJECTURE_SOURCE: &str = "cycle conjecture (n = 3k+1, 3k+2)";
pub const SUN_SOURCE: &str = "sun graph closed form";
pub const JOIN_SOURCE: &str = "join closed form";
pub const MULTIPARTITE_SOURCE: &str = "complete multipartite closed form";

fn out_of_domain(what: &'static str, value: impl fmt::Display) -> Error {
    Error::OutOfDomain { what, value: value.to_string() }
}

fn c<C: Count>(v: usize) -> Result<C> {
    C::from_usize_checked(v)
}

/// ζ(P_n) for `n >= 2`:
///
/// | n mod 3 | ζ                      |
/// |---------|------------------------|
/// | 0       | 1                      |
/// | 1       | (n+2)(n+11)/18 − 1     |
/// | 2       | ⌈n/3⌉ + 1              |
///
/// with γ = ⌈n/3⌉.
pub fn path_dominion<C: Count>(n: usize) -> Result<FamilyValue<C>> {
    if n < 2 {
        return Err(out_of_domain("path order", n));
    }
    let gamma = n.div_ceil(3);
    let zeta = match n % 3 {
        0 => C::one(),
        1 => {
            let product = c::<C>(n + 2)?.mul_checked(&c(n + 11)?)?;
            product.checked_div(&c(18)?).ok_or(Error::Overflow)? - C::one()
        }
        _ => c(gamma + 1)?,
    };
    Ok(FamilyValue::proven(gamma, zeta, PATH_SOURCE))
}

/// ζ(C_n) for `n >= 3`: 3 when `3 | n` (proven), otherwise the conjectured
/// `(n² + 5n)/6` for `n ≡ 1` and `n` for `n ≡ 2 (mod 3)`.
pub fn cycle_dominion<C: Count>(n: usize) -> Result<FamilyValue<C>> {
    if n < 3 {
        return Err(out_of_domain("cycle order", n));
    }
    let gamma = Some(n.div_ceil(3));
    Ok(match n % 3 {
        0 => FamilyValue { gamma, zeta: c(3)?, status: Status::Proven, source: CYCLE_SOURCE },
        r => {
            let zeta = if r == 1 {
                let nn = c::<C>(n)?;
                let num = nn.mul_checked(&nn)?.add_checked(&c::<C>(5)?.mul_checked(&nn)?)?;
                num.checked_div(&c(6)?).ok_or(Error::Overflow)?
            } else {
                c(n)?
            };
            FamilyValue { gamma, zeta, status: Status::Conjectured, source: CYCLE_CONJECTURE_SOURCE }
        }
    })
}

/// Sun graph on `2n` vertices: γ = n, ζ = 2^n.
pub fn sun_dominion<C: Count>(n: usize) -> Result<FamilyValue<C>> {
    if n < 3 {
        return Err(out_of_domain("sun cycle length", n));
    }
    let two = c::<C>(2)?;
    let zeta = (0..n).try_fold(C::one(), |acc, _| acc.mul_checked(&two))?;
    Ok(FamilyValue::proven(n, zeta, SUN_SOURCE))
}

/// γ(G1 ∨ G2): 1 if either side has γ = 1, otherwise 2.
pub fn join_gamma(gamma1: usize, gamma2: usize) -> Result<usize> {
    match gamma1.min(gamma2) {
        0 => Err(Error::InvalidInput("domination numbers must be positive".into())),
        1 => Ok(1),
        _ => Ok(2),
    }
}

/// ζ(G1 ∨ G2) from the orders, γ and ζ of two connected graphs. With the
/// sides ordered so that γ1 ≤ γ2:
///
/// | case          | ζ                |
/// |---------------|------------------|
/// | γ1 = γ2 = 1   | ζ1 + ζ2          |
/// | γ1 = γ2 = 2   | ζ1 + ζ2 + n1·n2  |
/// | γ1 = 1 < γ2   | ζ1               |
/// | γ1 = 2 < γ2   | ζ1 + n1·n2       |
/// | 2 < γ1 ≤ γ2   | n1·n2            |
pub fn join_dominion<C: Count>(
    g1: &Graph,
    report1: &GammaReport<C>,
    g2: &Graph,
    report2: &GammaReport<C>,
) -> Result<FamilyValue<C>> {
    for g in [g1, g2] {
        if !g.is_connected() {
            return Err(Error::Hypothesis("join formula needs connected graphs".into()));
        }
    }
    let gamma = join_gamma(report1.gamma, report2.gamma)?;
    let ((n1, r1), (n2, r2)) = if report1.gamma <= report2.gamma {
        ((g1.n(), report1), (g2.n(), report2))
    } else {
        ((g2.n(), report2), (g1.n(), report1))
    };
    let cross = || c::<C>(n1)?.mul_checked(&c(n2)?);
    let zeta = match (r1.gamma, r2.gamma) {
        (1, 1) => r1.zeta.add_checked(&r2.zeta)?,
        (2, 2) => r1.zeta.add_checked(&r2.zeta)?.add_checked(&cross()?)?,
        (1, _) => r1.zeta.clone(),
        (2, _) => r1.zeta.add_checked(&cross()?)?,
        _ => cross()?,
    };
    Ok(FamilyValue::proven(gamma, zeta, JOIN_SOURCE))
}

/// ζ of the r-fold join G ∨ … ∨ G, valid when γ(G) = 1.
pub fn iterated_join_dominion<C: Count>(gamma: usize, zeta: C, r: usize) -> Result<C> {
    if gamma != 1 {
        return Err(Error::Hypothesis(format!("iterated join formula needs γ = 1, got {gamma}")));
    }
    if r == 0 {
        return Err(Error::InvalidInput("join of zero copies".into()));
    }
    c::<C>(r)?.mul_checked(&zeta)
}

/// ζ(K(m_1, …, m_k)) for ascending part sizes. With `r` singleton parts
/// (r ≥ 1) the γ-sets are those singletons; otherwise γ = 2 and the γ-sets
/// are the cross pairs plus each part of size exactly 2.
pub fn multipartite_dominion<C: Count>(parts: &[usize]) -> Result<FamilyValue<C>> {
    if parts.len() < 2 {
        return Err(Error::InvalidInput("need at least 2 parts".into()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidInput("parts must be non-empty".into()));
    }
    if !parts.is_sorted() {
        return Err(Error::InvalidInput("parts must be sorted ascending".into()));
    }
    let singletons = parts.iter().take_while(|&&m| m == 1).count();
    if singletons > 0 {
        return Ok(FamilyValue::proven(1, c(singletons)?, MULTIPARTITE_SOURCE));
    }
    let mut zeta = c::<C>(parts.iter().filter(|&&m| m == 2).count())?;
    let mut before = C::zero();
    for &m in parts {
        let m = c::<C>(m)?;
        zeta = zeta.add_checked(&before.mul_checked(&m)?)?;
        before = before.add_checked(&m)?;
    }
    Ok(FamilyValue::proven(2, zeta, MULTIPARTITE_SOURCE))
}

/// `1 ≤ ζ(G) ≤ C(n, γ)`.
pub fn dominion_bounds<C: Count>(n: usize, gamma: usize) -> Result<(C, C)> {
    if gamma == 0 || gamma > n {
        return Err(Error::InvalidInput(format!("need 1 <= gamma <= n, got gamma = {gamma}, n = {n}")));
    }
    Ok((C::one(), binomial(n, gamma)?))
}

/// `n1 · n2`, a lower bound on ζ(G1 ∨ G2) whenever 2 ≤ γ(G1) ≤ γ(G2).
/// The caller is responsible for that hypothesis.
pub fn join_lower_bound<C: Count>(n1: usize, n2: usize) -> Result<C> {
    c::<C>(n1)?.mul_checked(&c(n2)?)
}
