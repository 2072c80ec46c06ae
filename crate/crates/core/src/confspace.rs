//! Spaces, and the Poincaré polynomials of `F_m(X)`, `Δ_ℓ X^m` and
//! `Δ_{≤ℓ} X^m` for i-acyclic `X`.
//!
//! Conventions: `F_0 = Δ_0 X^0` is a point (polynomial `1`); `Δ_0 X^m` is
//! empty for `m > 0` (polynomial `0`). Compact-support polynomials are
//! written `P_c`, ordinary ones `P`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinat::{stirling, StirlingKind};
use crate::error::{Error, Result};
use crate::polyarith::{falling_product, BiPoly, LaurentPoly};

/// Description of a space `X` by its compact-support Poincaré polynomial and
/// a few caller-asserted flags.
///
/// i-acyclicity cannot be read off `pc`, so the flag is trusted; every
/// operation that depends on it refuses to run when it is unset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceSpec {
    pub name: String,
    pub pc: LaurentPoly,
    pub dim: u32,
    pub i_acyclic: bool,
    pub orientable: bool,
    pub connected: bool,
}

impl SpaceSpec {
    /// Validates: nonnegative coefficients, exponents within `[0, dim]`, and
    /// no `T^0` term when the space is declared i-acyclic.
    pub fn new(
        name: impl Into<String>,
        pc: LaurentPoly,
        dim: u32,
        i_acyclic: bool,
        orientable: bool,
        connected: bool,
    ) -> Result<Self> {
        let name = name.into();
        if !pc.has_nonneg_coeffs() {
            return Err(Error::invalid(format!("space `{name}`: P_c has a negative coefficient")));
        }
        if pc.min_exp().is_some_and(|e| e < 0) || pc.max_exp().is_some_and(|e| e > i64::from(dim)) {
            return Err(Error::invalid(format!(
                "space `{name}`: P_c exponents must lie in [0, {dim}]"
            )));
        }
        if i_acyclic && !pc.coeff(0).is_zero() {
            return Err(Error::invalid(format!(
                "space `{name}`: an i-acyclic space has H_c^0 = 0"
            )));
        }
        Ok(SpaceSpec {
            name,
            pc,
            dim,
            i_acyclic,
            orientable,
            connected,
        })
    }

    pub(crate) fn require_i_acyclic(&self) -> Result<()> {
        if self.i_acyclic {
            Ok(())
        } else {
            Err(Error::Hypothesis {
                space: self.name.clone(),
                flag: "i_acyclic",
            })
        }
    }

    pub(crate) fn require_orientable(&self) -> Result<()> {
        if self.orientable {
            Ok(())
        } else {
            Err(Error::Hypothesis {
                space: self.name.clone(),
                flag: "orientable",
            })
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Hypothesis {
                space: self.name.clone(),
                flag: "connected",
            })
        }
    }

    /// `χ_c(X) = P_c(X)(-1)`.
    pub fn euler_char(&self) -> BigInt {
        self.pc.value_at_minus_one()
    }

    /// `X` with `a` points removed: `P_c` gains `a T` (valid for i-acyclic
    /// `X` of dimension ≥ 1).
    pub fn minus_points(&self, a: u32) -> Result<SpaceSpec> {
        if self.dim == 0 {
            return Err(Error::invalid("cannot remove points from a 0-dimensional space"));
        }
        SpaceSpec::new(
            format!("{}-minus-{a}", self.name),
            &self.pc + &LaurentPoly::monomial(a, 1),
            self.dim,
            self.i_acyclic,
            self.orientable,
            self.connected && (self.dim > 1 || a == 0),
        )
    }
}

/// Built-in spaces.
pub mod fixtures {
    use super::SpaceSpec;
    use crate::polyarith::LaurentPoly;

    /// `ℝ^d`, `P_c = T^d`.
    pub fn rd(d: u32) -> SpaceSpec {
        SpaceSpec::new(format!("r{d}"), LaurentPoly::monomial(1, i64::from(d)), d, true, true, true)
            .expect("valid fixture")
    }

    /// `ℂ`, `P_c = T^2`.
    pub fn c() -> SpaceSpec {
        SpaceSpec::new("c", LaurentPoly::monomial(1, 2), 2, true, true, true).expect("valid fixture")
    }

    /// `ℂ` minus `a` points, `P_c = a T + T^2`.
    pub fn c_minus_a(a: u32) -> SpaceSpec {
        SpaceSpec::new(
            format!("c_minus_{a}"),
            LaurentPoly::from_terms([(1, i64::from(a)), (2, 1)]),
            2,
            true,
            true,
            true,
        )
        .expect("valid fixture")
    }

    /// `ℂ^*`, `P_c = T + T^2`.
    pub fn cstar() -> SpaceSpec {
        SpaceSpec::new("cstar", LaurentPoly::from_terms([(1, 1), (2, 1)]), 2, true, true, true)
            .expect("valid fixture")
    }

    /// Punctured Klein bottle, `P_c = T`: not i-acyclic and not orientable.
    pub fn klein_punctured() -> SpaceSpec {
        SpaceSpec::new("klein_punctured", LaurentPoly::monomial(1, 1), 2, false, false, true)
            .expect("valid fixture")
    }

    /// Every i-acyclic built-in.
    pub fn i_acyclic() -> Vec<SpaceSpec> {
        let mut out: Vec<SpaceSpec> = (1..=4).map(rd).collect();
        out.push(c());
        out.extend((1..=3).map(c_minus_a));
        out.push(cstar());
        out
    }

    /// Looks a built-in up by name: `r1`..`r4`, `c`, `c_minus_1`..`c_minus_3`,
    /// `cstar`, `klein_punctured`.
    pub fn by_name(name: &str) -> Option<SpaceSpec> {
        if name == "klein_punctured" {
            return Some(klein_punctured());
        }
        i_acyclic().into_iter().find(|s| s.name == name)
    }

    pub fn names() -> Vec<String> {
        let mut out: Vec<String> = i_acyclic().into_iter().map(|s| s.name).collect();
        out.push("klein_punctured".into());
        out
    }
}

/// `χ_c(F_m(X)) = χ_c(X)(χ_c(X) - 1)…(χ_c(X) - m + 1)`; no hypothesis needed.
pub fn euler_char_fm(x: &SpaceSpec, m: u32) -> BigInt {
    let chi = x.euler_char();
    (0..m).fold(BigInt::from(1), |acc, i| acc * (&chi - BigInt::from(i)))
}

fn pc_fm(pc: &LaurentPoly, m: u32) -> LaurentPoly {
    falling_product(pc, &LaurentPoly::monomial(-1, 1), m)
}

/// `P_c(F_m(X)) = ∏_{i<m} (P_c(X) + i T)`.
pub fn poincare_fm(x: &SpaceSpec, m: u32) -> Result<LaurentPoly> {
    x.require_i_acyclic()?;
    Ok(pc_fm(&x.pc, m))
}

fn check_l_m(l: u32, m: u32) -> Result<()> {
    if l > m {
        return Err(Error::invalid(format!("need l ≤ m, got l = {l}, m = {m}")));
    }
    Ok(())
}

/// `P_c(Δ_ℓ X^m)` (`closed = false`) or `P_c(Δ_{≤ℓ} X^m)` (`closed = true`).
pub fn poincare_delta(x: &SpaceSpec, l: u32, m: u32, closed: bool) -> Result<LaurentPoly> {
    x.require_i_acyclic()?;
    check_l_m(l, m)?;
    if l == 0 {
        return Ok(if m == 0 { LaurentPoly::one() } else { LaurentPoly::zero() });
    }
    let open = |k: u32| pc_fm(&x.pc, k).scale(&stirling(StirlingKind::Second, m as usize, k as usize));
    if !closed {
        return Ok(open(l));
    }
    let mut out = LaurentPoly::zero();
    for a in 0..l {
        let term = open(l - a).shift(i64::from(a));
        if a % 2 == 0 {
            out += term;
        } else {
            out -= &term;
        }
    }
    if !out.has_nonneg_coeffs() {
        return Err(Error::consistency(format!(
            "P_c(Δ_≤{l} X^{m}) = {out} has a negative coefficient for space `{}`",
            x.name
        )));
    }
    Ok(out)
}

// ∏_{i<k} (P + i T)
fn bi_fm(k: u32) -> BiPoly {
    (0..k).fold(BiPoly::one(), |acc, i| {
        let factor = &BiPoly::monomial(1, 1, 0) + &BiPoly::monomial(i, 0, 1);
        &acc * &factor
    })
}

/// The universal polynomial `Q_ℓ^m(P, T)` or `Q_{≤ℓ}^m(P, T)`: substituting
/// `P := P_c(X)` gives [`poincare_delta`] for every i-acyclic `X`.
pub fn universal_poly(l: u32, m: u32, closed: bool) -> Result<BiPoly> {
    check_l_m(l, m)?;
    if l == 0 {
        return Ok(if m == 0 { BiPoly::one() } else { BiPoly::zero() });
    }
    let open = |k: u32| bi_fm(k).scale(&stirling(StirlingKind::Second, m as usize, k as usize));
    let q = if closed {
        (0..l).fold(BiPoly::zero(), |acc, a| {
            let term = open(l - a).shift_t(a);
            if a % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        })
    } else {
        open(l)
    };
    if !q.is_homogeneous_of(l) || q.terms().any(|(_, c)| c.is_negative()) {
        return Err(Error::consistency(format!("universal polynomial {q} is malformed")));
    }
    Ok(q)
}

/// Ordinary Poincaré polynomial of `F_m(X)` by Poincaré duality,
/// `T^{m d} P_c(F_m(X))(1/T)`. Meaningful when `X` is an orientable
/// manifold; only the flag is checked.
pub fn poincare_ordinary(x: &SpaceSpec, m: u32) -> Result<LaurentPoly> {
    x.require_orientable()?;
    let pc = poincare_fm(x, m)?;
    Ok(pc.dual(i64::from(m) * i64::from(x.dim)))
}

/// `dim H_BM^i(F_m(X))`, the coefficient of `T^{m d - i}` in `P_c(F_m(X))`.
pub fn betti_bm(x: &SpaceSpec, m: u32, i: u32) -> Result<BigInt> {
    x.require_orientable()?;
    let pc = poincare_fm(x, m)?;
    Ok(pc.coeff(i64::from(m) * i64::from(x.dim) - i64::from(i)))
}
