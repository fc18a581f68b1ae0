//! The cycle-index lemmas, checked as equalities of formal polynomials.
//!
//! Square roots of variables are avoided by renaming `x_r = u_r^2`
//! throughout, so that `sqrt(x_r)` becomes `u_r` and every exponent stays
//! integral. The variables `u_r` are written `x_r` in the output.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{IdentityKey, IdentityReport, Status};
use crate::algebra::{cycle_index, Arg, Family, SymPoly, Var};
use crate::enumerators::Provenance;
use crate::error::{Error, Result};
use crate::number_theory::odd_part_decomposition;

use IdentityKey::*;

fn x(r: u64) -> Var {
    Var::x(r)
}

fn sides(key: IdentityKey, m: u64) -> Result<(SymPoly, SymPoly)> {
    let two = BigRational::from_integer(BigInt::from(2));
    let i_m = cycle_index(m)?;
    let i_2m = cycle_index(2 * m)?;
    Ok(match key {
        // 2 I_2m(x) = I_m(x^2) + I_m'(x_(k+1))
        L2_1 => {
            let dec = odd_part_decomposition(m)?;
            let stride = 1u64 << (dec.two_exponent + 1);
            let lhs = i_2m.to_sym_plain(Family::X).scale(&two);
            let squared = i_m.to_sym(|r| Arg::power(x(r), 2))?;
            let shifted = cycle_index(dec.odd_part)?.to_sym(|r| Arg::var(x(stride * r)))?;
            (lhs, &squared + &shifted)
        }
        // 2 I_2m(0, x_1, 0, x_2, ...) = I_m(x) + I_m(0, x_2, 0, x_4, ...)
        L2_4 => {
            let interleaved = i_2m.to_sym(|r| {
                if r % 2 == 1 {
                    Arg::Zero
                } else {
                    Arg::var(x(r / 2))
                }
            })?;
            let evens = i_m.to_sym(|r| {
                if r % 2 == 1 {
                    Arg::Zero
                } else {
                    Arg::var(x(r))
                }
            })?;
            (
                interleaved.scale(&two),
                &i_m.to_sym_plain(Family::X) + &evens,
            )
        }
        // I_m(x) = I_2m(y) with y_r^2 = x_r (r odd), y_r = x_(r/2) (r even)
        L2_6 => {
            let lhs = i_m.to_sym(|r| Arg::power(x(r), 2))?;
            let rhs = i_2m.to_sym(|r| {
                if r % 2 == 1 {
                    Arg::var(x(r))
                } else {
                    Arg::power(x(r / 2), 2)
                }
            })?;
            (lhs, rhs)
        }
        // I_2m(0, x_1, 0, x_2, ...) = I_2m(sqrt x_1, 0, sqrt x_3, 0, ...) + I_m(0, x_2, 0, x_4, ...)
        L2_7 => {
            let lhs = i_2m.to_sym(|r| {
                if r % 2 == 1 {
                    Arg::Zero
                } else {
                    Arg::power(x(r / 2), 2)
                }
            })?;
            let roots = i_2m.to_sym(|r| {
                if r % 2 == 1 {
                    Arg::var(x(r))
                } else {
                    Arg::Zero
                }
            })?;
            let evens = i_m.to_sym(|r| {
                if r % 2 == 1 {
                    Arg::Zero
                } else {
                    Arg::power(x(r), 2)
                }
            })?;
            (lhs, &roots + &evens)
        }
        other => return Err(Error::domain(format!("{other} is not a lemma"))),
    })
}

/// Expands both sides of a lemma at `m` and compares them formally.
pub fn check_lemma(key: IdentityKey, m: u64) -> Result<IdentityReport> {
    if !key.is_lemma() {
        return Err(Error::domain(format!("{key} is not a lemma")));
    }
    if m == 0 {
        return Err(Error::domain("lemmas are stated for m >= 1"));
    }
    let start = std::time::Instant::now();
    let (lhs, rhs) = sides(key, m)?;
    Ok(IdentityReport {
        key,
        order: m,
        valency: None,
        status: if lhs == rhs {
            Status::Holds
        } else {
            Status::Fails
        },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        sources: vec![Provenance::Formula],
        note: None,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}
