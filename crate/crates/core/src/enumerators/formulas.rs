use num_bigint::BigInt;

use super::{CirculantClass, CountResult, Provenance};
use crate::algebra::{cycle_index, SubstitutionRule, Target, UniPoly};
use crate::error::{Error, Result};
use crate::number_theory::is_prime_u64;

use CirculantClass::*;

fn require_odd_prime(p: u64, order: u64, class: CirculantClass) -> Result<()> {
    if p % 2 == 1 && is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{p} is not an odd prime (order {order}, class {class})"
        )))
    }
}

/// Substitution for class `class` where variable `x_r` carries the power
/// `z^(stride·r)`. The plain cycle-index formulas use stride 1; the `y`
/// variables of the prime-squared formulas use stride `p`.
fn class_rule(class: CirculantClass, stride: u64) -> SubstitutionRule {
    let step = move |r: u64| (stride * r) as usize;
    match class {
        Directed => {
            SubstitutionRule::new().all(move |r| Target::Value(UniPoly::one_plus(1, step(r))))
        }
        Undirected => {
            SubstitutionRule::new().all(move |r| Target::Value(UniPoly::one_plus(1, 2 * step(r))))
        }
        Oriented => SubstitutionRule::new()
            .even(|_| Target::Value(UniPoly::one()))
            .odd(move |r| Target::SquareValue(UniPoly::one_plus(2, step(r)))),
        SelfComplementaryDirected | SelfComplementaryUndirected => SubstitutionRule::new()
            .even(|_| Target::Value(UniPoly::constant(2)))
            .odd(|_| Target::Value(UniPoly::zero())),
        Tournament => SubstitutionRule::new()
            .even(|_| Target::Value(UniPoly::zero()))
            .odd(|_| Target::SquareValue(UniPoly::constant(2))),
    }
}

/// Undirected classes live on the cycle index of half the degree.
fn index_degree(class: CirculantClass, p: u64) -> u64 {
    match class {
        Undirected | SelfComplementaryUndirected => (p - 1) / 2,
        _ => p - 1,
    }
}

/// Circulants of odd prime order `p`.
///
/// `p = 2` is also accepted for the directed and self-complementary directed
/// classes, where the same substitution into the cycle index of degree 1
/// still gives the right count; the other classes have no formula there.
pub fn prime_enumerator(p: u64, class: CirculantClass) -> Result<CountResult> {
    if p == 2 {
        return match class {
            Directed | SelfComplementaryDirected => {
                let series = cycle_index(1)?.substitute(&class_rule(class, 1))?;
                Ok(CountResult::from_series(
                    2,
                    class,
                    series,
                    Provenance::Formula,
                ))
            }
            _ => Err(Error::unsupported(
                2,
                class,
                "no order-2 formula for this class",
            )),
        };
    }
    require_odd_prime(p, p, class)?;
    let ci = cycle_index(index_degree(class, p))?;
    let series = ci.substitute(&class_rule(class, 1))?;
    Ok(CountResult::from_series(
        p,
        class,
        series,
        Provenance::Formula,
    ))
}

/// Circulants of order `2p`, `p` an odd prime; classes d, u and o only.
pub fn twice_prime_enumerator(p: u64, class: CirculantClass) -> Result<CountResult> {
    let order = 2 * p;
    require_odd_prime(p, order, class)?;
    let one_plus_z = UniPoly::one_plus(1, 1);
    let series = match class {
        Directed => {
            let rule = SubstitutionRule::new()
                .all(|r| Target::Value(UniPoly::one_plus(1, r as usize).pow(2)));
            cycle_index(p - 1)?.substitute(&rule)? * one_plus_z
        }
        Undirected => {
            let rule = SubstitutionRule::new()
                .all(|r| Target::Value(UniPoly::one_plus(1, 2 * r as usize).pow(2)));
            cycle_index((p - 1) / 2)?.substitute(&rule)? * one_plus_z
        }
        Oriented => {
            let rule = SubstitutionRule::new()
                .even(|_| Target::Value(UniPoly::one()))
                .odd(|r| Target::Value(UniPoly::one_plus(2, r as usize)));
            cycle_index(p - 1)?.substitute(&rule)?
        }
        _ => {
            return Err(Error::unsupported(
                order,
                class,
                "no twice-prime formula for self-complementary classes or tournaments",
            ))
        }
    };
    Ok(CountResult::from_series(
        order,
        class,
        series,
        Provenance::Formula,
    ))
}

/// Circulants of order `p^2`, `p` an odd prime.
///
/// Evaluates `(1/p) I(x^(p+1)) - (1/p) I(xy) + I(x) I(y)` with `I` the cycle
/// index of degree `p - 1` (or `(p - 1)/2` for the undirected classes), the
/// `x` variables substituted with stride 1 and the `y` variables with stride
/// `p`. Everything is accumulated over the common denominator `p·m^2` and
/// divided exactly once at the end.
pub fn prime_squared_enumerator(p: u64, class: CirculantClass) -> Result<CountResult> {
    let order = p * p;
    if p == 2 {
        return Err(Error::domain("prime-squared formulas need an odd prime"));
    }
    require_odd_prime(p, order, class)?;
    let m = index_degree(class, p);
    let ci = cycle_index(m)?;
    let xs = class_rule(class, 1);
    let ys = class_rule(class, p);

    let raised = ci.numerator(|r, e| xs.power(r, (p + 1) * e))?;
    let paired = ci.numerator(|r, e| Ok(xs.power(r, e)? * ys.power(r, e)?))?;
    let x_part = ci.numerator(|r, e| xs.power(r, e))?;
    let y_part = ci.numerator(|r, e| ys.power(r, e))?;

    let numerator =
        (raised - paired).scale(&BigInt::from(m)) + (x_part * y_part).scale(&BigInt::from(p));
    let series = numerator.div_exact(p * m * m, &format!("prime-squared formula, p = {p}"))?;
    Ok(CountResult::from_series(
        order,
        class,
        series,
        Provenance::Formula,
    ))
}

/// The undirected prime-order formula applied to any odd `n >= 3`.
///
/// For prime `n` this is the undirected valency series. For composite `n`
/// the value is formal only and carries [`Provenance::Formal`].
pub fn formal_undirected(n: u64) -> Result<CountResult> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "formal undirected count needs an odd order >= 3, got {n}"
        )));
    }
    let series = cycle_index((n - 1) / 2)?.substitute(&class_rule(Undirected, 1))?;
    let provenance = if is_prime_u64(n) {
        Provenance::Formula
    } else {
        Provenance::Formal
    };
    Ok(CountResult::from_series(n, Undirected, series, provenance))
}
