//! Explicit differential and derivation formulas for `U(3)` and `U(2)`, and
//! explicit low-degree kernel elements. These serve both as fast evaluation
//! paths and as cross-check oracles against the path-based maps in
//! [`crate::morse`].
//!
//! The printed formulas can emit tuples that are not chains (a decremented
//! index landing on 1 in a non-final slot, a merged tail at the boundary of
//! its validity range); every output is therefore filtered through the chain
//! predicate once, at the end. Path-method equivalence certifies the
//! convention.

use num::Zero;

use crate::linalg::{binom, rat_int, Rational};
use crate::morse::{chain_predicate, AnickChain};
use crate::rewrite::{Family, LinComb};
use crate::Error;

fn add_projected(family: Family, out: &mut LinComb<AnickChain>, tuple: Vec<u32>, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    if chain_predicate(family, &tuple) {
        out.add_term(AnickChain::new(tuple), coeff);
    }
}

fn sign(j: usize) -> Rational {
    if j.is_multiple_of(2) {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

/// Merge the 1-based pair `(j, j+1)` of `t` into a single index `merged`.
fn merge_at(t: &[u32], j: usize, merged: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(t.len() - 1);
    out.extend_from_slice(&t[..j - 1]);
    out.push(merged);
    out.extend_from_slice(&t[j + 1..]);
    out
}

/// The `U(3)` Anick differential in closed form, for chains of length at
/// least 2. One formula covers chains whose next-to-last index exceeds 1, a
/// second covers the chains ending in `|1|0`; both agree with the path-based
/// differential on every input.
pub fn u3_diff(c: &AnickChain) -> LinComb<AnickChain> {
    let t = c.indices();
    let len = t.len();
    assert!(len >= 2, "closed-form differential needs length >= 2");
    debug_assert!(chain_predicate(Family::U3, t));
    let family = Family::U3;
    let mut out = LinComb::zero();
    let ends_10 = t[len - 2] == 1 && t[len - 1] == 0;
    // pairs (j, j+1) eligible for the regular merge terms: all of them in the
    // regular case, only those inside the prefix before |1|0 otherwise
    let pair_max = if ends_10 { len.saturating_sub(3) } else { len - 1 };
    for j in 1..=pair_max {
        let (a, b) = (t[j - 1] as i64, t[j] as i64);
        let den = a + b - 1;
        let sj = sign(j);
        // merge to a+b-1 with coefficient a(a-1)/(a+b-1)
        add_projected(
            family,
            &mut out,
            merge_at(t, j, (a + b - 1) as u32),
            &sj * Rational::new((a * (a - 1)).into(), den.into()),
        );
        for tt in 1..j {
            let it = t[tt - 1] as i64;
            // decrement slot tt and merge to a+b; the sign is opposite to the
            // plain merge terms (the zero-letter defect climbs the vertex
            // with one extra matched edge)
            let mut dec = merge_at(t, j, (a + b) as u32);
            dec[tt - 1] -= 1;
            add_projected(
                family,
                &mut out,
                dec,
                -&sj * Rational::new((it * (a - 1) * (b - 1)).into(), den.into()),
            );
            // merge to a+b-1 weighted by (i_t - 1)
            add_projected(
                family,
                &mut out,
                merge_at(t, j, (a + b - 1) as u32),
                &sj * Rational::new((a * b * (it - 1)).into(), den.into()),
            );
        }
    }
    if ends_10 {
        // chains [i_1|...|i_{len-2}|1|0]
        let prefix = &t[..len - 2];
        let k = prefix.len();
        let tail_sign = sign(len - 1);
        for j in 1..=k {
            let ij = prefix[j - 1] as i64;
            // decrement slot j, drop the trailing 0: [...|i_j - 1|...|1]
            let mut dec: Vec<u32> = prefix.to_vec();
            dec[j - 1] -= 1;
            dec.push(1);
            add_projected(family, &mut out, dec, &tail_sign * rat_int(ij));
            // [i_1|...|i_{len-2}|0] weighted by (i_j - 1)
            let mut dropped: Vec<u32> = prefix.to_vec();
            dropped.push(0);
            add_projected(family, &mut out, dropped, -&tail_sign * rat_int(ij - 1));
        }
        let mut dropped: Vec<u32> = prefix.to_vec();
        dropped.push(0);
        add_projected(family, &mut out, dropped, tail_sign);
    }
    out
}

/// The `U(2)` Anick differential on 1-chains: `δ_2[n|m] = -n[n+m-1]`.
pub fn u2_diff2(c: &AnickChain) -> LinComb<AnickChain> {
    let t = c.indices();
    assert!(t.len() == 2);
    debug_assert!(chain_predicate(Family::U2, t));
    let (n, m) = (t[0], t[1]);
    let mut out = LinComb::zero();
    add_projected(Family::U2, &mut out, vec![n + m - 1], rat_int(-(n as i64)));
    out
}

/// The `U(2)` Anick differential on 2-chains:
/// `δ_3[n|m|p] = -n[n+m-1|p] + m[n|m+p-1] + n[n-1|m+p]`, each term kept only
/// when it is a chain.
pub fn u2_diff3(c: &AnickChain) -> LinComb<AnickChain> {
    let t = c.indices();
    assert!(t.len() == 3, "u2_diff3 needs a length-3 chain");
    debug_assert!(chain_predicate(Family::U2, t));
    let (n, m, p) = (t[0], t[1], t[2]);
    let mut out = LinComb::zero();
    add_projected(Family::U2, &mut out, vec![n + m - 1, p], rat_int(-(n as i64)));
    add_projected(Family::U2, &mut out, vec![n, m + p - 1], rat_int(m as i64));
    if n >= 1 {
        add_projected(Family::U2, &mut out, vec![n - 1, m + p], rat_int(n as i64));
    }
    out
}

/// Closed-form Anick differential where one is known: all of `U(3)`, and
/// `U(2)` chains of length 2 or 3. `None` signals that the caller must fall
/// back to the path method.
pub fn closed_anick_diff(family: Family, c: &AnickChain) -> Option<LinComb<AnickChain>> {
    if c.len() < 2 {
        return Some(LinComb::zero());
    }
    match (family, c.len()) {
        (Family::U3, _) => Some(u3_diff(c)),
        (Family::U2, 2) => Some(u2_diff2(c)),
        (Family::U2, 3) => Some(u2_diff3(c)),
        (Family::U2, _) => None,
    }
}

/// Transferred derivation, fast rule for the two implemented families:
/// differentiate the chain slotwise as a bar element and drop every summand
/// that is not a chain.
pub fn tilde_partial_fast(family: Family, c: &AnickChain) -> LinComb<AnickChain> {
    let t = c.indices();
    let mut out = LinComb::zero();
    for j in 0..t.len() {
        if t[j] == 0 {
            continue;
        }
        let mut dec = t.to_vec();
        dec[j] -= 1;
        add_projected(family, &mut out, dec, rat_int(t[j] as i64));
    }
    out
}

/// Explicit basis of `K_2` for `U(3)`: `e_1 = [1|0]` and, for `d >= 3`,
/// `e_d = sum_{s=0}^{d-2} (-1)^s C(d,s) [d-s|s]`. `K_2` vanishes in degrees 0
/// and 2, where the result is empty.
pub fn k2_basis_explicit(d: u32) -> LinComb<AnickChain> {
    let mut out = LinComb::zero();
    if d == 1 {
        out.add_term(AnickChain::new(vec![1, 0]), rat_int(1));
        return out;
    }
    if d < 3 {
        return out;
    }
    for s in 0..=d - 2 {
        let coeff = Rational::from_integer(binom(d as u64, s as u64));
        let coeff = if s % 2 == 0 { coeff } else { -coeff };
        out.add_term(AnickChain::new(vec![d - s, s]), coeff);
    }
    out
}

/// The degree-4 kernel 2-chain `f_3 = [2|2|0] - (2/3)[3|1|0]`: annihilated by
/// both the transferred derivation and the Anick differential.
pub fn f3_element() -> LinComb<AnickChain> {
    let mut out = LinComb::zero();
    out.add_term(AnickChain::new(vec![2, 2, 0]), rat_int(1));
    out.add_term(AnickChain::new(vec![3, 1, 0]), Rational::new((-2).into(), 3.into()));
    out
}

/// Append the index `j` to every chain of `x`, without projection.
pub fn append_index(x: &LinComb<AnickChain>, j: u32) -> LinComb<AnickChain> {
    let mut out = LinComb::zero();
    for (c, coeff) in x.iter() {
        out.add_term(c.append(j), coeff.clone());
    }
    out
}

/// Check the appending identity for the `U(3)` differential:
/// `δ_n[v|1] = [δ_{n-1}(v)|1] + (-1)^{n-1}(d-n+1)·v` for homogeneous `v` of
/// degree `d` and length `n-1` with every chain's last index at least 2.
/// Inputs violating the hypotheses are rejected.
pub fn der10_identity_check(n: usize, d: u32, v: &LinComb<AnickChain>) -> Result<bool, Error> {
    for (c, _) in v.iter() {
        if c.len() + 1 != n {
            return Err(Error::InvalidInput(format!(
                "chain {c} has length {}, expected {}",
                c.len(),
                n - 1
            )));
        }
        if c.degree() != d {
            return Err(Error::InvalidInput(format!(
                "chain {c} has degree {}, expected {d}",
                c.degree()
            )));
        }
        if c.last() < 2 {
            return Err(Error::InvalidInput(format!("chain {c} has last index below 2")));
        }
    }
    let appended = append_index(v, 1);
    let lhs = appended.flat_map(u3_diff);
    let delta_v = v.flat_map(|c| {
        if c.len() >= 2 {
            u3_diff(c)
        } else {
            LinComb::zero()
        }
    });
    let mut rhs = append_index(&delta_v, 1);
    let scalar = rat_int(d as i64 - n as i64 + 1);
    let scalar = if (n - 1).is_multiple_of(2) { scalar } else { -scalar };
    rhs.add_scaled(v, &scalar);
    Ok(lhs == rhs)
}
