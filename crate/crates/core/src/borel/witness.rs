use serde::Serialize;

use super::{BorelElement, BorelGroup, TorusElement, UnipotentElement, F3, N_POS};
use crate::error::{Error, Result};
use crate::Case;

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub case: Case,
    pub u0: UnipotentElement,
    pub t: TorusElement,
    pub u: UnipotentElement,
    /// The explicit `u`, `t` conjugate `u₀` to `u₀⁻¹` and are F-fixed.
    pub exact_match: bool,
    /// The bounded search was needed (structure-constant convention differs).
    pub searched: bool,
    pub frobenius_fixed: bool,
    pub u0_regular: bool,
    pub u0_frobenius_fixed: bool,
    /// `(ut) u₀⁻¹ (ut)⁻¹ = u₀` for the reported witness.
    pub inverse_check: bool,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.frobenius_fixed && self.u0_regular && self.u0_frobenius_fixed && self.inverse_check
    }
}

/// The explicit `u`: `u6(−1)u5(−1)u6(−1)u4(−1)u5(−1)u6(−1)u1(1)`, respectively
/// `u4(−1)u6(1)u1(1)`.
pub fn paper_u(bg: &BorelGroup) -> UnipotentElement {
    match bg.case() {
        Case::Untwisted => bg.from_simple_word(&[(6, -1), (5, -1), (6, -1), (4, -1), (5, -1), (6, -1), (1, 1)]),
        Case::Twisted => bg.from_simple_word(&[(4, -1), (6, 1), (1, 1)]),
    }
}

fn is_witness(bg: &BorelGroup, g: &BorelElement, source: &UnipotentElement, target: &UnipotentElement) -> bool {
    bg.borel_conjugate(g, source) == *target && bg.frobenius_borel(g) == *g
}

pub fn verify_witness(bg: &BorelGroup) -> Result<WitnessReport> {
    let u0 = bg.build_u0();
    let target = bg.inverse(&u0);
    let explicit = BorelElement { u: paper_u(bg), t: TorusElement::witness_t() };
    let exact_match = is_witness(bg, &explicit, &u0, &target);
    let (g, searched) = if exact_match {
        (explicit, false)
    } else {
        let g = search_witness(bg).ok_or_else(|| {
            Error::Consistency(format!("no element of B^F conjugates u0 to its inverse ({} case)", bg.case()))
        })?;
        (g, true)
    };
    Ok(WitnessReport {
        case: bg.case(),
        u0,
        t: g.t,
        u: g.u,
        exact_match,
        searched,
        frobenius_fixed: bg.frobenius_borel(&g) == g,
        u0_regular: u0.is_regular(),
        u0_frobenius_fixed: bg.frobenius_unipotent(&u0) == u0,
        inverse_check: bg.borel_conjugate(&g, &target) == u0 && bg.borel_conjugate(&g, &u0) == target,
    })
}

/// First F-fixed `g = u t ∈ B(𝔽₃)` with `g u₀ g⁻¹ = u₀⁻¹`.
pub fn search_witness(bg: &BorelGroup) -> Option<BorelElement> {
    let u0 = bg.build_u0();
    search_witness_for(bg, &u0, &bg.inverse(&u0))
}

/// First F-fixed `g = u t` with `g · source · g⁻¹ = target`.
///
/// `t` runs over `T(𝔽₃)` starting with `α2^∨(−1)α3^∨(−1)α4^∨(−1)α5^∨(−1)`,
/// then lexicographically. For each `t`, with `v = t · source · t⁻¹`, the
/// equation `u v = target · u` is solved height by height: the coefficients of
/// both sides at height `h + 1` depend on `u` only through heights `≤ h`
/// (the height `h + 1` part of `u` cancels), so each layer of `u` is pruned
/// against the next layer of the equation. The search over `U(𝔽₃)` is
/// exhaustive, so `None` means no witness exists.
pub fn search_witness_for(
    bg: &BorelGroup,
    source: &UnipotentElement,
    target: &UnipotentElement,
) -> Option<BorelElement> {
    let first = TorusElement::witness_t();
    let candidates = std::iter::once(first).chain(TorusElement::all().into_iter().filter(move |t| *t != first));
    let max_height = (0..N_POS).map(|r| bg.root_system().height(r)).max().unwrap_or(0);
    let layers: Vec<Vec<usize>> = (1..=max_height).map(|h| bg.roots_of_height(h)).collect();
    for t in candidates {
        if bg.frobenius_torus(&t) != t {
            continue;
        }
        let v = bg.torus_conjugate(&t, source);
        let mut x = [F3::ZERO; N_POS];
        if !agrees_up_to(bg, &UnipotentElement::identity(), &v, target, 1) {
            continue;
        }
        if dfs(bg, &layers, 0, &mut x, &v, target) {
            let g = BorelElement { u: UnipotentElement::from_coeffs(x), t };
            if is_witness(bg, &g, source, target) {
                return Some(g);
            }
        }
    }
    None
}

/// `u v` and `target · u` agree at all heights `≤ h`, and `F(u)` agrees with
/// `u` at heights `< h`.
fn agrees_up_to(
    bg: &BorelGroup,
    u: &UnipotentElement,
    v: &UnipotentElement,
    target: &UnipotentElement,
    h: i32,
) -> bool {
    let rs = bg.root_system();
    let lhs = bg.multiply(u, v);
    let rhs = bg.multiply(target, u);
    let fu = bg.frobenius_unipotent(u);
    (0..N_POS).all(|r| {
        let hr = rs.height(r);
        (hr > h || lhs.coeff(r) == rhs.coeff(r)) && (hr >= h || fu.coeff(r) == u.coeff(r))
    })
}

fn dfs(
    bg: &BorelGroup,
    layers: &[Vec<usize>],
    depth: usize,
    x: &mut [F3; N_POS],
    v: &UnipotentElement,
    target: &UnipotentElement,
) -> bool {
    if depth == layers.len() {
        return true;
    }
    let layer = &layers[depth];
    let count = 3usize.pow(layer.len() as u32);
    for k in 0..count {
        let mut rem = k;
        for &r in layer.iter().rev() {
            x[r] = F3::new((rem % 3) as i64);
            rem /= 3;
        }
        let u = UnipotentElement::from_coeffs(*x);
        if agrees_up_to(bg, &u, v, target, depth as i32 + 2) && dfs(bg, layers, depth + 1, x, v, target) {
            return true;
        }
    }
    for &r in layer {
        x[r] = F3::ZERO;
    }
    false
}
