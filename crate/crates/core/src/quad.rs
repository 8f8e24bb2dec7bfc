//! Gauss quadrature rules and the panel integrators built on them.
//!
//! The closed-form engine leans on three schemes:
//! * Gauss-Legendre on finite panels,
//! * Gauss-Laguerre for semi-infinite integrals carrying an explicit
//!   `e^{-u}` weight,
//! * geometric panel sweeps for semi-infinite integrands with slower or
//!   stretched-exponential decay, where a fixed weight function would lie.
//!
//! Every caller wraps its evaluation in a refinement loop (double all node
//! counts, compare) and reports the last delta as the error estimate.

use crate::real::Real;
use thiserror::Error;

/// A converged quadrature value with its refinement diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Change observed on the final node-doubling refinement.
    pub error_estimate: f64,
    /// Per-axis node counts at the accepted refinement level.
    pub node_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("quadrature failed to stabilize after {refinements} refinements (last delta {last_delta:.3e} on value {value:.6e})")]
    NonConvergence {
        refinements: usize,
        last_delta: f64,
        value: f64,
    },
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre<R: Real>(n: usize) -> (Vec<R>, Vec<R>) {
    assert!(n >= 1);
    let mut nodes = vec![R::zero(); n];
    let mut weights = vec![R::zero(); n];
    let nf = R::of_usize(n);
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess, then Newton on P_n.
        let mut x = R::of((std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos());
        let mut pp = R::zero();
        for _ in 0..100 {
            let mut p0 = R::one();
            let mut p1 = R::zero();
            for j in 0..n {
                let jf = R::of_usize(j);
                let p2 = p1;
                p1 = p0;
                p0 = ((R::of(2.0) * jf + R::one()) * x * p1 - jf * p2) / (jf + R::one());
            }
            pp = nf * (x * p0 - p1) / (x * x - R::one());
            let dx = p0 / pp;
            x = x - dx;
            if dx.abs() <= R::epsilon() * R::of(2.0) {
                break;
            }
        }
        let w = R::of(2.0) / ((R::one() - x * x) * pp * pp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Nodes and weights of the n-point Gauss-Laguerre rule (weight `e^{-x}` on
/// [0, inf)).
pub fn gauss_laguerre<R: Real>(n: usize) -> (Vec<R>, Vec<R>) {
    assert!(n >= 1);
    let mut nodes = vec![R::zero(); n];
    let mut weights = vec![R::zero(); n];
    let nf = R::of_usize(n);
    let mut z = R::zero();
    for i in 0..n {
        // Stroud-Secrest style initial guesses marching up from the smallest root.
        if i == 0 {
            z = R::of(3.0) / (R::one() + R::of(2.4) * nf);
        } else if i == 1 {
            z = z + R::of(15.0) / (R::one() + R::of(2.5) * nf);
        } else {
            let ai = R::of_usize(i - 1);
            z = z
                + (R::one() + R::of(2.55) * ai) / (R::of(1.9) * ai) * (z - nodes[i - 2]);
        }
        let mut p1 = R::one();
        let mut p2 = R::zero();
        for _ in 0..120 {
            p1 = R::one();
            p2 = R::zero();
            for j in 0..n {
                let jf = R::of_usize(j);
                let p3 = p2;
                p2 = p1;
                p1 = ((R::of(2.0) * jf + R::one() - z) * p2 - jf * p3) / (jf + R::one());
            }
            let pp = nf * (p1 - p2) / z;
            let dz = p1 / pp;
            z = z - dz;
            if dz.abs() <= z.abs() * R::epsilon() * R::of(4.0) {
                break;
            }
        }
        let pp = nf * (p1 - p2) / z;
        nodes[i] = z;
        weights[i] = -R::one() / (pp * nf * p2);
    }
    (nodes, weights)
}

/// Integrate f over [a, b] with a pre-built Gauss-Legendre rule.
pub fn integrate_panel<R: Real>(f: &mut impl FnMut(R) -> R, a: R, b: R, rule: &(Vec<R>, Vec<R>)) -> R {
    let half = (b - a) * R::of(0.5);
    let mid = (a + b) * R::of(0.5);
    let mut acc = R::zero();
    for (&x, &w) in rule.0.iter().zip(rule.1.iter()) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Integrate f over [a, b] (plain convenience wrapper).
pub fn integrate_gl<R: Real>(mut f: impl FnMut(R) -> R, a: R, b: R, n: usize) -> R {
    let rule = gauss_legendre::<R>(n);
    integrate_panel(&mut f, a, b, &rule)
}

/// Integrate `e^{-x} g(x)` over [0, inf) with the n-point Laguerre rule.
pub fn integrate_laguerre<R: Real>(mut g: impl FnMut(R) -> R, n: usize) -> R {
    let (nodes, weights) = gauss_laguerre::<R>(n);
    nodes
        .iter()
        .zip(weights.iter())
        .map(|(&x, &w)| w * g(x))
        .sum()
}

/// Integrate f over [0, upper] on a dyadically graded mesh refined toward 0.
///
/// Handles integrands with an algebraic endpoint singularity f ~ u^{p-1}
/// (p > 0) at the origin: panels [upper/2^{k+1}, upper/2^k] down to
/// `levels` halvings, each integrated with the supplied rule. The head
/// below the last panel is dropped; callers choose `levels` so the head is
/// negligible for their exponent p.
pub fn integrate_graded<R: Real>(
    f: &mut impl FnMut(R) -> R,
    upper: R,
    levels: usize,
    rule: &(Vec<R>, Vec<R>),
) -> R {
    let mut acc = R::zero();
    let mut hi = upper;
    for _ in 0..levels {
        let lo = hi * R::of(0.5);
        acc += integrate_panel(f, lo, hi, rule);
        hi = lo;
    }
    acc
}

/// Integrate a decaying integrand over [start, inf) with geometrically
/// growing Gauss-Legendre panels, stopping once a panel contributes less
/// than `tail_rel` of the accumulated total.
pub fn integrate_geometric_tail<R: Real>(
    f: &mut impl FnMut(R) -> R,
    start: R,
    first_width: R,
    growth: R,
    tail_rel: R,
    max_panels: usize,
    rule: &(Vec<R>, Vec<R>),
) -> R {
    let mut acc = R::zero();
    let mut a = start;
    let mut width = first_width;
    for _ in 0..max_panels {
        let b = a + width;
        let piece = integrate_panel(f, a, b, rule);
        acc += piece;
        if piece.abs() <= tail_rel * acc.abs() && acc != R::zero() {
            break;
        }
        a = b;
        width = width * growth;
    }
    acc
}

/// Refinement driver: evaluates `eval(level)` for level = 0, 1, ... until two
/// consecutive values agree to `rel_tol`, then reports the last delta.
///
/// `eval` must scale every node count like 2^level.
pub fn refine(
    mut eval: impl FnMut(usize) -> (f64, Vec<usize>),
    rel_tol: f64,
    max_refinements: usize,
) -> Result<QuadratureResult, QuadError> {
    let (mut prev, mut nodes) = eval(0);
    let mut last_delta = f64::INFINITY;
    for level in 1..=max_refinements {
        let (next, n) = eval(level);
        nodes = n;
        last_delta = (next - prev).abs();
        let scale = next.abs().max(1e-300);
        if last_delta <= rel_tol * scale || last_delta <= 1e-300 {
            return Ok(QuadratureResult {
                value: next,
                error_estimate: last_delta,
                node_counts: nodes,
            });
        }
        prev = next;
    }
    Err(QuadError::NonConvergence {
        refinements: max_refinements,
        last_delta,
        value: prev,
    })
}

/// Default relative tolerance used by the closed-form engine.
pub const DEFAULT_REL_TOL: f64 = 1e-9;
/// Default refinement cap.
pub const DEFAULT_MAX_REFINEMENTS: usize = 7;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_polynomial_exactness() {
        // n-point rule is exact on polynomials up to degree 2n-1.
        let rule = gauss_legendre::<f64>(6);
        let mut f = |x: f64| x.powi(10) + 3.0 * x.powi(7) - x;
        let got = integrate_panel(&mut f, -1.0, 1.0, &rule);
        assert!((got - 2.0 / 11.0).abs() < 1e-14, "{got}");
        let got2 = integrate_gl(|x: f64| x.exp(), 0.0, 1.0, 20);
        assert!((got2 - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn laguerre_moments() {
        // int_0^inf e^{-x} x^k dx = k!
        let mut fact = 1.0f64;
        for k in 0..9u32 {
            if k > 0 {
                fact *= k as f64;
            }
            let got = integrate_laguerre(|x: f64| x.powi(k as i32), 32);
            assert!(
                (got - fact).abs() / fact < 1e-12,
                "k={k}: {got} vs {fact}"
            );
        }
    }

    #[test]
    fn laguerre_weights_positive_nodes_increasing() {
        let (nodes, weights) = gauss_laguerre::<f64>(48);
        for w in &weights {
            assert!(*w > 0.0);
        }
        for pair in nodes.windows(2) {
            assert!(pair[1] > pair[0]);
        }
    }

    #[test]
    fn graded_mesh_handles_sqrt_singularity() {
        // int_0^1 u^{-1/2} du = 2; plain Gauss-Legendre struggles, the graded
        // mesh nails it.
        let rule = gauss_legendre::<f64>(16);
        let mut f = |u: f64| u.powf(-0.5);
        let got = integrate_graded(&mut f, 1.0, 60, &rule);
        assert!((got - 2.0).abs() < 1e-9, "{got}");
    }

    #[test]
    fn geometric_tail_exponential() {
        let rule = gauss_legendre::<f64>(16);
        let mut f = |x: f64| (-x).exp();
        let got = integrate_geometric_tail(&mut f, 0.0, 1.0, 2.0, 1e-14, 60, &rule);
        assert!((got - 1.0).abs() < 1e-12, "{got}");
        // stretched-exponential decay
        let mut g = |x: f64| (-x.sqrt()).exp();
        let got2 = integrate_geometric_tail(&mut g, 0.0, 1.0, 2.0, 1e-14, 60, &rule);
        assert!((got2 - 2.0).abs() < 1e-10, "{got2}");
    }

    #[test]
    fn refine_converges_and_reports() {
        let res = refine(
            |level| {
                let n = 8 << level;
                (integrate_gl(|x: f64| (x * x).sin(), 0.0, 2.0, n), vec![n])
            },
            1e-10,
            6,
        )
        .unwrap();
        assert!(res.error_estimate <= 1e-10 * res.value.abs() + 1e-300);
        assert!(res.node_counts[0] >= 16);
    }

    #[test]
    fn rules_instantiate_at_f32() {
        let got = integrate_gl(|x: f32| x * x, 0.0f32, 1.0, 12);
        assert!((got - 1.0 / 3.0).abs() < 1e-5);
    }
}
