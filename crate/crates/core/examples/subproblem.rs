//! The tridiagonal trust-region subproblem, including the hard case.

use trattack::attacks::{solve_tr_subproblem, SymTridiagonal};

fn main() -> trattack::Result<()> {
    let cases = [
        ("convex, interior", SymTridiagonal::new(vec![4.0, 3.0, 5.0], vec![1.0, 0.5])?, 1.0, 10.0),
        ("convex, boundary", SymTridiagonal::new(vec![4.0, 3.0, 5.0], vec![1.0, 0.5])?, 1.0, 0.1),
        ("indefinite", SymTridiagonal::new(vec![1.0, -2.0, 0.5], vec![0.7, 0.3])?, 1.0, 1.0),
        // The gradient lies in e₁ and T decouples, so it has no component
        // along the negative-curvature direction.
        ("hard case", SymTridiagonal::new(vec![1.0, -1.0], vec![0.0])?, 0.5, 2.0),
    ];
    for (name, t, g_norm, eps) in cases {
        let s = solve_tr_subproblem(&t, g_norm, eps)?;
        let norm = s.y.iter().map(|v| v * v).sum::<f64>().sqrt();
        println!(
            "{name:<17} ε={eps:<4} m(y)={:>10.6} ‖y‖={norm:.6} λ={:.6} boundary={} hard={}",
            s.model_value, s.lambda, s.on_boundary, s.hard_case
        );
    }
    Ok(())
}
