//! Fixed-radius trust-region attack on one digit and its iteration trace.

use std::path::PathBuf;

use trattack::attacks::{run_attack, AttackConfig, Method, Norm};
use trattack::autodiff::Differentiable;
use trattack::zoo::{load_dataset, load_network};

fn main() -> trattack::Result<()> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let net = load_network(root.join("mlp784/manifest.txt"), root.join("mlp784/weights.nnwb"))?;
    let data = load_dataset(root.join("data/digits28_test.dset"))?;

    let index = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let x = data.features(index, net.input_shape())?;
    let cfg = AttackConfig::fixed_radius(Method::Tr, Norm::L2, 2.0).with_domain(data.domain());
    let r = run_attack(&net, &x, Some(data.label(index)), &cfg)?;

    println!("example {index}: label {} -> {} ({:?})", r.original_label, r.final_label, r.stop);
    println!("‖Δx‖₂ = {:.4}, ‖x‖₂ = {:.4}", r.delta_norm(), x.l2());
    println!("{:>4} {:>8} {:>12} {:>7} {:>9}", "it", "radius", "objective", "target", "step");
    for t in &r.trace {
        println!("{:>4} {:>8.4} {:>12.6} {:>7} {:>9.5}", t.iteration, t.radius, t.objective, t.target, t.step_norm);
    }
    Ok(())
}
