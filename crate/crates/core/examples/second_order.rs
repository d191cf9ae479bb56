//! First- versus second-order trust-region attacks on the swish MLP.

use std::path::PathBuf;

use trattack::attacks::{run_attack, AttackConfig, Method, Norm};
use trattack::autodiff::Differentiable;
use trattack::zoo::{load_dataset, load_network};

fn main() -> trattack::Result<()> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let net = load_network(root.join("mlp_swish/manifest.txt"), root.join("mlp_swish/weights.nnwb"))?;
    let data = load_dataset(root.join("data/digitsrgb32_test.dset"))?;

    for index in 0..5 {
        let x = data.features(index, net.input_shape())?;
        let label = Some(data.label(index));
        let mut line = format!("example {index}:");
        for method in [Method::TrAdap, Method::TrSecond] {
            let cfg = AttackConfig::new(method, Norm::L2).with_domain(data.domain());
            let r = run_attack(&net, &x, label, &cfg)?;
            line += &format!(
                "  {method} ‖Δx‖₂={:.4} iters={} hvp={} fooled={}",
                r.delta_norm(),
                r.iterations,
                r.cost.hvp,
                r.success
            );
        }
        println!("{line}");
    }
    Ok(())
}
