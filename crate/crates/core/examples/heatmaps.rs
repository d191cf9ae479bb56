//! Write shared-scale |Δx| heat maps for DeepFool and TR on one image.

use std::path::PathBuf;

use trattack::attacks::{run_attack, AttackConfig, Method, Norm};
use trattack::autodiff::Differentiable;
use trattack::bench::{dump_heatmap, HeatmapScale};
use trattack::zoo::{load_dataset, load_network};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let net = load_network(root.join("alexlike_relu/manifest.txt"), root.join("alexlike_relu/weights.nnwb"))?;
    let data = load_dataset(root.join("data/digitsrgb32_test.dset"))?;
    let out = std::env::temp_dir().join("trattack_heatmaps");
    std::fs::create_dir_all(&out)?;

    let index = 2;
    let x = data.features(index, net.input_shape())?;
    let configs = [
        ("deepfool", AttackConfig::new(Method::DeepFool, Norm::L2)),
        ("tr", AttackConfig::fixed_radius(Method::Tr, Norm::L2, 2.0)),
    ];
    let mut deltas = Vec::new();
    for (name, cfg) in configs {
        let r = run_attack(&net, &x, Some(data.label(index)), &cfg.with_domain(data.domain()))?;
        println!("{name}: ‖Δx‖₂ = {:.4}, max |Δx| = {:.4}", r.delta_norm(), r.delta.linf());
        deltas.push((name, r.delta));
    }
    // One scale for both maps so brightness is comparable.
    let max = deltas.iter().map(|(_, d)| d.linf()).fold(0.0, f64::max);
    for (name, delta) in &deltas {
        let path: PathBuf = out.join(format!("{index}_{name}.pgm"));
        dump_heatmap(delta, HeatmapScale::Shared(max), &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
