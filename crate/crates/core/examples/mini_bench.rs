//! Small benchmark of the digit MLP printed as CSV.

use std::path::PathBuf;

use trattack::attacks::{AttackConfig, Method, Norm, TargetMode};
use trattack::bench::run_bench;
use trattack::zoo::{load_dataset, load_network};

fn main() -> trattack::Result<()> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let net = load_network(root.join("mlp784/manifest.txt"), root.join("mlp784/weights.nnwb"))?;
    let data = load_dataset(root.join("data/digits28_test.dset"))?;
    let d = data.domain();
    let configs = [
        AttackConfig::fixed_radius(Method::Tr, Norm::L2, 2.0).with_domain(d),
        AttackConfig::new(Method::DeepFool, Norm::L2).with_domain(d),
        AttackConfig::fixed_radius(Method::Tr, Norm::L2, 2.0).with_domain(d).with_mode(TargetMode::Hardest),
        AttackConfig::fixed_radius(Method::Tr, Norm::LInf, 0.05).with_domain(d),
        AttackConfig::fixed_radius(Method::Fgsm, Norm::LInf, 0.01).with_domain(d),
    ];
    let report = run_bench(&net, &data, &configs, 50, 0)?;
    eprintln!("{}", report.host);
    print!("{}", report.to_csv()?);
    Ok(())
}
