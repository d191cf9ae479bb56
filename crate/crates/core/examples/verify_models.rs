//! Load every shipped network and check it against its golden fixtures.

use std::path::PathBuf;

use trattack::zoo::{load_network, verify_golden, FixtureFile, GoldenTolerance};

fn main() -> trattack::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for model in ["mlp784", "mlp_swish", "alexlike_relu", "alexlike_swish"] {
        let dir = fixtures.join(model);
        let net = load_network(dir.join("manifest.txt"), dir.join("weights.nnwb"))?;
        let file = FixtureFile::load(dir.join("golden.json"))?;
        let report = verify_golden(&net, &file.fixtures, &GoldenTolerance::default());
        println!(
            "{model:<15} {:?} activation, {} tensors, {} fixtures: {}",
            net.activation(),
            net.parameter_tensors(),
            report.count(),
            if report.passed { "ok" } else { "MISMATCH" }
        );
        for f in report.failures() {
            println!("  {f:?}");
        }
    }
    Ok(())
}
