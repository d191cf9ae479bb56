//! Every attack method on one image of the ReLU convnet.

use std::path::PathBuf;

use trattack::attacks::{run_attack, AttackConfig, Method, Norm};
use trattack::autodiff::Differentiable;
use trattack::bench::rel_perturbation;
use trattack::zoo::{load_dataset, load_network};

fn main() -> trattack::Result<()> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let net = load_network(root.join("alexlike_relu/manifest.txt"), root.join("alexlike_relu/weights.nnwb"))?;
    let data = load_dataset(root.join("data/digitsrgb32_test.dset"))?;
    let index = 3;
    let x = data.features(index, net.input_shape())?;

    for (method, norm, eps) in [
        (Method::Tr, Norm::L2, Some(2.0)),
        (Method::TrAdap, Norm::L2, None),
        (Method::DeepFool, Norm::L2, None),
        (Method::Cw, Norm::L2, None),
        (Method::Tr, Norm::LInf, Some(0.05)),
        (Method::DeepFool, Norm::LInf, None),
        (Method::Fgsm, Norm::LInf, Some(0.01)),
    ] {
        let cfg = match eps {
            Some(e) => AttackConfig::fixed_radius(method, norm, e),
            None => AttackConfig::new(method, norm),
        }
        .with_domain(data.domain());
        let r = run_attack(&net, &x, Some(data.label(index)), &cfg)?;
        let rho = rel_perturbation(x.data(), r.delta.data(), norm)?;
        println!(
            "{:<9} {:<4} fooled={:<5} ρ={:>7.3}%  iters={:<4} {:>8.1} ms",
            method.as_str(),
            norm.as_str(),
            r.success,
            100.0 * rho,
            r.iterations,
            1e3 * r.seconds
        );
    }
    Ok(())
}
