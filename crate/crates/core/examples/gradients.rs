//! Gradient and Hessian-vector product of a small swish network written
//! directly against the tape.

use trattack::autodiff::{hvp, value_and_grad, Differentiable, Scalar, Tape, Var};
use trattack::{Result, Tensor};

/// `x ↦ sum(swish(Wx + b))` on R³.
struct SwishSum {
    w: Tensor,
    b: Tensor,
}

impl Differentiable for SwishSum {
    fn input_shape(&self) -> &[usize] {
        &[3]
    }

    fn eval<'t, S: Scalar>(&'t self, tape: &mut Tape<'t, S>, x: Var) -> Result<Var> {
        let z = tape.linear(x, &self.w, &self.b)?;
        let a = tape.swish(z)?;
        tape.sum(a)
    }
}

fn main() -> Result<()> {
    let f = SwishSum {
        w: Tensor::new(vec![2, 3], vec![1.0, -0.5, 0.25, 0.3, 0.8, -1.2])?,
        b: Tensor::from_vec(vec![0.1, -0.2])?,
    };
    let x = Tensor::from_vec(vec![0.5, -1.0, 2.0])?;
    let (value, g) = value_and_grad(&f, &x)?;
    println!("f(x)      = {value:.12}");
    println!("∇f(x)     = {:?}", g.data());

    // Columns of the Hessian from unit directions.
    for i in 0..3 {
        let mut e = vec![0.0; 3];
        e[i] = 1.0;
        let hv = hvp(&f, &x, &Tensor::from_vec(e)?)?;
        println!("H e{i}      = {:?}", hv.data());
    }
    Ok(())
}
