//! The two dense eigensolvers: cyclic Jacobi for symmetric matrices and
//! Francis double-shift QR for general ones.
//!
//! Run with `cargo run --example eigensolvers`.

use graph_frames::linalg::{general_eigenvalues, operator_norm, spectral_radius, sym_eig, Matrix, DEFAULT_EIG_TOL};
use graph_frames::Result;

fn main() -> Result<()> {
    let m = Matrix::from_rows(&[[4.0, 1.0, 0.5], [1.0, 3.0, -1.0], [0.5, -1.0, 2.0]])?;
    let eig = sym_eig(&m, DEFAULT_EIG_TOL)?;
    println!("symmetric eigenvalues (descending): {:?}", eig.values);
    println!("eigenvectors (columns):\n{:?}", eig.vectors);
    println!("reconstruction error: {:.2e}", (&eig.reconstruct() - &m).frobenius_norm());
    let sqrt_m = eig.apply_function(f64::sqrt);
    println!("|sqrt(M)^2 - M| = {:.2e}\n", (&sqrt_m.matmul(&sqrt_m) - &m).frobenius_norm());

    // A rotation by 90 degrees has eigenvalues +i and -i.
    let rotation = Matrix::from_rows(&[[0.0, -1.0], [1.0, 0.0]])?;
    println!("rotation eigenvalues: {:?}", general_eigenvalues(&rotation)?);

    // Companion matrix of x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3).
    let companion = Matrix::from_rows(&[[6.0, -11.0, 6.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])?;
    println!("companion eigenvalues: {:?}", general_eigenvalues(&companion)?);

    // For a non-normal matrix the spectral radius sits strictly below the norm.
    let shear = Matrix::from_rows(&[[1.0, 5.0], [0.0, 1.0]])?;
    println!(
        "shear: spectral radius {:.6}, operator norm {:.6}",
        spectral_radius(&shear)?,
        operator_norm(&shear)?
    );
    Ok(())
}
