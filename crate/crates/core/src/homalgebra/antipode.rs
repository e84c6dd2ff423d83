use super::{convolution, HomBialgebra, HomHopfAlgebra};
use crate::homspace::{compare_on_basis, flip_matrix};
use crate::kernel::{basis_vector, solve_linear, Matrix, Solution};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum AntipodeSolution<F> {
    Unique(Matrix<F>),
    /// No two-sided solution; records whether either one-sided system
    /// (together with commutation with `α`) is solvable on its own.
    NoSolution {
        left_solvable: bool,
        right_solvable: bool,
    },
    Underdetermined {
        particular: Matrix<F>,
        kernel_dim: usize,
    },
}

impl<F: Scalar> AntipodeSolution<F> {
    pub fn unique(self) -> Option<Matrix<F>> {
        match self {
            AntipodeSolution::Unique(s) => Some(s),
            _ => None,
        }
    }
}

/// Blocks of the linear system in the `d²` entries of `S`, row-major:
/// `S∗id`, `id∗S` and `S∘α − α∘S`, each with its right-hand side.
fn blocks<F: Scalar>(b: &HomBialgebra<F>) -> [(Matrix<F>, Vec<F>); 3] {
    let d = b.dim();
    let n = d * d;
    let id = Matrix::identity(d);
    let alpha = b.alpha();
    let (c, a) = (b.coalgebra(), b.algebra());
    let mut cols = [Vec::new(), Vec::new(), Vec::new()];
    for k in 0..n {
        let e = Matrix::from_vec(d, d, basis_vector(n, k)).expect("d*d entries");
        cols[0].push(
            convolution(&e, &id, c, a)
                .expect("square maps")
                .entries()
                .to_vec(),
        );
        cols[1].push(
            convolution(&id, &e, c, a)
                .expect("square maps")
                .entries()
                .to_vec(),
        );
        cols[2].push((&(&e * alpha) - &(alpha * &e)).entries().to_vec());
    }
    let ee = b.unit_counit().entries().to_vec();
    let [l, r, s] = cols.map(|c| Matrix::from_columns(&c).expect("equal lengths"));
    [(l, ee.clone()), (r, ee), (s, vec![F::zero(); n])]
}

fn stack<F: Scalar>(parts: &[&(Matrix<F>, Vec<F>)]) -> (Matrix<F>, Vec<F>) {
    let cols = parts[0].0.cols();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (m, v) in parts {
        rows.extend(m.to_rows());
        rhs.extend(v.iter().cloned());
    }
    (
        Matrix::from_rows(rows).unwrap_or_else(|_| Matrix::zeros(0, cols)),
        rhs,
    )
}

fn solvable<F: Scalar>(system: &(Matrix<F>, Vec<F>)) -> bool {
    !matches!(
        solve_linear(&system.0, &system.1),
        Ok(Solution::Inconsistent)
    )
}

/// Solves `S∗id = id∗S = η∘ε`, `S∘α = α∘S` for `S`.
pub fn solve_antipode<F: Scalar>(b: &HomBialgebra<F>) -> AntipodeSolution<F> {
    let d = b.dim();
    let [left, right, comm] = blocks(b);
    let full = stack(&[&left, &right, &comm]);
    let to_matrix = |v: Vec<F>| Matrix::from_vec(d, d, v).expect("d*d entries");
    match solve_linear(&full.0, &full.1).expect("system is square in its unknowns") {
        Solution::Unique(v) => AntipodeSolution::Unique(to_matrix(v)),
        Solution::Family { particular, kernel } => AntipodeSolution::Underdetermined {
            particular: to_matrix(particular),
            kernel_dim: kernel.dim(),
        },
        Solution::Inconsistent => AntipodeSolution::NoSolution {
            left_solvable: solvable(&stack(&[&left, &comm])),
            right_solvable: solvable(&stack(&[&right, &comm])),
        },
    }
}

/// Dimension of the homogeneous solution space of the antipode system.
pub fn antipode_kernel_dim<F: Scalar>(b: &HomBialgebra<F>) -> usize {
    let [left, right, comm] = blocks(b);
    stack(&[&left, &right, &comm]).0.kernel().dim()
}

/// `S(hk) = S(k)S(h)`, `S(1) = 1`, `Δ(S(h)) = S(h₂)⊗S(h₁)`, `ε∘S = ε`.
pub fn check_antipode_properties<F: Scalar>(h: &HomHopfAlgebra<F>) -> Report {
    let d = h.dim();
    let s = h.antipode();
    let m = h.algebra().mult();
    let delta = h.coalgebra().comult();
    let u = Matrix::column_vector(h.algebra().unit());
    let e = Matrix::row_vector(h.coalgebra().counit());
    let flip = flip_matrix::<F>(d, d);
    let ss = s.kron(s);
    let mut r = Report::new("antipode properties");
    r.push(compare_on_basis(
        "anti_multiplicative",
        &(s * m),
        &(&(m * &ss) * &flip),
        &[d, d],
    ));
    r.push(compare_on_basis("unit", &(s * &u), &u, &[1]));
    r.push(compare_on_basis(
        "anti_comultiplicative",
        &(delta * s),
        &(&(&ss * &flip) * delta),
        &[d],
    ));
    r.push(compare_on_basis("counit", &(&e * s), &e, &[d]));
    r
}
