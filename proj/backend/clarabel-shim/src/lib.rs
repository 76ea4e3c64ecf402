//! Minimal C ABI around the Clarabel conic solver.
//!
//! Solves   min q'x   s.t.  A x + s = b,  s in K
//! where K is a product of zero, nonnegative and PSD-triangle cones,
//! given in the order the rows of A are laid out.
//!
//! Status codes returned to C:
//!   0 solved, 1 almost solved,
//!   2 primal infeasible, 3 almost primal infeasible,
//!   4 dual infeasible, 5 almost dual infeasible,
//!   6 max iterations, 7 max time, 8 numerical error,
//!   9 insufficient progress, 10 unsolved, -1 bad input, -2 internal panic.

use clarabel::algebra::*;
use clarabel::solver::*;
use std::slice;

pub const CONE_ZERO: i32 = 0;
pub const CONE_NONNEG: i32 = 1;
pub const CONE_PSD_TRIANGLE: i32 = 2;

fn status_code(status: SolverStatus) -> i32 {
    match status {
        SolverStatus::Solved => 0,
        SolverStatus::AlmostSolved => 1,
        SolverStatus::PrimalInfeasible => 2,
        SolverStatus::AlmostPrimalInfeasible => 3,
        SolverStatus::DualInfeasible => 4,
        SolverStatus::AlmostDualInfeasible => 5,
        SolverStatus::MaxIterations => 6,
        SolverStatus::MaxTime => 7,
        SolverStatus::NumericalError => 8,
        SolverStatus::InsufficientProgress => 9,
        _ => 10,
    }
}

/// # Safety
/// All pointers must reference buffers of the documented lengths.
#[no_mangle]
pub unsafe extern "C" fn clarabel_shim_solve(
    n_vars: usize,
    n_rows: usize,
    nnz: usize,
    colptr: *const usize,
    rowval: *const usize,
    nzval: *const f64,
    q: *const f64,
    b: *const f64,
    cone_tags: *const i32,
    cone_dims: *const usize,
    n_cones: usize,
    max_iter: u32,
    time_limit: f64,
    tol_gap: f64,
    tol_feas: f64,
    verbose: i32,
    x_out: *mut f64,
    s_out: *mut f64,
    z_out: *mut f64,
    obj_out: *mut f64,
    iters_out: *mut u32,
    solve_time_out: *mut f64,
) -> i32 {
    let result = std::panic::catch_unwind(|| {
        let colptr = slice::from_raw_parts(colptr, n_vars + 1).to_vec();
        let rowval = slice::from_raw_parts(rowval, nnz).to_vec();
        let nzval = slice::from_raw_parts(nzval, nnz).to_vec();
        let q = slice::from_raw_parts(q, n_vars).to_vec();
        let b = slice::from_raw_parts(b, n_rows).to_vec();
        let tags = slice::from_raw_parts(cone_tags, n_cones);
        let dims = slice::from_raw_parts(cone_dims, n_cones);

        let mut cones: Vec<SupportedConeT<f64>> = Vec::with_capacity(n_cones);
        for k in 0..n_cones {
            match tags[k] {
                CONE_ZERO => cones.push(ZeroConeT(dims[k])),
                CONE_NONNEG => cones.push(NonnegativeConeT(dims[k])),
                CONE_PSD_TRIANGLE => cones.push(PSDTriangleConeT(dims[k])),
                _ => return -1,
            }
        }

        let p = CscMatrix::<f64>::zeros((n_vars, n_vars));
        let a = CscMatrix::new(n_rows, n_vars, colptr, rowval, nzval);

        let settings = match DefaultSettingsBuilder::default()
            .max_iter(max_iter)
            .time_limit(time_limit)
            .tol_gap_abs(tol_gap)
            .tol_gap_rel(tol_gap)
            .tol_feas(tol_feas)
            .max_threads(1)
            .verbose(verbose != 0)
            .build()
        {
            Ok(s) => s,
            Err(_) => return -1,
        };

        let mut solver = match DefaultSolver::new(&p, &q, &a, &b, &cones, settings) {
            Ok(s) => s,
            Err(_) => return -1,
        };
        solver.solve();

        let sol = &solver.solution;
        slice::from_raw_parts_mut(x_out, n_vars).copy_from_slice(&sol.x);
        slice::from_raw_parts_mut(s_out, n_rows).copy_from_slice(&sol.s);
        slice::from_raw_parts_mut(z_out, n_rows).copy_from_slice(&sol.z);
        *obj_out = sol.obj_val;
        *iters_out = sol.iterations;
        *solve_time_out = sol.solve_time;
        status_code(sol.status)
    });
    result.unwrap_or(-2)
}
