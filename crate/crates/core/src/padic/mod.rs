//! Precision-tracked arithmetic in `Q_p`, the fermionic q-integral as a limit
//! of weighted Riemann sums, the Iwasawa logarithm, and the two evaluations
//! of the p-adic log-gamma function (its series in `1/x` and the Riemann
//! sum of its integral form).

mod integral;
mod log;
mod loggamma;
mod number;

pub use integral::{
    convergence_json, eval_qrational, fermionic_riemann_sum, is_strictly_increasing, moment_convergence,
    ConvergencePoint, IntegrandSpec,
};
pub use log::{iwasawa_log, one_plus_z_log, padic_log1p};
pub use loggamma::{loggamma_direct, loggamma_series, loggamma_series_terms, loggamma_term_count};
pub use number::{Agreement, PadicContext, PadicNumber};
