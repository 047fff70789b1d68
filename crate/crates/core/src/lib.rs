//! Peripapillary nerve fiber layer (NFL) map processing and glaucoma
//! classification at desk scale.
//!
//! The crate covers the full path from raw concentric-ring scan profiles to
//! diagnostic statistics:
//!
//! * [`polar`] — reflectance/thickness polar maps: ring interpolation, PPEC
//!   normalization, vessel inpainting, disc recentering, annulus masking,
//!   azimuthal first-harmonic filtering, and trajectory-aligned superpixel
//!   reduction.
//! * [`phantom`] — synthetic eye generator producing cohorts whose group
//!   statistics are calibrated against published normal/glaucoma values.
//! * [`neural`] — a hybrid classifier: a small CNN with circular azimuthal
//!   padding over the superpixel grids fused with a fully connected network
//!   over clinical scalars, trained with Adam on binary cross-entropy.
//! * [`baselines`] — ridge logistic regression reference models.
//! * [`evaluation`] — subject-level splits, ROC/AUC statistics, sensitivity
//!   at fixed specificity, and the DeLong paired AUC comparison.
//! * [`bundle`] — the on-disk cohort bundle (manifest + raw arrays + CSV).
//!
//! All operations are deterministic given their inputs and seeds; parallel
//! execution (the `parallel` feature, on by default) never changes output
//! bytes because per-item work is independent and reductions run in a fixed
//! order.

pub mod baselines;
pub mod bundle;
pub mod config;
pub mod evaluation;
pub mod exec;
pub mod neural;
pub mod phantom;
pub mod polar;
