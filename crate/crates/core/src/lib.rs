//! Symbolic-reasoning probes for masked language models: dataset synthesis from knowledge
//! fixtures, control variants, multi-choice scoring heads, frozen-encoder learning curves,
//! static-embedding baselines and aggregate metrics.

pub mod heads;
pub mod kb;
pub mod metrics;
pub mod text;
pub mod train;
pub mod backends;
pub mod baselines;
pub mod controls;
pub mod probes;
pub mod run;
pub mod util;
