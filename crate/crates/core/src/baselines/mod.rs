//! Non-contextual lower bounds over the static embedding table.

pub mod concat;
pub mod esim;

pub use concat::{baseline_mlm_forward, concat_data, concat_model, concat_representation, AnswerVocab};
pub use esim::{baseline_qa_forward, EsimData, EsimModel};
