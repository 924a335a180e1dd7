//! Static-embedding MLM baseline: the first 20 baseline tokens, each looked up in the embedding
//! table (zeros when out of vocabulary), concatenated and fed to an MLM-style head.

use std::collections::BTreeMap;

use ndarray::Array2;

use crate::heads::{softmax, Activation};
use crate::kb::EmbeddingTable;
use crate::probes::Example;
use crate::text::baseline_tokens;
use crate::train::{MlmData, MlmModel};

pub const CONCAT_TOKENS: usize = 20;
pub const DEFAULT_HIDDEN: usize = 128;

/// `20 × D_e` features; tokens past the 20th are ignored.
pub fn concat_representation(tokens: &[String], table: &EmbeddingTable) -> Vec<f64> {
    let d = table.dim();
    let mut out = vec![0.0; CONCAT_TOKENS * d];
    for (i, t) in baseline_tokens(tokens).iter().take(CONCAT_TOKENS).enumerate() {
        table.lookup_into(t, &mut out[i * d..(i + 1) * d]);
    }
    out
}

/// Output vocabulary of the baseline head: every candidate string of the datasets it serves,
/// in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnswerVocab {
    index: BTreeMap<String, usize>,
}

impl AnswerVocab {
    pub fn build<'a>(examples: impl IntoIterator<Item = &'a Example>) -> Self {
        let mut words: Vec<String> = examples.into_iter().flat_map(|e| e.candidates.iter().cloned()).collect();
        words.sort();
        words.dedup();
        AnswerVocab { index: words.into_iter().enumerate().map(|(i, w)| (w, i)).collect() }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn row(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }
}

pub fn concat_data(exs: &[Example], table: &EmbeddingTable, vocab: &AnswerVocab) -> MlmData {
    let d = CONCAT_TOKENS * table.dim();
    let mut flat = Vec::with_capacity(exs.len() * d);
    for e in exs {
        flat.extend(concat_representation(&e.tokens, table));
    }
    MlmData {
        x: Array2::from_shape_vec((exs.len(), d), flat).expect("rows"),
        candidates: exs
            .iter()
            .map(|e| e.candidates.iter().map(|c| vocab.row(c).expect("candidate in answer vocabulary")).collect())
            .collect(),
        gold: exs.iter().map(|e| e.gold).collect(),
    }
}

/// Fresh baseline head for a given answer vocabulary.
pub fn concat_model(table: &EmbeddingTable, vocab: &AnswerVocab, hidden: usize, seed: u64) -> MlmModel {
    MlmModel::random(CONCAT_TOKENS * table.dim(), hidden, vocab.len(), Activation::GeluTanh, false, seed)
}

/// Candidate distribution for one example.
pub fn baseline_mlm_forward(ex: &Example, table: &EmbeddingTable, vocab: &AnswerVocab, model: &MlmModel) -> Vec<f64> {
    use crate::train::Model;
    let data = concat_data(std::slice::from_ref(ex), table, vocab);
    model.probs(&data, &[0]).pop().unwrap_or_else(|| softmax(&[]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probes::Setup;

    fn table() -> EmbeddingTable {
        EmbeddingTable::new(2, vec!["a".into(), "b".into()], vec![1.0, 2.0, 3.0, 4.0])
    }

    fn ex(tokens: &[&str]) -> Example {
        Example {
            setup: Setup::McMlm,
            tokens: tokens.iter().map(|s| s.to_string()).collect(),
            candidates: vec!["x".into(), "y".into()],
            gold: 0,
            arguments: vec![],
            template_id: "t".into(),
        }
    }

    #[test]
    fn fixed_length_and_oov_zeros() {
        let v = concat_representation(&ex(&["A", "zz", "b"]).tokens, &table());
        assert_eq!(v.len(), 40);
        assert_eq!(&v[..6], &[1.0, 2.0, 0.0, 0.0, 3.0, 4.0]);
        assert!(v[6..].iter().all(|&x| x == 0.0));
    }

    #[test]
    fn tokens_past_twenty_are_ignored() {
        let mut long: Vec<&str> = vec!["a"; 20];
        long.extend(["a", "b"]);
        let mut other: Vec<&str> = vec!["a"; 20];
        other.extend(["b", "zz", "a"]);
        assert_eq!(concat_representation(&ex(&long).tokens, &table()), concat_representation(&ex(&other).tokens, &table()));
    }

    #[test]
    fn all_oov_input_gives_softmax_of_biases() {
        let t = table();
        let e = ex(&["qq", "rr"]);
        let vocab = AnswerVocab::build([&e]);
        let mut m = concat_model(&t, &vocab, 4, 1);
        m.params.get_mut("b2").copy_from_slice(&[0.3, -0.4]);
        let p = baseline_mlm_forward(&e, &t, &vocab, &m);
        let q = softmax(&[0.3, -0.4]);
        assert!((p[0] - q[0]).abs() < 1e-12);
    }
}
