//! Flat parameter storage with named, grouped blocks.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::controls::HeadMode;
use crate::util;

/// `Hidden` is everything before the output projection; Linear mode trains only `Output`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Hidden,
    Output,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub shape: Vec<usize>,
    pub offset: usize,
    pub group: Group,
}

impl Block {
    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn range(&self) -> Range<usize> {
        self.offset..self.offset + self.len()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ParamSet {
    pub data: Vec<f64>,
    pub blocks: Vec<Block>,
}

impl ParamSet {
    pub fn push(&mut self, name: &str, shape: &[usize], group: Group, values: Vec<f64>) {
        let n: usize = shape.iter().product();
        assert_eq!(values.len(), n, "block {name} has {} values for shape {shape:?}", values.len());
        assert!(self.find(name).is_none(), "duplicate block {name}");
        self.blocks.push(Block { name: name.into(), shape: shape.to_vec(), offset: self.data.len(), group });
        self.data.extend(values);
    }

    pub fn find(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn range(&self, name: &str) -> Range<usize> {
        self.find(name).unwrap_or_else(|| panic!("no parameter block {name}")).range()
    }

    pub fn get(&self, name: &str) -> &[f64] {
        &self.data[self.range(name)]
    }

    pub fn get_mut(&mut self, name: &str) -> &mut [f64] {
        let r = self.range(name);
        &mut self.data[r]
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Element ranges updated under `mode`.
    pub fn trainable(&self, mode: HeadMode) -> Vec<Range<usize>> {
        self.blocks.iter().filter(|b| mode == HeadMode::Mlp || b.group == Group::Output).map(Block::range).collect()
    }

    fn digest<'a>(&self, blocks: impl Iterator<Item = &'a Block>) -> String {
        let mut bytes = Vec::new();
        for b in blocks {
            bytes.extend_from_slice(b.name.as_bytes());
            bytes.push(0);
            for v in &self.data[b.range()] {
                bytes.extend_from_slice(&v.to_le_bytes());
            }
        }
        util::sha256_hex(&bytes)
    }

    /// Digest of the exact bit patterns of one group.
    pub fn group_hash(&self, group: Group) -> String {
        self.digest(self.blocks.iter().filter(|b| b.group == group))
    }

    pub fn hash(&self) -> String {
        self.digest(self.blocks.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_are_contiguous_and_grouped() {
        let mut p = ParamSet::default();
        p.push("w1", &[2, 3], Group::Hidden, vec![1.0; 6]);
        p.push("b2", &[2], Group::Output, vec![0.5; 2]);
        assert_eq!(p.range("b2"), 6..8);
        assert_eq!(p.trainable(HeadMode::Linear), vec![6..8]);
        assert_eq!(p.trainable(HeadMode::Mlp), vec![0..6, 6..8]);
        let h = p.group_hash(Group::Hidden);
        p.get_mut("b2")[0] = 9.0;
        assert_eq!(p.group_hash(Group::Hidden), h);
        p.get_mut("w1")[5] = -0.0;
        assert_ne!(p.group_hash(Group::Hidden), h);
    }
}
