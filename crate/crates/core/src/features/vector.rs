use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{Error, Result};

/// Feature blocks, in their fixed concatenation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    Category,
    Tfidf,
    Contractions,
    Collocations,
    Chains,
    Readability,
}

pub const BLOCKS: [Block; 6] = [
    Block::Category,
    Block::Tfidf,
    Block::Contractions,
    Block::Collocations,
    Block::Chains,
    Block::Readability,
];

impl Block {
    pub fn name(self) -> &'static str {
        match self {
            Block::Category => "category",
            Block::Tfidf => "tfidf",
            Block::Contractions => "contractions",
            Block::Collocations => "collocations",
            Block::Chains => "chains",
            Block::Readability => "readability",
        }
    }

    pub fn from_name(name: &str) -> Option<Block> {
        BLOCKS.iter().copied().find(|b| b.name() == name)
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

/// Which feature blocks are active. Inactive blocks are zeroed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BlockMask(u8);

impl BlockMask {
    pub const fn empty() -> Self {
        BlockMask(0)
    }

    pub const fn all() -> Self {
        BlockMask(0b11_1111)
    }

    /// Category percentages only: the dictionary-feature baseline.
    pub const fn category_only() -> Self {
        BlockMask(1)
    }

    pub fn with(mut self, block: Block) -> Self {
        self.0 |= block.bit();
        self
    }

    pub fn contains(self, block: Block) -> bool {
        self.0 & block.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: BlockMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: BlockMask) -> BlockMask {
        BlockMask(self.0 | other.0)
    }

    pub fn blocks(self) -> impl Iterator<Item = Block> {
        BLOCKS.into_iter().filter(move |b| self.contains(*b))
    }

    /// Comma-separated block names, e.g. `category,tfidf`.
    pub fn to_names(self) -> String {
        let mut out = String::new();
        for (i, b) in self.blocks().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(b.name());
        }
        out
    }

    pub fn parse(names: &str) -> Result<Self> {
        let mut mask = BlockMask::empty();
        for name in names.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            let block = Block::from_name(name)
                .ok_or_else(|| Error::InvalidConfig(alloc::format!("unknown feature block {name:?}")))?;
            mask = mask.with(block);
        }
        Ok(mask)
    }
}

impl Serialize for BlockMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_names())
    }
}

impl<'de> Deserialize<'de> for BlockMask {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        BlockMask::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Digest of a feature layout together with its active-block mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SchemaHash(pub String);

impl core::fmt::Display for SchemaHash {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(32);
    for b in &digest[..16] {
        let _ = write!(out, "{b:02x}");
    }
    out
}

impl SchemaHash {
    pub(crate) fn compute(layout_id: &str, mask: BlockMask) -> Self {
        let mut key = String::from(layout_id);
        key.push('|');
        key.push_str(&mask.to_names());
        SchemaHash(hex_digest(key.as_bytes()))
    }
}

/// Dense feature values in block order, tagged with the layout that produced them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    values: Vec<f64>,
    widths: [usize; 6],
    mask: BlockMask,
    layout_id: String,
    schema_hash: SchemaHash,
}

impl FeatureVector {
    pub(crate) fn assemble(
        values: Vec<f64>,
        widths: [usize; 6],
        mask: BlockMask,
        layout_id: String,
    ) -> Result<Self> {
        debug_assert_eq!(values.len(), widths.iter().sum::<usize>());
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        let schema_hash = SchemaHash::compute(&layout_id, mask);
        Ok(FeatureVector {
            values,
            widths,
            mask,
            layout_id,
            schema_hash,
        })
    }

    /// Wraps raw values as a single category-style block with every block active.
    /// Useful for synthetic data and external feature pipelines.
    pub fn from_raw(values: Vec<f64>) -> Result<Self> {
        let widths = [values.len(), 0, 0, 0, 0, 0];
        let mut layout = String::from("raw:");
        let _ = write!(layout, "{}", values.len());
        Self::assemble(values, widths, BlockMask::all(), hex_digest(layout.as_bytes()))
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn widths(&self) -> [usize; 6] {
        self.widths
    }

    pub fn mask(&self) -> BlockMask {
        self.mask
    }

    pub fn layout_id(&self) -> &str {
        &self.layout_id
    }

    pub fn schema_hash(&self) -> &SchemaHash {
        &self.schema_hash
    }

    /// Column range of a block.
    pub fn block_range(&self, block: Block) -> core::ops::Range<usize> {
        let idx = block as usize;
        let start: usize = self.widths[..idx].iter().sum();
        start..start + self.widths[idx]
    }

    pub fn block(&self, block: Block) -> &[f64] {
        &self.values[self.block_range(block)]
    }

    /// Narrows the active blocks, zeroing the dropped ones.
    pub fn with_mask(&self, mask: BlockMask) -> Result<FeatureVector> {
        if mask.is_empty() {
            return Err(Error::NoFeaturesSelected);
        }
        if !mask.is_subset_of(self.mask) {
            return Err(Error::SchemaMismatch {
                expected: mask.to_names(),
                found: self.mask.to_names(),
            });
        }
        let mut values = self.values.clone();
        for b in BLOCKS {
            if !mask.contains(b) {
                values[self.block_range(b)].fill(0.0);
            }
        }
        Self::assemble(values, self.widths, mask, self.layout_id.clone())
    }
}
