//! Knowledge fixtures: concept triples, taxonomy trees, numeric attributes, encyclopedic facts,
//! a static embedding table and unigram frequencies.

mod load;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use load::{load_fixtures, REQUIRED_FILES, OPTIONAL_FILES};

#[derive(Debug, Error)]
pub enum KbError {
    #[error("fixture file {file} is missing")]
    MissingFile { file: String },
    #[error("{file}:{line}: cannot read record: {msg}")]
    Parse { file: String, line: usize, msg: String },
    #[error("{file}:{line}: record {record:?} violates rule: {rule}")]
    Invariant { file: String, line: usize, record: String, rule: String },
    #[error("unknown concept {0:?}")]
    UnknownConcept(String),
    #[error("i/o error on {file}: {source}")]
    Io { file: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, KbError>;

/// Closed predicate registry: fifteen commonsense relations plus the lexical pair relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Predicate {
    AtLocation,
    CapableOf,
    Causes,
    CausesDesire,
    Desires,
    HasA,
    HasPrerequisite,
    HasProperty,
    HasSubevent,
    IsA,
    MadeOf,
    PartOf,
    ReceivesAction,
    RelatedTo,
    UsedFor,
    Synonym,
    Antonym,
}

impl Predicate {
    pub const ALL: [Predicate; 17] = [
        Predicate::AtLocation,
        Predicate::CapableOf,
        Predicate::Causes,
        Predicate::CausesDesire,
        Predicate::Desires,
        Predicate::HasA,
        Predicate::HasPrerequisite,
        Predicate::HasProperty,
        Predicate::HasSubevent,
        Predicate::IsA,
        Predicate::MadeOf,
        Predicate::PartOf,
        Predicate::ReceivesAction,
        Predicate::RelatedTo,
        Predicate::UsedFor,
        Predicate::Synonym,
        Predicate::Antonym,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::AtLocation => "atLocation",
            Predicate::CapableOf => "capableOf",
            Predicate::Causes => "causes",
            Predicate::CausesDesire => "causesDesire",
            Predicate::Desires => "desires",
            Predicate::HasA => "hasA",
            Predicate::HasPrerequisite => "hasPrerequisite",
            Predicate::HasProperty => "hasProperty",
            Predicate::HasSubevent => "hasSubevent",
            Predicate::IsA => "isA",
            Predicate::MadeOf => "madeOf",
            Predicate::PartOf => "partOf",
            Predicate::ReceivesAction => "receivesAction",
            Predicate::RelatedTo => "relatedTo",
            Predicate::UsedFor => "usedFor",
            Predicate::Synonym => "synonym",
            Predicate::Antonym => "antonym",
        }
    }

    /// The fifteen relations that have a natural-language phrase.
    pub fn is_phrased(self) -> bool {
        !matches!(self, Predicate::Synonym | Predicate::Antonym)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Predicate {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Predicate::ALL
            .iter()
            .copied()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Predicate::ALL.iter().map(|p| p.as_str()).collect();
                format!("predicate {s:?} is not in the registry ({})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub subject: String,
    pub predicate: Predicate,
    pub object: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaxonomyNode {
    pub concept: String,
    pub parents: Vec<String>,
    pub tree: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericAttribute {
    pub concept: String,
    pub attribute: String,
    pub value: f64,
    pub bucket: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Relation {
    BandFormedYear,
    ActorSpouse,
    CompanyHqCity,
    BirthPlace,
    BirthDate,
    DeathPlace,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::BandFormedYear,
        Relation::ActorSpouse,
        Relation::CompanyHqCity,
        Relation::BirthPlace,
        Relation::BirthDate,
        Relation::DeathPlace,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::BandFormedYear => "band-formed-year",
            Relation::ActorSpouse => "actor-spouse",
            Relation::CompanyHqCity => "company-hq-city",
            Relation::BirthPlace => "birth-place",
            Relation::BirthDate => "birth-date",
            Relation::DeathPlace => "death-place",
        }
    }
}

impl FromStr for Relation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Relation::ALL
            .iter()
            .copied()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown relation {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AnswerKind {
    Year,
    Person,
    City,
}

impl FromStr for AnswerKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "year" => Ok(AnswerKind::Year),
            "person" => Ok(AnswerKind::Person),
            "city" => Ok(AnswerKind::City),
            _ => Err(format!("unknown answer kind {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncycFact {
    pub entity: String,
    pub relation: Relation,
    pub answer: String,
    pub kind: AnswerKind,
    pub country: Option<String>,
    pub population: Option<u64>,
    /// Intermediate entity linking `entity` to `answer` in two-hop facts (band, actor, company).
    pub bridge: Option<String>,
}

impl EncycFact {
    pub fn year(&self) -> Option<i64> {
        match self.kind {
            AnswerKind::Year => self.answer.parse().ok(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct City {
    pub name: String,
    pub country: String,
    pub population: u64,
}

/// Static word vectors. Out-of-vocabulary lookups return the zero vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingTable {
    dim: usize,
    vocab: Vec<String>,
    data: Vec<f64>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl EmbeddingTable {
    pub fn new(dim: usize, vocab: Vec<String>, data: Vec<f64>) -> Self {
        assert_eq!(vocab.len() * dim, data.len());
        let index = vocab.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        EmbeddingTable { dim, vocab, data, index }
    }

    pub fn empty(dim: usize) -> Self {
        Self::new(dim, Vec::new(), Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vocab(&self) -> &[String] {
        &self.vocab
    }

    pub fn contains(&self, token: &str) -> bool {
        self.index.contains_key(token)
    }

    /// Vector for `token`, or `None` when out of vocabulary.
    pub fn get(&self, token: &str) -> Option<&[f64]> {
        self.index.get(token).map(|&i| &self.data[i * self.dim..(i + 1) * self.dim])
    }

    /// Writes the vector for `token` (zeros when out of vocabulary) into `out`.
    pub fn lookup_into(&self, token: &str, out: &mut [f64]) {
        match self.get(token) {
            Some(v) => out.copy_from_slice(v),
            None => out.iter_mut().for_each(|x| *x = 0.0),
        }
    }

    pub fn lookup(&self, token: &str) -> Vec<f64> {
        let mut v = vec![0.0; self.dim];
        self.lookup_into(token, &mut v);
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnigramEntry {
    pub prob: f64,
    pub content: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct UnigramTable {
    pub corpora: BTreeMap<String, BTreeMap<String, UnigramEntry>>,
}

impl UnigramTable {
    pub fn corpus_ids(&self) -> Vec<&str> {
        self.corpora.keys().map(String::as_str).collect()
    }

    pub fn entry(&self, corpus: &str, token: &str) -> Option<UnigramEntry> {
        self.corpora.get(corpus).and_then(|c| c.get(token)).copied()
    }

    /// A token counts as a content word if any corpus flags it so.
    pub fn is_content(&self, token: &str) -> Option<bool> {
        let mut seen = None;
        for c in self.corpora.values() {
            if let Some(e) = c.get(token) {
                seen = Some(seen.unwrap_or(false) || e.content);
            }
        }
        seen
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlwaysNeverTemplate {
    pub id: String,
    pub text: String,
    /// Published pattern (true) or fixture-defined addition (false).
    pub published: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlwaysNeverRecord {
    pub template_id: String,
    pub subject: String,
    pub object: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClozeRecord {
    pub sentence: String,
    pub gold: String,
    pub distractors: Vec<String>,
}

/// Immutable, validated view of a fixture directory.
#[derive(Debug, Clone, Serialize)]
pub struct KbStore {
    pub triples: Vec<Triple>,
    pub taxonomy: BTreeMap<String, TaxonomyNode>,
    pub numeric: Vec<NumericAttribute>,
    pub encyc: Vec<EncycFact>,
    pub cities: Vec<City>,
    pub embeddings: EmbeddingTable,
    pub unigram: UnigramTable,
    pub always_never_templates: Vec<AlwaysNeverTemplate>,
    pub always_never: Vec<AlwaysNeverRecord>,
    pub mc_lm: Vec<ClozeRecord>,
    /// sha256 of every fixture file that was read, keyed by file name.
    pub file_hashes: BTreeMap<String, String>,
}

impl KbStore {
    pub fn empty() -> Self {
        KbStore {
            triples: Vec::new(),
            taxonomy: BTreeMap::new(),
            numeric: Vec::new(),
            encyc: Vec::new(),
            cities: Vec::new(),
            embeddings: EmbeddingTable::empty(0),
            unigram: UnigramTable::default(),
            always_never_templates: Vec::new(),
            always_never: Vec::new(),
            mc_lm: Vec::new(),
            file_hashes: BTreeMap::new(),
        }
    }

    /// Hash of the canonical serialization of the whole store.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("store serializes");
        hex::encode(Sha256::digest(&bytes))
    }

    pub fn has_concept(&self, c: &str) -> bool {
        self.taxonomy.contains_key(c)
    }

    fn node(&self, c: &str) -> Result<&TaxonomyNode> {
        self.taxonomy.get(c).ok_or_else(|| KbError::UnknownConcept(c.to_string()))
    }

    /// Minimal number of parent edges from `a` up to `b`, or `None` if `b` is not an ancestor.
    pub fn hypernym_distance(&self, a: &str, b: &str) -> Result<Option<usize>> {
        self.node(a)?;
        self.node(b)?;
        Ok(self.ancestors(a)?.get(b).copied())
    }

    /// All ancestors of `a` (including `a` at distance 0) with their minimal distance.
    pub fn ancestors(&self, a: &str) -> Result<BTreeMap<String, usize>> {
        self.node(a)?;
        let mut dist = BTreeMap::new();
        let mut queue = VecDeque::new();
        dist.insert(a.to_string(), 0usize);
        queue.push_back(a.to_string());
        while let Some(c) = queue.pop_front() {
            let d = dist[&c];
            for p in &self.node(&c)?.parents {
                if !dist.contains_key(p) {
                    dist.insert(p.clone(), d + 1);
                    queue.push_back(p.clone());
                }
            }
        }
        Ok(dist)
    }

    /// Concepts whose ancestors include `root` at distance ≥ 1 and that have no children.
    pub fn leaves_under(&self, root: &str) -> Vec<String> {
        let mut has_child = BTreeSet::new();
        for n in self.taxonomy.values() {
            for p in &n.parents {
                has_child.insert(p.as_str());
            }
        }
        self.taxonomy
            .keys()
            .filter(|c| !has_child.contains(c.as_str()))
            .filter(|c| matches!(self.hypernym_distance(c, root), Ok(Some(d)) if d >= 1))
            .cloned()
            .collect()
    }

    pub fn tree_of(&self, c: &str) -> Option<&str> {
        self.taxonomy.get(c).map(|n| n.tree.as_str())
    }

    pub fn numeric(&self, concept: &str, attribute: &str) -> Option<&NumericAttribute> {
        self.numeric.iter().find(|n| n.concept == concept && n.attribute == attribute)
    }

    pub fn holds(&self, subject: &str, predicate: Predicate, object: &str) -> bool {
        self.triples
            .binary_search_by(|t| {
                (t.subject.as_str(), t.predicate, t.object.as_str()).cmp(&(subject, predicate, object))
            })
            .is_ok()
    }

    pub fn triples_with(&self, predicate: Predicate) -> impl Iterator<Item = &Triple> {
        self.triples.iter().filter(move |t| t.predicate == predicate)
    }

    pub fn city(&self, name: &str) -> Option<&City> {
        self.cities.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn node(c: &str, parents: &[&str]) -> TaxonomyNode {
        TaxonomyNode { concept: c.into(), parents: parents.iter().map(|s| s.to_string()).collect(), tree: "animal".into() }
    }

    fn small_store() -> KbStore {
        let mut kb = KbStore::empty();
        for n in [node("animal", &[]), node("bird", &["animal"]), node("crow", &["bird"]), node("pet", &[]), node("parrot", &["bird", "pet"])] {
            kb.taxonomy.insert(n.concept.clone(), n);
        }
        kb
    }

    #[test]
    fn predicate_registry_round_trips() {
        for p in Predicate::ALL {
            assert_eq!(p.as_str().parse::<Predicate>().unwrap(), p);
        }
        let err = "fooRel".parse::<Predicate>().unwrap_err();
        assert!(err.contains("registry"));
        assert_eq!(Predicate::ALL.iter().filter(|p| p.is_phrased()).count(), 15);
    }

    #[test]
    fn hypernym_distance_follows_parent_edges() {
        let kb = small_store();
        assert_eq!(kb.hypernym_distance("crow", "bird").unwrap(), Some(1));
        assert_eq!(kb.hypernym_distance("crow", "animal").unwrap(), Some(2));
        assert_eq!(kb.hypernym_distance("crow", "crow").unwrap(), Some(0));
        assert_eq!(kb.hypernym_distance("bird", "crow").unwrap(), None);
        assert_eq!(kb.hypernym_distance("parrot", "pet").unwrap(), Some(1));
        assert!(matches!(kb.hypernym_distance("crow", "rock"), Err(KbError::UnknownConcept(_))));
    }

    #[test]
    fn leaves_under_root() {
        let kb = small_store();
        assert_eq!(kb.leaves_under("animal"), vec!["crow".to_string(), "parrot".to_string()]);
    }

    #[test]
    fn embedding_oov_is_zero() {
        let t = EmbeddingTable::new(2, vec!["a".into()], vec![1.0, 2.0]);
        assert_eq!(t.lookup("a"), vec![1.0, 2.0]);
        assert_eq!(t.lookup("zzz"), vec![0.0, 0.0]);
    }
}
