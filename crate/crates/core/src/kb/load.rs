use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::*;

pub const REQUIRED_FILES: [&str; 6] =
    ["triples.tsv", "taxonomy.tsv", "numeric.tsv", "encyc.tsv", "embeddings.txt", "unigram.tsv"];

/// Files read when present: a city gazetteer, Always-Never templates and labels, cloze sentences.
pub const OPTIONAL_FILES: [&str; 4] = ["cities.tsv", "always_never_templates.tsv", "always_never.tsv", "mc_lm.tsv"];

const UNIGRAM_TOLERANCE: f64 = 1e-6;

struct Source {
    name: String,
    text: String,
}

impl Source {
    /// Non-empty lines with their 1-based line numbers.
    fn records(&self) -> impl Iterator<Item = (usize, &str)> {
        self.text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
    }

    fn parse_err(&self, line: usize, msg: impl Into<String>) -> KbError {
        KbError::Parse { file: self.name.clone(), line, msg: msg.into() }
    }

    fn rule_err(&self, line: usize, record: &str, rule: impl Into<String>) -> KbError {
        KbError::Invariant { file: self.name.clone(), line, record: record.to_string(), rule: rule.into() }
    }

    fn fields<'a>(&self, line: usize, rec: &'a str, min: usize, max: usize) -> Result<Vec<&'a str>> {
        let f: Vec<&str> = rec.split('\t').collect();
        if f.len() < min || f.len() > max {
            return Err(self.parse_err(line, format!("expected {min}..={max} tab-separated fields, found {}", f.len())));
        }
        Ok(f)
    }
}

fn read(dir: &Path, name: &str, required: bool, hashes: &mut BTreeMap<String, String>) -> Result<Option<Source>> {
    let path = dir.join(name);
    if !path.exists() {
        return if required { Err(KbError::MissingFile { file: path.display().to_string() }) } else { Ok(None) };
    }
    let bytes = fs::read(&path).map_err(|source| KbError::Io { file: path.display().to_string(), source })?;
    hashes.insert(name.to_string(), hex::encode(Sha256::digest(&bytes)));
    let text = String::from_utf8(bytes).map_err(|e| KbError::Parse { file: name.to_string(), line: 0, msg: e.to_string() })?;
    Ok(Some(Source { name: name.to_string(), text }))
}

/// Loads and validates every fixture file in `dir`.
pub fn load_fixtures(dir: &Path) -> Result<KbStore> {
    let mut hashes = BTreeMap::new();
    let mut req = |n: &str| read(dir, n, true, &mut hashes).map(|s| s.expect("required file present"));
    let triples_src = req("triples.tsv")?;
    let taxonomy_src = req("taxonomy.tsv")?;
    let numeric_src = req("numeric.tsv")?;
    let encyc_src = req("encyc.tsv")?;
    let emb_src = req("embeddings.txt")?;
    let uni_src = req("unigram.tsv")?;
    let cities_src = read(dir, "cities.tsv", false, &mut hashes)?;
    let ant_src = read(dir, "always_never_templates.tsv", false, &mut hashes)?;
    let an_src = read(dir, "always_never.tsv", false, &mut hashes)?;
    let mclm_src = read(dir, "mc_lm.tsv", false, &mut hashes)?;

    let mut kb = KbStore::empty();
    kb.triples = parse_triples(&triples_src)?;
    kb.taxonomy = parse_taxonomy(&taxonomy_src)?;
    kb.numeric = parse_numeric(&numeric_src)?;
    kb.encyc = parse_encyc(&encyc_src)?;
    kb.embeddings = parse_embeddings(&emb_src)?;
    kb.unigram = parse_unigram(&uni_src)?;
    if let Some(s) = cities_src {
        kb.cities = parse_cities(&s)?;
    }
    if let Some(s) = ant_src {
        kb.always_never_templates = parse_an_templates(&s)?;
    }
    if let Some(s) = an_src {
        kb.always_never = parse_an(&s, &kb.always_never_templates)?;
    }
    if let Some(s) = mclm_src {
        kb.mc_lm = parse_cloze(&s)?;
    }
    kb.file_hashes = hashes;
    Ok(kb)
}

fn parse_triples(src: &Source) -> Result<Vec<Triple>> {
    let mut out = BTreeSet::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 3, 3)?;
        let predicate: Predicate = f[1].parse().map_err(|e: String| src.rule_err(line, rec, e))?;
        if f[0].is_empty() || f[2].is_empty() {
            return Err(src.rule_err(line, rec, "subject and object must be non-empty"));
        }
        if f[0] == f[2] {
            return Err(src.rule_err(line, rec, "subject must differ from object"));
        }
        out.insert(Triple { subject: f[0].to_string(), predicate, object: f[2].to_string() });
    }
    Ok(out.into_iter().collect())
}

fn parse_taxonomy(src: &Source) -> Result<BTreeMap<String, TaxonomyNode>> {
    let mut nodes: BTreeMap<String, TaxonomyNode> = BTreeMap::new();
    let mut first_line: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 3, 3)?;
        let (concept, parent, tree) = (f[0], f[1], f[2]);
        if concept.is_empty() || tree.is_empty() {
            return Err(src.rule_err(line, rec, "concept and tree-id must be non-empty"));
        }
        let node = nodes.entry(concept.to_string()).or_insert_with(|| TaxonomyNode {
            concept: concept.to_string(),
            parents: Vec::new(),
            tree: tree.to_string(),
        });
        if node.tree != tree {
            return Err(src.rule_err(line, rec, format!("concept already belongs to tree {}", node.tree)));
        }
        if !parent.is_empty() && !node.parents.iter().any(|p| p == parent) {
            node.parents.push(parent.to_string());
        }
        first_line.entry(concept.to_string()).or_insert((line, rec.to_string()));
    }
    for n in nodes.values_mut() {
        n.parents.sort();
    }
    for n in nodes.values() {
        for p in &n.parents {
            if !nodes.contains_key(p) {
                let (line, rec) = &first_line[&n.concept];
                return Err(src.rule_err(*line, rec, format!("parent {p:?} does not exist in the store")));
            }
        }
    }
    // cycle check: iterative DFS with colors
    let mut color: BTreeMap<&str, u8> = BTreeMap::new();
    for start in nodes.keys() {
        if color.get(start.as_str()).copied().unwrap_or(0) != 0 {
            continue;
        }
        let mut stack: Vec<(&str, usize)> = vec![(start.as_str(), 0)];
        color.insert(start.as_str(), 1);
        while let Some((c, i)) = stack.pop() {
            let parents = &nodes[c].parents;
            if i < parents.len() {
                stack.push((c, i + 1));
                let p = parents[i].as_str();
                match color.get(p).copied().unwrap_or(0) {
                    0 => {
                        color.insert(p, 1);
                        stack.push((p, 0));
                    }
                    1 => {
                        let (line, rec) = &first_line[c];
                        return Err(src.rule_err(*line, rec, format!("cycle through {p:?}")));
                    }
                    _ => {}
                }
            } else {
                color.insert(c, 2);
            }
        }
    }
    Ok(nodes)
}

fn parse_numeric(src: &Source) -> Result<Vec<NumericAttribute>> {
    let mut out: Vec<(usize, String, NumericAttribute)> = Vec::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 4, 4)?;
        let value: f64 = f[2].parse().map_err(|_| src.parse_err(line, format!("value {:?} is not a number", f[2])))?;
        if !value.is_finite() {
            return Err(src.rule_err(line, rec, "value must be finite"));
        }
        let bucket: i64 = f[3].parse().map_err(|_| src.parse_err(line, format!("bucket {:?} is not an integer", f[3])))?;
        out.push((line, rec.to_string(), NumericAttribute { concept: f[0].into(), attribute: f[1].into(), value, bucket }));
    }
    // bucket(a) < bucket(b) ⇒ value(a) < value(b), per attribute
    let mut by_attr: BTreeMap<&str, Vec<&(usize, String, NumericAttribute)>> = BTreeMap::new();
    for r in &out {
        by_attr.entry(r.2.attribute.as_str()).or_default().push(r);
    }
    for rows in by_attr.values_mut() {
        rows.sort_by_key(|r| r.2.bucket);
        let mut prev_max: Option<&(usize, String, NumericAttribute)> = None;
        let mut i = 0;
        while i < rows.len() {
            let b = rows[i].2.bucket;
            let mut j = i;
            let mut min = rows[i];
            let mut max = rows[i];
            while j < rows.len() && rows[j].2.bucket == b {
                if rows[j].2.value < min.2.value {
                    min = rows[j];
                }
                if rows[j].2.value > max.2.value {
                    max = rows[j];
                }
                j += 1;
            }
            if let Some(p) = prev_max {
                if p.2.value >= min.2.value {
                    return Err(src.rule_err(
                        min.0,
                        &min.1,
                        format!("bucket order disagrees with value order against {:?}", p.2.concept),
                    ));
                }
            }
            prev_max = Some(max);
            i = j;
        }
    }
    let mut res: Vec<NumericAttribute> = out.into_iter().map(|r| r.2).collect();
    res.sort_by(|a, b| (a.attribute.as_str(), a.concept.as_str()).cmp(&(b.attribute.as_str(), b.concept.as_str())));
    Ok(res)
}

fn opt(s: &str) -> Option<String> {
    if s.is_empty() {
        None
    } else {
        Some(s.to_string())
    }
}

fn parse_encyc(src: &Source) -> Result<Vec<EncycFact>> {
    let mut out = Vec::new();
    let mut keys = BTreeSet::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 4, 7)?;
        let get = |i: usize| f.get(i).copied().unwrap_or("");
        let relation: Relation = f[1].parse().map_err(|e: String| src.rule_err(line, rec, e))?;
        let kind: AnswerKind = f[3].parse().map_err(|e: String| src.rule_err(line, rec, e))?;
        let population = match get(5) {
            "" => None,
            p => Some(p.parse::<u64>().map_err(|_| src.parse_err(line, format!("population {p:?} is not an integer")))?),
        };
        let fact = EncycFact {
            entity: f[0].to_string(),
            relation,
            answer: f[2].to_string(),
            kind,
            country: opt(get(4)),
            population,
            bridge: opt(get(6)),
        };
        if fact.entity.is_empty() || fact.answer.is_empty() {
            return Err(src.rule_err(line, rec, "entity and answer must be non-empty"));
        }
        if kind == AnswerKind::Year && !(fact.answer.len() == 4 && fact.answer.bytes().all(|b| b.is_ascii_digit())) {
            return Err(src.rule_err(line, rec, "answer-kind year requires a 4-digit integer answer"));
        }
        if kind == AnswerKind::City && fact.country.is_none() {
            return Err(src.rule_err(line, rec, "answer-kind city requires a country"));
        }
        if !keys.insert((fact.entity.clone(), relation)) {
            return Err(src.rule_err(line, rec, "duplicate (entity, relation)"));
        }
        out.push(fact);
    }
    out.sort_by(|a, b| (a.relation, &a.entity).cmp(&(b.relation, &b.entity)));
    Ok(out)
}

fn parse_cities(src: &Source) -> Result<Vec<City>> {
    let mut out = Vec::new();
    let mut names = BTreeSet::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 3, 3)?;
        let population = f[2].parse().map_err(|_| src.parse_err(line, "population is not an integer"))?;
        if !names.insert(f[0].to_string()) {
            return Err(src.rule_err(line, rec, "duplicate city"));
        }
        out.push(City { name: f[0].into(), country: f[1].into(), population });
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

fn parse_embeddings(src: &Source) -> Result<EmbeddingTable> {
    let mut dim = None;
    let mut vocab = Vec::new();
    let mut data = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, rec) in src.records() {
        let mut parts = rec.split(' ').filter(|s| !s.is_empty());
        let tok = parts.next().ok_or_else(|| src.parse_err(line, "empty record"))?;
        let start = data.len();
        for p in parts {
            let v: f64 = p.parse().map_err(|_| src.parse_err(line, format!("component {p:?} is not a number")))?;
            data.push(v);
        }
        let d = data.len() - start;
        match dim {
            None => dim = Some(d),
            Some(expected) if expected != d => {
                return Err(src.rule_err(line, tok, format!("vector has dimension {d}, expected {expected}")));
            }
            _ => {}
        }
        if !seen.insert(tok.to_string()) {
            return Err(src.rule_err(line, tok, "duplicate token"));
        }
        vocab.push(tok.to_string());
    }
    Ok(EmbeddingTable::new(dim.unwrap_or(0), vocab, data))
}

fn parse_unigram(src: &Source) -> Result<UnigramTable> {
    let mut table = UnigramTable::default();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 4, 4)?;
        let prob: f64 = f[2].parse().map_err(|_| src.parse_err(line, "probability is not a number"))?;
        if !(0.0..=1.0).contains(&prob) {
            return Err(src.rule_err(line, rec, "probability outside [0, 1]"));
        }
        let content = match f[3] {
            "1" | "true" => true,
            "0" | "false" => false,
            other => return Err(src.parse_err(line, format!("content flag {other:?} is not 0/1"))),
        };
        table.corpora.entry(f[0].to_string()).or_default().insert(f[1].to_string(), UnigramEntry { prob, content });
    }
    for (corpus, entries) in &table.corpora {
        let sum: f64 = entries.values().map(|e| e.prob).sum();
        if (sum - 1.0).abs() > UNIGRAM_TOLERANCE {
            return Err(KbError::Invariant {
                file: src.name.clone(),
                line: 0,
                record: corpus.clone(),
                rule: format!("probabilities sum to {sum}, expected 1 ± {UNIGRAM_TOLERANCE}"),
            });
        }
    }
    Ok(table)
}

fn parse_an_templates(src: &Source) -> Result<Vec<AlwaysNeverTemplate>> {
    let mut out = Vec::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 2, 3)?;
        let text = f[1].to_string();
        let masks = crate::text::words(&text).iter().filter(|w| *w == crate::text::MASK).count();
        if masks != 1 || !text.contains("SUBJ") || !text.contains("OBJ") {
            return Err(src.rule_err(line, rec, "template needs SUBJ, OBJ and exactly one [MASK]"));
        }
        out.push(AlwaysNeverTemplate { id: f[0].into(), text, published: f.get(2).copied() == Some("1") });
    }
    Ok(out)
}

pub const FREQUENCY_LABELS: [&str; 5] = ["never", "rarely", "sometimes", "often", "always"];

fn parse_an(src: &Source, templates: &[AlwaysNeverTemplate]) -> Result<Vec<AlwaysNeverRecord>> {
    let mut out = BTreeSet::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 4, 4)?;
        if !templates.iter().any(|t| t.id == f[0]) {
            return Err(src.rule_err(line, rec, "unknown template id"));
        }
        if !FREQUENCY_LABELS.contains(&f[3]) {
            return Err(src.rule_err(line, rec, "label must be one of never/rarely/sometimes/often/always"));
        }
        let r = AlwaysNeverRecord { template_id: f[0].into(), subject: f[1].into(), object: f[2].into(), label: f[3].into() };
        if !out.insert(r) {
            return Err(src.rule_err(line, rec, "duplicate record"));
        }
    }
    Ok(out.into_iter().collect())
}

fn parse_cloze(src: &Source) -> Result<Vec<ClozeRecord>> {
    let mut out = Vec::new();
    for (line, rec) in src.records() {
        let f = src.fields(line, rec, 3, 5)?;
        let masks = crate::text::words(f[0]).iter().filter(|w| *w == crate::text::MASK).count();
        if masks != 1 {
            return Err(src.rule_err(line, rec, "sentence needs exactly one [MASK]"));
        }
        let distractors: Vec<String> = f[2..].iter().map(|s| s.to_string()).collect();
        if distractors.iter().any(|d| d == f[1]) {
            return Err(src.rule_err(line, rec, "distractor equals gold"));
        }
        out.push(ClozeRecord { sentence: f[0].into(), gold: f[1].into(), distractors });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_min(dir: &Path) {
        let files: [(&str, &str); 6] = [
            ("triples.tsv", "stop sign\tatLocation\tstreet\n"),
            ("taxonomy.tsv", ""),
            ("numeric.tsv", "mouse\tsize\t0.1\t1\nhorse\tsize\t2\t3\n"),
            ("encyc.tsv", "john\tband-formed-year\t1960\tyear\t\t\tthe band\n"),
            ("embeddings.txt", "a 1.0 2.0\nb 0.5 0.5\n"),
            ("unigram.tsv", "c1\ta\t0.5\t1\nc1\tb\t0.5\t0\n"),
        ];
        for (n, c) in files {
            fs::File::create(dir.join(n)).unwrap().write_all(c.as_bytes()).unwrap();
        }
    }

    #[test]
    fn loads_minimal_directory() {
        let d = tempfile::tempdir().unwrap();
        write_min(d.path());
        let kb = load_fixtures(d.path()).unwrap();
        assert!(kb.holds("stop sign", Predicate::AtLocation, "street"));
        assert!(kb.taxonomy.is_empty());
        assert_eq!(kb.embeddings.dim(), 2);
        assert_eq!(kb.encyc[0].bridge.as_deref(), Some("the band"));
    }

    #[test]
    fn missing_file_is_named() {
        let d = tempfile::tempdir().unwrap();
        write_min(d.path());
        fs::remove_file(d.path().join("numeric.tsv")).unwrap();
        let err = load_fixtures(d.path()).unwrap_err().to_string();
        assert!(err.contains("numeric.tsv"), "{err}");
    }

    fn expect_rule(file: &str, content: &str, needle: &str) {
        let d = tempfile::tempdir().unwrap();
        write_min(d.path());
        fs::write(d.path().join(file), content).unwrap();
        let err = load_fixtures(d.path()).unwrap_err().to_string();
        assert!(err.contains(needle), "{err}");
        assert!(err.contains(file), "{err}");
    }

    #[test]
    fn invariant_violations_are_rejected() {
        expect_rule("triples.tsv", "a\tfooRel\tb\n", "registry");
        expect_rule("triples.tsv", "a\tisA\ta\n", "differ");
        expect_rule("taxonomy.tsv", "crow\tbird\tanimal\n", "does not exist");
        expect_rule("taxonomy.tsv", "a\tb\tt\nb\ta\tt\n", "cycle");
        expect_rule("numeric.tsv", "a\tsize\t5\t1\nb\tsize\t3\t2\n", "bucket order");
        expect_rule("encyc.tsv", "x\tbirth-date\t19x0\tyear\t\t\n", "4-digit");
        expect_rule("encyc.tsv", "x\tbirth-place\tparis\tcity\t\t\n", "country");
        expect_rule("embeddings.txt", "a 1 2\nb 1\n", "dimension");
        expect_rule("unigram.tsv", "c\ta\t0.4\t1\n", "sum");
    }
}
