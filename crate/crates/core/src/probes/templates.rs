//! Template strings, answer sets, predicate phrasings and default Perturbed-Language targets.

use serde::{Deserialize, Serialize};

use super::ProbeId;
use crate::kb::{KbStore, Predicate};

pub const AGE: &str = "A AGE-1 year old person is [MASK] than me in age, If I am a AGE-2 year old person.";
pub const BIRTH_YEAR: &str = "A person born in YEAR-1 is [MASK] than me in age, If i was born in YEAR-2.";
pub const AGE_ANSWERS: [&str; 2] = ["older", "younger"];

pub const OBJECTS: &str = "The size of a OBJ-1 is usually much [MASK] than the size of a OBJ-2.";
pub const OBJECTS_ANSWERS: [&str; 2] = ["larger", "smaller"];

pub const MULTIHOP: &str = "When comparing a A1, a A2 and a A3 year old, the [MASK] is oldest";
pub const MULTIHOP_ANSWERS: [&str; 3] = ["first", "second", "third"];

pub const TAXONOMY: &str = "A ENT-1 and a ENT-2 are both a type of [MASK].";

pub const FREQUENCY_ANSWERS: [&str; 5] = ["never", "rarely", "sometimes", "often", "always"];

pub const NEGATION_ANSWERS: [&str; 2] = ["not", "really"];

/// Subject/copula frames for the antonym-negation statement pattern.
pub const NEGATION_FRAMES: [(&str, &str, &str); 14] = [
    ("neg-it-was", "It", "was"),
    ("neg-he-was", "He", "was"),
    ("neg-she-was", "She", "was"),
    ("neg-they-were", "They", "were"),
    ("neg-we-were", "We", "were"),
    ("neg-you-were", "You", "were"),
    ("neg-i-was", "I", "was"),
    ("neg-it-is", "It", "is"),
    ("neg-he-is", "He", "is"),
    ("neg-she-is", "She", "is"),
    ("neg-they-are", "They", "are"),
    ("neg-we-are", "We", "are"),
    ("neg-you-are", "You", "are"),
    ("neg-i-am", "I", "am"),
];

pub fn negation_template(subject: &str, verb: &str) -> String {
    format!("{subject} {verb} [MASK] W-1, {} {verb} really W-2.", subject_lower(subject))
}

fn subject_lower(s: &str) -> String {
    if s == "I" {
        s.into()
    } else {
        s.to_lowercase()
    }
}

pub const PROPERTY_AND: &str = "What is usually P-1 and P-2?";
pub const PROPERTY_BUT_NOT: &str = "What is usually P-1 but not P-2?";

pub const ENCYC_BAND: &str = "when did the band where ENT played first form?";
pub const ENCYC_SPOUSE: &str = "who is the spouse of the actor that played in ENT?";
pub const ENCYC_COMPANY: &str = "where is the headquarters of the company that ENT established located?";

pub const HOP_BAND: &str = "which band did ENT play in?";
pub const HOP_BAND_YEAR: &str = "when did BRIDGE first form?";
pub const HOP_ACTOR: &str = "which actor played in ENT?";
pub const HOP_SPOUSE: &str = "who is the spouse of BRIDGE?";
pub const HOP_COMPANY: &str = "what company did ENT establish?";
pub const HOP_HQ: &str = "where is the headquarters of BRIDGE located?";

pub const LONG_TAIL_BIRTH_PLACE: &str = "ENT was born in [MASK] .";
pub const LONG_TAIL_BIRTH_DATE: &str = "ENT was born in the year [MASK] .";
pub const LONG_TAIL_DEATH_PLACE: &str = "ENT died in [MASK] .";

/// Question phrase used by property-conjunction: "What is usually <phrase> <object>?".
pub fn question_phrase(p: Predicate) -> Option<&'static str> {
    Some(match p {
        Predicate::AtLocation => "located at",
        Predicate::CapableOf => "capable of",
        Predicate::Causes => "a cause of",
        Predicate::CausesDesire => "a cause of desire for",
        Predicate::Desires => "wanting",
        Predicate::HasA => "having",
        Predicate::HasPrerequisite => "requiring",
        Predicate::HasProperty => "",
        Predicate::HasSubevent => "involving",
        Predicate::IsA => "a type of",
        Predicate::MadeOf => "made of",
        Predicate::PartOf => "part of",
        Predicate::ReceivesAction => "able to be",
        Predicate::RelatedTo => "related to",
        Predicate::UsedFor => "used for",
        Predicate::Synonym | Predicate::Antonym => return None,
    })
}

/// Affirmative and negated statements with subject `S` and object `O`.
pub fn statement(p: Predicate) -> Option<(&'static str, &'static str)> {
    Some(match p {
        Predicate::AtLocation => ("S can usually be found at O .", "S can not usually be found at O ."),
        Predicate::CapableOf => ("S is capable of O .", "S is not capable of O ."),
        Predicate::Causes => ("S causes O .", "S does not cause O ."),
        Predicate::CausesDesire => ("S causes a desire for O .", "S does not cause a desire for O ."),
        Predicate::Desires => ("S wants O .", "S does not want O ."),
        Predicate::HasA => ("S has O .", "S does not have O ."),
        Predicate::HasPrerequisite => ("O is a prerequisite of S .", "O is not a prerequisite of S ."),
        Predicate::HasProperty => ("S is O .", "S is not O ."),
        Predicate::HasSubevent => ("S involves O .", "S does not involve O ."),
        Predicate::IsA => ("S is a type of O .", "S is not a type of O ."),
        Predicate::MadeOf => ("S is made of O .", "S is not made of O ."),
        Predicate::PartOf => ("S is part of O .", "S is not part of O ."),
        Predicate::ReceivesAction => ("S can be O .", "S can not be O ."),
        Predicate::RelatedTo => ("S is related to O .", "S is not related to O ."),
        Predicate::UsedFor => ("S is used for O .", "S is not used for O ."),
        Predicate::Synonym | Predicate::Antonym => return None,
    })
}

/// A template with its answer set and the words the Perturbed-Language control replaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateSpec {
    pub probe: ProbeId,
    pub id: String,
    pub text: String,
    /// Fixed answer set, empty when candidates vary per example.
    pub answers: Vec<String>,
    pub targeted_words: Vec<String>,
}

fn spec(probe: ProbeId, id: &str, text: &str, answers: &[&str], targets: &[&str]) -> TemplateSpec {
    TemplateSpec {
        probe,
        id: id.into(),
        text: text.into(),
        answers: answers.iter().map(|s| s.to_string()).collect(),
        targeted_words: targets.iter().map(|s| s.to_string()).collect(),
    }
}

/// Every template a probe can emit, with default Perturbed-Language targets.
pub fn template_specs(probe: ProbeId, kb: &KbStore) -> Vec<TemplateSpec> {
    use ProbeId::*;
    match probe {
        AgeComparison => vec![
            spec(probe, "age", AGE, &AGE_ANSWERS, &["age", "than"]),
            spec(probe, "birth-year", BIRTH_YEAR, &AGE_ANSWERS, &["age", "than"]),
        ],
        ObjectsComparison => vec![spec(probe, "objects", OBJECTS, &OBJECTS_ANSWERS, &["size", "than"])],
        MultihopComparison => vec![spec(probe, "multihop", MULTIHOP, &MULTIHOP_ANSWERS, &["comparing", "oldest"])],
        TaxonomyConjunction => vec![spec(probe, "taxonomy", TAXONOMY, &[], &["both", "type"])],
        AntonymNegation => NEGATION_FRAMES
            .iter()
            .map(|(id, s, v)| spec(probe, id, &negation_template(s, v), &NEGATION_ANSWERS, &["really"]))
            .collect(),
        PropertyConjunction => vec![
            spec(probe, "property-and", PROPERTY_AND, &[], &["and"]),
            spec(probe, "property-but-not", PROPERTY_BUT_NOT, &[], &["but"]),
        ],
        AlwaysNever => kb
            .always_never_templates
            .iter()
            .map(|t| spec(probe, &t.id, &t.text, &FREQUENCY_ANSWERS, &[always_never_target(&t.id)]))
            .collect(),
        EncyclopedicComposition => vec![
            spec(probe, "encyc-band", ENCYC_BAND, &[], &["band"]),
            spec(probe, "encyc-spouse", ENCYC_SPOUSE, &[], &["spouse"]),
            spec(probe, "encyc-company", ENCYC_COMPANY, &[], &["headquarters"]),
            spec(probe, "hop-band", HOP_BAND, &[], &["band"]),
            spec(probe, "hop-band-year", HOP_BAND_YEAR, &[], &["form"]),
            spec(probe, "hop-actor", HOP_ACTOR, &[], &["actor"]),
            spec(probe, "hop-spouse", HOP_SPOUSE, &[], &["spouse"]),
            spec(probe, "hop-company", HOP_COMPANY, &[], &["company"]),
            spec(probe, "hop-hq", HOP_HQ, &[], &["headquarters"]),
        ],
        EncyclopedicLongTail => vec![
            spec(probe, "long-tail-birth-place", LONG_TAIL_BIRTH_PLACE, &[], &["born"]),
            spec(probe, "long-tail-birth-date", LONG_TAIL_BIRTH_DATE, &[], &["born"]),
            spec(probe, "long-tail-death-place", LONG_TAIL_DEATH_PLACE, &[], &["died"]),
        ],
        LexicalSemantic | SetNegation => Predicate::ALL
            .iter()
            .filter_map(|&p| {
                let (pos, neg) = statement(p)?;
                let (target, neg_target) = lexical_targets(p);
                let mut v = vec![spec(probe, &format!("lex-{}", p.as_str()), pos, &[], &[target])];
                if probe == SetNegation {
                    v.push(spec(probe, &format!("lex-not-{}", p.as_str()), neg, &[], &[neg_target]));
                }
                Some(v)
            })
            .flatten()
            .collect(),
        MultiChoiceLm => vec![spec(probe, "mc-lm", "", &[], &[])],
    }
}

fn always_never_target(id: &str) -> &'static str {
    match id {
        "an-dish" => "contains",
        "an-placed" => "placed",
        "an-smaller" => "smaller",
        "an-larger" => "larger",
        "an-diet" => "diet",
        "an-drinks" => "drinks",
        "an-lives" => "lives",
        _ => "has",
    }
}

/// Targets for the affirmative and the negated statement.
fn lexical_targets(p: Predicate) -> (&'static str, &'static str) {
    match p {
        Predicate::AtLocation => ("found", "found"),
        Predicate::CapableOf => ("capable", "capable"),
        Predicate::Causes => ("causes", "cause"),
        Predicate::CausesDesire => ("desire", "desire"),
        Predicate::Desires => ("wants", "want"),
        Predicate::HasA => ("has", "have"),
        Predicate::HasPrerequisite => ("prerequisite", "prerequisite"),
        Predicate::HasSubevent => ("involves", "involve"),
        Predicate::IsA => ("type", "type"),
        Predicate::MadeOf => ("made", "made"),
        Predicate::PartOf => ("part", "part"),
        Predicate::ReceivesAction => ("be", "be"),
        Predicate::RelatedTo => ("related", "related"),
        Predicate::UsedFor => ("used", "used"),
        _ => ("is", "is"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::words;

    #[test]
    fn negation_frame_matches_published_example() {
        assert_eq!(negation_template("It", "was"), "It was [MASK] W-1, it was really W-2.");
    }

    #[test]
    fn every_predicate_with_a_phrase_has_a_statement() {
        for p in Predicate::ALL {
            assert_eq!(question_phrase(p).is_some(), statement(p).is_some());
            assert_eq!(p.is_phrased(), statement(p).is_some());
        }
        assert_eq!(Predicate::ALL.iter().filter(|p| question_phrase(**p).is_some()).count(), 15);
    }

    #[test]
    fn targeted_words_appear_in_their_templates() {
        let kb = KbStore::empty();
        for probe in ProbeId::ALL {
            for s in template_specs(probe, &kb) {
                let ws = words(&s.text);
                for t in &s.targeted_words {
                    assert!(ws.contains(t), "{t:?} not in {:?} ({})", s.text, s.id);
                }
            }
        }
    }
}
