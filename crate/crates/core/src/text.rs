//! Word-level tokenization shared by templates, controls and the static-embedding baselines.

pub const MASK: &str = "[MASK]";
pub const CLS: &str = "[CLS]";
pub const SEP: &str = "[SEP]";

/// Splits text into words, numbers, the possessive clitic `'s`, single punctuation marks and
/// literal `[MASK]`/`[CLS]`/`[SEP]` markers. Case is preserved.
pub fn words(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '[' {
            if let Some(special) = [MASK, CLS, SEP].iter().find(|s| starts_with(&chars[i..], s)) {
                out.push((*special).to_string());
                i += special.len();
                continue;
            }
        }
        if c == '\'' && i + 1 < chars.len() && (chars[i + 1] == 's' || chars[i + 1] == 'S') {
            let end = i + 2;
            if end == chars.len() || !chars[end].is_alphanumeric() {
                out.push(chars[i..end].iter().collect());
                i = end;
                continue;
            }
        }
        if c.is_alphanumeric() {
            let start = i;
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            out.push(chars[start..i].iter().collect());
            continue;
        }
        out.push(c.to_string());
        i += 1;
    }
    out
}

fn starts_with(chars: &[char], pat: &str) -> bool {
    let mut it = chars.iter();
    pat.chars().all(|p| it.next() == Some(&p))
}

/// Baseline tokenization: lowercase, split on whitespace and punctuation. `[MASK]` stays one token.
pub fn baseline_tokens(tokens: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for t in tokens {
        if t == MASK {
            out.push(t.to_lowercase());
        } else {
            out.extend(words(&t.to_lowercase()));
        }
    }
    out
}

/// Joins word tokens back into a display string.
pub fn join(tokens: &[String]) -> String {
    tokens.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_template_with_mask_and_punctuation() {
        let w = words("A 21 year old person is [MASK] than me in age, If I am a 35 year old person.");
        assert_eq!(w[1], "21");
        assert_eq!(w[6], "[MASK]");
        assert!(w.contains(&",".to_string()));
        assert_eq!(w.last().unwrap(), ".");
    }

    #[test]
    fn possessive_is_its_own_token() {
        assert_eq!(words("a lion's diet"), vec!["a", "lion", "'s", "diet"]);
        assert_eq!(words("o'clock"), vec!["o", "'", "clock"]);
    }

    #[test]
    fn baseline_lowercases_and_keeps_mask() {
        let t = vec!["When".to_string(), "[MASK]".to_string(), "Paris,".to_string()];
        assert_eq!(baseline_tokens(&t), vec!["when", "[mask]", "paris", ","]);
    }
}
