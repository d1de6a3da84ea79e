//! Input presentations `A = T(V)/I` of monomial algebras.
//!
//! A presentation is an alphabet of named generators plus a minimal set of
//! monomial relations. Relations are stored as index sequences; generator
//! names are only used when reading or writing text.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{find_factor, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub index: Letter,
}

/// The generator alphabet, with name lookup in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    generators: Vec<Generator>,
    by_name: HashMap<String, Letter>,
    single_char: bool,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut generators = Vec::with_capacity(names.len());
        let mut by_name = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if !is_token(name) {
                return Err(Error::InvalidGeneratorName(name.to_string()));
            }
            if by_name.insert(name.to_string(), i as Letter).is_some() {
                return Err(Error::DuplicateGenerator(name.to_string()));
            }
            generators.push(Generator {
                name: name.to_string(),
                index: i as Letter,
            });
        }
        let single_char = generators.iter().all(|g| g.name.chars().count() == 1);
        Ok(Alphabet {
            generators,
            by_name,
            single_char,
        })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn name(&self, x: Letter) -> &str {
        &self.generators[x as usize].name
    }

    pub fn lookup(&self, name: &str) -> Result<Letter> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn word_from_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word> {
        tokens
            .iter()
            .map(|t| self.lookup(t.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn tokens(&self, w: &Word) -> Vec<String> {
        w.letters().iter().map(|&x| self.name(x).to_string()).collect()
    }

    /// Display form of a word: names concatenated when every generator name is
    /// a single character, joined by `.` otherwise. The empty word is `1`.
    pub fn display(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let sep = if self.single_char { "" } else { "." };
        w.letters()
            .iter()
            .map(|&x| self.name(x))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Inverse of [`Alphabet::display`].
    pub fn parse_display(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" && self.lookup("1").is_err() {
            return Ok(Word::empty());
        }
        if self.single_char {
            s.chars()
                .map(|c| self.lookup(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()
                .map(Word::new)
        } else {
            s.split('.')
                .map(|t| self.lookup(t))
                .collect::<Result<Vec<_>>>()
                .map(Word::new)
        }
    }
}

fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A relation that is redundant in the relation list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityViolation {
    /// The relation that can be dropped.
    pub redundant: Word,
    /// The other relation occurring inside it.
    pub factor: Word,
    /// Offset of `factor` inside `redundant`.
    pub position: usize,
}

/// Reports every relation that contains another relation as a factor, or
/// repeats an earlier one.
pub fn validate_minimality(relations: &[Word]) -> Vec<MinimalityViolation> {
    let mut out = Vec::new();
    for (i, r) in relations.iter().enumerate() {
        for (j, s) in relations.iter().enumerate() {
            if i == j {
                continue;
            }
            if r == s {
                // report a duplicate once, against its first occurrence
                if j < i {
                    out.push(MinimalityViolation {
                        redundant: r.clone(),
                        factor: s.clone(),
                        position: 0,
                    });
                    break;
                }
                continue;
            }
            if let Some(position) = find_factor(s.letters(), r.letters()) {
                out.push(MinimalityViolation {
                    redundant: r.clone(),
                    factor: s.clone(),
                    position,
                });
                break;
            }
        }
    }
    out
}

/// Drops duplicate and redundant relations and sorts the rest by
/// (degree, lexicographic index order).
pub fn minimize_relations(mut relations: Vec<Word>) -> Vec<Word> {
    relations.sort();
    relations.dedup();
    // after sorting, any factor of a relation precedes it
    let mut kept: Vec<Word> = Vec::with_capacity(relations.len());
    for r in relations {
        if !kept.iter().any(|s| s.find_in(&r).is_some()) {
            kept.push(r);
        }
    }
    kept
}

/// A validated presentation: alphabet plus a minimal, sorted relation list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<Word>,
}

impl Presentation {
    /// Validates and normalizes: every relation must have degree at least 2
    /// and use known letters; redundant relations are pruned.
    pub fn new(alphabet: Alphabet, relations: Vec<Word>) -> Result<Self> {
        if relations.is_empty() {
            return Err(Error::NoRelations);
        }
        for r in &relations {
            if let Some(&x) = r.letters().iter().find(|&&x| x as usize >= alphabet.len()) {
                return Err(Error::UnknownGenerator(format!("#{x}")));
            }
            if r.degree() < 2 {
                return Err(Error::RelationDegree {
                    relation: alphabet.display(r),
                    degree: r.degree(),
                });
            }
        }
        Ok(Presentation {
            alphabet,
            relations: minimize_relations(relations),
        })
    }

    /// Convenience constructor from generator names and relation token lists.
    pub fn from_tokens<S: AsRef<str>>(generators: &[S], relations: &[Vec<S>]) -> Result<Self> {
        let alphabet = Alphabet::new(generators)?;
        let words = relations
            .iter()
            .map(|r| alphabet.word_from_tokens(r))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(alphabet, words)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn generators(&self) -> &[Generator] {
        self.alphabet.generators()
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    pub fn relation_degrees(&self) -> Vec<usize> {
        self.relations.iter().map(Word::degree).collect()
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().map(Word::degree).max().unwrap_or(0)
    }

    pub fn minimality_violations(&self) -> Vec<MinimalityViolation> {
        validate_minimality(&self.relations)
    }

    pub fn display(&self, w: &Word) -> String {
        self.alphabet.display(w)
    }

    /// Canonical JSON form, mirroring the input schema.
    pub fn to_json(&self) -> String {
        let raw = RawPresentation {
            generators: self.alphabet.names(),
            relations: self
                .relations
                .iter()
                .map(|r| self.alphabet.tokens(r))
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("presentation serializes")
    }
}

#[derive(Serialize)]
struct RawPresentation {
    generators: Vec<String>,
    relations: Vec<Vec<String>>,
}

/// Every key the input schema knows about. Keys may appear in any order.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawInput {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub generator_order: Option<Vec<String>>,
    #[serde(default)]
    pub polynomials: Option<Vec<Vec<crate::leading::RawTerm>>>,
}

pub(crate) fn parse_raw(source: &str) -> Result<RawInput> {
    serde_json::from_str(source).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses a JSON presentation:
///
/// ```json
/// { "generators": ["a", "b"], "relations": [["a", "b"], ["b", "b", "a"]] }
/// ```
pub fn parse_presentation(source: &str) -> Result<Presentation> {
    let raw = parse_raw(source)?;
    let alphabet = Alphabet::new(&raw.generators)?;
    let relations = raw.relations.ok_or_else(|| Error::Syntax {
        line: 1,
        column: 1,
        message: "missing field `relations`".to_string(),
    })?;
    let words = relations
        .iter()
        .map(|r| alphabet.word_from_tokens(r))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(alphabet, words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(v: &[Letter]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn parses_two_relation_example() {
        let p = parse_presentation(fixtures::ABC_CDAB).unwrap();
        assert_eq!(p.alphabet().len(), 4);
        assert_eq!(p.relations(), &[w(&[0, 1, 2]), w(&[2, 3, 0, 1])]);
        assert_eq!(p.relation_degrees(), vec![3, 4]);
        assert!(p.minimality_violations().is_empty());
    }

    #[test]
    fn smallest_valid_input() {
        let p = parse_presentation(r#"{"generators":["x"],"relations":[["x","x"]]}"#).unwrap();
        assert_eq!(p.relations(), &[w(&[0, 0])]);
    }

    #[test]
    fn rejects_linear_relation() {
        let err = parse_presentation(r#"{"generators":["x"],"relations":[["x"]]}"#).unwrap_err();
        assert!(matches!(err, Error::RelationDegree { degree: 1, .. }));
        assert!(err.to_string().contains("relation degree < 2"));
    }

    #[test]
    fn rejects_unknown_generator_and_empty_alphabet() {
        let err = parse_presentation(r#"{"generators":["x"],"relations":[["x","y"]]}"#).unwrap_err();
        assert_eq!(err, Error::UnknownGenerator("y".into()));
        let err = parse_presentation(r#"{"generators":[],"relations":[]}"#).unwrap_err();
        assert_eq!(err, Error::EmptyAlphabet);
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse_presentation("{\n  \"generators\": [\"x\",\n  \"relations\" }").unwrap_err();
        match err {
            Error::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn keys_in_any_order() {
        let p = parse_presentation(r#"{"relations":[["y","x"]],"generators":["x","y"]}"#).unwrap();
        assert_eq!(p.relations(), &[w(&[1, 0])]);
    }

    #[test]
    fn parser_prunes_and_sorts() {
        let p = parse_presentation(
            r#"{"generators":["a","b","c"],"relations":[["a","b","c"],["c","a"],["a","b"],["c","a"]]}"#,
        )
        .unwrap();
        assert_eq!(p.relations(), &[w(&[0, 1]), w(&[2, 0])]);
    }

    #[test]
    fn minimality_checks() {
        assert!(validate_minimality(&[w(&[0, 1, 2]), w(&[2, 3, 0, 1])]).is_empty());
        let v = validate_minimality(&[w(&[0, 1]), w(&[0, 1, 2])]);
        assert_eq!(
            v,
            vec![MinimalityViolation {
                redundant: w(&[0, 1, 2]),
                factor: w(&[0, 1]),
                position: 0
            }]
        );
        assert!(validate_minimality(&[w(&[0, 1]), w(&[1, 0])]).is_empty());
        assert_eq!(validate_minimality(&[w(&[0, 1]), w(&[0, 1])]).len(), 1);
    }

    #[test]
    fn display_round_trip() {
        let a = Alphabet::new(&["a", "b"]).unwrap();
        assert_eq!(a.display(&w(&[0, 1, 1])), "abb");
        assert_eq!(a.parse_display("abb").unwrap(), w(&[0, 1, 1]));
        let long = Alphabet::new(&["x1", "x2"]).unwrap();
        assert_eq!(long.display(&w(&[1, 0])), "x2.x1");
        assert_eq!(long.parse_display("x2.x1").unwrap(), w(&[1, 0]));
    }
}
