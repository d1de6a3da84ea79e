//! Monomialization of a presented algebra through leading words.
//!
//! Given polynomial relations with rational coefficients and a total order on
//! the generators, the deg-lex leading word of each relation is extracted and
//! the resulting monomial relations are pruned to a minimal set. No Gröbner
//! basis completion happens here: the result describes the associated
//! monomial algebra only when the input already is a Gröbner basis, and the
//! report says so.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::presentation::{parse_raw, Alphabet, Presentation};
use crate::word::{Letter, Word};

pub const GROEBNER_CAVEAT: &str = "valid only if input is a Gröbner basis";

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub(crate) enum RawCoeff {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawTerm {
    coeff: RawCoeff,
    word: Vec<String>,
}

/// A noncommutative polynomial: a formal sum of words with rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(BigRational, Word)>,
}

impl Polynomial {
    /// Collects like terms; zero coefficients are dropped.
    pub fn new(terms: Vec<(BigRational, Word)>) -> Self {
        let mut acc: BTreeMap<Word, BigRational> = BTreeMap::new();
        for (c, w) in terms {
            *acc.entry(w).or_insert_with(BigRational::zero) += c;
        }
        Polynomial {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (c, w))
                .collect(),
        }
    }

    pub fn monomial(w: Word) -> Self {
        Polynomial::new(vec![(BigRational::from_integer(BigInt::from(1)), w)])
    }

    pub fn terms(&self) -> &[(BigRational, Word)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A total order on generators, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorOrder {
    rank: Vec<usize>,
}

impl GeneratorOrder {
    pub fn identity(n: usize) -> Self {
        GeneratorOrder {
            rank: (0..n).collect(),
        }
    }

    /// `ascending` lists every generator index exactly once, smallest first.
    pub fn from_ascending(ascending: &[Letter], n: usize) -> Result<Self> {
        if ascending.len() != n {
            return Err(Error::InvalidGeneratorOrder);
        }
        let mut rank = vec![usize::MAX; n];
        for (r, &x) in ascending.iter().enumerate() {
            let slot = rank
                .get_mut(x as usize)
                .ok_or(Error::InvalidGeneratorOrder)?;
            if *slot != usize::MAX {
                return Err(Error::InvalidGeneratorOrder);
            }
            *slot = r;
        }
        Ok(GeneratorOrder { rank })
    }

    /// Degree-lexicographic comparison of two words.
    pub fn deglex(&self, a: &Word, b: &Word) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            a.letters()
                .iter()
                .map(|&x| self.rank[x as usize])
                .cmp(b.letters().iter().map(|&x| self.rank[x as usize]))
        })
    }
}

#[derive(Debug, Clone)]
pub struct LeadingWordsReport {
    pub presentation: Presentation,
    /// Always set: the monomial presentation is only meaningful when the input
    /// polynomials form a Gröbner basis for the chosen order.
    pub requires_groebner_basis: bool,
    pub caveat: &'static str,
}

pub fn leading_words(
    alphabet: Alphabet,
    polynomials: &[Polynomial],
    order: &GeneratorOrder,
) -> Result<LeadingWordsReport> {
    let mut words = Vec::with_capacity(polynomials.len());
    for (index, p) in polynomials.iter().enumerate() {
        let Some((_, first)) = p.terms.first() else {
            return Err(Error::ZeroPolynomial { index });
        };
        if p.terms.iter().any(|(_, w)| w.degree() != first.degree()) {
            return Err(Error::NonHomogeneous { index });
        }
        let lead = p
            .terms
            .iter()
            .map(|(_, w)| w)
            .max_by(|a, b| order.deglex(a, b))
            .expect("nonempty");
        words.push(lead.clone());
    }
    let presentation = Presentation::new(alphabet, words)?;
    Ok(LeadingWordsReport {
        presentation,
        requires_groebner_basis: true,
        caveat: GROEBNER_CAVEAT,
    })
}

fn parse_coeff(raw: &RawCoeff) -> Result<BigRational> {
    match raw {
        RawCoeff::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
        RawCoeff::Text(s) => {
            let t = s.trim();
            let parsed = match t.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| Error::InvalidCoefficient(s.clone()))?;
                    let d: BigInt = d.trim().parse().map_err(|_| Error::InvalidCoefficient(s.clone()))?;
                    if d.is_zero() {
                        return Err(Error::InvalidCoefficient(s.clone()));
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(
                    t.parse().map_err(|_| Error::InvalidCoefficient(s.clone()))?,
                ),
            };
            Ok(parsed)
        }
    }
}

/// Polynomial input: generators, an optional `generator_order` (smallest
/// first; defaults to the listed order) and `polynomials`, each a list of
/// `{"coeff": "p/q", "word": [tokens]}` terms.
#[derive(Debug, Clone)]
pub struct PolynomialInput {
    pub alphabet: Alphabet,
    pub polynomials: Vec<Polynomial>,
    pub order: GeneratorOrder,
}

pub fn parse_polynomial_input(source: &str) -> Result<PolynomialInput> {
    let raw = parse_raw(source)?;
    let alphabet = Alphabet::new(&raw.generators)?;
    let order = match &raw.generator_order {
        Some(names) => {
            let ascending = names
                .iter()
                .map(|n| alphabet.lookup(n))
                .collect::<Result<Vec<_>>>()?;
            GeneratorOrder::from_ascending(&ascending, alphabet.len())?
        }
        None => GeneratorOrder::identity(alphabet.len()),
    };
    let raw_polys = raw.polynomials.ok_or_else(|| Error::Syntax {
        line: 1,
        column: 1,
        message: "missing field `polynomials`".to_string(),
    })?;
    let mut polynomials = Vec::with_capacity(raw_polys.len());
    for terms in &raw_polys {
        let terms = terms
            .iter()
            .map(|t| Ok((parse_coeff(&t.coeff)?, alphabet.word_from_tokens(&t.word)?)))
            .collect::<Result<Vec<_>>>()?;
        polynomials.push(Polynomial::new(terms));
    }
    Ok(PolynomialInput {
        alphabet,
        polynomials,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::parse_presentation;

    fn run(source: &str) -> LeadingWordsReport {
        let input = parse_polynomial_input(source).unwrap();
        leading_words(input.alphabet, &input.polynomials, &input.order).unwrap()
    }

    #[test]
    fn cubic_relations_in_two_variables() {
        let report = run(fixtures::CUBIC_XY_POLYNOMIALS);
        let expected = parse_presentation(fixtures::CUBIC_XY).unwrap();
        assert_eq!(report.presentation, expected);
        assert!(report.requires_groebner_basis);
        assert_eq!(report.caveat, GROEBNER_CAVEAT);
    }

    #[test]
    fn supplied_groebner_basis_of_three_quadrics() {
        let report = run(fixtures::SKLYANIN_GB);
        let expected = parse_presentation(fixtures::SKLYANIN_LEADING).unwrap();
        assert_eq!(report.presentation, expected);
        assert!(report.presentation.minimality_violations().is_empty());
    }

    #[test]
    fn monomial_is_its_own_leading_word() {
        let report = run(
            r#"{"generators":["x","y"],"polynomials":[[{"coeff":1,"word":["x","y"]}]]}"#,
        );
        assert_eq!(report.presentation.relations(), &[Word::new(vec![0, 1])]);
    }

    #[test]
    fn order_changes_the_leading_word() {
        let src = |order: &str| {
            format!(
                r#"{{"generators":["x","y"],"generator_order":{order},
                   "polynomials":[[{{"coeff":"1","word":["x","x"]}},{{"coeff":"-1/2","word":["y","y"]}}]]}}"#
            )
        };
        assert_eq!(run(&src(r#"["x","y"]"#)).presentation.relations(), &[Word::new(vec![1, 1])]);
        assert_eq!(run(&src(r#"["y","x"]"#)).presentation.relations(), &[Word::new(vec![0, 0])]);
    }

    #[test]
    fn rejects_bad_polynomials() {
        let input = parse_polynomial_input(
            r#"{"generators":["x","y"],"polynomials":[[{"coeff":1,"word":["x","y"]},{"coeff":1,"word":["x"]}]]}"#,
        )
        .unwrap();
        let err = leading_words(input.alphabet, &input.polynomials, &input.order).unwrap_err();
        assert_eq!(err, Error::NonHomogeneous { index: 0 });

        let input = parse_polynomial_input(
            r#"{"generators":["x"],"polynomials":[[{"coeff":1,"word":["x","x"]},{"coeff":-1,"word":["x","x"]}]]}"#,
        )
        .unwrap();
        let err = leading_words(input.alphabet, &input.polynomials, &input.order).unwrap_err();
        assert_eq!(err, Error::ZeroPolynomial { index: 0 });

        let err = parse_polynomial_input(
            r#"{"generators":["x"],"polynomials":[[{"coeff":"1/0","word":["x","x"]}]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidCoefficient(_)));
    }
}
