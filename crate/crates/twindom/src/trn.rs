//! The `trn` text format.
//!
//! ```text
//! 3
//! 101
//! ```
//!
//! Line 1 is the order `n` in decimal. Line 2 has exactly `n(n−1)/2`
//! characters, one per pair `(i, j)` with `i < j` in lexicographic order:
//! `1` for the arc `i → j`, `0` for `j → i`. A trailing newline is optional
//! and no other whitespace is allowed.

use thiserror::Error;
use twindom_core::{Tournament, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrnError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("expected {expected} arc characters, found {found}")]
    WrongBitCount { expected: usize, found: usize },
    #[error("illegal character {ch:?} at arc position {position}")]
    IllegalCharacter { ch: char, position: usize },
}

/// Encodes without a trailing newline.
pub fn encode(t: &Tournament) -> String {
    let mut s = t.order().to_string();
    s.push('\n');
    s.extend(t.pair_bits().map(|b| if b { '1' } else { '0' }));
    s
}

pub fn decode(text: &str) -> Result<Tournament, TrnError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let (header, bits) = body.split_once('\n').unwrap_or((body, ""));
    if header.is_empty() || !header.bytes().all(|b| b.is_ascii_digit()) {
        return Err(TrnError::MalformedHeader(format!(
            "{header:?} is not a decimal order"
        )));
    }
    let n: usize = header
        .parse()
        .map_err(|_| TrnError::MalformedHeader(format!("{header:?} is not a decimal order")))?;
    if n == 0 || n > MAX_ORDER {
        return Err(TrnError::MalformedHeader(format!(
            "order {n} outside 1..={MAX_ORDER}"
        )));
    }
    let expected = n * (n - 1) / 2;
    let mut chars = Vec::with_capacity(expected);
    for (position, ch) in bits.chars().enumerate() {
        match ch {
            '0' => chars.push(false),
            '1' => chars.push(true),
            _ => return Err(TrnError::IllegalCharacter { ch, position }),
        }
    }
    if chars.len() != expected {
        return Err(TrnError::WrongBitCount {
            expected,
            found: chars.len(),
        });
    }
    let mut next = chars.into_iter();
    Ok(
        Tournament::from_pair_fn(n, |_, _| next.next().expect("length checked"))
            .expect("order checked"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use twindom_core::generators::random_tournament;

    fn c3() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn c3_encoding() {
        assert_eq!(encode(&c3()), "3\n101");
        assert_eq!(decode("3\n101").unwrap(), c3());
        assert_eq!(decode("3\n101\n").unwrap(), c3());
    }

    #[test]
    fn one_vertex() {
        let t = Tournament::from_arcs(1, &[]).unwrap();
        assert_eq!(encode(&t), "1\n");
        assert_eq!(decode("1\n").unwrap(), t);
        assert_eq!(decode("1").unwrap(), t);
    }

    #[test]
    fn errors() {
        assert_eq!(
            decode("3\n11"),
            Err(TrnError::WrongBitCount {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            decode("3\n1011"),
            Err(TrnError::WrongBitCount {
                expected: 3,
                found: 4
            })
        );
        assert_eq!(
            decode("3\n1x1"),
            Err(TrnError::IllegalCharacter {
                ch: 'x',
                position: 1
            })
        );
        assert_eq!(
            decode("3\n10 1"),
            Err(TrnError::IllegalCharacter {
                ch: ' ',
                position: 2
            })
        );
        assert_eq!(
            decode("3\r\n101"),
            Err(TrnError::MalformedHeader(
                "\"3\\r\" is not a decimal order".into()
            ))
        );
        assert!(matches!(decode(""), Err(TrnError::MalformedHeader(_))));
        assert!(matches!(
            decode(" 3\n101"),
            Err(TrnError::MalformedHeader(_))
        ));
        assert!(matches!(decode("0\n"), Err(TrnError::MalformedHeader(_))));
        assert!(matches!(decode("65\n"), Err(TrnError::MalformedHeader(_))));
        assert!(matches!(
            decode("3\n101\n\n"),
            Err(TrnError::IllegalCharacter { ch: '\n', .. })
        ));
    }

    #[test]
    fn random_round_trip() {
        let t = random_tournament(8, 7).unwrap();
        assert_eq!(decode(&encode(&t)).unwrap(), t);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=64, seed: u64, newline: bool) {
            let t = random_tournament(n, seed).unwrap();
            let mut s = encode(&t);
            prop_assert_eq!(s.len(), n.to_string().len() + 1 + n * (n - 1) / 2);
            if newline {
                s.push('\n');
            }
            prop_assert_eq!(decode(&s).unwrap(), t);
        }
    }
}
