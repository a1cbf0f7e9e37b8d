//! Adjacency-matrix text: `n` lines of `n` characters, `1` at row `u`,
//! column `v` iff `u → v`. The diagonal is `0`.

use thiserror::Error;
use twindom_core::{Tournament, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("illegal character {ch:?} at row {row}, column {col}")]
    IllegalCharacter { ch: char, row: usize, col: usize },
    #[error("matrix has {0} rows, outside 1..=64")]
    BadOrder(usize),
    #[error("not a tournament: {0}")]
    NotATournament(twindom_core::Error),
}

pub fn encode(t: &Tournament) -> String {
    let mut s = String::with_capacity(t.order() * (t.order() + 1));
    for row in t.matrix() {
        s.extend(row.into_iter().map(|b| if b { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

pub fn decode(text: &str) -> Result<Tournament, MatrixError> {
    let rows: Vec<&str> = text.lines().collect();
    let n = rows.len();
    if n == 0 || n > MAX_ORDER {
        return Err(MatrixError::BadOrder(n));
    }
    let mut arcs = Vec::new();
    for (u, row) in rows.iter().enumerate() {
        let found = row.chars().count();
        if found != n {
            return Err(MatrixError::RaggedRow {
                row: u,
                expected: n,
                found,
            });
        }
        for (v, ch) in row.chars().enumerate() {
            match ch {
                '1' => arcs.push((u, v)),
                '0' => {}
                _ => return Err(MatrixError::IllegalCharacter { ch, row: u, col: v }),
            }
        }
    }
    Tournament::from_arcs(n, &arcs).map_err(MatrixError::NotATournament)
}
