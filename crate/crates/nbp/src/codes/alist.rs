//! Reader and writer for the alist sparse-matrix text format.
//!
//! Layout, in order: `n m`, then `max_col_degree max_row_degree`, then the
//! `n` column degrees, the `m` row degrees, one line of 1-based check indices
//! per column (zero-padded to the maximum column degree; padding zeros are
//! ignored), and one line of 1-based variable indices per row.

use thiserror::Error;

use super::matrix::BinaryMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlistError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: bad integer token '{token}'")]
    BadInteger { line: usize, token: String },
    #[error("line {line}: degree mismatch: declared {declared}, found {found} entries")]
    DegreeMismatch { line: usize, declared: usize, found: usize },
    #[error("line {line}: index {value} out of range 1..={max}")]
    IndexOutOfRange { line: usize, value: usize, max: usize },
    #[error("line {line}: duplicate index {value}")]
    DuplicateIndex { line: usize, value: usize },
    #[error("line {line}: unexpected end of input ({expected})")]
    UnexpectedEof { line: usize, expected: String },
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
    #[error("line {line}: column/row adjacency lists disagree at entry ({row}, {col})")]
    InconsistentAdjacency { line: usize, row: usize, col: usize },
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<usize>, AlistError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| AlistError::BadInteger { line: lineno, token: tok.to_string() })
        })
        .collect()
}

/// Parse an alist document into a dense binary matrix.
pub fn parse_alist(text: &str) -> Result<BinaryMatrix, AlistError> {
    let last_line = text.lines().count();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let mut next_line = |expected: &str| {
        lines.next().ok_or_else(|| AlistError::UnexpectedEof {
            line: last_line,
            expected: expected.to_string(),
        })
    };

    let (lineno, header) = next_line("n m")?;
    let dims = parse_ints(header, lineno)?;
    if dims.len() != 2 || dims[0] == 0 || dims[1] == 0 {
        return Err(AlistError::MalformedHeader {
            line: lineno,
            reason: "expected two positive integers 'n m'".to_string(),
        });
    }
    let (n, m) = (dims[0], dims[1]);

    let (lineno, degs) = next_line("max degrees")?;
    let maxdeg = parse_ints(degs, lineno)?;
    if maxdeg.len() != 2 {
        return Err(AlistError::MalformedHeader {
            line: lineno,
            reason: "expected 'max_col_degree max_row_degree'".to_string(),
        });
    }
    let (max_col, max_row) = (maxdeg[0], maxdeg[1]);

    let (lineno, cd_line) = next_line("column degrees")?;
    let col_degrees = parse_ints(cd_line, lineno)?;
    if col_degrees.len() != n {
        return Err(AlistError::DegreeMismatch { line: lineno, declared: n, found: col_degrees.len() });
    }
    for &d in &col_degrees {
        if d > max_col {
            return Err(AlistError::DegreeMismatch { line: lineno, declared: max_col, found: d });
        }
    }

    let (lineno, rd_line) = next_line("row degrees")?;
    let row_degrees = parse_ints(rd_line, lineno)?;
    if row_degrees.len() != m {
        return Err(AlistError::DegreeMismatch { line: lineno, declared: m, found: row_degrees.len() });
    }
    for &d in &row_degrees {
        if d > max_row {
            return Err(AlistError::DegreeMismatch { line: lineno, declared: max_row, found: d });
        }
    }

    let mut matrix = BinaryMatrix::zeros(m, n);

    // Column lists: the authoritative adjacency.
    for (col, &degree) in col_degrees.iter().enumerate() {
        let (lineno, line) = next_line("column entries")?;
        let entries = parse_ints(line, lineno)?;
        let nonzero: Vec<usize> = entries.iter().copied().filter(|&e| e != 0).collect();
        if nonzero.len() != degree {
            return Err(AlistError::DegreeMismatch { line: lineno, declared: degree, found: nonzero.len() });
        }
        let mut seen = vec![false; m];
        for &check in &nonzero {
            if check > m {
                return Err(AlistError::IndexOutOfRange { line: lineno, value: check, max: m });
            }
            if seen[check - 1] {
                return Err(AlistError::DuplicateIndex { line: lineno, value: check });
            }
            seen[check - 1] = true;
            matrix.set(check - 1, col, 1);
        }
    }

    // Row lists: must agree with the columns exactly.
    for (row, &degree) in row_degrees.iter().enumerate() {
        let (lineno, line) = next_line("row entries")?;
        let entries = parse_ints(line, lineno)?;
        let nonzero: Vec<usize> = entries.iter().copied().filter(|&e| e != 0).collect();
        if nonzero.len() != degree {
            return Err(AlistError::DegreeMismatch { line: lineno, declared: degree, found: nonzero.len() });
        }
        let mut seen = vec![false; n];
        for &var in &nonzero {
            if var > n {
                return Err(AlistError::IndexOutOfRange { line: lineno, value: var, max: n });
            }
            if seen[var - 1] {
                return Err(AlistError::DuplicateIndex { line: lineno, value: var });
            }
            seen[var - 1] = true;
            if matrix.get(row, var - 1) != 1 {
                return Err(AlistError::InconsistentAdjacency { line: lineno, row: row + 1, col: var });
            }
        }
        let listed = matrix.row(row).iter().filter(|&&b| b == 1).count();
        if listed != degree {
            return Err(AlistError::DegreeMismatch { line: lineno, declared: degree, found: listed });
        }
    }

    if let Some((lineno, _)) = lines.next() {
        return Err(AlistError::TrailingContent { line: lineno });
    }
    Ok(matrix)
}

/// Serialize a matrix as an alist document; `parse_alist` recovers it exactly.
pub fn write_alist(m: &BinaryMatrix) -> String {
    let rows = m.rows();
    let cols = m.cols();
    let mut col_lists: Vec<Vec<usize>> = vec![Vec::new(); cols];
    let mut row_lists: Vec<Vec<usize>> = vec![Vec::new(); rows];
    for r in 0..rows {
        for c in 0..cols {
            if m.get(r, c) == 1 {
                col_lists[c].push(r + 1);
                row_lists[r].push(c + 1);
            }
        }
    }
    let max_col = col_lists.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let max_row = row_lists.iter().map(Vec::len).max().unwrap_or(0).max(1);

    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let padded = |v: &Vec<usize>, width: usize| {
        let mut p = v.clone();
        p.resize(width, 0);
        join(&p)
    };

    let mut out = String::new();
    out.push_str(&format!("{cols} {rows}\n"));
    out.push_str(&format!("{max_col} {max_row}\n"));
    out.push_str(&join(&col_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    out.push_str(&join(&row_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    for list in &col_lists {
        out.push_str(&padded(list, max_col));
        out.push('\n');
    }
    for list in &row_lists {
        out.push_str(&padded(list, max_row));
        out.push('\n');
    }
    out
}
