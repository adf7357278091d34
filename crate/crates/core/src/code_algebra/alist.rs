//! Reader and writer for the MacKay alist format.
//!
//! Layout: line 1 `n m`, line 2 `max_col_degree max_row_degree`, line 3 the
//! n column degrees, line 4 the m row degrees, then one line of 1-indexed row
//! indices per column and one line of 1-indexed column indices per row.
//! Zero padding in the index lists is accepted and ignored.

use super::{BinaryMatrix, CodeError};

struct Lines<'a> {
    inner: std::str::Lines<'a>,
    lineno: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self { inner: text.lines(), lineno: 0 }
    }

    /// Next non-blank line together with its 1-based line number.
    fn next_nonblank(&mut self) -> Option<(usize, &'a str)> {
        for line in self.inner.by_ref() {
            self.lineno += 1;
            if !line.trim().is_empty() {
                return Some((self.lineno, line));
            }
        }
        None
    }
}

fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<usize>, CodeError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| CodeError::ParseError {
                line: lineno,
                msg: format!("expected nonnegative integer, got {tok:?}"),
            })
        })
        .collect()
}

fn expect_counts(line: &str, lineno: usize, want: usize, what: &str) -> Result<Vec<usize>, CodeError> {
    let nums = parse_numbers(line, lineno)?;
    if nums.len() != want {
        return Err(CodeError::ParseError {
            line: lineno,
            msg: format!("expected {want} {what}, got {}", nums.len()),
        });
    }
    Ok(nums)
}

pub fn parse_alist(text: &str) -> Result<BinaryMatrix, CodeError> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines
        .next_nonblank()
        .ok_or(CodeError::ParseError { line: 1, msg: "empty input".into() })?;
    let dims = expect_counts(header, ln, 2, "header entries (n m)")?;
    let (n, m) = (dims[0], dims[1]);
    if n < 2 || m < 1 {
        return Err(CodeError::ParseError { line: ln, msg: format!("bad dimensions n={n} m={m}") });
    }

    let (ln, line) = lines
        .next_nonblank()
        .ok_or(CodeError::ParseError { line: ln, msg: "missing max-degree line".into() })?;
    let maxdeg = expect_counts(line, ln, 2, "max degrees")?;
    let (max_col, max_row) = (maxdeg[0], maxdeg[1]);

    let (ln, line) = lines
        .next_nonblank()
        .ok_or(CodeError::ParseError { line: ln, msg: "missing column-degree line".into() })?;
    let col_degrees = expect_counts(line, ln, n, "column degrees")?;
    let (ln, line) = lines
        .next_nonblank()
        .ok_or(CodeError::ParseError { line: ln, msg: "missing row-degree line".into() })?;
    let row_degrees = expect_counts(line, ln, m, "row degrees")?;

    if let Some(&d) = col_degrees.iter().max() {
        if d != max_col {
            return Err(CodeError::DegreeMismatch(format!(
                "header claims max column degree {max_col}, lists give {d}"
            )));
        }
    }
    if let Some(&d) = row_degrees.iter().max() {
        if d != max_row {
            return Err(CodeError::DegreeMismatch(format!(
                "header claims max row degree {max_row}, lists give {d}"
            )));
        }
    }

    // Per-column lists of 1-indexed rows.
    let mut col_lists: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (i, &deg) in col_degrees.iter().enumerate() {
        let (ln, line) = lines.next_nonblank().ok_or(CodeError::DegreeMismatch(format!(
            "expected {n} column lists, input ends after {i}"
        )))?;
        let nums = parse_numbers(line, ln)?;
        let entries: Vec<usize> = nums.iter().copied().filter(|&x| x != 0).collect();
        if entries.len() != deg {
            return Err(CodeError::DegreeMismatch(format!(
                "column {} declares degree {deg} but lists {} entries",
                i + 1,
                entries.len()
            )));
        }
        for &r in &entries {
            if r > m {
                return Err(CodeError::ParseError {
                    line: ln,
                    msg: format!("row index {r} out of range 1..={m}"),
                });
            }
        }
        col_lists.push(entries);
    }

    // Per-row lists of 1-indexed columns.
    let mut row_lists: Vec<Vec<usize>> = Vec::with_capacity(m);
    for (j, &deg) in row_degrees.iter().enumerate() {
        let (ln, line) = lines.next_nonblank().ok_or(CodeError::DegreeMismatch(format!(
            "expected {m} row lists, input ends after {j}"
        )))?;
        let nums = parse_numbers(line, ln)?;
        let entries: Vec<usize> = nums.iter().copied().filter(|&x| x != 0).collect();
        if entries.len() != deg {
            return Err(CodeError::DegreeMismatch(format!(
                "row {} declares degree {deg} but lists {} entries",
                j + 1,
                entries.len()
            )));
        }
        for &c in &entries {
            if c > n {
                return Err(CodeError::ParseError {
                    line: ln,
                    msg: format!("column index {c} out of range 1..={n}"),
                });
            }
        }
        row_lists.push(entries);
    }

    if lines.next_nonblank().is_some() {
        return Err(CodeError::DegreeMismatch(format!(
            "trailing data after {m} row lists (header claims m={m})"
        )));
    }

    // Cross-check the two adjacency encodings.
    let mut from_cols: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, rows) in col_lists.iter().enumerate() {
        for &r in rows {
            from_cols[r - 1].push(i);
        }
    }
    for (j, cols) in row_lists.iter().enumerate() {
        let mut sorted: Vec<usize> = cols.iter().map(|&c| c - 1).collect();
        sorted.sort_unstable();
        from_cols[j].sort_unstable();
        if from_cols[j] != sorted {
            return Err(CodeError::DegreeMismatch(format!(
                "row {} adjacency disagrees between column lists and row lists",
                j + 1
            )));
        }
    }

    let supports: Vec<Vec<usize>> = row_lists
        .iter()
        .map(|cols| cols.iter().map(|&c| c - 1).collect())
        .collect();
    BinaryMatrix::from_row_supports(m, n, &supports)
}

pub fn write_alist(h: &BinaryMatrix) -> String {
    let (m, n) = (h.rows(), h.cols());
    let max_col = (0..n).map(|i| h.col_support(i).len()).max().unwrap_or(0);
    let max_row = (0..m).map(|j| h.row_weight(j)).max().unwrap_or(0);
    let mut out = String::new();
    out.push_str(&format!("{n} {m}\n{max_col} {max_row}\n"));
    let col_degs: Vec<String> = (0..n).map(|i| h.col_support(i).len().to_string()).collect();
    out.push_str(&col_degs.join(" "));
    out.push('\n');
    let row_degs: Vec<String> = (0..m).map(|j| h.row_weight(j).to_string()).collect();
    out.push_str(&row_degs.join(" "));
    out.push('\n');
    for i in 0..n {
        let list: Vec<String> = h.col_support(i).iter().map(|&j| (j + 1).to_string()).collect();
        out.push_str(&list.join(" "));
        out.push('\n');
    }
    for j in 0..m {
        let list: Vec<String> = h.row_support(j).iter().map(|&i| (i + 1).to_string()).collect();
        out.push_str(&list.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_algebra::builtin_matrix;

    #[test]
    fn all_ones_2x3() {
        let text = "3 2\n2 3\n2 2 2\n3 3\n1 2\n1 2\n1 2\n1 2 3\n1 2 3\n";
        let h = parse_alist(text).unwrap();
        assert_eq!((h.rows(), h.cols()), (2, 3));
        assert_eq!(h.dense_rows(), vec![vec![1, 1, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn zero_padding_ignored() {
        let text = "3 2\n2 3\n2 2 2\n3 3\n1 2 0\n1 2 0\n1 2 0\n1 2 3\n1 2 3\n";
        assert!(parse_alist(text).is_ok());
    }

    #[test]
    fn round_trip_builtins() {
        for name in ["H1", "H2", "H3", "HG", "HGp"] {
            let h = builtin_matrix(name).unwrap();
            let parsed = parse_alist(&write_alist(&h)).unwrap();
            assert_eq!(parsed, h, "round trip failed for {name}");
        }
    }

    #[test]
    fn extra_row_list_is_degree_mismatch() {
        // header claims m=2 but three row lists follow
        let text = "3 2\n2 3\n2 2 2\n3 3\n1 2\n1 2\n1 2\n1 2 3\n1 2 3\n1 2 3\n";
        assert!(matches!(parse_alist(text), Err(CodeError::DegreeMismatch(_))));
    }

    #[test]
    fn degree_list_disagreement() {
        // column 1 declares degree 2 but lists one entry
        let text = "3 2\n2 3\n2 2 2\n3 3\n1\n1 2\n1 2\n1 2 3\n1 2 3\n";
        assert!(matches!(parse_alist(text), Err(CodeError::DegreeMismatch(_))));
    }

    #[test]
    fn bad_token_reports_line() {
        let text = "3 2\n2 3\n2 2 x\n3 3\n1 2\n1 2\n1 2\n1 2 3\n1 2 3\n";
        match parse_alist(text) {
            Err(CodeError::ParseError { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected ParseError, got {other:?}"),
        }
    }

    #[test]
    fn row_column_adjacency_cross_check() {
        // degrees all agree, but row 2 lists columns {1,3} while the column
        // lists imply {2,3}
        let text = "3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n1 3\n";
        assert!(matches!(parse_alist(text), Err(CodeError::DegreeMismatch(_))));
    }
}
