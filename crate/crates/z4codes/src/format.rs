//! The `.z4m` matrix text format.
//!
//! Layout: the first significant line is a header `k n`; the next `k`
//! significant lines each hold `n` space-separated digits in `{0,1,2,3}`.
//! Lines whose first non-blank character is `#` are comments; blank lines
//! and trailing whitespace are ignored. Parse errors carry one-based line
//! and column positions.

use std::fmt;

use z4codes_core::GeneratorMatrix;

/// A `.z4m` parse failure, located by one-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// A line that carries content: neither blank nor a comment.
fn is_significant(line: &str) -> bool {
    let trimmed = line.trim_start();
    !trimmed.is_empty() && !trimmed.starts_with('#')
}

/// Splits a line into `(column, token)` pairs with one-based columns
/// counted in characters.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut begin = 0usize;
    for (pos, (byte_index, ch)) in line.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[begin..byte_index]));
            }
        } else if start.is_none() {
            start = Some(pos);
            begin = byte_index;
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[begin..]));
    }
    out
}

/// Parses `.z4m` text into a generator matrix.
pub fn read_z4m(text: &str) -> Result<GeneratorMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| is_significant(l));
    let last_line = text.lines().count().max(1);

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| error(last_line, 1, "empty input: expected a header line `k n`"))?;
    let header_tokens = tokens(header);
    if header_tokens.len() != 2 {
        let column = header_tokens
            .get(2)
            .map_or_else(|| header.chars().count() + 1, |&(c, _)| c);
        return Err(error(
            header_line,
            column,
            format!(
                "header must be exactly `k n`, found {} token(s)",
                header_tokens.len()
            ),
        ));
    }
    let dimension = |(column, token): (usize, &str), what: &str| -> Result<usize, ParseError> {
        match token.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(error(
                header_line,
                column,
                format!("{what} must be a positive integer, found `{token}`"),
            )),
        }
    };
    let k = dimension(header_tokens[0], "row count k")?;
    let n = dimension(header_tokens[1], "column count n")?;
    const MAX_DIMENSION: usize = 1 << 20;
    if k > MAX_DIMENSION || n > MAX_DIMENSION {
        return Err(error(
            header_line,
            header_tokens[if k > MAX_DIMENSION { 0 } else { 1 }].0,
            format!("dimension exceeds the supported maximum {MAX_DIMENSION}"),
        ));
    }

    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(k);
    for _ in 0..k {
        let (line_no, line) = lines.next().ok_or_else(|| {
            error(
                last_line,
                1,
                format!("expected {k} matrix row(s), found only {}", rows.len()),
            )
        })?;
        let row_tokens = tokens(line);
        if row_tokens.len() != n {
            let column = row_tokens
                .get(n)
                .map_or_else(|| line.chars().count() + 1, |&(c, _)| c);
            return Err(error(
                line_no,
                column,
                format!("expected {n} entries in this row, found {}", row_tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for &(column, token) in &row_tokens {
            match token {
                "0" => row.push(0),
                "1" => row.push(1),
                "2" => row.push(2),
                "3" => row.push(3),
                _ => {
                    return Err(error(
                        line_no,
                        column,
                        format!("matrix entries must be one of 0, 1, 2, 3; found `{token}`"),
                    ))
                }
            }
        }
        rows.push(row);
    }

    if let Some((line_no, _)) = lines.next() {
        return Err(error(
            line_no,
            1,
            format!("unexpected content after the {k} declared matrix row(s)"),
        ));
    }

    GeneratorMatrix::from_digit_rows(&rows).map_err(|e| error(header_line, 1, e.to_string()))
}

/// Renders a matrix as `.z4m` text. Each entry of `comments` becomes one
/// leading `# `-prefixed line.
pub fn write_z4m(matrix: &GeneratorMatrix, comments: &[String]) -> String {
    let mut out = String::new();
    for comment in comments {
        out.push_str("# ");
        out.push_str(comment);
        out.push('\n');
    }
    out.push_str(&format!("{} {}\n", matrix.k(), matrix.n()));
    for row in matrix.rows() {
        let digits: Vec<String> = row.digits().iter().map(|d| d.to_string()).collect();
        out.push_str(&digits.join(" "));
        out.push('\n');
    }
    out
}
