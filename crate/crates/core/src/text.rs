//! Line-oriented reader shared by the matrix and chain text formats.

use crate::error::{Error, Result};

pub(crate) struct LineCursor<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> LineCursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Self {
            lines: text.lines().map(|l| l.trim_end_matches('\r')).collect(),
            pos: 0,
        }
    }

    /// 1-based number of the line that the next call will return.
    pub(crate) fn line_no(&self) -> usize {
        self.pos + 1
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let line = *self.lines.get(self.pos)?;
        self.pos += 1;
        Some((self.pos, line))
    }

    pub(crate) fn skip_blank(&mut self) {
        while self
            .lines
            .get(self.pos)
            .is_some_and(|l| l.trim().is_empty())
        {
            self.pos += 1;
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_blank();
        self.pos >= self.lines.len()
    }

    pub(crate) fn expect_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let at = self.line_no();
        self.next_line()
            .ok_or_else(|| Error::parse(at, format!("unexpected end of input, expected {what}")))
    }
}

pub(crate) fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{token}`")))
}

/// Reads an "R C" header line.
pub(crate) fn parse_header(cursor: &mut LineCursor<'_>) -> Result<(usize, usize)> {
    cursor.skip_blank();
    let (line, text) = cursor.expect_line("matrix header `R C`")?;
    let mut tokens = text.split_whitespace();
    let (Some(r), Some(c), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(Error::parse(line, "matrix header must be `R C`"));
    };
    let rows = parse_usize(line, r, "row count")?;
    let cols = parse_usize(line, c, "column count")?;
    if rows == 0 || cols == 0 {
        return Err(Error::parse(line, "matrix dimensions must be positive"));
    }
    Ok((rows, cols))
}
