use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// Cursor over non-blank lines of a keyword-structured document.
pub(crate) struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Lines {
            lines: text
                .lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty())
                .collect(),
            pos: 0,
        }
    }

    pub(crate) fn line_no(&self) -> usize {
        self.lines
            .get(self.pos)
            .or(self.lines.last())
            .map_or(1, |(n, _)| *n)
    }

    fn next(&mut self) -> Result<(usize, &'a str)> {
        let item = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| parse_err(self.line_no(), "unexpected end of input"))?;
        self.pos += 1;
        Ok(item)
    }

    /// Consumes a line that must equal `exact`.
    pub(crate) fn expect_line(&mut self, exact: &str) -> Result<()> {
        let (n, line) = self.next()?;
        if line == exact {
            Ok(())
        } else {
            Err(parse_err(n, format!("expected `{exact}`, found `{line}`")))
        }
    }

    /// Consumes `keyword rest...` and returns the whitespace-split rest.
    pub(crate) fn keyword(&mut self, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
        let (n, line) = self.next()?;
        let mut parts = line.split_whitespace();
        if parts.next() != Some(keyword) {
            return Err(parse_err(n, format!("expected `{keyword}`, found `{line}`")));
        }
        Ok((n, parts.collect()))
    }

    /// A whole line split on whitespace.
    pub(crate) fn fields(&mut self) -> Result<(usize, Vec<&'a str>)> {
        let (n, line) = self.next()?;
        Ok((n, line.split_whitespace().collect()))
    }

    /// `keyword value` with exactly one parsed value.
    pub(crate) fn value<T: FromStr>(&mut self, keyword: &str) -> Result<T> {
        let (n, rest) = self.keyword(keyword)?;
        if rest.len() != 1 {
            return Err(parse_err(n, format!("`{keyword}` takes one value")));
        }
        parse_token(n, rest[0])
    }

    /// `keyword v1 v2 ...` with all values parsed.
    pub(crate) fn values<T: FromStr>(&mut self, keyword: &str) -> Result<(usize, Vec<T>)> {
        let (n, rest) = self.keyword(keyword)?;
        let values = rest
            .iter()
            .map(|t| parse_token(n, t))
            .collect::<Result<Vec<T>>>()?;
        Ok((n, values))
    }

    pub(crate) fn expect_end(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some((n, l)) => Err(parse_err(*n, format!("trailing content `{l}`"))),
        }
    }
}

pub(crate) fn parse_token<T: FromStr>(line: usize, token: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid value `{token}`")))
}

pub(crate) fn with_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    }
}

pub(crate) fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}
