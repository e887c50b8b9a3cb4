//! Plain-text tables with left-aligned columns.

use std::fmt::Write as _;

#[derive(Debug, Clone, Default)]
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

/// Whether pass/fail cells get ANSI colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Plain,
    Color,
}

impl Style {
    /// Colors only for an interactive terminal, and never with `HV_COLOR=0`.
    pub fn detect() -> Self {
        use std::io::IsTerminal;
        let disabled = std::env::var("HV_COLOR").is_ok_and(|v| v == "0");
        if !disabled && std::io::stdout().is_terminal() {
            Style::Color
        } else {
            Style::Plain
        }
    }

    pub fn verdict(self, passed: bool) -> String {
        let (word, code) = if passed { ("PASS", 32) } else { ("FAIL", 31) };
        match self {
            Style::Plain => word.to_string(),
            Style::Color => format!("\x1b[{code}m{word}\x1b[0m"),
        }
    }
}

impl Table {
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(headers: I) -> Self {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<I: IntoIterator<Item = S>, S: Into<String>>(&mut self, cells: I) {
        self.rows.push(cells.into_iter().map(Into::into).collect());
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Widths are measured in characters, ignoring ANSI escapes, so colored
    /// cells line up with plain ones.
    pub fn render(&self) -> String {
        let ncols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| visible_len(h)).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate().take(ncols) {
                widths[i] = widths[i].max(visible_len(cell));
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let mut s = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(cell);
                } else {
                    let pad = widths[i] - visible_len(cell);
                    let _ = write!(s, "{cell}{}  ", " ".repeat(pad));
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&self.headers);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        line(&rule);
        for row in &self.rows {
            line(row);
        }
        out
    }
}

fn visible_len(s: &str) -> usize {
    let mut n = 0;
    let mut in_escape = false;
    for c in s.chars() {
        match (in_escape, c) {
            (false, '\x1b') => in_escape = true,
            (true, 'm') => in_escape = false,
            (true, _) => {}
            (false, _) => n += 1,
        }
    }
    n
}
