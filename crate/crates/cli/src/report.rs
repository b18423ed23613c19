//! Output assembly. Text mode aligns tables for reading; TSV mode emits
//! tab-separated records with one header line per table.

use crate::Format;

enum Block {
    Line(String),
    Field(String, String),
    Table { header: Vec<String>, rows: Vec<Vec<String>> },
}

#[derive(Default)]
pub struct Report {
    blocks: Vec<Block>,
}

impl Report {
    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.blocks.push(Block::Line(s.into()));
        self
    }

    pub fn field(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.blocks.push(Block::Field(key.to_string(), value.to_string()));
        self
    }

    pub fn table(&mut self, header: &[&str], rows: Vec<Vec<String>>) -> &mut Self {
        self.blocks.push(Block::Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows,
        });
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            match (b, format) {
                (Block::Line(s), _) => out.push_str(s),
                (Block::Field(k, v), Format::Text) => out.push_str(&format!("{k}: {v}")),
                (Block::Field(k, v), Format::Tsv) => out.push_str(&format!("{k}\t{v}")),
                (Block::Table { header, rows }, Format::Tsv) => {
                    let lines: Vec<String> = std::iter::once(header).chain(rows).map(|r| r.join("\t")).collect();
                    out.push_str(&lines.join("\n"));
                }
                (Block::Table { header, rows }, Format::Text) => out.push_str(&aligned(header, rows)),
            }
            out.push('\n');
        }
        out
    }
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let width = |c: usize| {
        std::iter::once(header)
            .chain(rows.iter().map(Vec::as_slice))
            .filter_map(|r| r.get(c))
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(0)
    };
    let widths: Vec<usize> = (0..header.len()).map(width).collect();
    std::iter::once(header)
        .chain(rows.iter().map(Vec::as_slice))
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_formats() {
        let mut r = Report::default();
        r.field("p_acc", "1/2").table(&["x", "verdict"], vec![vec!["ε".into(), "no".into()]]);
        assert_eq!(r.render(Format::Tsv), "p_acc\t1/2\nx\tverdict\nε\tno\n");
        assert_eq!(r.render(Format::Text), "p_acc: 1/2\nx  verdict\nε  no\n");
    }
}
