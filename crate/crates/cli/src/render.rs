//! Serialization of enumerated tableaux.

use clap::ValueEnum;
use serde_json::json;

use tableau_corners::tableaux::{Family, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

/// `{"family", "n", "count", "tableaux": [records]}`, pretty-printed.
pub fn to_json(family: Family, n: usize, tableaux: &[Tableau]) -> String {
    let records: Vec<_> = tableaux.iter().map(Tableau::to_record).collect();
    let doc = json!({ "family": family.name(), "n": n, "count": tableaux.len(), "tableaux": records });
    serde_json::to_string_pretty(&doc).expect("records serialize") + "\n"
}

/// One line per tableau; row lengths are joined by `;`.
pub fn to_csv(family: Family, n: usize, tableaux: &[Tableau]) -> String {
    let mut out = String::from("index,family,n,rows,shifted,filling,corners\n");
    for (i, t) in tableaux.iter().enumerate() {
        let shape = t.shape_record();
        let rows: Vec<String> = shape.rows.iter().map(usize::to_string).collect();
        out.push_str(&format!(
            "{i},{},{n},{},{},{},{}\n",
            family.name(),
            rows.join(";"),
            shape.shifted,
            t.filling_string(),
            t.corner_records().len()
        ));
    }
    out
}

/// Each rendering under a `# index` header, separated by blank lines.
pub fn to_ascii(family: Family, n: usize, tableaux: &[Tableau]) -> String {
    let mut out = String::new();
    for (i, t) in tableaux.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("# {i} {} n={n} filling={}\n", family.name(), t.filling_string()));
        let art = t.render_ascii();
        out.push_str(&art);
        if !art.is_empty() && !art.ends_with('\n') {
            out.push('\n');
        }
    }
    out
}

pub fn render(format: Format, family: Family, n: usize, tableaux: &[Tableau]) -> String {
    match format {
        Format::Json => to_json(family, n, tableaux),
        Format::Csv => to_csv(family, n, tableaux),
        Format::Ascii => to_ascii(family, n, tableaux),
    }
}
