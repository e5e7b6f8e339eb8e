use super::{SuiteReport, VerificationReport};

/// Plain-text table, one row per report, followed by a tally.
pub fn render_table(suite: &SuiteReport) -> String {
    let mut out = render_rows(&suite.reports);
    out.push_str(&format!(
        "\nprofile {}, budget {}: {} confirmed, {} refuted, {} undecided\n",
        format!("{:?}", suite.profile).to_lowercase(), suite.budget, suite.confirmed, suite.refuted, suite.undecided
    ));
    out
}

pub(crate) fn render_rows(reports: &[VerificationReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            let params = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
            [
                r.check.to_string(),
                params,
                format!("{:?}", r.conclusion).to_lowercase(),
                format!("{:?}", r.tier).to_lowercase(),
                r.reason.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let header = ["check", "params", "conclusion", "tier", "reason"].map(String::from);
    let widths: Vec<usize> =
        (0..4).map(|i| rows.iter().chain([&header]).map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in [&header].into_iter().chain(&rows) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i < 4 {
                line.push_str(&format!("{cell:<w$}  ", w = widths[i]));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
