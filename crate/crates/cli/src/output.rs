//! Deterministic output formatting. Numbers are printed with 17 significant
//! digits so a CSV round-trips exactly through `f64`.

use kerrwva::scaling::SweepAxis;
use kerrwva::{FisherReport, ScalingFit, SweepRow};

/// 17 significant digits; non-finite values spelled out.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// Same digits, but valid JSON (non-finite becomes `null`).
pub fn json_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".into()
    }
}

pub fn axis_name(axis: SweepAxis) -> &'static str {
    match axis {
        SweepAxis::ThetaF => "theta_f",
        SweepAxis::Chi => "chi",
        SweepAxis::MeanPhotons => "n_mean",
    }
}

/// A CSV table: `#`-prefixed metadata comment, header line, data rows, and
/// optional trailing comment lines. LF endings throughout.
pub struct CsvTable {
    pub metadata: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub trailing_comments: Vec<String>,
}

impl CsvTable {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("# ");
        out.push_str(&self.metadata);
        out.push('\n');
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        for c in &self.trailing_comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out
    }
}

/// Cells `p_f,wva_fi,wva_qfi,q_cm,degenerate` for one sweep row; degenerate
/// rows keep their axis value and p_f, with `nan` in the derived columns.
pub fn sweep_cells(row: &SweepRow) -> Vec<String> {
    match &row.report {
        Some(r) => vec![
            fmt_num(r.p_f),
            fmt_num(r.wva_fi),
            fmt_num(r.wva_qfi),
            fmt_num(r.q_conventional),
            "0".into(),
        ],
        None => vec![
            fmt_num(row.p_f),
            "nan".into(),
            "nan".into(),
            "nan".into(),
            "1".into(),
        ],
    }
}

pub fn point_csv(metadata: &str, report: &FisherReport) -> String {
    let table = CsvTable {
        metadata: metadata.to_string(),
        header: ["p_f", "f_f", "q_f", "wva_fi", "wva_qfi", "q_cm", "crb", "n_max"]
            .map(String::from)
            .to_vec(),
        rows: vec![vec![
            fmt_num(report.p_f),
            fmt_num(report.f_classical),
            fmt_num(report.q_quantum),
            fmt_num(report.wva_fi),
            fmt_num(report.wva_qfi),
            fmt_num(report.q_conventional),
            fmt_num(report.crb),
            report.n_max.to_string(),
        ]],
        trailing_comments: vec![],
    };
    table.render()
}

pub fn point_json(report: &FisherReport) -> String {
    format!(
        "{{\"p_f\":{},\"f_f\":{},\"q_f\":{},\"wva_fi\":{},\"wva_qfi\":{},\"q_cm\":{},\"crb\":{},\"n_max\":{}}}\n",
        json_num(report.p_f),
        json_num(report.f_classical),
        json_num(report.q_quantum),
        json_num(report.wva_fi),
        json_num(report.wva_qfi),
        json_num(report.q_conventional),
        json_num(report.crb),
        report.n_max
    )
}

pub fn fit_comment(label: &str, fit: &ScalingFit) -> String {
    format!(
        "fit {label} slope={} intercept={} r_squared={} residual_max={}",
        fmt_num(fit.slope),
        fmt_num(fit.intercept),
        fmt_num(fit.r_squared),
        fmt_num(fit.residual_max)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting_round_trips() {
        for x in [0.0, 1.0, 9760.0, 0.5137348245926586, 1e-300, -2.5e17] {
            assert_eq!(fmt_num(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(fmt_num(f64::INFINITY), "inf");
        assert_eq!(json_num(f64::INFINITY), "null");
        assert!(fmt_num(f64::NAN).parse::<f64>().unwrap().is_nan());
    }

    #[test]
    fn csv_table_layout() {
        let t = CsvTable {
            metadata: "meta".into(),
            header: vec!["a".into(), "b".into()],
            rows: vec![vec!["1".into(), "2".into()]],
            trailing_comments: vec!["tail".into()],
        };
        assert_eq!(t.render(), "# meta\na,b\n1,2\n# tail\n");
    }
}
