use std::io::{Read, Write};

use super::PanelObservation;
use crate::error::{ModelError, Result};
use crate::fmt::format_sig;

/// Column order of the panel CSV.
pub const PANEL_HEADER: [&str; 7] = [
    "country", "year", "dlns", "dlny", "dlnlam", "y_bar", "lam_bar",
];

fn csv_error(e: csv::Error) -> ModelError {
    ModelError::Panel(format!("csv: {e}"))
}

/// Writes the panel as RFC 4180 CSV with a header row.
pub fn write_panel_csv<W: Write>(panel: &[PanelObservation], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(PANEL_HEADER).map_err(csv_error)?;
    for o in panel {
        w.write_record([
            o.country.to_string(),
            o.year.to_string(),
            format_sig(o.dlns),
            format_sig(o.dlny),
            format_sig(o.dlnlam),
            format_sig(o.y_bar),
            format_sig(o.lam_bar),
        ])
        .map_err(csv_error)?;
    }
    w.flush()
        .map_err(|e| ModelError::Panel(format!("write: {e}")))
}

/// Reads a panel CSV; the header must match [`PANEL_HEADER`] exactly.
pub fn read_panel_csv<R: Read>(reader: R) -> Result<Vec<PanelObservation>> {
    let mut r = csv::Reader::from_reader(reader);
    let header = r.headers().map_err(csv_error)?.clone();
    if header.iter().ne(PANEL_HEADER.iter().copied()) {
        return Err(ModelError::Panel(format!(
            "unexpected header `{}`, expected `{}`",
            header.iter().collect::<Vec<_>>().join(","),
            PANEL_HEADER.join(",")
        )));
    }
    r.deserialize().map(|row| row.map_err(csv_error)).collect()
}
