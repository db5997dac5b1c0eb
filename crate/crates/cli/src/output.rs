use qheat_core::experiments::{RectificationPoint, SweepRow};
use qheat_core::BathKind;

pub const POINT_HEADER: [&str; 16] = [
    "T_L",
    "T_R",
    "gamma_L",
    "gamma_R",
    "bath",
    "epsilon",
    "kappa",
    "P1",
    "P2",
    "P3",
    "P4",
    "J_L",
    "concurrence",
    "discord",
    "mutual_info",
    "classical_corr",
];

pub const RECT_HEADER: [&str; 3] = ["dT", "J_forward", "J_reverse"];

/// Shortest decimal string that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

/// Fixed per-run columns of a point/sweep CSV.
pub struct RunColumns {
    pub gamma_l: f64,
    pub gamma_r: f64,
    pub bath: BathKind,
    pub epsilon: f64,
    pub kappa: f64,
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

pub fn rows_csv(cols: &RunColumns, rows: &[SweepRow]) -> csv::Result<Vec<u8>> {
    let mut w = writer();
    w.write_record(POINT_HEADER)?;
    for r in rows {
        let p = r.populations.as_array();
        let c = &r.correlations;
        w.write_record([
            num(r.t_left),
            num(r.t_right),
            num(cols.gamma_l),
            num(cols.gamma_r),
            cols.bath.as_str().to_owned(),
            num(cols.epsilon),
            num(cols.kappa),
            num(p[0]),
            num(p[1]),
            num(p[2]),
            num(p[3]),
            num(r.heat_current),
            num(c.concurrence),
            num(c.discord),
            num(c.mutual_information),
            num(c.classical_correlation),
        ])?;
    }
    finish(w)
}

pub fn rect_csv(points: &[RectificationPoint]) -> csv::Result<Vec<u8>> {
    let mut w = writer();
    w.write_record(RECT_HEADER)?;
    for p in points {
        w.write_record([num(p.delta_t), num(p.forward), num(p.reverse)])?;
    }
    finish(w)
}

pub fn death_csv(t: f64) -> csv::Result<Vec<u8>> {
    let mut w = writer();
    w.write_record(["T_death".to_owned(), num(t)])?;
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> csv::Result<Vec<u8>> {
    w.into_inner().map_err(|e| e.into_error().into())
}
