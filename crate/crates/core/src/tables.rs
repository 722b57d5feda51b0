//! The four reference tables: exponents of the shipped laws at three shifts.

use crate::densities::{Exponential, InverseGaussian, Law, Levy, Uniform};
use crate::diversity::{full_report, DiversityReport};
use crate::{Error, Result};

/// Law and shifts of table `n` (1 to 4).
pub fn table_spec(n: u8) -> Result<(Law, [f64; 3])> {
    let out = match n {
        1 => (Exponential::new(1.0)?.into(), [0.5, 1.5, 2.5]),
        2 => (InverseGaussian::new(1.0, 1.0)?.into(), [0.5, 1.0, 1.5]),
        3 => (Levy::new(0.0, 1.0)?.into(), [0.5, 1.0, 1.5]),
        4 => (Uniform::new(1.0)?.into(), [0.25, 0.5, 0.75]),
        _ => return Err(Error::InvalidParameter(format!("table must be 1 to 4, got {n}"))),
    };
    Ok(out)
}

/// One report per shift, in column order.
pub fn table(n: u8) -> Result<Vec<DiversityReport>> {
    let (law, deltas) = table_spec(n)?;
    Ok(deltas.iter().map(|&d| full_report(&law, d)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_table() {
        assert!(table_spec(0).is_err());
        assert!(table_spec(5).is_err());
    }

    #[test]
    fn every_table_has_three_clean_columns() {
        for n in 1..=4 {
            let rows = table(n).unwrap();
            assert_eq!(rows.len(), 3);
            for r in rows {
                assert!(r.flags.iter().all(|f| f == "d_lin:degenerate"), "{r}");
            }
        }
    }
}
