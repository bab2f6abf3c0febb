use serde_json::Value;

use super::corollary::{corollary_certificates, example1_certificates};
use super::intro::{pgl27_certificates, wreath_certificates};
use super::{Recorder, RunConfig};
use crate::error::Result;
use crate::pisub::normalizer_index;

pub(super) fn wh_suite(_: &RunConfig, rec: &mut Recorder) -> Result<()> {
    let mut certs = pgl27_certificates()?;
    certs.extend(example1_certificates()?);
    certs.extend(wreath_certificates()?);
    certs.extend(corollary_certificates()?);
    for (label, c) in &certs {
        let index = normalizer_index(&c.ambient, &c.subgroup)?;
        rec.record(
            &format!("|N(H):H| for {label}"),
            Value::from(format!("coprime to {}", c.pi)),
            Value::from(index),
            c.pi.is_coprime_to(index),
        );
    }
    rec.at_least("certificates checked", 1, certs.len() as u64);
    Ok(())
}
