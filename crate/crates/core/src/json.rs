//! JSON emission with a fixed float format: every finite float is written
//! with 17 significant digits so repeated runs are byte-identical.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default)]
pub struct Fixed17;

impl Formatter for Fixed17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

pub fn to_string<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Fixed17);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Numerical(format!("json serialization: {e}")))?;
    String::from_utf8(out).map_err(|e| Error::Numerical(e.to_string()))
}

/// Serde adapter writing a `Complex64` as `{"re": .., "im": ..}`.
pub mod complex {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Parts {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        Parts { re: z.re, im: z.im }.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        let p = Parts::deserialize(de)?;
        Ok(Complex64::new(p.re, p.im))
    }
}

/// Same as [`complex`] for `Vec<Complex64>`.
pub mod complex_vec {
    use num_complex::Complex64;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Parts {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(zs: &[Complex64], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(zs.len()))?;
        for z in zs {
            seq.serialize_element(&Parts { re: z.re, im: z.im })?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Complex64>, D::Error> {
        let parts = Vec::<Parts>::deserialize(de)?;
        Ok(parts.into_iter().map(|p| Complex64::new(p.re, p.im)).collect())
    }
}
