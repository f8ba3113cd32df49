//! Text formats for generator sets.
//!
//! * rows: one generator per line over `I`, `X`, `Y`, `Z`;
//! * check: one generator per line as `x-bits|z-bits`;
//! * records: `key=value` lines for the parameters, then rows.
//!
//! Lines starting with `#` and blank lines are ignored everywhere.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::block::{GeneratorBlock, StabilizerCode};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Pauli,
    Check,
    Records,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pauli" => Ok(OutputFormat::Pauli),
            "check" => Ok(OutputFormat::Check),
            "records" => Ok(OutputFormat::Records),
            other => Err(Error::Format {
                line: 0,
                message: format!("unknown output format {other:?}"),
            }),
        }
    }
}

/// `# [[n,k,3]] s=<s> pure=<bool> via <provenance>`
pub fn header_line(code: &StabilizerCode) -> String {
    format!(
        "# [[{},{},3]] s={} pure={} via {}",
        code.n(),
        code.k(),
        code.s(),
        code.pure(),
        code.provenance()
    )
}

pub fn check_row(p: &PauliString) -> String {
    let mut out = String::with_capacity(2 * p.len() + 1);
    out.extend((0..p.len()).map(|q| if p.x_bit(q) { '1' } else { '0' }));
    out.push('|');
    out.extend((0..p.len()).map(|q| if p.z_bit(q) { '1' } else { '0' }));
    out
}

pub fn parse_check_row(text: &str) -> Result<PauliString> {
    let (xs, zs) = text.split_once('|').ok_or_else(|| Error::Format {
        line: 0,
        message: "check row needs an x|z separator".into(),
    })?;
    if xs.len() != zs.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: zs.len(),
        });
    }
    if xs.is_empty() {
        return Err(Error::EmptyPauli);
    }
    let bit = |c: char, pos: usize| match c {
        '0' => Ok(false),
        '1' => Ok(true),
        found => Err(Error::InvalidLetter { pos, found }),
    };
    let letters = xs
        .chars()
        .zip(zs.chars())
        .enumerate()
        .map(|(q, (x, z))| Ok(Pauli::from_bits(bit(x, q)?, bit(z, q)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PauliString::from_letters(&letters))
}

/// Renders a code with its header line in the chosen format.
pub fn render_code(code: &StabilizerCode, format: OutputFormat) -> String {
    let mut out = header_line(code);
    out.push('\n');
    if format == OutputFormat::Records {
        let _ = writeln!(out, "n={}", code.n());
        let _ = writeln!(out, "k={}", code.k());
        let _ = writeln!(out, "s={}", code.s());
        let _ = writeln!(out, "pure={}", code.pure());
        let _ = writeln!(out, "provenance={}", code.provenance());
    }
    for g in code.gens() {
        if format == OutputFormat::Check {
            out.push_str(&check_row(g));
        } else {
            out.push_str(&g.to_string());
        }
        out.push('\n');
    }
    out
}

/// Generators read from a file together with whatever metadata it carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedCode {
    pub block: GeneratorBlock,
    pub pure: Option<bool>,
    pub provenance: Option<String>,
}

fn header_fields(line: &str, pure: &mut Option<bool>, provenance: &mut Option<String>) {
    let body = line.trim_start_matches('#').trim();
    if !body.starts_with("[[") {
        return;
    }
    if let Some((before, via)) = body.split_once(" via ") {
        *provenance = Some(via.trim().to_string());
        for token in before.split_whitespace() {
            if let Some(v) = token.strip_prefix("pure=") {
                *pure = v.parse().ok();
            }
        }
    }
}

/// Reads any of the three formats; rows may be letters or `x|z` bits.
pub fn parse_code_text(text: &str) -> Result<ParsedCode> {
    let mut gens = Vec::new();
    let mut pure = None;
    let mut provenance = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let at = |e: Error| Error::Format {
            line: i + 1,
            message: e.to_string(),
        };
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            header_fields(line, &mut pure, &mut provenance);
            continue;
        }
        if let Some((key, value)) = line.split_once('=') {
            match key.trim() {
                "pure" => {
                    pure = Some(value.trim().parse().map_err(|_| Error::Format {
                        line: i + 1,
                        message: format!("pure must be true or false, got {value:?}"),
                    })?)
                }
                "provenance" => provenance = Some(value.trim().to_string()),
                _ => {}
            }
            continue;
        }
        let row = if line.contains('|') {
            parse_check_row(line).map_err(at)?
        } else {
            line.parse::<PauliString>().map_err(at)?
        };
        if let Some(first) = gens.first().map(PauliString::len) {
            if row.len() != first {
                return Err(Error::Format {
                    line: i + 1,
                    message: format!("row has {} qubits, expected {first}", row.len()),
                });
            }
        }
        gens.push(row);
    }
    if gens.is_empty() {
        return Err(Error::Format {
            line: 0,
            message: "no generator rows found".into(),
        });
    }
    Ok(ParsedCode {
        block: GeneratorBlock::new(gens)?,
        pure,
        provenance,
    })
}

/// Reads a file in the plain row format.
pub fn parse_rows(text: &str) -> Result<GeneratorBlock> {
    parse_code_text(text).map(|p| p.block)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five() -> StabilizerCode {
        let b = GeneratorBlock::parse_rows(&["XXXXI", "ZZZZI", "XYZIX", "YZXIZ"]).unwrap();
        StabilizerCode::new(b, true, "[4,4]_1>[1]_1").unwrap()
    }

    #[test]
    fn header_and_rows() {
        let text = render_code(&five(), OutputFormat::Pauli);
        assert_eq!(
            text,
            "# [[5,1,3]] s=4 pure=true via [4,4]_1>[1]_1\nXXXXI\nZZZZI\nXYZIX\nYZXIZ\n"
        );
    }

    #[test]
    fn every_format_round_trips() {
        for f in [OutputFormat::Pauli, OutputFormat::Check, OutputFormat::Records] {
            let parsed = parse_code_text(&render_code(&five(), f)).unwrap();
            assert_eq!(parsed.block, *five().block());
            assert_eq!(parsed.pure, Some(true));
            assert_eq!(parsed.provenance.as_deref(), Some("[4,4]_1>[1]_1"));
        }
    }

    #[test]
    fn check_rows() {
        let p: PauliString = "XYZI".parse().unwrap();
        assert_eq!(check_row(&p), "1100|0110");
        assert_eq!(parse_check_row("1100|0110").unwrap(), p);
        assert!(parse_check_row("110|0110").is_err());
        assert!(parse_check_row("1120|0110").is_err());
        assert!(parse_check_row("1100").is_err());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_code_text("# c\nXXXX\nZZQZ\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 3, .. }), "{err:?}");
        let err = parse_code_text("XXXX\nZZZ\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
        assert!(parse_code_text("# only a comment\n").is_err());
    }

    #[test]
    fn output_format_names() {
        assert_eq!("check".parse::<OutputFormat>().unwrap(), OutputFormat::Check);
        assert!("json".parse::<OutputFormat>().is_err());
    }
}
