//! The `SESX1` text container.
//!
//! ```text
//! SESX1
//! raw <raw_len>
//! n <n>
//! E <i> <j> <l>      (zero or more, emission order)
//! C <k> <byte>       (one or more, emission order)
//! ```
//!
//! Integers are canonical decimal (no sign, no leading zeros), fields are
//! separated by one space and every line ends with `\n`.

use std::fmt::Write as _;

use sesx_core::{Equation, Pin, Ses};
use thiserror::Error;

pub const MAGIC: &str = "SESX1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesFile {
    pub raw_len: usize,
    pub ses: Ses,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("file is truncated: {0}")]
    Truncated(String),
    #[error(transparent)]
    Invalid(#[from] sesx_core::Error),
}

pub fn render(file: &SesFile) -> String {
    let sys = &file.ses;
    let mut out = String::with_capacity(16 * (sys.eq.len() + sys.ch.len()) + 32);
    writeln!(out, "{MAGIC}").unwrap();
    writeln!(out, "raw {}", file.raw_len).unwrap();
    writeln!(out, "n {}", sys.n).unwrap();
    for e in &sys.eq {
        writeln!(out, "E {} {} {}", e.i, e.j, e.len).unwrap();
    }
    for p in &sys.ch {
        writeln!(out, "C {} {}", p.pos, p.byte).unwrap();
    }
    out
}

fn number(field: &str, line: usize) -> Result<usize, FormatError> {
    let canonical = !field.is_empty()
        && field.bytes().all(|b| b.is_ascii_digit())
        && (field == "0" || !field.starts_with('0'));
    if !canonical {
        return Err(FormatError::Syntax {
            line,
            msg: format!("`{field}` is not a canonical decimal integer"),
        });
    }
    field.parse().map_err(|_| FormatError::Syntax {
        line,
        msg: format!("`{field}` overflows"),
    })
}

fn header(lines: &[&str], idx: usize, key: &str) -> Result<usize, FormatError> {
    let line = lines
        .get(idx)
        .ok_or_else(|| FormatError::Truncated(format!("missing `{key}` line")))?;
    match line.split(' ').collect::<Vec<_>>().as_slice() {
        [k, v] if *k == key => number(v, idx + 1),
        _ => Err(FormatError::Syntax {
            line: idx + 1,
            msg: format!("expected `{key} <integer>`"),
        }),
    }
}

/// Parses and validates a container.
pub fn parse(bytes: &[u8]) -> Result<SesFile, FormatError> {
    let text = std::str::from_utf8(bytes).map_err(|e| FormatError::Syntax {
        line: 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        msg: "not ASCII".into(),
    })?;
    let Some(body) = text.strip_suffix('\n') else {
        return Err(FormatError::Truncated(
            "last line is not newline-terminated".into(),
        ));
    };
    let lines: Vec<&str> = body.split('\n').collect();
    if lines[0] != MAGIC {
        return Err(FormatError::Syntax {
            line: 1,
            msg: format!("expected `{MAGIC}`"),
        });
    }
    let raw_len = header(&lines, 1, "raw")?;
    let n = header(&lines, 2, "n")?;
    if raw_len.checked_add(1) != Some(n) {
        return Err(FormatError::Syntax {
            line: 3,
            msg: format!("n = {n} must equal raw + 1 = {}", raw_len as u128 + 1),
        });
    }

    let mut sys = Ses::new(n);
    for (k, line) in lines.iter().enumerate().skip(3) {
        let lineno = k + 1;
        match line.split(' ').collect::<Vec<_>>().as_slice() {
            ["E", i, j, l] => {
                if !sys.ch.is_empty() {
                    return Err(FormatError::Syntax {
                        line: lineno,
                        msg: "`E` line after `C` lines".into(),
                    });
                }
                sys.eq.push(Equation {
                    i: number(i, lineno)?,
                    j: number(j, lineno)?,
                    len: number(l, lineno)?,
                });
            }
            ["C", pos, byte] => {
                let byte = number(byte, lineno)?;
                let byte = u8::try_from(byte).map_err(|_| FormatError::Syntax {
                    line: lineno,
                    msg: format!("byte {byte} is above 255"),
                })?;
                sys.ch.push(Pin {
                    pos: number(pos, lineno)?,
                    byte,
                });
            }
            _ => {
                return Err(FormatError::Syntax {
                    line: lineno,
                    msg: "expected `E <i> <j> <l>` or `C <k> <byte>`".into(),
                })
            }
        }
    }
    if sys.ch.is_empty() {
        return Err(FormatError::Truncated("no `C` lines".into()));
    }
    sys.validate()?;
    Ok(SesFile { raw_len, ses: sys })
}
