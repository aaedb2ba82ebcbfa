//! Ideal and arrangement files: a `vars: x0 x1 ... xn` header followed by
//! one polynomial per line. Blank lines and lines starting with `#` are
//! skipped.

use thiserror::Error;

use crate::field_poly::{parse_integer_poly, FieldPolyError, IntegerPoly, MPoly, PrimeField, Ring, MAX_USER_VARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: expected header 'vars: x0 x1 ... xn'")]
    BadHeader { line: usize },
    #[error("no generators after the header")]
    NoGenerators,
    #[error("line {line}: {source}")]
    Poly {
        line: usize,
        #[source]
        source: FieldPolyError,
    },
}

/// Body lines of a file, with one-based line numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFile {
    pub n_vars: usize,
    pub polys: Vec<(usize, IntegerPoly)>,
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_poly_file(text: &str) -> Result<PolyFile, InputError> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines.next().ok_or(InputError::Empty)?;
    let bad = InputError::BadHeader { line: hline };
    let names = header.strip_prefix("vars:").ok_or_else(|| bad.clone())?;
    let names: Vec<&str> = names.split_whitespace().collect();
    if names.is_empty() || names.len() > MAX_USER_VARS {
        return Err(bad);
    }
    if names.iter().enumerate().any(|(i, name)| *name != format!("x{i}")) {
        return Err(bad);
    }
    let n_vars = names.len();
    let polys = lines
        .map(|(line, l)| {
            parse_integer_poly(l, n_vars)
                .map(|p| (line, p))
                .map_err(|source| InputError::Poly { line, source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if polys.is_empty() {
        return Err(InputError::NoGenerators);
    }
    Ok(PolyFile { n_vars, polys })
}

/// Generators of an ideal file reduced into `field`.
pub fn parse_ideal(text: &str, field: PrimeField) -> Result<(Ring, Vec<MPoly>), InputError> {
    let file = parse_poly_file(text)?;
    let ring = Ring::new(file.n_vars, field).map_err(|source| InputError::Poly { line: 1, source })?;
    Ok((ring, file.polys.iter().map(|(_, p)| p.reduce(ring)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_file() {
        let text = "# twisted cubic\nvars: x0 x1 x2 x3\nx0*x3 - x1*x2\n\nx0*x2 - x1^2\nx1*x3 - x2^2\n";
        let (ring, gens) = parse_ideal(text, PrimeField::default()).unwrap();
        assert_eq!(ring.n_vars(), 4);
        assert_eq!(gens.len(), 3);
    }

    #[test]
    fn header_and_body_errors() {
        assert_eq!(parse_poly_file(""), Err(InputError::Empty));
        assert_eq!(parse_poly_file("\n# only comments\n"), Err(InputError::Empty));
        assert_eq!(parse_poly_file("x0*x1\n"), Err(InputError::BadHeader { line: 1 }));
        assert_eq!(parse_poly_file("vars: x0 x2\nx0\n"), Err(InputError::BadHeader { line: 1 }));
        assert_eq!(parse_poly_file("vars: x0 x1\n"), Err(InputError::NoGenerators));
        assert!(matches!(
            parse_poly_file("vars: x0 x1\nx0 +\n"),
            Err(InputError::Poly { line: 2, .. })
        ));
    }
}
