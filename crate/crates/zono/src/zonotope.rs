use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Result, ZonoError};
use crate::linalg;

/// `t + Σ [0, g_i]` in `R^N` with integral generators and translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zonotope {
    generators: Vec<Vec<i64>>,
    translation: Vec<i64>,
}

impl Zonotope {
    pub fn new(generators: Vec<Vec<i64>>, translation: Option<Vec<i64>>) -> Result<Self> {
        let ambient = translation
            .as_ref()
            .map(Vec::len)
            .or_else(|| generators.first().map(Vec::len))
            .unwrap_or(0);
        if let Some(g) = generators.iter().find(|g| g.len() != ambient) {
            return Err(ZonoError::Dimension(format!(
                "generator {g:?} has {} coordinates, expected {ambient}",
                g.len()
            )));
        }
        let translation = translation.unwrap_or_else(|| vec![0; ambient]);
        Ok(Zonotope { generators, translation })
    }

    /// `[0, s]^n` from the scaled standard basis.
    pub fn cube(n: usize, s: i64) -> Self {
        let generators = (0..n)
            .map(|i| (0..n).map(|j| if i == j { s } else { 0 }).collect())
            .collect();
        Zonotope { generators, translation: vec![0; n] }
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// `N`.
    pub fn ambient_dim(&self) -> usize {
        self.translation.len()
    }

    /// `n`, the rank of the generator matrix.
    pub fn dim(&self) -> usize {
        let rows: Vec<Vec<BigInt>> =
            self.generators.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
        linalg::rank(&rows)
    }
}

impl FromStr for Zonotope {
    type Err = ZonoError;

    /// One generator per line, integers separated by whitespace; an optional
    /// `translate:` line; `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let ints = |text: &str, line: usize| {
            text.split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| ZonoError::Parse { line, msg: e.to_string() })
        };
        let mut generators = Vec::new();
        let mut translation = None;
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("translate:") {
                if translation.is_some() {
                    return Err(ZonoError::Parse { line: i + 1, msg: "repeated translate line".into() });
                }
                translation = Some(ints(rest, i + 1)?);
            } else {
                generators.push(ints(line, i + 1)?);
            }
        }
        Zonotope::new(generators, translation)
    }
}

impl fmt::Display for Zonotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        for g in &self.generators {
            writeln!(f, "{}", join(g))?;
        }
        if self.translation.iter().any(|&t| t != 0) {
            writeln!(f, "translate: {}", join(&self.translation))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let z: Zonotope = "# square\n2 0\n0 2\ntranslate: 1 -1\n".parse().unwrap();
        assert_eq!(z.generators().len(), 2);
        assert_eq!(z.translation(), &[1, -1]);
        assert_eq!(z.to_string().parse::<Zonotope>().unwrap(), z);
        assert!("1 2\n3".parse::<Zonotope>().is_err());
        assert!("1 a".parse::<Zonotope>().is_err());
        assert_eq!("".parse::<Zonotope>().unwrap().dim(), 0);
    }

    #[test]
    fn dimensions() {
        assert_eq!(Zonotope::cube(3, 1).dim(), 3);
        let flat: Zonotope = "1 1 0\n2 2 0\n0 0 0".parse().unwrap();
        assert_eq!(flat.dim(), 1);
        assert_eq!(flat.ambient_dim(), 3);
    }
}
