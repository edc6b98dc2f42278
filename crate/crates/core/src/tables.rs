//! Text layouts for the coefficients of a [`ThetaPoly`], and the golden
//! tables shipped with the crate.
//!
//! Both layouts print `·` for a zero coefficient and right-align every cell
//! to the widest one.
//!
//! * `grid`: the full square of coefficients of `t1^n t2^m` with
//!   `|n|, |m| <= D`, rows labelled `m=...` from `D` down to `-D`, columns
//!   headed by `n`.
//! * `domain`: the triangle `0 <= 2m <= n` with rows from the top `m` down
//!   to `0`; cells outside the triangle are blank.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{HalfInteger, Rational};
use crate::error::{Error, Result};
use crate::torus::TorusParams;
use crate::trivariate::ThetaPoly;

pub const GOLDEN_GRID_7_2: &str = include_str!("../golden/grid_7_2.txt");
pub const GOLDEN_DOMAINS: &str = include_str!("../golden/domains.txt");
pub const GOLDEN_THETA_HAT: &str = include_str!("../golden/theta_hat.txt");

const ZERO_CELL: &str = "·";

/// Coefficients keyed by true exponents `(n, m)`.
pub type Cells = BTreeMap<(i64, i64), Rational>;

fn cell_text(c: Option<&Rational>) -> String {
    match c {
        Some(c) if !c.is_zero() => c.to_string(),
        _ => ZERO_CELL.to_string(),
    }
}

fn width(cells: impl IntoIterator<Item = String>) -> usize {
    cells
        .into_iter()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1)
}

/// All coefficients as true exponents; fails on half-integer exponents.
pub fn integer_cells(theta: &ThetaPoly) -> Result<Cells> {
    theta
        .terms()
        .map(|((n, m), c)| {
            if n % 2 != 0 || m % 2 != 0 {
                return Err(Error::HalfIntegerExponent(format!(
                    "t1^{} t2^{}",
                    HalfInteger::from_doubled(n),
                    HalfInteger::from_doubled(m)
                )));
            }
            Ok(((n / 2, m / 2), c.clone()))
        })
        .collect()
}

pub fn render_grid(theta: &ThetaPoly) -> Result<String> {
    let cells = integer_cells(theta)?;
    let d = cells
        .keys()
        .map(|&(n, m)| n.abs().max(m.abs()))
        .max()
        .unwrap_or(0);
    let range = || -d..=d;
    let labels: Vec<String> = range().rev().map(|m| format!("m={m}")).collect();
    let label_w = width(labels.iter().cloned()).max(1);
    let w = width(
        range().map(|n| n.to_string()).chain(
            range()
                .flat_map(|n| range().map(move |m| (n, m)))
                .map(|k| cell_text(cells.get(&k))),
        ),
    );

    let mut out = format!("{:<label_w$}", "n");
    for n in range() {
        out.push_str(&format!(" {n:>w$}"));
    }
    out.push('\n');
    for (label, m) in labels.iter().zip(range().rev()) {
        out.push_str(&format!("{label:<label_w$}"));
        for n in range() {
            out.push_str(&format!(" {:>w$}", cell_text(cells.get(&(n, m)))));
        }
        out.push('\n');
    }
    Ok(out)
}

/// The triangle layout, preceded by a `(p,q):` line.
pub fn render_domain(params: TorusParams, theta: &ThetaPoly) -> Result<String> {
    let domain: Cells = theta
        .fundamental_domain()?
        .into_iter()
        .map(|(n, m, c)| ((n, m), c))
        .collect();
    let top_n = domain.keys().map(|&(n, _)| n).max().unwrap_or(0);
    let top_m = top_n / 2;
    let w = width(
        (0..=top_n)
            .flat_map(|n| (0..=n / 2).map(move |m| (n, m)))
            .map(|k| cell_text(domain.get(&k))),
    );

    let mut out = format!("{params}:\n");
    for m in (0..=top_m).rev() {
        let row: Vec<String> = (0..=top_n)
            .map(|n| {
                if n < 2 * m {
                    " ".repeat(w)
                } else {
                    format!("{:>w$}", cell_text(domain.get(&(n, m))))
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    Ok(out)
}

fn parse_cell(s: &str) -> Option<Rational> {
    if s == ZERO_CELL {
        return Some(Rational::zero());
    }
    crate::algebra::parse_rational(s)
}

/// Reads a `grid` back into cells, zeros included.
pub fn parse_grid(text: &str) -> Option<Cells> {
    let mut lines = text.lines();
    let header: Vec<i64> = lines
        .next()?
        .split_whitespace()
        .skip(1)
        .map(|s| s.parse().ok())
        .collect::<Option<_>>()?;
    let mut cells = Cells::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let m: i64 = parts.next()?.strip_prefix("m=")?.parse().ok()?;
        let row: Vec<&str> = parts.collect();
        if row.len() != header.len() {
            return None;
        }
        for (&n, s) in header.iter().zip(row) {
            cells.insert((n, m), parse_cell(s)?);
        }
    }
    Some(cells)
}

/// Reads the rows of one `domain` block (without its `(p,q):` line) into
/// cells, zeros included.
pub fn parse_domain_rows(rows: &[&str]) -> Option<Cells> {
    let top_m = rows.len().checked_sub(1)? as i64;
    let cells_per_row = rows.last()?.split_whitespace().count();
    let chars: Vec<Vec<char>> = rows.iter().map(|r| r.chars().collect()).collect();
    let w = (chars.last()?.len() + 1) / cells_per_row - 1;
    let mut out = Cells::new();
    for (i, row) in chars.iter().enumerate() {
        let m = top_m - i as i64;
        for n in 2 * m..cells_per_row as i64 {
            let start = n as usize * (w + 1);
            let text: String = row.get(start..start + w)?.iter().collect();
            out.insert((n, m), parse_cell(text.trim())?);
        }
    }
    Some(out)
}

/// The golden `domain` blocks, in file order, as `(params, block text)`.
pub fn golden_domain_blocks() -> Vec<(TorusParams, String)> {
    let mut blocks: Vec<(TorusParams, String)> = Vec::new();
    for line in GOLDEN_DOMAINS.lines() {
        if let Some(params) = parse_params_label(line.strip_suffix(':').unwrap_or("")) {
            blocks.push((params, format!("{line}\n")));
        } else if let Some((_, text)) = blocks.last_mut() {
            text.push_str(line);
            text.push('\n');
        }
    }
    blocks
}

/// The golden nonnegative-power parts of `Θ̂`, as `(params, polynomial)`.
pub fn golden_theta_hat_rows() -> Vec<(TorusParams, String)> {
    GOLDEN_THETA_HAT
        .lines()
        .filter_map(|line| {
            let (label, poly) = line.split_once(": ")?;
            Some((parse_params_label(label)?, poly.to_string()))
        })
        .collect()
}

/// `"(p,q)"`.
pub fn parse_params_label(s: &str) -> Option<TorusParams> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let (p, q) = inner.split_once(',')?;
    TorusParams::new(p.trim().parse().ok()?, q.trim().parse().ok()?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus;

    fn theta(p: i64, q: i64) -> ThetaPoly {
        torus::theta(TorusParams::new(p, q).unwrap()).unwrap()
    }

    #[test]
    fn grid_matches_golden_file() {
        assert_eq!(render_grid(&theta(7, 2)).unwrap(), GOLDEN_GRID_7_2);
    }

    #[test]
    fn domain_blocks_match_golden_file() {
        let blocks = golden_domain_blocks();
        assert_eq!(blocks.len(), 8);
        for (params, text) in blocks {
            let t = torus::theta(params).unwrap();
            assert_eq!(render_domain(params, &t).unwrap(), text, "{params}");
        }
    }

    #[test]
    fn parse_inverts_render() {
        let t = theta(7, 4);
        let cells = integer_cells(&t).unwrap();
        let grid = parse_grid(&render_grid(&t).unwrap()).unwrap();
        for (k, c) in &grid {
            assert_eq!(c, cells.get(k).unwrap_or(&Rational::zero()), "{k:?}");
        }
        assert!(cells.keys().all(|k| grid.contains_key(k)));

        let block = render_domain(TorusParams::new(7, 4).unwrap(), &t).unwrap();
        let rows: Vec<&str> = block.lines().skip(1).collect();
        let parsed = parse_domain_rows(&rows).unwrap();
        for (n, m, c) in t.fundamental_domain().unwrap() {
            assert_eq!(parsed[&(n, m)], c);
        }
    }

    #[test]
    fn golden_theta_hat_has_sixteen_rows() {
        assert_eq!(golden_theta_hat_rows().len(), 16);
    }
}
