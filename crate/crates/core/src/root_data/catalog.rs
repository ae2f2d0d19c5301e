//! Ready-made problem instances.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;

use super::{Problem, Weight, WeylPolicy};
use crate::error::{Error, Result};
use crate::geometry::QVec;
use crate::rational::{parse_rat, rat, Rat};

/// Catalog identifiers with a short usage string each.
pub fn catalog_names() -> &'static [(&'static str, &'static str)] {
    &[
        ("torus", "torus:<w1>;<w2>;... e.g. torus:1,0;0,1;-1,-1 (no roots, identity gram)"),
        ("sl2-forms", "sl2-forms:<d1>,...,<ds> binary forms of degrees d1..ds under SL2"),
        ("sl3-forms", "sl3-forms:<d> ternary forms of degree d under SL3"),
        ("adjoint", "adjoint:<type> e.g. adjoint:A2, adjoint:B3, adjoint:A1xA1"),
        ("gl2-ex3", "gl2-ex3:<a>,<b> GL2 on k^2 + wedge^2 k^2 with gram [[a,b],[b,a]]"),
        ("g2-adjoint", "g2-adjoint adjoint module of G2 in the simple-root basis"),
        ("direct-sum", "direct-sum:<spec>+<spec>+... sum of modules over the same group"),
    ]
}

/// Parses `name[:params]` as accepted on the command line.
pub fn parse_catalog_spec(spec: &str) -> Result<Problem> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match name {
        "direct-sum" => direct_sum(&rest.split('+').collect::<Vec<_>>()),
        "torus" => catalog(name, &rest.split(';').filter(|s| !s.is_empty()).collect::<Vec<_>>()),
        _ => catalog(name, &rest.split(',').filter(|s| !s.is_empty()).collect::<Vec<_>>()),
    }
}

pub fn catalog(name: &str, params: &[&str]) -> Result<Problem> {
    match name {
        "torus" => torus(params),
        "sl2-forms" => {
            let degrees = params.iter().map(|p| parse_degree(p)).collect::<Result<Vec<_>>>()?;
            sl2_forms(&degrees)
        }
        "sl3-forms" => match params {
            [d] => Ok(sl3_forms(parse_degree(d)?)),
            _ => Err(Error::input("sl3-forms takes exactly one degree")),
        },
        "adjoint" => match params {
            [ty] => adjoint(ty),
            _ => Err(Error::input("adjoint takes exactly one root system type")),
        },
        "gl2-ex3" => match params {
            [a, b] => gl2_ex3(parse_rat(a)?, parse_rat(b)?),
            _ => Err(Error::input("gl2-ex3 takes two parameters a,b")),
        },
        "g2-adjoint" if params.is_empty() => adjoint("G2"),
        "g2-adjoint" => Err(Error::input("g2-adjoint takes no parameters")),
        "direct-sum" => direct_sum(params),
        other => Err(Error::input(format!("unknown catalog name {other:?}"))),
    }
}

fn parse_degree(s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::input(format!("degree {s:?} is not a non-negative integer")))
}

fn int_matrix(rows: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| QVec::from_ints(r).0).collect()
}

fn weights_from(counts: BTreeMap<QVec, u64>) -> Vec<Weight> {
    counts.into_iter().map(|(v, mult)| Weight { v, mult }).collect()
}

fn torus(params: &[&str]) -> Result<Problem> {
    let mut counts: BTreeMap<QVec, u64> = BTreeMap::new();
    let mut rank = None;
    for p in params {
        let v = QVec(p.split(',').map(parse_rat).collect::<Result<_>>()?);
        if *rank.get_or_insert(v.dim()) != v.dim() {
            return Err(Error::input(format!("torus weight {p:?} has the wrong length")));
        }
        *counts.entry(v).or_default() += 1;
    }
    let rank = rank.ok_or_else(|| Error::input("torus needs at least one weight"))?;
    Ok(Problem {
        rank,
        gram: int_matrix(&(0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect::<Vec<_>>()),
        roots: vec![],
        weights: weights_from(counts),
        weyl: WeylPolicy::from_roots(),
        orbit_cap: None,
    })
}

/// `F_{d1,2} ⊕ … ⊕ F_{ds,2}` for SL2, in the coordinate of the character ε
/// with `<ε,ε> = 1`.
pub fn sl2_forms(degrees: &[u32]) -> Result<Problem> {
    if degrees.is_empty() {
        return Err(Error::input("sl2-forms needs at least one degree"));
    }
    let mut counts: BTreeMap<QVec, u64> = BTreeMap::new();
    for &d in degrees {
        let d = i64::from(d);
        for j in (-d..=d).step_by(2) {
            *counts.entry(QVec::from_ints(&[j])).or_default() += 1;
        }
    }
    Ok(Problem {
        rank: 1,
        gram: int_matrix(&[vec![1]]),
        roots: vec![QVec::from_ints(&[2]), QVec::from_ints(&[-2])],
        weights: weights_from(counts),
        weyl: WeylPolicy::from_roots(),
        orbit_cap: None,
    })
}

/// Ternary forms of degree `d`. Coordinates are taken in the basis ε₁, ε₂ with
/// ε₃ = −ε₁ − ε₂, so `(c₁c₂c₃) ↦ (c₁ − c₃, c₂ − c₃)`; the form makes all εᵢ
/// of equal length at mutual angle 2π/3.
pub fn sl3_forms(d: u32) -> Problem {
    let d = i64::from(d);
    let mut counts: BTreeMap<QVec, u64> = BTreeMap::new();
    for c1 in 0..=d {
        for c2 in 0..=d - c1 {
            let c3 = d - c1 - c2;
            *counts.entry(QVec::from_ints(&[c1 - c3, c2 - c3])).or_default() += 1;
        }
    }
    let eps = [QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1]), QVec::from_ints(&[-1, -1])];
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(&eps[i] - &eps[j]);
            }
        }
    }
    Problem {
        rank: 2,
        gram: int_matrix(&[vec![2, -1], vec![-1, 2]]),
        roots,
        weights: weights_from(counts),
        weyl: WeylPolicy::from_roots(),
        orbit_cap: None,
    }
}

/// GL2 acting on `k² ⊕ Λ²k²` with the form `[[a, b], [b, a]]` on ε₁, ε₂.
pub fn gl2_ex3(a: Rat, b: Rat) -> Result<Problem> {
    if !a.is_positive() || &a * &a <= &b * &b {
        return Err(Error::input(format!(
            "gl2-ex3 requires a > 0 and a^2 > b^2 (got a = {a}, b = {b})"
        )));
    }
    Ok(Problem {
        rank: 2,
        gram: vec![vec![a.clone(), b.clone()], vec![b, a]],
        roots: vec![QVec::from_ints(&[1, -1]), QVec::from_ints(&[-1, 1])],
        weights: vec![
            Weight::new(QVec::from_ints(&[1, 0]), 1),
            Weight::new(QVec::from_ints(&[0, 1]), 1),
            Weight::new(QVec::from_ints(&[1, 1]), 1),
        ],
        weyl: WeylPolicy::from_roots(),
        orbit_cap: None,
    })
}

/// Gram matrix of the simple roots of an irreducible type, scaled to integers.
pub fn simple_root_gram(family: char, n: usize) -> Result<Vec<Vec<Rat>>> {
    let bad = || Error::input(format!("unsupported root system type {family}{n}"));
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match (family, n) {
        ('A', 1..) => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        ('B', 2..) => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 2 } else { 4 };
            }
            for i in 1..n {
                link(&mut g, i - 1, i, -2);
            }
        }
        ('C', 2..) => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { 4 } else { 2 };
            }
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        ('D', 4..) => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        ('E', 6..=8) => {
            for i in 0..n {
                g[i][i] = 2;
            }
            // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 3..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        ('F', 4) => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        ('G', 2) => {
            g = vec![vec![2, -3], vec![-3, 6]];
        }
        _ => return Err(bad()),
    }
    Ok(int_matrix(&g))
}

/// Positive roots in simple-root coordinates, grown by root strings.
pub fn positive_roots(gram: &[Vec<Rat>]) -> Vec<QVec> {
    let n = gram.len();
    let pairing = |beta: &[i64], i: usize| -> i64 {
        let ip: Rat = (0..n).map(|j| &gram[i][j] * rat(beta[j])).sum();
        let c = rat(2) * ip / &gram[i][i];
        assert!(c.is_integer(), "simple-root gram does not define a root system");
        c.to_integer().try_into().expect("small Cartan integer")
    };
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
    let mut found: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut level: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if !found.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing(beta, i) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        found.extend(next.iter().cloned());
        level = next.into_iter().collect();
    }
    found.iter().map(|r| QVec::from_ints(r)).collect()
}

/// Gram form and full root set for a type such as `G2` or `A1xA2`.
pub fn adjoint_roots(ty: &str) -> Result<(Vec<Vec<Rat>>, Vec<QVec>)> {
    let mut blocks = Vec::new();
    for part in ty.split('x') {
        let mut chars = part.trim().chars();
        let family = chars.next().ok_or_else(|| Error::input("empty root system type"))?;
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::input(format!("cannot parse root system type {part:?}")))?;
        blocks.push(simple_root_gram(family.to_ascii_uppercase(), n)?);
    }
    let rank: usize = blocks.iter().map(Vec::len).sum();
    let mut gram = vec![vec![rat(0); rank]; rank];
    let mut roots = Vec::new();
    let mut offset = 0;
    for block in &blocks {
        let k = block.len();
        for i in 0..k {
            for j in 0..k {
                gram[offset + i][offset + j] = block[i][j].clone();
            }
        }
        for r in positive_roots(block) {
            let mut v = QVec::zeros(rank);
            for i in 0..k {
                v.0[offset + i] = r[i].clone();
            }
            roots.push(-&v);
            roots.push(v);
        }
        offset += k;
    }
    Ok((gram, roots))
}

/// Adjoint module: the roots with multiplicity one and the zero weight with
/// multiplicity equal to the rank.
pub fn adjoint(ty: &str) -> Result<Problem> {
    let (gram, roots) = adjoint_roots(ty)?;
    let rank = gram.len();
    let mut weights: Vec<Weight> = roots.iter().map(|r| Weight::new(r.clone(), 1)).collect();
    weights.push(Weight::new(QVec::zeros(rank), rank as u64));
    weights.sort();
    Ok(Problem {
        rank,
        gram,
        roots,
        weights,
        weyl: WeylPolicy::from_roots(),
        orbit_cap: None,
    })
}

fn direct_sum(specs: &[&str]) -> Result<Problem> {
    let mut parts = specs.iter().filter(|s| !s.is_empty()).map(|s| parse_catalog_spec(s));
    let mut sum = parts
        .next()
        .ok_or_else(|| Error::input("direct-sum needs at least one summand"))??;
    let mut counts: BTreeMap<QVec, u64> = sum.weights.drain(..).map(|w| (w.v, w.mult)).collect();
    for part in parts {
        let part = part?;
        let same_roots: BTreeSet<&QVec> = part.roots.iter().collect();
        if part.rank != sum.rank || part.gram != sum.gram || same_roots != sum.roots.iter().collect() {
            return Err(Error::input("direct-sum summands must share rank, gram and roots"));
        }
        for w in part.weights {
            *counts.entry(w.v).or_default() += w.mult;
        }
    }
    sum.weights = weights_from(counts);
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_forms_example() {
        let p = catalog("sl2-forms", &["2", "3", "3", "4", "5"]).unwrap();
        assert_eq!(p.weights.len(), 11);
        let mults: Vec<u64> = p.weights.iter().map(|w| w.mult).collect();
        // positions -5..=5; each degree d contributes d+1 weights
        assert_eq!(mults, vec![1, 1, 3, 2, 3, 2, 3, 2, 3, 1, 1]);
        assert_eq!(mults.iter().sum::<u64>(), 3 + 4 + 4 + 5 + 6);
    }

    #[test]
    fn sl3_forms_weights() {
        let p = sl3_forms(4);
        assert_eq!(p.weights.len(), 15);
        assert!(p.weights.iter().all(|w| w.mult == 1));
        assert_eq!(p.roots.len(), 6);
        assert!(p.validate().is_ok());
    }

    #[test]
    fn root_counts_per_type() {
        for (ty, count) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 12),
            ("B2", 8),
            ("B3", 18),
            ("C3", 18),
            ("D4", 24),
            ("G2", 12),
            ("F4", 48),
            ("E6", 72),
            ("A1xA1", 4),
        ] {
            let (_, roots) = adjoint_roots(ty).unwrap();
            assert_eq!(roots.len(), count, "{ty}");
        }
        assert!(adjoint_roots("B1").is_err());
        assert!(adjoint_roots("Q2").is_err());
    }

    #[test]
    fn g2_positive_roots() {
        let (gram, roots) = adjoint_roots("G2").unwrap();
        assert_eq!(gram, int_matrix(&[vec![2, -3], vec![-3, 6]]));
        let pos: BTreeSet<QVec> = roots.into_iter().filter(|r| r.iter().all(|x| !x.is_negative())).collect();
        let expected: BTreeSet<QVec> = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
            .iter()
            .map(|v| QVec::from_ints(v))
            .collect();
        assert_eq!(pos, expected);
    }

    #[test]
    fn adjoint_g2_weights() {
        let p = catalog("g2-adjoint", &[]).unwrap();
        let zero: Vec<_> = p.weights.iter().filter(|w| w.v.is_zero()).collect();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].mult, 2);
        assert_eq!(p.weights.iter().filter(|w| !w.v.is_zero()).count(), 12);
        let v = p.validate().unwrap();
        let nonzero: BTreeSet<QVec> = v.weights.iter().filter(|w| !w.v.is_zero()).map(|w| w.v.clone()).collect();
        assert_eq!(nonzero, v.roots.iter().cloned().collect());
    }

    #[test]
    fn catalog_outputs_validate() {
        for spec in [
            "sl2-forms:2,3,3,4,5",
            "sl2-forms:0",
            "sl3-forms:1",
            "sl3-forms:4",
            "gl2-ex3:2,1",
            "gl2-ex3:2,-1",
            "gl2-ex3:3/2,0",
            "g2-adjoint",
            "adjoint:A3",
            "adjoint:B3",
            "adjoint:C3",
            "adjoint:D4",
            "adjoint:A1xG2",
            "torus:1,0;0,1;1,0",
            "direct-sum:sl3-forms:1+sl3-forms:2",
        ] {
            let p = parse_catalog_spec(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
            if let Err(v) = p.validate() {
                panic!("{spec}: {v:?}");
            }
        }
    }

    #[test]
    fn catalog_errors() {
        assert!(parse_catalog_spec("gl2-ex3:1,1").is_err());
        assert!(parse_catalog_spec("gl2-ex3:-2,1").is_err());
        assert!(parse_catalog_spec("nonsense").is_err());
        assert!(parse_catalog_spec("sl3-forms:x").is_err());
        assert!(parse_catalog_spec("direct-sum:sl3-forms:1+sl2-forms:1").is_err());
    }

    #[test]
    fn torus_multiplicities_accumulate() {
        let p = parse_catalog_spec("torus:1,0;0,1;1,0").unwrap();
        assert_eq!(p.weights, vec![Weight::new(QVec::from_ints(&[0, 1]), 1), Weight::new(QVec::from_ints(&[1, 0]), 2)]);
    }
}
