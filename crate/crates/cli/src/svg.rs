//! Weight/root diagrams for rank 1 and 2. Exact coordinates are converted to
//! floating point here and nowhere else.

use std::fmt::Write;

use nullcone_core::rational::to_f64;
use nullcone_core::{Error, NullconeSummary, QVec, Result, ValidatedProblem};

const SIZE: f64 = 520.0;
const MARGIN: f64 = 60.0;

/// Lower-triangular `L` with `L Lᵀ = G`.
fn cholesky(g: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = g.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            l[i][j] = if i == j {
                (g[i][i] - s).max(0.0).sqrt()
            } else {
                (g[i][j] - s) / l[j][j]
            };
        }
    }
    l
}

/// Euclidean image `Lᵀx`, so that dot products match the Gram form.
struct Embedding {
    lt: Vec<Vec<f64>>,
}

impl Embedding {
    fn new(p: &ValidatedProblem) -> Self {
        let g: Vec<Vec<f64>> = p.space.gram().iter().map(|r| r.iter().map(to_f64).collect()).collect();
        let l = cholesky(&g);
        let n = l.len();
        let lt = (0..n).map(|i| (0..n).map(|j| l[j][i]).collect()).collect();
        Embedding { lt }
    }

    fn map(&self, v: &QVec) -> Vec<f64> {
        let x: Vec<f64> = v.iter().map(to_f64).collect();
        self.lt.iter().map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum()).collect()
    }
}

fn fmt(x: f64) -> String {
    // avoid "-0.000"
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

struct Canvas {
    body: String,
    scale: f64,
}

impl Canvas {
    fn new(extent: f64) -> Self {
        let scale = (SIZE / 2.0 - MARGIN) / extent.max(1e-9);
        Canvas {
            body: String::new(),
            scale,
        }
    }

    fn px(&self, x: f64, y: f64) -> (String, String) {
        (fmt(SIZE / 2.0 + x * self.scale), fmt(SIZE / 2.0 - y * self.scale))
    }

    fn finish(self, title: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(s, "<title>{title}</title>");
        s.push_str(concat!(
            "<style>\n",
            ".weight{fill:#222}\n",
            ".root{fill:none;stroke:#555;stroke-width:1.5}\n",
            ".stratifying{stroke:#1f5fbf;stroke-width:1.5}\n",
            ".excluded{stroke:#999;stroke-width:1.2;stroke-dasharray:6 4}\n",
            ".axis{stroke:#bbb;stroke-width:1}\n",
            "text{font-family:sans-serif;font-size:11px}\n",
            "</style>\n"
        ));
        let _ = writeln!(
            s,
            r#"<clipPath id="frame"><rect x="0" y="0" width="{SIZE}" height="{SIZE}"/></clipPath>"#
        );
        s.push_str(&self.body);
        s.push_str("</svg>\n");
        s
    }
}

fn line_class(stratifying: bool) -> &'static str {
    if stratifying {
        "stratifying"
    } else {
        "excluded"
    }
}

fn rank2(p: &ValidatedProblem, s: &NullconeSummary) -> String {
    let e = Embedding::new(p);
    let weights: Vec<Vec<f64>> = p.weights.iter().map(|w| e.map(&w.v)).collect();
    let roots: Vec<Vec<f64>> = p.roots.iter().map(|r| e.map(r)).collect();
    // normals of the lines {l = 1}; the foot of the perpendicular is n/|n|²
    let normals: Vec<Vec<f64>> = s.candidates.iter().map(|c| e.map(&c.candidate.l)).collect();
    let extent = weights
        .iter()
        .chain(&roots)
        .map(|v| v[0].hypot(v[1]))
        .chain(normals.iter().map(|n| 1.0 / n[0].hypot(n[1])))
        .fold(1.0f64, f64::max);
    let mut c = Canvas::new(extent);
    let (x0, y0) = c.px(-extent * 1.2, 0.0);
    let (x1, _) = c.px(extent * 1.2, 0.0);
    let (_, ytop) = c.px(0.0, extent * 1.2);
    let (xm, ybot) = c.px(0.0, -extent * 1.2);
    let _ = writeln!(c.body, r#"<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>"#);
    let _ = writeln!(c.body, r#"<line class="axis" x1="{xm}" y1="{ytop}" x2="{xm}" y2="{ybot}"/>"#);
    let _ = writeln!(c.body, r#"<g clip-path="url(#frame)">"#);
    for (i, (n, cand)) in normals.iter().zip(&s.candidates).enumerate() {
        let nn = n[0] * n[0] + n[1] * n[1];
        let foot = [n[0] / nn, n[1] / nn];
        let len = nn.sqrt();
        let dir = [-n[1] / len, n[0] / len];
        let t = extent * 4.0;
        let (ax, ay) = c.px(foot[0] - t * dir[0], foot[1] - t * dir[1]);
        let (bx, by) = c.px(foot[0] + t * dir[0], foot[1] + t * dir[1]);
        let class = line_class(cand.stratifying);
        let _ = writeln!(
            c.body,
            r#"<line class="{class}" data-l="{}" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>"#,
            cand.candidate.l
        );
        let (lx, ly) = c.px(foot[0] * 1.08, foot[1] * 1.08);
        let _ = writeln!(c.body, r#"<text class="{class}-label" x="{lx}" y="{ly}">l_{}</text>"#, i + 1);
    }
    let _ = writeln!(c.body, "</g>");
    for r in &roots {
        let (x, y) = c.px(r[0], r[1]);
        let _ = writeln!(c.body, r#"<circle class="root" cx="{x}" cy="{y}" r="7"/>"#);
    }
    for (w, pt) in p.weights.iter().zip(&weights) {
        let (x, y) = c.px(pt[0], pt[1]);
        let _ = writeln!(c.body, r#"<circle class="weight" cx="{x}" cy="{y}" r="4"/>"#);
        let (tx, ty) = c.px(pt[0], pt[1]);
        let _ = writeln!(
            c.body,
            r#"<text class="mult" x="{tx}" y="{ty}" dx="6" dy="-6">{}</text>"#,
            w.mult
        );
    }
    c.finish("weights, roots and candidate lines")
}

fn rank1(p: &ValidatedProblem, s: &NullconeSummary) -> String {
    let e = Embedding::new(p);
    let x = |v: &QVec| e.map(v)[0];
    let weights: Vec<f64> = p.weights.iter().map(|w| x(&w.v)).collect();
    let roots: Vec<f64> = p.roots.iter().map(x).collect();
    let points: Vec<f64> = s.candidates.iter().map(|c| 1.0 / x(&c.candidate.l)).collect();
    let extent = weights
        .iter()
        .chain(&roots)
        .chain(&points)
        .map(|v| v.abs())
        .fold(1.0f64, f64::max);
    let mut c = Canvas::new(extent);
    let (x0, y0) = c.px(-extent * 1.1, 0.0);
    let (x1, _) = c.px(extent * 1.1, 0.0);
    let _ = writeln!(c.body, r#"<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>"#);
    for (i, (pt, cand)) in points.iter().zip(&s.candidates).enumerate() {
        let class = line_class(cand.stratifying);
        let (px, _) = c.px(*pt, 0.0);
        let _ = writeln!(
            c.body,
            r#"<line class="{class}" data-l="{}" x1="{px}" y1="{}" x2="{px}" y2="{}"/>"#,
            cand.candidate.l,
            fmt(SIZE / 2.0 - 30.0),
            fmt(SIZE / 2.0 + 30.0)
        );
        let _ = writeln!(
            c.body,
            r#"<text class="{class}-label" x="{px}" y="{}" text-anchor="middle">l_{}</text>"#,
            fmt(SIZE / 2.0 + 44.0),
            i + 1
        );
    }
    for r in &roots {
        let (x, y) = c.px(*r, 0.0);
        let _ = writeln!(c.body, r#"<circle class="root" cx="{x}" cy="{y}" r="7"/>"#);
    }
    for (w, pt) in p.weights.iter().zip(&weights) {
        let (x, y) = c.px(*pt, 0.0);
        let _ = writeln!(c.body, r#"<circle class="weight" cx="{x}" cy="{y}" r="4"/>"#);
        let _ = writeln!(
            c.body,
            r#"<text class="mult" x="{x}" y="{y}" dy="-10" text-anchor="middle">{}</text>"#,
            w.mult
        );
    }
    c.finish("weights, roots and candidate points on the line")
}

/// Draws weights (filled, labelled by multiplicity), roots (open) and every
/// candidate's `{l = 1}`, dashed when the candidate is not stratifying.
pub fn render_svg(p: &ValidatedProblem, s: &NullconeSummary) -> Result<String> {
    match p.rank() {
        1 => Ok(rank1(p, s)),
        2 => Ok(rank2(p, s)),
        r => Err(Error::input(format!("SVG output needs rank 1 or 2, the problem has rank {r}"))),
    }
}
