//! SVG pictures of rank-2 fans and walls inside the unit disc.

use std::fmt::Write;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::Theta;
use crate::error::{Error, Result};

/// What to draw: shaded chambers (pairs of rays), plain rays and walls, all
/// as rational plane vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Picture {
    pub chambers: Vec<[Vec<String>; 2]>,
    pub rays: Vec<Vec<String>>,
    pub walls: Vec<Vec<Vec<String>>>,
}

impl Picture {
    pub fn add_chamber(&mut self, a: &Theta, b: &Theta) {
        self.chambers.push([super::format_theta(a), super::format_theta(b)]);
    }

    pub fn add_ray(&mut self, a: &Theta) {
        self.rays.push(super::format_theta(a));
    }

    pub fn add_wall(&mut self, gens: &[Theta]) {
        self.walls.push(gens.iter().map(super::format_theta).collect());
    }
}

fn unit(v: &[String]) -> Result<(f64, f64)> {
    if v.len() != 2 {
        return Err(Error::Invalid("pictures are only drawn for rank 2".into()));
    }
    let x = crate::field::parse_rational(&v[0])?.to_f64().unwrap_or(0.0);
    let y = crate::field::parse_rational(&v[1])?.to_f64().unwrap_or(0.0);
    let n = (x * x + y * y).sqrt();
    if n == 0.0 {
        return Ok((0.0, 0.0));
    }
    Ok((x / n, y / n))
}

/// Screen coordinates: `θ_1` to the right, `θ_2` up.
fn pt(p: (f64, f64)) -> String {
    format!("{:.4},{:.4}", p.0 * 100.0, -p.1 * 100.0)
}

fn arc(a: (f64, f64), b: (f64, f64)) -> Vec<(f64, f64)> {
    let ta = a.1.atan2(a.0);
    let mut tb = b.1.atan2(b.0);
    while tb < ta {
        tb += std::f64::consts::TAU;
    }
    let mut span = tb - ta;
    let (start, dir) = if span > std::f64::consts::PI {
        span = std::f64::consts::TAU - span;
        (ta, -1.0)
    } else {
        (ta, 1.0)
    };
    let steps = 24;
    (0..=steps)
        .map(|k| {
            let t = start + dir * span * k as f64 / steps as f64;
            (t.cos(), t.sin())
        })
        .collect()
}

pub fn render_svg(p: &Picture) -> Result<String> {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-110 -110 220 220" width="440" height="440">"##
    );
    let _ = writeln!(s, r##"<circle cx="0" cy="0" r="100" fill="none" stroke="#bbbbbb" stroke-width="0.5"/>"##);
    for [a, b] in &p.chambers {
        let (a, b) = (unit(a)?, unit(b)?);
        let mut pts = vec![pt((0.0, 0.0))];
        pts.extend(arc(a, b).into_iter().map(pt));
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="#4a7ab5" fill-opacity="0.18" stroke="none"/>"##,
            pts.join(" ")
        );
    }
    for r in &p.rays {
        let u = unit(r)?;
        let _ = writeln!(
            s,
            r##"<polyline points="{} {}" fill="none" stroke="#1f3b63" stroke-width="0.8"/>"##,
            pt((0.0, 0.0)),
            pt(u)
        );
    }
    for w in &p.walls {
        for g in w {
            let u = unit(g)?;
            let _ = writeln!(
                s,
                r##"<polyline points="{} {}" fill="none" stroke="#b5482f" stroke-width="1.6"/>"##,
                pt((0.0, 0.0)),
                pt(u)
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
