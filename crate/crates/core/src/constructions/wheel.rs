//! Wheels `W_n`: hub `u` (vertex 0) and rim `v_1..v_{n-1}` (vertex `i`).
//!
//! For `n >= 5` the achievable color counts are `n..=n+3`, extended to
//! `n+4` once `n >= 9`. `W_4 = K_4` admits exactly 6 and 7.

use super::{color_complete_even_min, color_complete_max, transfer, ConstructionError};
use crate::coloring::{Certificate, Color, TotalColoring};
use crate::family::FamilySpec;

/// Fills colors by the 1-based names used in the rules below. Unset entries
/// stay 0 and fail verification.
struct WheelColoring {
    n: usize,
    t: Color,
    hub: Color,
    rim: Vec<Color>,
    spoke: Vec<Color>,
    /// `rim_edge[i]` is `v_i v_{i+1}`; slot `n - 1` holds `v_1 v_{n-1}`
    rim_edge: Vec<Color>,
}

impl WheelColoring {
    fn new(n: usize, t: Color) -> Self {
        WheelColoring {
            n,
            t,
            hub: 0,
            rim: vec![0; n],
            spoke: vec![0; n],
            rim_edge: vec![0; n],
        }
    }

    fn v(&mut self, i: Color, c: Color) {
        self.rim[i as usize] = c;
    }

    fn uv(&mut self, i: Color, c: Color) {
        self.spoke[i as usize] = c;
    }

    /// `v_i v_{i+1}`
    fn vv(&mut self, i: Color, c: Color) {
        self.rim_edge[i as usize] = c;
    }

    fn closing(&mut self, c: Color) {
        self.rim_edge[self.n - 1] = c;
    }

    fn finish(self) -> Certificate {
        let n = self.n;
        let graph = FamilySpec::Wheel { n }.generate().expect("n >= 4");
        let mut vertex_colors = vec![self.hub];
        vertex_colors.extend(&self.rim[1..n]);
        // edge order: spokes, rim path, closing edge
        let mut edge_colors: Vec<Color> = self.spoke[1..n].to_vec();
        edge_colors.extend(&self.rim_edge[1..n - 1]);
        edge_colors.push(self.rim_edge[n - 1]);
        Certificate {
            graph,
            coloring: TotalColoring {
                t: self.t,
                vertex_colors,
                edge_colors,
            },
        }
    }
}

fn need(n: usize, min: usize, what: &str) -> Result<(), ConstructionError> {
    if n < min {
        return Err(ConstructionError::InvalidParameter(format!(
            "{what} needs a wheel with n >= {min}, got {n}"
        )));
    }
    Ok(())
}

fn span(lo: Color, hi: Color) -> std::ops::RangeInclusive<Color> {
    lo..=hi
}

/// `n` colors, `n >= 5`. Hub colored `n`, spokes take `1..n-1`.
pub fn wheel_min(n: usize) -> Result<Certificate, ConstructionError> {
    need(n, 5, "n-coloring")?;
    let nn = n as Color;
    let mut w = WheelColoring::new(n, nn);
    w.hub = nn;
    w.v(1, 2);
    if n.is_multiple_of(2) {
        let h = nn / 2;
        for i in span(2, h - 1) {
            w.v(i, 2 * i + 1);
        }
        w.v(h, nn - 2);
        w.v(h + 1, nn - 4);
        for j in span(h + 2, nn - 1) {
            w.v(j, 2 * (nn - j + 1));
        }
        for k in span(1, h) {
            w.uv(k, 2 * k - 1);
        }
        for l in span(h + 1, nn - 1) {
            w.uv(l, 2 * (nn - l));
        }
        for p in span(1, h - 1) {
            w.vv(p, 2 * (p + 1));
        }
        w.vv(h, nn - 3);
        for q in span(h + 1, nn - 2) {
            w.vv(q, 2 * (nn - q) + 1);
        }
    } else {
        let (f, c) = (nn / 2, nn / 2 + 1);
        for i in span(2, f - 1) {
            w.v(i, 2 * i + 1);
        }
        w.v(f, nn - 4);
        w.v(c, nn - 2);
        for j in span(c + 1, nn - 1) {
            w.v(j, 2 * (nn - j + 1));
        }
        for k in span(1, f) {
            w.uv(k, 2 * k - 1);
        }
        for l in span(c, nn - 1) {
            w.uv(l, 2 * (nn - l));
        }
        for p in span(1, f - 1) {
            w.vv(p, 2 * (p + 1));
        }
        w.vv(f, nn - 3);
        for q in span(c, nn - 2) {
            w.vv(q, 2 * (nn - q) + 1);
        }
    }
    w.closing(3);
    Ok(w.finish())
}

/// `n + 2` colors, `n >= 5`. Hub colored 1.
pub fn wheel_plus_two(n: usize) -> Result<Certificate, ConstructionError> {
    need(n, 5, "(n+2)-coloring")?;
    let nn = n as Color;
    let (f, c) = (nn / 2, (nn + 1) / 2);
    let g = (nn - 1) / 2;
    let mut w = WheelColoring::new(n, nn + 2);
    w.hub = 1;
    w.v(1, 3);
    w.v(c, nn - 1);
    for i in span(2, c - 1) {
        w.v(i, 2 * (i + 1));
    }
    for j in span(c + 1, nn - 1) {
        w.v(j, 2 * (nn - j) + 3);
    }
    for k in span(1, f) {
        w.uv(k, 2 * k);
    }
    for l in span(f + 1, nn - 1) {
        w.uv(l, 2 * (nn - l) + 1);
    }
    for p in span(1, g) {
        w.vv(p, 2 * p + 3);
    }
    for q in span(g + 1, nn - 2) {
        w.vv(q, 2 * (nn - q + 1));
    }
    w.closing(4);
    Ok(w.finish())
}

/// `n + 1` colors, `n >= 5`: the `(n + 2)`-coloring with every edge colored
/// `n + 2` recolored `n - 2`.
pub fn wheel_plus_one(n: usize) -> Result<Certificate, ConstructionError> {
    let mut cert = wheel_plus_two(n)?;
    let nn = n as Color;
    for e in cert.coloring.edge_colors.iter_mut() {
        if *e == nn + 2 {
            *e = nn - 2;
        }
    }
    cert.coloring.t = nn + 1;
    Ok(cert)
}

/// `n + 3` colors, `n >= 4`. Hub colored `n + 3`.
pub fn wheel_plus_three(n: usize) -> Result<Certificate, ConstructionError> {
    need(n, 4, "(n+3)-coloring")?;
    let nn = n as Color;
    let mut w = WheelColoring::new(n, nn + 3);
    w.hub = nn + 3;
    if n.is_multiple_of(2) {
        let h = nn / 2;
        for i in span(1, h + 1) {
            w.v(i, 2 * i - 1);
        }
        for j in span(h + 2, nn - 1) {
            w.v(j, 2 * (nn - j + 1));
        }
        for k in span(1, h) {
            w.vv(k, 2 * k);
        }
        for l in span(h + 1, nn - 2) {
            w.vv(l, 2 * (nn - l) + 1);
        }
        for p in span(2, h) {
            w.uv(p, 2 * p + 1);
        }
        w.uv(1, 4);
        for q in span(h + 1, nn - 1) {
            w.uv(q, 2 * (nn - q + 2));
        }
    } else {
        let (f, c) = (nn / 2, nn / 2 + 1);
        for i in span(1, f) {
            w.v(i, 2 * i - 1);
            w.vv(i, 2 * i);
        }
        for j in span(c, nn - 1) {
            w.v(j, 2 * (nn - j + 1));
        }
        for k in span(c, nn - 2) {
            w.vv(k, 2 * (nn - k) + 1);
        }
        for p in span(2, c) {
            w.uv(p, 2 * p + 1);
        }
        w.uv(1, 4);
        for q in span(c + 1, nn - 1) {
            w.uv(q, 2 * (nn - q + 2));
        }
    }
    w.closing(3);
    Ok(w.finish())
}

/// `n + 4` colors, `n >= 9`. Hub colored 7.
pub fn wheel_plus_four(n: usize) -> Result<Certificate, ConstructionError> {
    need(n, 9, "(n+4)-coloring")?;
    let nn = n as Color;
    let mut w = WheelColoring::new(n, nn + 4);
    w.hub = 7;
    w.v(1, 1);
    w.v(2, 6);
    w.v(3, 8);
    w.uv(1, 3);
    w.uv(2, 5);
    w.vv(1, 4);
    w.vv(2, 7);
    if n.is_multiple_of(2) {
        let h = nn / 2;
        for i in span(4, h - 2) {
            w.v(i, 2 * i + 1);
        }
        w.v(h - 1, nn + 2);
        w.v(h, nn + 4);
        for j in span(h + 1, nn - 2) {
            w.v(j, 2 * (nn - j));
        }
        w.v(nn - 1, 3);
        for k in span(3, h - 1) {
            w.uv(k, 2 * k + 3);
        }
        for l in span(h, nn - 1) {
            w.uv(l, 2 * (nn - l + 1));
        }
        for p in span(3, h - 2) {
            w.vv(p, 2 * (p + 2));
        }
        for q in span(h - 1, nn - 2) {
            w.vv(q, 2 * (nn - q) + 1);
        }
    } else {
        let (f, c) = (nn / 2, nn / 2 + 1);
        for i in span(4, f - 1) {
            w.v(i, 2 * i + 1);
        }
        w.v(f, nn + 4);
        w.v(c, nn + 2);
        for j in span(c + 1, nn - 2) {
            w.v(j, 2 * (nn - j));
        }
        w.v(nn - 1, 3);
        for k in span(3, f) {
            w.uv(k, 2 * k + 3);
        }
        for l in span(c, nn - 1) {
            w.uv(l, 2 * (nn - l + 1));
        }
        for p in span(3, f) {
            w.vv(p, 2 * (p + 2));
        }
        for q in span(c, nn - 2) {
            w.vv(q, 2 * (nn - q) + 1);
        }
    }
    w.closing(2);
    Ok(w.finish())
}

/// Every `t` with an interval total `t`-coloring of `W_n`.
pub fn wheel_spectrum(n: usize) -> std::ops::RangeInclusive<Color> {
    let nn = n as Color;
    match n {
        4 => 6..=7,
        5..=8 => nn..=nn + 3,
        _ => nn..=nn + 4,
    }
}

pub(super) fn method_name(n: usize, t: Color) -> &'static str {
    let nn = n as Color;
    match (n, t - nn) {
        (4, 2) => "complete_even_min",
        (4, 3) => "complete_max",
        (_, 0) => "wheel_min",
        (_, 1) => "wheel_plus_one",
        (_, 2) => "wheel_plus_two",
        (_, 3) => "wheel_plus_three",
        _ => "wheel_plus_four",
    }
}

/// Interval total `t`-coloring of `W_n` for any `t` in [`wheel_spectrum`].
pub fn color_wheel(n: usize, t: Color) -> Result<Certificate, ConstructionError> {
    need(n, 4, "wheel")?;
    let range = wheel_spectrum(n);
    if !range.contains(&t) {
        return Err(ConstructionError::UncoveredT {
            family: format!("W_{n}"),
            t,
            supported: format!("[{}, {}]", range.start(), range.end()),
        });
    }
    let wheel = FamilySpec::Wheel { n }.generate()?;
    match (n, t - n as Color) {
        (4, 2) => Ok(transfer(&color_complete_even_min(4)?, wheel)),
        (4, _) => Ok(transfer(&color_complete_max(4)?, wheel)),
        (_, 0) => wheel_min(n),
        (_, 1) => wheel_plus_one(n),
        (_, 2) => wheel_plus_two(n),
        (_, 3) => wheel_plus_three(n),
        _ => wheel_plus_four(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w6_min_matches_hand_values() {
        let c = wheel_min(6).unwrap();
        let col = &c.coloring;
        assert_eq!(col.t, 6);
        assert_eq!(col.vertex_colors, vec![6, 2, 5, 4, 2, 4]);
        // spokes uv1..uv5, rim v1v2..v4v5, closing v1v5
        assert_eq!(col.edge_colors, vec![1, 3, 5, 4, 2, 4, 6, 3, 5, 3]);
        assert!(c.verify().unwrap().valid);
    }

    #[test]
    fn small_wheels_every_t() {
        for n in 4..=12 {
            for t in wheel_spectrum(n) {
                let c = color_wheel(n, t).unwrap();
                assert_eq!(c.coloring.t, t);
                let out = c.verify().unwrap();
                assert!(out.valid, "n={n} t={t}: {:?}", out.failures);
            }
        }
    }

    #[test]
    fn plus_three_at_four() {
        let out = wheel_plus_three(4).unwrap().verify().unwrap();
        assert!(out.valid, "{:?}", out.failures);
    }

    #[test]
    fn rejects_outside_spectrum() {
        assert!(color_wheel(5, 9).is_err());
        assert!(color_wheel(9, 14).is_err());
        assert!(color_wheel(4, 5).is_err());
        assert!(color_wheel(3, 3).is_err());
        assert!(wheel_plus_four(8).is_err());
    }
}
