//! Floating-point cross-checks: polynomial roots, root-locus sampling,
//! normalized residuals and implicit curve tracing.

use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{FromPrimitive, Zero};

use crate::error::{AlgebraError, Result};
use crate::poly::{rat_to_f64, Polynomial, Rat, Var};
use crate::rootlocus::TransferFunction;
use crate::univariate::UniPoly;

pub type ComplexPoint = Complex64;

const MAX_ITER: usize = 2000;

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    // value and derivative, coefficients ascending
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a polynomial with ascending `f64` coefficients,
/// by Aberth iteration followed by Newton polishing.
pub fn roots_f64(coeffs: &[f64]) -> Result<Vec<ComplexPoint>> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last().is_some_and(|x| *x == 0.0) {
        c.pop();
    }
    if c.is_empty() {
        return Err(AlgebraError::Numeric("zero polynomial has no finite root set".into()));
    }
    if c.len() == 1 {
        return Err(AlgebraError::Numeric("constant polynomial has no roots".into()));
    }
    if c.iter().any(|x| !x.is_finite()) {
        return Err(AlgebraError::Numeric("non-finite coefficient".into()));
    }
    let zeros = c.iter().take_while(|x| **x == 0.0).count();
    let mut roots = vec![Complex64::zero(); zeros];
    let c = &c[zeros..];
    let n = c.len() - 1;
    if n == 0 {
        return Ok(roots);
    }
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|x| Complex64::new(x / lead, 0.0)).collect();
    if n == 1 {
        roots.push(-monic[0]);
        return Ok(roots);
    }

    // Fujiwara bound
    let mut bound: f64 = 0.0;
    for k in 1..=n {
        let a = monic[n - k].norm();
        let r = if k == n { (a / 2.0).powf(1.0 / k as f64) } else { a.powf(1.0 / k as f64) };
        bound = bound.max(r);
    }
    let radius = if bound > 0.0 { bound } else { 1.0 };
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + 0.4)).collect();

    for _ in 0..MAX_ITER {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut sum = Complex64::zero();
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        sum += d.inv();
                    }
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zi in &mut z {
        for _ in 0..4 {
            let (p, dp) = horner(&monic, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let next = *zi - p / dp;
            if horner(&monic, next).0.norm() < p.norm() {
                *zi = next;
            } else {
                break;
            }
        }
    }
    roots.extend(z);
    Ok(roots)
}

fn sort_points(points: &mut [ComplexPoint]) {
    points.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Complex roots with multiplicity. Repeated and rational roots are split off
/// exactly first, so only simple irrational roots go through iteration.
pub fn univariate_roots(p: &UniPoly) -> Result<Vec<ComplexPoint>> {
    match p.degree() {
        None => return Err(AlgebraError::Numeric("zero polynomial".into())),
        Some(0) => return Err(AlgebraError::Numeric("degree-0 polynomial has no roots".into())),
        _ => {}
    }
    let mut out = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        let mut rest = factor;
        for (r, _) in rest.rational_roots() {
            rest = rest.div_rem(&UniPoly::linear_root(&r)).0;
            let z = Complex64::new(rat_to_f64(&r), 0.0);
            out.extend(std::iter::repeat_n(z, mult));
        }
        if rest.degree().unwrap_or(0) > 0 {
            for z in roots_f64(&rest.to_f64_coeffs())? {
                out.extend(std::iter::repeat_n(z, mult));
            }
        }
    }
    sort_points(&mut out);
    Ok(out)
}

/// Roots from a highest-degree-first rational coefficient list.
pub fn univariate_roots_descending(coeffs: &[Rat]) -> Result<Vec<ComplexPoint>> {
    univariate_roots(&UniPoly::from_descending(coeffs))
}

/// Groups roots closer than `tol` (relative to magnitude), returning
/// centroid and count.
pub fn cluster_roots(roots: &[ComplexPoint], tol: f64) -> Vec<(ComplexPoint, usize)> {
    let mut clusters: Vec<(ComplexPoint, usize)> = Vec::new();
    for z in roots {
        match clusters.iter_mut().find(|(c, _)| (*c - z).norm() <= tol * c.norm().max(1.0)) {
            Some((c, n)) => {
                *c = (*c * *n as f64 + z) / (*n as f64 + 1.0);
                *n += 1;
            }
            None => clusters.push((*z, 1)),
        }
    }
    clusters
}

#[derive(Debug, Clone)]
pub struct LocusSample {
    pub lambda: f64,
    pub roots: Vec<ComplexPoint>,
}

/// Roots of `d + λ n` for each `λ` of the grid, in input order.
pub fn sample_root_locus(tf: &TransferFunction, grid: &[f64]) -> Result<Vec<LocusSample>> {
    let mut out = Vec::with_capacity(grid.len());
    for &lambda in grid {
        // f64 values are exact dyadic rationals, so the pencil stays exact
        let l = Rat::from_f64(lambda).ok_or_else(|| AlgebraError::Numeric(format!("non-finite λ = {lambda}")))?;
        let p = tf.den().add(&tf.num().scale(&l));
        out.push(LocusSample { lambda, roots: univariate_roots(&p)? });
    }
    Ok(out)
}

/// `value = |p(point)|`, `scale = max(1, max_t |c_t m_t(point)|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub value: f64,
    pub scale: f64,
}

impl Residual {
    pub fn normalized(&self) -> f64 {
        self.value / self.scale
    }
}

pub fn residual(p: &Polynomial, point: &dyn Fn(Var) -> f64) -> Residual {
    let vals: Vec<f64> = p.varset().vars().iter().map(|&v| point(v)).collect();
    let mut sum = 0.0;
    let mut scale: f64 = 1.0;
    for (m, c) in p.terms() {
        let mut t = rat_to_f64(c);
        for (i, x) in vals.iter().enumerate() {
            if m.exp(i) > 0 {
                t *= x.powi(m.exp(i) as i32);
            }
        }
        sum += t;
        scale = scale.max(t.abs());
    }
    Residual { value: sum.abs(), scale }
}

/// Residual of an affine equation in `x, y` at a point of the plane.
pub fn residual_xy(p: &Polynomial, x: f64, y: f64) -> Residual {
    residual(p, &|v| match v {
        Var::X => x,
        Var::Y => y,
        Var::Z => 1.0,
        _ => 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl BBox {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<BBox> {
        let ok = [x0, x1, y0, y1].iter().all(|v| v.is_finite()) && x1 > x0 && y1 > y0;
        if !ok {
            return Err(AlgebraError::Numeric(format!("degenerate bounding box [{x0},{x1}]x[{y0},{y1}]")));
        }
        Ok(BBox { x0, x1, y0, y1 })
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x0 && x <= self.x1 && y >= self.y0 && y <= self.y1
    }
}

pub type Polyline = Vec<(f64, f64)>;

#[derive(Debug, Clone, Copy)]
pub struct TraceOptions {
    pub resolution: usize,
    /// Newton steps pulling each vertex onto the curve.
    pub polish: bool,
}

impl Default for TraceOptions {
    fn default() -> Self {
        TraceOptions { resolution: 256, polish: true }
    }
}

/// Marching-squares contour of `f(x, y) = 0` (a polynomial in `x, y`, other
/// variables read as 1 for `z` and 0 otherwise).
pub fn trace_curve(f: &Polynomial, bbox: BBox, opts: TraceOptions) -> Result<Vec<Polyline>> {
    if f.is_zero() {
        return Err(AlgebraError::Numeric("cannot trace the zero polynomial".into()));
    }
    let n = opts.resolution;
    if n < 8 {
        return Err(AlgebraError::Numeric(format!("resolution {n} below the minimum of 8")));
    }
    let fx = f.partial_derivative(Var::X).ok();
    let fy = f.partial_derivative(Var::Y).ok();
    let eval = |p: &Polynomial, x: f64, y: f64| {
        p.evaluate_f64(&|v| match v {
            Var::X => x,
            Var::Y => y,
            Var::Z => 1.0,
            _ => 0.0,
        })
    };
    let dx = (bbox.x1 - bbox.x0) / n as f64;
    let dy = (bbox.y1 - bbox.y0) / n as f64;
    let px = |i: usize| bbox.x0 + dx * i as f64;
    let py = |j: usize| bbox.y0 + dy * j as f64;
    let stride = n + 1;
    let mut grid = vec![0.0; stride * stride];
    for j in 0..=n {
        for i in 0..=n {
            grid[j * stride + i] = eval(f, px(i), py(j));
        }
    }
    let val = |i: usize, j: usize| grid[j * stride + i];
    let pos = |v: f64| v >= 0.0;

    // edge ids: horizontal (i,j)-(i+1,j) -> 2*(j*stride+i), vertical (i,j)-(i,j+1) -> +1
    let h_edge = |i: usize, j: usize| 2 * (j * stride + i);
    let v_edge = |i: usize, j: usize| 2 * (j * stride + i) + 1;
    let mut vertex: HashMap<usize, (f64, f64)> = HashMap::new();
    let mut crossing = |id: usize| -> (f64, f64) {
        *vertex.entry(id).or_insert_with(|| {
            let cell = id / 2;
            let (i, j) = (cell % stride, cell / stride);
            let (a, b, p0, p1) = if id.is_multiple_of(2) {
                (val(i, j), val(i + 1, j), (px(i), py(j)), (px(i + 1), py(j)))
            } else {
                (val(i, j), val(i, j + 1), (px(i), py(j)), (px(i), py(j + 1)))
            };
            let t = if a == b { 0.5 } else { a / (a - b) };
            (p0.0 + t * (p1.0 - p0.0), p0.1 + t * (p1.1 - p0.1))
        })
    };

    let mut segments: Vec<(usize, usize)> = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let (a, b, c, d) = (val(i, j), val(i + 1, j), val(i + 1, j + 1), val(i, j + 1));
            let code = (pos(a) as u8) | (pos(b) as u8) << 1 | (pos(c) as u8) << 2 | (pos(d) as u8) << 3;
            let bottom = h_edge(i, j);
            let right = v_edge(i + 1, j);
            let top = h_edge(i, j + 1);
            let left = v_edge(i, j);
            let centre_pos = pos((a + b + c + d) / 4.0);
            let segs: &[(usize, usize)] = match code {
                0 | 15 => &[],
                1 | 14 => &[(left, bottom)],
                2 | 13 => &[(bottom, right)],
                3 | 12 => &[(left, right)],
                4 | 11 => &[(right, top)],
                6 | 9 => &[(bottom, top)],
                7 | 8 => &[(left, top)],
                5 if centre_pos => &[(left, top), (bottom, right)],
                5 => &[(left, bottom), (right, top)],
                10 if centre_pos => &[(left, bottom), (right, top)],
                10 => &[(left, top), (bottom, right)],
                _ => unreachable!(),
            };
            segments.extend_from_slice(segs);
        }
    }
    for &(a, b) in &segments {
        crossing(a);
        crossing(b);
    }

    let mut incident: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, &(a, b)) in segments.iter().enumerate() {
        incident.entry(a).or_default().push(k);
        incident.entry(b).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let walk = |start_seg: usize, start_edge: usize, used: &mut Vec<bool>| {
        let mut chain = vec![start_edge];
        let mut seg = start_seg;
        let mut at = start_edge;
        loop {
            used[seg] = true;
            let (a, b) = segments[seg];
            let next = if a == at { b } else { a };
            chain.push(next);
            at = next;
            match incident[&at].iter().find(|&&s| !used[s]) {
                Some(&s) => seg = s,
                None => break,
            }
        }
        chain
    };
    // open chains first, from their loose ends, in edge-id order
    let mut ends: Vec<usize> = incident.iter().filter(|(_, s)| s.len() == 1).map(|(e, _)| *e).collect();
    ends.sort_unstable();
    for e in ends {
        let s = incident[&e][0];
        if !used[s] {
            chains.push(walk(s, e, &mut used));
        }
    }
    for s in 0..segments.len() {
        if !used[s] {
            chains.push(walk(s, segments[s].0, &mut used));
        }
    }

    let polish = |p: (f64, f64)| -> (f64, f64) {
        let (Some(fx), Some(fy)) = (&fx, &fy) else { return p };
        let (mut x, mut y) = p;
        let limit = 2.0 * dx.max(dy);
        for _ in 0..8 {
            let v = eval(f, x, y);
            let gx = eval(fx, x, y);
            let gy = eval(fy, x, y);
            let g2 = gx * gx + gy * gy;
            if g2 == 0.0 || !g2.is_finite() {
                break;
            }
            let (nx, ny) = (x - v * gx / g2, y - v * gy / g2);
            if (nx - p.0).abs() > limit || (ny - p.1).abs() > limit {
                return p;
            }
            if (nx - x).abs() + (ny - y).abs() < 1e-15 * (1.0 + x.abs() + y.abs()) {
                return (nx, ny);
            }
            x = nx;
            y = ny;
        }
        if residual_xy(f, x, y).normalized() <= residual_xy(f, p.0, p.1).normalized() {
            (x, y)
        } else {
            p
        }
    };

    let mut out = Vec::with_capacity(chains.len());
    for chain in chains {
        let line: Polyline = chain
            .iter()
            .map(|e| {
                let p = vertex[e];
                if opts.polish {
                    polish(p)
                } else {
                    p
                }
            })
            .collect();
        out.push(line);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn close(a: ComplexPoint, b: ComplexPoint, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn quadratic_complex_pair() {
        let r = univariate_roots(&UniPoly::from_i64_descending(&[1, 2, 2])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(r[0], Complex64::new(-1.0, -1.0), 1e-14));
        assert!(close(r[1], Complex64::new(-1.0, 1.0), 1e-14));
    }

    #[test]
    fn repeated_roots_exact() {
        let r = univariate_roots(&UniPoly::from_i64_descending(&[1, 0, 0])).unwrap();
        assert_eq!(r, vec![Complex64::zero(); 2]);
        let r = univariate_roots(&UniPoly::from_i64_descending(&[1, 4, 0, 0])).unwrap();
        assert_eq!(r, vec![Complex64::new(-4.0, 0.0), Complex64::zero(), Complex64::zero()]);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert!(univariate_roots(&UniPoly::zero()).is_err());
        assert!(univariate_roots(&UniPoly::one()).is_err());
    }

    #[test]
    fn aberth_on_wilkinson_like_polynomial() {
        // (s-1)(s-2)...(s-8)
        let mut p = UniPoly::one();
        for k in 1..=8 {
            p = p.mul(&UniPoly::from_i64_descending(&[1, -k]));
        }
        let r = roots_f64(&p.to_f64_coeffs()).unwrap();
        let mut re: Vec<f64> = r.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (k, x) in re.iter().enumerate() {
            assert!((x - (k + 1) as f64).abs() < 1e-9, "{x}");
        }
    }

    #[test]
    fn clustering_counts_multiplicity() {
        let pts = [Complex64::new(1.0, 0.0), Complex64::new(1.0 + 1e-9, 0.0), Complex64::new(-2.0, 0.0)];
        let c = cluster_roots(&pts, 1e-7);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].1, 2);
    }

    #[test]
    fn residual_examples() {
        let vars = VarSet::of(&[Var::X, Var::Y, Var::Z]);
        let circle = Polynomial::parse("x^2 + y^2 + 2*x*z", &vars).unwrap();
        assert_eq!(residual_xy(&circle, -1.0, 1.0).normalized(), 0.0);
        let r = residual_xy(&circle, 1.0, 1.0);
        assert_eq!((r.value, r.scale, r.normalized()), (4.0, 2.0, 2.0));
        let y = Polynomial::parse("y", &vars).unwrap();
        assert_eq!(residual_xy(&y, 3.0, 0.0).normalized(), 0.0);
    }

    #[test]
    fn trace_circle_is_one_closed_loop() {
        let vars = VarSet::of(&[Var::X, Var::Y]);
        let f = Polynomial::parse("x^2 + y^2 + 2*x", &vars).unwrap();
        let bbox = BBox::new(-3.0, 1.0, -2.0, 2.0).unwrap();
        let lines = trace_curve(&f, bbox, TraceOptions { resolution: 256, polish: false }).unwrap();
        assert_eq!(lines.len(), 1);
        let l = &lines[0];
        assert_eq!(l.first(), l.last());
        for &(x, y) in l {
            assert!(((x + 1.0).hypot(y) - 1.0).abs() < 1e-3);
            assert!(residual_xy(&f, x, y).normalized() <= 10.0 / 256.0);
        }
    }

    #[test]
    fn trace_polish_tightens_residuals() {
        let vars = VarSet::of(&[Var::X, Var::Y]);
        let f = Polynomial::parse("x^2 + y^2 + 2*x", &vars).unwrap();
        let bbox = BBox::new(-3.0, 1.0, -2.0, 2.0).unwrap();
        let lines = trace_curve(&f, bbox, TraceOptions::default()).unwrap();
        for &(x, y) in lines.iter().flatten() {
            assert!(residual_xy(&f, x, y).normalized() <= 1e-12);
        }
    }

    #[test]
    fn trace_empty_and_line() {
        let vars = VarSet::of(&[Var::X, Var::Y]);
        let f = Polynomial::parse("x^2 + y^2 + 1", &vars).unwrap();
        let bbox = BBox::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        assert!(trace_curve(&f, bbox, TraceOptions::default()).unwrap().is_empty());
        let g = Polynomial::parse("y", &vars).unwrap();
        let lines = trace_curve(&g, bbox, TraceOptions::default()).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].iter().all(|p| p.1 == 0.0));
        assert_eq!(lines[0].len(), 257);
    }

    #[test]
    fn bad_trace_arguments() {
        let vars = VarSet::of(&[Var::X, Var::Y]);
        let g = Polynomial::parse("y", &vars).unwrap();
        assert!(BBox::new(1.0, 1.0, 0.0, 1.0).is_err());
        let bbox = BBox::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        assert!(trace_curve(&g, bbox, TraceOptions { resolution: 4, polish: false }).is_err());
    }
}
