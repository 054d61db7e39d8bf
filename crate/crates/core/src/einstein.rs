//! Einstein metrics on five-summand Type A spaces: polynomial systems, exact
//! solving, certification, classification, and existence certificates.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::curvature::{difference_numerator, ricci_components, ricci_components_interval, type_a_constants, StructureConstants};
use crate::flag::{lie, t_root_decomposition, PaintedDiagram, TRootDecomposition};
use crate::kahler::{all_ke_metrics, KEMetric};
use crate::polyalg::{buchberger, int, rat, saturate, GroebnerBasis, Interval, MultiPoly, Rational, UniPoly};
use crate::rootsystem::Series;
use crate::Error;

/// Target width of refined coordinates.
pub fn default_eps() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 80)
}

/// Relative residual accepted when certifying an approximate solution.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;
/// Distance below which normalized solutions are identified.
pub const DEDUP_TOLERANCE: f64 = 1e-8;
const COLLISION_WARNING: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    So { m: usize, p: usize },
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::So { m, p } => write!(f, "SO({m}), p = {p}"),
            Family::E6 => write!(f, "E6 {{a1, a4}}"),
            Family::E7 => write!(f, "E7 {{a1, a7}}"),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Family::So { m, p } => {
                let mut st = s.serialize_struct("Family", 3)?;
                st.serialize_field("family", "SO")?;
                st.serialize_field("m", m)?;
                st.serialize_field("p", p)?;
                st.end()
            }
            other => {
                let mut st = s.serialize_struct("Family", 2)?;
                st.serialize_field("family", "exceptional")?;
                st.serialize_field("name", &other.to_string())?;
                st.end()
            }
        }
    }
}

/// A five-summand Type A space with its structure constants and KE metrics.
#[derive(Clone, Debug)]
pub struct SpaceSpec {
    pub family: Family,
    pub diagram: PaintedDiagram,
    pub dec: TRootDecomposition,
    pub constants: StructureConstants,
    pub ke: Vec<KEMetric>,
}

/// Check the admissible range for SO(m) with p: B-series p <= l-1, D-series p <= l-3.
pub fn so_admissible(m: usize, p: usize) -> Result<(Series, usize), Error> {
    let bad = || Error::Inadmissible(format!("SO({m}) with p = {p}"));
    if m < 7 || p < 2 {
        return Err(bad());
    }
    if m % 2 == 1 {
        let l = (m - 1) / 2;
        if p + 1 > l {
            return Err(bad());
        }
        Ok((Series::B, l))
    } else {
        let l = m / 2;
        if l < 5 || p + 3 > l {
            return Err(bad());
        }
        Ok((Series::D, l))
    }
}

impl SpaceSpec {
    pub fn new(family: Family) -> Result<Self, Error> {
        let (series, rank, painted) = match family {
            Family::So { m, p } => {
                let (s, l) = so_admissible(m, p)?;
                (s, l, vec![1, p + 1])
            }
            Family::E6 => (Series::E6, 6, vec![1, 4]),
            Family::E7 => (Series::E7, 7, vec![1, 7]),
        };
        let diagram = PaintedDiagram::from_labels(lie(series, rank)?, &painted)?;
        let dec = t_root_decomposition(&diagram);
        let ke = all_ke_metrics(&diagram, &dec)?;
        let first = ke.first().ok_or_else(|| Error::Pattern("no invariant ordering".into()))?;
        let constants = type_a_constants(&dec, first)?;
        Ok(SpaceSpec { family, diagram, dec, constants, ke })
    }

    pub fn so(m: usize, p: usize) -> Result<Self, Error> {
        Self::new(Family::So { m, p })
    }

    /// KE coefficient vectors scaled to Einstein constant 1.
    pub fn normalized_ke(&self) -> Result<Vec<Vec<Rational>>, Error> {
        self.ke
            .iter()
            .map(|k| {
                let r = ricci_components(&self.constants, &k.coeffs)?;
                Ok(k.coeffs.iter().map(|c| c * &r[0]).collect())
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    #[serde(rename = "x5_eq_x1")]
    Symmetric,
    #[serde(rename = "x5_neq_x1")]
    General,
}

#[derive(Clone, Debug)]
pub struct BranchSystem {
    pub branch: Branch,
    /// Lex order of the free coefficients, highest first.
    pub vars: Vec<String>,
    pub polys: Vec<MultiPoly>,
}

impl BranchSystem {
    fn refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Full coefficient vector from values of the free variables.
    fn embed<T: Clone>(&self, values: &[T], one: T) -> Vec<T> {
        let mut out = vec![one.clone(); 5];
        for (name, v) in self.vars.iter().zip(values) {
            let k: usize = name[1..].parse::<usize>().expect("variable named x<k>") - 1;
            out[k] = v.clone();
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct EinsteinSystem {
    pub symmetric: BranchSystem,
    pub general: BranchSystem,
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Polynomial systems with x1 = 1, split along the factor x1 - x5 of r1 - r5.
pub fn einstein_system(s: &SpaceSpec) -> Result<EinsteinSystem, Error> {
    let sc = &s.constants;
    let one = Some(Rational::one());
    let fixed_a = [one.clone(), None, None, None, one.clone()];
    let va = ["x2", "x3", "x4"];
    let symmetric = BranchSystem {
        branch: Branch::Symmetric,
        vars: names(&va),
        polys: (0..3).map(|i| difference_numerator(sc, i, i + 1, &fixed_a, &va)).collect::<Result<_, _>>()?,
    };

    let fixed_b = [one, None, None, None, None];
    let vb_index = ["x2", "x3", "x4", "x5"];
    let vb = ["x2", "x5", "x3", "x4"];
    let mut polys: Vec<MultiPoly> = Vec::new();
    for i in 0..3 {
        polys.push(difference_numerator(sc, i, i + 1, &fixed_b, &vb_index)?.reorder(&vb)?);
    }
    let d15 = difference_numerator(sc, 0, 4, &fixed_b, &vb_index)?.reorder(&vb)?;
    let factor = MultiPoly::var(&vb, "x5").sub(&MultiPoly::constant(&vb, Rational::one()));
    let q = d15
        .div_exact(&factor)
        .ok_or_else(|| Error::Pattern("r1 - r5 is not divisible by x1 - x5".into()))?
        .primitive();
    polys.push(q);
    let general = BranchSystem { branch: Branch::General, vars: names(&vb), polys };
    Ok(EinsteinSystem { symmetric, general })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coord {
    Exact(Rational),
    Approx(Interval),
}

impl Coord {
    pub fn interval(&self) -> Interval {
        match self {
            Coord::Exact(r) => Interval::point(r.clone()),
            Coord::Approx(i) => i.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Coord::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Coord::Approx(i) => i.mid_f64(),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Coord::Exact(r) => Some(r),
            Coord::Approx(_) => None,
        }
    }
}

impl Serialize for Coord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Coord::Exact(r) => s.serialize_str(&r.to_string()),
            Coord::Approx(i) => {
                let mut st = s.serialize_struct("Interval", 3)?;
                st.serialize_field("lo", &i.lo.to_string())?;
                st.serialize_field("hi", &i.hi.to_string())?;
                st.serialize_field("approx", &i.mid_f64())?;
                st.end()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Kahler,
    NonKahler,
}

#[derive(Clone, Debug, Serialize)]
pub struct EinsteinSolution {
    /// Coefficients scaled to Einstein constant 1.
    pub coeffs: Vec<Coord>,
    pub branch: Branch,
    pub kind: Kind,
    pub lambda_normalized: bool,
    #[serde(serialize_with = "ser_rational")]
    pub residual_bound: Rational,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(r.to_f64().unwrap_or(f64::NAN))
}

impl EinsteinSolution {
    pub fn approx(&self) -> Vec<f64> {
        self.coeffs.iter().map(Coord::to_f64).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let a = self.approx();
        (a[0] - a[4]).abs() < DEDUP_TOLERANCE
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BranchReport {
    pub eliminant_degree: Option<usize>,
    /// Eliminant in the last coefficient before and after removing its rational roots.
    #[serde(skip)]
    pub eliminant: Option<UniPoly>,
    #[serde(skip)]
    pub reduced_eliminant: Option<UniPoly>,
    #[serde(serialize_with = "ser_rationals")]
    pub rational_roots: Vec<Rational>,
    pub unresolved: Option<String>,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub solutions: Vec<EinsteinSolution>,
}

fn unit(g: &[MultiPoly]) -> bool {
    g.iter().any(|p| p.leading().is_some_and(|(m, _)| m.is_one()))
}

fn saturate_each(gens: Vec<MultiPoly>, refs: &[&str]) -> Result<Vec<MultiPoly>, Error> {
    let mut g = gens;
    for v in refs {
        if unit(&g) {
            break;
        }
        g = saturate(&g, refs, &MultiPoly::var(refs, v))?;
    }
    Ok(g)
}

/// Linear basis member b*x + v(last): returns (b, v as a polynomial).
fn shape_member(gb: &GroebnerBasis, var: usize, last: usize) -> Option<(Rational, MultiPoly)> {
    gb.polys.iter().find_map(|p| {
        let (lm, lc) = p.leading()?;
        let mut want = crate::polyalg::Monomial::one();
        want.0[var] = 1;
        if *lm != want {
            return None;
        }
        let rest_ok = p.terms()[1..].iter().all(|(m, _)| (0..gb.vars.len()).all(|k| k == last || m.0[k] == 0));
        if !rest_ok {
            return None;
        }
        let v = MultiPoly::from_terms(&gb.vars, p.terms()[1..].iter().cloned());
        Some((lc.clone(), v))
    })
}

/// All complex-free positive-last-coordinate points of a zero-dimensional
/// system, exact where rational and as refined intervals otherwise.
fn solve_points(
    gens: Vec<MultiPoly>,
    vars: &[String],
    eps: &Rational,
    report: &mut BranchReport,
    top: bool,
) -> Result<Vec<Vec<Coord>>, Error> {
    let gens: Vec<MultiPoly> = gens.into_iter().filter(|p| !p.is_zero()).collect();
    if vars.is_empty() {
        return Ok(if gens.is_empty() { vec![Vec::new()] } else { Vec::new() });
    }
    if gens.is_empty() {
        return Err(Error::PositiveDimensional(vars.join(", ")));
    }
    let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let n = refs.len();
    let last = refs[n - 1];
    let g = saturate_each(gens, &refs)?;
    if unit(&g) {
        return Ok(Vec::new());
    }
    let gb = buchberger(&g, &refs)?;
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let h = gb.univariate(last)?;
    let rational = h.rational_roots();
    if top {
        report.eliminant_degree = Some(h.degree());
        report.eliminant = Some(h.clone());
        report.rational_roots = rational.clone();
    }
    let mut out = Vec::new();
    for rho in rational.iter().filter(|r| r.is_positive()) {
        let sub: Vec<MultiPoly> =
            gb.polys.iter().map(|p| p.substitute(last, rho).reorder(&refs[..n - 1])).collect::<Result<_, _>>()?;
        for mut pt in solve_points(sub, &vars[..n - 1], eps, report, false)? {
            pt.push(Coord::Exact(rho.clone()));
            out.push(pt);
        }
    }
    let (gb, h) = if rational.is_empty() {
        (gb, h)
    } else {
        let mut f = MultiPoly::constant(&refs, Rational::one());
        for rho in &rational {
            f = f.mul(&MultiPoly::var(&refs, last).sub(&MultiPoly::constant(&refs, rho.clone())));
        }
        let g2 = saturate(&g, &refs, &f)?;
        if unit(&g2) {
            return Ok(out);
        }
        let gb2 = buchberger(&g2, &refs)?;
        if gb2.is_unit() {
            return Ok(out);
        }
        let h2 = gb2.univariate(last)?;
        (gb2, h2)
    };
    if top {
        report.reduced_eliminant = Some(h.clone());
    }
    let roots = h.squarefree().positive_roots();
    if roots.is_empty() {
        return Ok(out);
    }
    let mut members = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        match shape_member(&gb, i, n - 1) {
            Some(m) => members.push(m),
            None => return Err(Error::Unresolved(format!("no linear basis member for {} over {last}", refs[i]))),
        }
    }
    for iv in roots {
        let mut e = eps.clone();
        let mut attempt = 0;
        loop {
            let r = iv.refine(&e);
            let xl = r.to_interval();
            let mut point: Vec<Interval> = vec![Interval::point(Rational::zero()); n];
            point[n - 1] = xl.clone();
            let mut coords: Vec<Coord> = members
                .iter()
                .map(|(b, v)| Coord::Approx(v.eval_interval(&point).neg().scale(&(Rational::one() / b))))
                .collect();
            coords.push(if r.is_exact() { Coord::Exact(r.lo.clone()) } else { Coord::Approx(xl) });
            let widest = coords.iter().map(|c| c.interval().width()).max().unwrap_or_else(Rational::zero);
            let wide = widest > *eps;
            attempt += 1;
            if !wide || attempt >= 8 {
                if wide {
                    report.diagnostics.push(format!("refinement stopped above eps at {last} ~ {}", r.mid_f64()));
                }
                out.push(coords);
                break;
            }
            e = e * eps / (widest * int(2)) / Rational::from_integer(BigInt::one() << 8);
        }
    }
    Ok(out)
}

fn certify(s: &SpaceSpec, sys: &BranchSystem, pt: &[Coord], report: &mut BranchReport) -> Option<EinsteinSolution> {
    let full = sys.embed(pt, Coord::Exact(Rational::one()));
    if full.iter().any(|c| !c.interval().is_positive()) {
        return None;
    }
    let sc = &s.constants;
    if full.iter().all(|c| c.exact().is_some()) {
        let x: Vec<Rational> = full.iter().map(|c| c.exact().cloned().unwrap()).collect();
        let r = ricci_components(sc, &x).ok()?;
        if r.iter().any(|v| *v != r[0]) {
            report.diagnostics.push(format!("exact point {x:?} is not Einstein"));
            return None;
        }
        let coeffs: Vec<Rational> = x.iter().map(|c| c * &r[0]).collect();
        let kind = if s.normalized_ke().ok()?.contains(&coeffs) { Kind::Kahler } else { Kind::NonKahler };
        return Some(EinsteinSolution {
            coeffs: coeffs.into_iter().map(Coord::Exact).collect(),
            branch: sys.branch,
            kind,
            lambda_normalized: true,
            residual_bound: Rational::zero(),
        });
    }
    let x: Vec<Interval> = full.iter().map(Coord::interval).collect();
    let r = ricci_components_interval(sc, &x).ok()?;
    let lambda = &r[0];
    if !lambda.is_positive() {
        report.diagnostics.push("nonpositive Einstein constant".into());
        return None;
    }
    let worst = r.iter().map(|v| v.sub(lambda).mag()).max().unwrap_or_else(Rational::zero);
    let bound = worst / &lambda.lo;
    if bound.to_f64().unwrap_or(f64::INFINITY) > RESIDUAL_TOLERANCE {
        report.diagnostics.push(format!("residual {:e} above tolerance", bound.to_f64().unwrap_or(f64::NAN)));
        return None;
    }
    let coeffs = x
        .iter()
        .zip(&full)
        .map(|(xi, c)| match c {
            Coord::Exact(v) if v.is_one() => Coord::Approx(lambda.clone()),
            _ => Coord::Approx(xi.mul(lambda)),
        })
        .collect();
    Some(EinsteinSolution { coeffs, branch: sys.branch, kind: Kind::NonKahler, lambda_normalized: true, residual_bound: bound })
}

/// Solve one branch, keeping certified points with all coefficients positive.
pub fn solve_branch(s: &SpaceSpec, sys: &BranchSystem, eps: &Rational) -> BranchReport {
    let mut report = BranchReport::default();
    match solve_points(sys.polys.clone(), &sys.vars, eps, &mut report, true) {
        Ok(points) => {
            for pt in points {
                if let Some(sol) = certify(s, sys, &pt, &mut report) {
                    report.solutions.push(sol);
                }
            }
        }
        Err(e) => report.unresolved = Some(e.to_string()),
    }
    report
}

fn swapped(v: &[f64]) -> Vec<f64> {
    let mut w = v.to_vec();
    w.swap(0, 4);
    w
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs() / x.abs().max(y.abs()).max(1.0)).fold(0.0, f64::max)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SolutionClasses {
    pub classes: Vec<EinsteinSolution>,
    pub warnings: Vec<String>,
}

impl SolutionClasses {
    pub fn count(&self, kind: Kind, symmetric: bool) -> usize {
        self.classes.iter().filter(|c| c.kind == kind && (kind == Kind::Kahler || c.is_symmetric() == symmetric)).count()
    }

    pub fn type_a(&self) -> usize {
        self.count(Kind::NonKahler, true)
    }

    pub fn type_b(&self) -> usize {
        self.count(Kind::NonKahler, false)
    }

    pub fn kahler(&self) -> usize {
        self.count(Kind::Kahler, false)
    }
}

/// Identify solutions equal up to swapping the first and last summands.
pub fn classify_and_dedup(sols: Vec<EinsteinSolution>) -> SolutionClasses {
    let mut out = SolutionClasses::default();
    let mut sols = sols;
    // Exact representatives first, then branch order, so classes keep the best form.
    sols.sort_by_key(|s| (s.coeffs.iter().any(|c| c.exact().is_none()), s.branch == Branch::General));
    for s in sols {
        let a = s.approx();
        let mut merged = false;
        for c in &out.classes {
            let b = c.approx();
            let d = distance(&a, &b).min(distance(&a, &swapped(&b)));
            if d < DEDUP_TOLERANCE {
                merged = true;
                break;
            }
            if d < COLLISION_WARNING {
                out.warnings.push(format!("solutions {a:?} and {b:?} are close but not identified"));
            }
        }
        if !merged {
            out.classes.push(s);
        }
    }
    out.classes.sort_by(|x, y| {
        let key = |s: &EinsteinSolution| (s.kind == Kind::NonKahler, !s.is_symmetric());
        key(x).cmp(&key(y)).then_with(|| x.approx().partial_cmp(&y.approx()).unwrap_or(std::cmp::Ordering::Equal))
    });
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaceReport {
    pub space: Family,
    pub dims: Vec<usize>,
    pub structure_constants: StructureConstants,
    pub solutions: Vec<EinsteinSolution>,
    pub type_a: usize,
    pub type_b: usize,
    pub kahler: usize,
    pub symmetric_branch: BranchReport,
    pub general_branch: BranchReport,
    pub warnings: Vec<String>,
    pub complete: bool,
    pub certificates: Vec<ExistenceCertificate>,
}

/// Solve both branches and classify.
pub fn analyze(s: &SpaceSpec, eps: &Rational) -> Result<SpaceReport, Error> {
    let sys = einstein_system(s)?;
    let (a, b) = rayon::join(|| solve_branch(s, &sys.symmetric, eps), || solve_branch(s, &sys.general, eps));
    let all: Vec<EinsteinSolution> = a.solutions.iter().chain(&b.solutions).cloned().collect();
    let classes = classify_and_dedup(all);
    let certificates = match s.family {
        Family::So { m, p } => vec![existence_certificate(m, p)?],
        _ => Vec::new(),
    };
    Ok(SpaceReport {
        space: s.family,
        dims: s.dec.dims.clone(),
        structure_constants: s.constants.clone(),
        type_a: classes.type_a(),
        type_b: classes.type_b(),
        kahler: classes.kahler(),
        complete: a.unresolved.is_none() && b.unresolved.is_none() && classes.warnings.is_empty(),
        solutions: classes.classes,
        warnings: classes.warnings,
        symmetric_branch: a,
        general_branch: b,
        certificates,
    })
}

/// Eliminant of the symmetric branch in `keep`, the other coefficients ordered
/// as given ahead of it.
pub fn symmetric_eliminant(s: &SpaceSpec, others: [&str; 2], keep: &str) -> Result<UniPoly, Error> {
    let sys = einstein_system(s)?.symmetric;
    let refs = sys.refs();
    let g = saturate_each(sys.polys.clone(), &refs)?;
    let order = [others[0], others[1], keep];
    let gb = buchberger(&g, &order)?;
    gb.univariate(keep)
}

#[derive(Clone, Debug, Serialize)]
pub struct SignCheck {
    pub point: String,
    #[serde(skip)]
    pub at: Rational,
    pub sign: i32,
    pub expected: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExistenceCertificate {
    pub m: usize,
    pub p: usize,
    pub eliminant_degree: usize,
    pub checks: Vec<SignCheck>,
    pub valid: bool,
    pub failure: Option<String>,
    /// Lower bound on positive roots of the eliminant.
    pub conclusion: usize,
}

/// Candidate points where the eliminant should be negative, in the order tried.
/// Each case of the sign argument covers a range of p. When m/4, m/3 is not an
/// integer some p fall between two ranges; those get the points of both
/// neighbouring cases.
pub fn test_points(m: usize, p: usize) -> Vec<Rational> {
    let (mi, pi) = (m as i64, p as i64);
    let l = ((m - 1) / 2) as i64;
    if m % 2 == 1 && pi == l - 1 {
        return vec![Rational::one() / int(l) - Rational::one() / int(4 * l * l)];
    }
    let first = rat(1, 2) + rat(13, 16 * mi) - rat(5 * pi, 16 * mi);
    let second = |p4: i64| -> Vec<Rational> {
        match p4 {
            4 => vec![rat(21, 50)],
            d if d >= 8 => vec![rat(19, 50)],
            _ => vec![rat(21, 50), rat(19, 50)],
        }
    };
    let p4 = 4 * pi - mi;
    if p4 <= 0 {
        vec![first]
    } else if p4 < 4 {
        vec![first, rat(21, 50)]
    } else if 3 * pi <= mi {
        second(p4)
    } else if 3 * pi < mi + 3 {
        let mut v = second(p4);
        v.push(rat(1, 3));
        v
    } else if 8 * pi <= 3 * mi {
        vec![rat(1, 3)]
    } else {
        let q = rat(mi, 2) - int(pi);
        let m = int(mi);
        vec![int(4) * &q / &m - int(4) / &m - int(8) * (&q / &m) * (&q / &m) + int(16) * &q / (&m * &m)]
    }
}

pub fn existence_certificate(m: usize, p: usize) -> Result<ExistenceCertificate, Error> {
    let s = SpaceSpec::so(m, p)?;
    let h = symmetric_eliminant(&s, ["x2", "x4"], "x3")?;
    let lc_sign = if h.leading().is_positive() { 1 } else { -1 };
    let mut checks = vec![SignCheck { point: "0".into(), at: Rational::zero(), sign: h.sign_at(&Rational::zero()), expected: 1 }];
    let candidates = test_points(m, p);
    let x0 = candidates.iter().find(|x| h.sign_at(x) < 0).unwrap_or(&candidates[0]).clone();
    checks.push(SignCheck { point: x0.to_string(), sign: h.sign_at(&x0), at: x0, expected: -1 });
    if p == 2 && m >= 13 {
        let a = (rat(20 * m as i64, 33) - rat(493, 198)) / int(2);
        for (pt, exp) in [(Rational::one(), 1), (a, -1)] {
            checks.push(SignCheck { point: pt.to_string(), sign: h.sign_at(&pt), at: pt, expected: exp });
        }
    }
    let mut failure = None;
    if lc_sign != 1 {
        failure = Some("leading coefficient is not positive".to_string());
    }
    if failure.is_none() {
        if let Some(c) = checks.iter().find(|c| c.sign != c.expected) {
            failure = Some(format!("sign at {} is {}, expected {}", c.point, c.sign, c.expected));
        }
    }
    let mut ordered: Vec<&SignCheck> = checks.iter().collect();
    ordered.sort_by(|a, b| a.at.cmp(&b.at));
    let mut signs: Vec<i32> = ordered.iter().map(|c| c.sign).filter(|&s| s != 0).collect();
    signs.push(lc_sign);
    let conclusion = signs.windows(2).filter(|w| w[0] != w[1]).count();
    Ok(ExistenceCertificate {
        m,
        p,
        eliminant_degree: h.degree(),
        valid: failure.is_none(),
        checks,
        failure,
        conclusion,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Table4Row {
    pub series: char,
    pub rank: usize,
    pub p: usize,
    pub type_a: usize,
    pub type_b: usize,
    pub kahler: usize,
    pub complete: bool,
}

pub fn table4_row(series: Series, rank: usize, p: usize, eps: &Rational) -> Result<Table4Row, Error> {
    let m = match series {
        Series::B => 2 * rank + 1,
        Series::D => 2 * rank,
        _ => return Err(Error::Input(format!("table rows are B or D series, got {series}"))),
    };
    let s = SpaceSpec::so(m, p)?;
    let r = analyze(&s, eps)?;
    Ok(Table4Row {
        series: if series == Series::B { 'B' } else { 'D' },
        rank,
        p,
        type_a: r.type_a,
        type_b: r.type_b,
        kahler: r.kahler,
        complete: r.complete,
    })
}

/// Rows solved concurrently; results come back in input order.
pub fn table4(rows: &[(Series, usize, usize)], eps: &Rational) -> Vec<Result<Table4Row, Error>> {
    rows.par_iter().map(|&(s, l, p)| table4_row(s, l, p, eps)).collect()
}

/// The rows of the published table.
pub fn published_rows() -> Vec<(Series, usize, usize, [usize; 3])> {
    vec![
        (Series::B, 3, 2, [2, 1, 2]),
        (Series::B, 4, 2, [4, 2, 2]),
        (Series::B, 4, 3, [2, 1, 2]),
        (Series::B, 5, 2, [4, 2, 2]),
        (Series::B, 5, 3, [2, 1, 2]),
        (Series::B, 5, 4, [2, 1, 2]),
        (Series::B, 6, 2, [4, 2, 2]),
        (Series::B, 6, 3, [2, 2, 2]),
        (Series::B, 6, 4, [2, 1, 2]),
        (Series::B, 6, 5, [2, 1, 2]),
        (Series::D, 5, 2, [4, 2, 2]),
        (Series::D, 6, 2, [4, 2, 2]),
        (Series::D, 6, 3, [2, 2, 2]),
        (Series::D, 7, 2, [4, 2, 2]),
        (Series::D, 7, 3, [4, 2, 2]),
        (Series::D, 7, 4, [2, 2, 2]),
    ]
}
