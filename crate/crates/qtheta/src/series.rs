//! Sparse truncated Laurent series in the nome q and the formal variables
//! X = e^{2ix}, Y = e^{2iy}, W = e^{2iz}.
//!
//! Every exponent lives on a global grid of twelfths: `ExpVec` stores each
//! exponent multiplied by 12, so q^{1/3} X^{1/2} is `eq = 4, ex = 6`.
//! 12 = lcm(2,3,4,6,12) covers every fractional exponent that lattice theta
//! series on this grid can produce (quarters from theta characteristics,
//! thirds from the cubic shifts, twelfths from eta).
//!
//! A series carries a truncation bound `q_cut`: coefficients are complete and
//! trusted for all q-exponents <= q_cut. Products propagate the bound with
//! `cut(ab) = min(a.cut + b.q_low, b.cut + a.q_low)`, which stays correct for
//! series with negative leading q-exponent.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::Cyc12;
use crate::error::Error;

/// Truncation bound used for exact series (monomials, finite binomials):
/// effectively "complete at every order" while keeping cut arithmetic in i64.
pub const EXACT_CUT: i64 = i64::MAX / 4;

fn cut_add(a: i64, b: i64) -> i64 {
    a.saturating_add(b).min(EXACT_CUT)
}

/// The three formal variables besides q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Var {
    X,
    Y,
    W,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::W];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "X",
            Var::Y => "Y",
            Var::W => "W",
        }
    }
}

/// Exponent vector; each component is the exponent multiplied by 12.
/// The derived ordering is lexicographic on (eq, ex, ey, ew), which is the
/// tie-break used in mismatch reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec {
    pub eq: i64,
    pub ex: i64,
    pub ey: i64,
    pub ew: i64,
}

impl ExpVec {
    pub fn new(eq: i64, ex: i64, ey: i64, ew: i64) -> Self {
        ExpVec { eq, ex, ey, ew }
    }

    /// Pure q-power (exponent in twelfths).
    pub fn q(eq: i64) -> Self {
        ExpVec::new(eq, 0, 0, 0)
    }

    pub fn get(&self, v: Var) -> i64 {
        match v {
            Var::X => self.ex,
            Var::Y => self.ey,
            Var::W => self.ew,
        }
    }

    pub fn get_mut(&mut self, v: Var) -> &mut i64 {
        match v {
            Var::X => &mut self.ex,
            Var::Y => &mut self.ey,
            Var::W => &mut self.ew,
        }
    }

    fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec::new(
            self.eq + other.eq,
            self.ex + other.ex,
            self.ey + other.ey,
            self.ew + other.ew,
        )
    }

    fn sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec::new(
            self.eq - other.eq,
            self.ex - other.ex,
            self.ey - other.ey,
            self.ew - other.ew,
        )
    }
}

/// First differing term between two series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub at: ExpVec,
    pub lhs: Cyc12,
    pub rhs: Cyc12,
}

/// Sparse truncated Laurent series with Cyc12 coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<ExpVec, Cyc12>,
    q_low: i64,
    q_cut: i64,
}

impl Series {
    /// The zero series, complete through `q_cut` (twelfths).
    pub fn zero(q_cut: i64) -> Self {
        Series {
            terms: BTreeMap::new(),
            q_low: 0,
            q_cut,
        }
    }

    /// The constant 1 as an exact series.
    pub fn one() -> Self {
        Series::monomial(Cyc12::one(), ExpVec::default())
    }

    /// A single exact term `coeff * q^{eq/12} X^{ex/12} Y^{ey/12} W^{ew/12}`.
    pub fn monomial(coeff: Cyc12, exps: ExpVec) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Series {
            terms,
            q_low: exps.eq,
            q_cut: EXACT_CUT,
        }
    }

    /// Build from terms; zero coefficients and terms above the cut are dropped.
    /// `q_low` defaults to the least stored q-exponent (or `low_bound` when given,
    /// which must be a valid lower bound for the untruncated support).
    pub fn from_terms<I>(iter: I, q_cut: i64, low_bound: Option<i64>) -> Self
    where
        I: IntoIterator<Item = (ExpVec, Cyc12)>,
    {
        let mut terms: BTreeMap<ExpVec, Cyc12> = BTreeMap::new();
        for (e, c) in iter {
            if c.is_zero() || e.eq > q_cut {
                continue;
            }
            let entry = terms.entry(e).or_insert_with(Cyc12::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        let q_low = low_bound
            .or_else(|| terms.keys().next().map(|e| e.eq))
            .unwrap_or(0);
        Series { terms, q_low, q_cut }
    }

    pub fn q_cut(&self) -> i64 {
        self.q_cut
    }

    /// Guaranteed lower bound on the q-support (twelfths).
    pub fn q_low(&self) -> i64 {
        self.q_low
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExpVec, &Cyc12)> {
        self.terms.iter()
    }

    /// Least stored q-exponent, if any term exists.
    pub fn min_q_exp(&self) -> Option<i64> {
        self.terms.keys().next().map(|e| e.eq)
    }

    /// Coefficient at an exponent vector (zero when absent).
    pub fn coeff(&self, e: &ExpVec) -> Cyc12 {
        self.terms.get(e).cloned().unwrap_or_else(Cyc12::zero)
    }

    /// Coefficient of the pure q-power `q^{eq/12}`.
    pub fn coeff_q(&self, eq: i64) -> Cyc12 {
        self.coeff(&ExpVec::q(eq))
    }

    pub fn neg(&self) -> Series {
        Series {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            q_low: self.q_low,
            q_cut: self.q_cut,
        }
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let q_cut = self.q_cut.min(rhs.q_cut);
        let mut terms = self.terms.clone();
        terms.retain(|e, _| e.eq <= q_cut);
        for (e, c) in &rhs.terms {
            if e.eq > q_cut {
                continue;
            }
            let entry = terms.entry(*e).or_insert_with(Cyc12::zero);
            *entry += c.clone();
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Series {
            terms,
            q_low: self.q_low.min(rhs.q_low),
            q_cut,
        }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        self.add(&rhs.neg())
    }

    /// Multiply every coefficient by a constant.
    pub fn scale(&self, k: &Cyc12) -> Series {
        if k.is_zero() {
            return Series {
                terms: BTreeMap::new(),
                q_low: self.q_low,
                q_cut: self.q_cut,
            };
        }
        Series {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
            q_low: self.q_low,
            q_cut: self.q_cut,
        }
    }

    /// Cauchy product with the truncation rule
    /// `cut = min(a.cut + b.q_low, b.cut + a.q_low)`.
    pub fn mul(&self, rhs: &Series) -> Series {
        let q_cut = if self.q_cut >= EXACT_CUT && rhs.q_cut >= EXACT_CUT {
            EXACT_CUT
        } else {
            cut_add(self.q_cut, rhs.q_low).min(cut_add(rhs.q_cut, self.q_low))
        };
        let q_low = self.q_low + rhs.q_low;
        let mut terms: BTreeMap<ExpVec, Cyc12> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let budget = q_cut - ea.eq;
            for (eb, cb) in &rhs.terms {
                // keys are sorted with eq leading, so later terms only grow in eq
                if eb.eq > budget {
                    break;
                }
                let e = ea.add(eb);
                let entry = terms.entry(e).or_insert_with(Cyc12::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Series { terms, q_low, q_cut }
    }

    /// k-th power by binary powering; equals repeated multiplication.
    pub fn pow(&self, k: u32) -> Series {
        assert!(k >= 1, "pow requires k >= 1");
        let mut base = self.clone();
        let mut acc: Option<Series> = None;
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.unwrap()
    }

    /// Division. The divisor's lowest q-slice must be a single monomial with
    /// a nonzero coefficient; `result * rhs` agrees with `self` up to the cut.
    pub fn div(&self, rhs: &Series) -> Result<Series, Error> {
        let lead_exp = match rhs.terms.keys().next() {
            None => return Err(Error::DivisionByZero),
            Some(e) => *e,
        };
        let e0 = lead_exp.eq;
        let slice_count = rhs.terms.keys().take_while(|e| e.eq == e0).count();
        if slice_count != 1 {
            return Err(Error::NonMonomialLead);
        }
        let lead = rhs.terms[&lead_exp].clone();
        let lead_inv = lead.inv()?;

        // rhs = L * (1 + t) with t of strictly positive q-valuation.
        let mut t_terms = BTreeMap::new();
        for (e, c) in rhs.terms.iter().skip(1) {
            t_terms.insert(e.sub(&lead_exp), c * &lead_inv);
        }
        let t_min = t_terms.keys().next().map(|e| e.eq);
        let t = Series {
            terms: t_terms,
            q_low: t_min.unwrap_or(1),
            q_cut: cut_add(rhs.q_cut, -e0),
        };

        // Completeness needed from sum_k (-t)^k so the final product keeps
        // cut = a.cut - e0.
        let want = cut_add(rhs.q_cut, -e0).min(cut_add(self.q_cut, -self.q_low));
        if want >= EXACT_CUT / 2 && !t.is_zero() {
            return Err(Error::Invalid(
                "division by an exact non-monomial series needs a finite cut".into(),
            ));
        }
        let inv_tail = match t_min {
            None => Series::one(),
            Some(step) => {
                debug_assert!(step > 0);
                let reps = (want.max(0) / step) as u32 + 1;
                // Horner: s = 1 - t*(1 - t*(...))
                let mut s = Series::one();
                for _ in 0..reps {
                    s = Series::one().sub(&t.mul(&s).truncated(want));
                }
                s
            }
        };
        let inv_lead = Series::monomial(lead_inv, ExpVec::default().sub(&lead_exp));
        let mut inv = inv_tail.mul(&inv_lead);
        inv.q_cut = cut_add(want, -e0);
        inv.q_low = -e0;
        Ok(self.mul(&inv))
    }

    /// Re-truncate to a (lower) bound; never raises the trusted region.
    pub fn truncated(mut self, q_cut: i64) -> Series {
        let q_cut = q_cut.min(self.q_cut);
        self.terms.retain(|e, _| e.eq <= q_cut);
        self.q_cut = q_cut;
        self
    }

    /// Substitute `var -> zeta^s * var`, multiplying each term by the unit
    /// phase zeta^{s*e}. Errors when a phase lands off the zeta_12 grid.
    pub fn phase_twist(&self, var: Var, s: i64) -> Result<Series, Error> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let p = s * e.get(var);
            if p.rem_euclid(12) != 0 {
                return Err(Error::PhaseOffGrid(format!(
                    "twist of {} by zeta^{s} on exponent {}/12",
                    var.name(),
                    e.get(var)
                )));
            }
            terms.insert(*e, c * &Cyc12::unit(p / 12));
        }
        Ok(Series {
            terms,
            q_low: self.q_low,
            q_cut: self.q_cut,
        })
    }

    /// Set the given variables to 1, merging coefficients. Sound under
    /// q-truncation because q-exponents are untouched.
    pub fn eval_vars_at_one(&self, vars: &[Var]) -> Series {
        let mut out: BTreeMap<ExpVec, Cyc12> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            for &v in vars {
                *e2.get_mut(v) = 0;
            }
            let entry = out.entry(e2).or_insert_with(Cyc12::zero);
            *entry += c.clone();
            if entry.is_zero() {
                out.remove(&e2);
            }
        }
        Series {
            terms: out,
            q_low: self.q_low,
            q_cut: self.q_cut,
        }
    }

    /// First differing exponent vector at or below the common cut.
    /// Comparison order is lexicographic on (eq, ex, ey, ew).
    pub fn first_mismatch(&self, rhs: &Series) -> Option<Mismatch> {
        let cut = self.q_cut.min(rhs.q_cut);
        let mut a = self.terms.iter().filter(|(e, _)| e.eq <= cut).peekable();
        let mut b = rhs.terms.iter().filter(|(e, _)| e.eq <= cut).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((e, c)), None) => {
                    return Some(Mismatch {
                        at: **e,
                        lhs: (*c).clone(),
                        rhs: Cyc12::zero(),
                    })
                }
                (None, Some((e, c))) => {
                    return Some(Mismatch {
                        at: **e,
                        lhs: Cyc12::zero(),
                        rhs: (*c).clone(),
                    })
                }
                (Some((ea, ca)), Some((eb, cb))) => {
                    if ea < eb {
                        let m = Mismatch {
                            at: **ea,
                            lhs: (*ca).clone(),
                            rhs: Cyc12::zero(),
                        };
                        return Some(m);
                    } else if eb < ea {
                        let m = Mismatch {
                            at: **eb,
                            lhs: Cyc12::zero(),
                            rhs: (*cb).clone(),
                        };
                        return Some(m);
                    } else if ca != cb {
                        let m = Mismatch {
                            at: **ea,
                            lhs: (*ca).clone(),
                            rhs: (*cb).clone(),
                        };
                        return Some(m);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }

    /// Bit-exact dump: header line, then one sorted line per term.
    pub fn dump(&self) -> String {
        use fmt::Write;
        let mut out = String::new();
        writeln!(out, "qcut={} qlow={}", self.q_cut, self.q_low).unwrap();
        for (e, c) in &self.terms {
            writeln!(out, "{} {} {} {} : {}", e.eq, e.ex, e.ey, e.ew, c).unwrap();
        }
        out
    }

    /// Parse the dump format back; exact inverse of `dump`.
    pub fn parse(text: &str) -> Result<Series, Error> {
        let err = |line: usize, col: usize, msg: String| Error::Parse { line, col, msg };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| err(1, 1, "empty input".into()))?;
        let mut q_cut = None;
        let mut q_low = None;
        for field in header.split_whitespace() {
            if let Some(v) = field.strip_prefix("qcut=") {
                q_cut = Some(v.parse::<i64>().map_err(|_| {
                    err(1, header.find(field).unwrap_or(0) + 1, format!("bad qcut: {v:?}"))
                })?);
            } else if let Some(v) = field.strip_prefix("qlow=") {
                q_low = Some(v.parse::<i64>().map_err(|_| {
                    err(1, header.find(field).unwrap_or(0) + 1, format!("bad qlow: {v:?}"))
                })?);
            } else {
                return Err(err(
                    1,
                    header.find(field).unwrap_or(0) + 1,
                    format!("unexpected header field: {field:?}"),
                ));
            }
        }
        let q_cut = q_cut.ok_or_else(|| err(1, 1, "missing qcut".into()))?;
        let q_low = q_low.ok_or_else(|| err(1, 1, "missing qlow".into()))?;

        let mut terms = BTreeMap::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let (exps, coeff) = line.split_once(" : ").ok_or_else(|| {
                err(lineno, 1, "expected \"<exps> : <coeff>\"".into())
            })?;
            let nums: Vec<&str> = exps.split_whitespace().collect();
            if nums.len() != 4 {
                return Err(err(lineno, 1, format!("expected 4 exponents, got {}", nums.len())));
            }
            let mut vals = [0i64; 4];
            for (i, n) in nums.iter().enumerate() {
                vals[i] = n.parse::<i64>().map_err(|_| {
                    err(lineno, line.find(n).unwrap_or(0) + 1, format!("bad exponent: {n:?}"))
                })?;
            }
            let e = ExpVec::new(vals[0], vals[1], vals[2], vals[3]);
            let c = Cyc12::from_canonical_str(coeff).map_err(|msg| {
                err(lineno, line.find(" : ").unwrap_or(0) + 4, msg)
            })?;
            if c.is_zero() {
                return Err(err(lineno, 1, "explicit zero coefficient".into()));
            }
            if terms.insert(e, c).is_some() {
                return Err(err(lineno, 1, "duplicate exponent vector".into()));
            }
        }
        Ok(Series { terms, q_low, q_cut })
    }

    /// Human-readable rendering, e.g. `1 - 3q^2 + 9q^4 + ...`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono = pretty_monomial(e);
            let (negative, mag) = pretty_coeff(c, &mono);
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&mag);
        }
        out
    }
}

/// Render one term; returns (sign-is-negative, unsigned text).
fn pretty_coeff(c: &Cyc12, mono: &str) -> (bool, String) {
    use num::Signed;
    let (negative, c) = match c.as_rat() {
        Some(r) if r.is_negative() => (true, -c),
        _ => (false, c.clone()),
    };
    let coeff = match c.as_rat() {
        Some(r) if r == &num::BigRational::from_integer(1.into()) && !mono.is_empty() => {
            String::new()
        }
        Some(r) => r.to_string(),
        None => {
            let compact: Vec<String> = c
                .to_string()
                .split(" + ")
                .filter(|p| !p.starts_with("0*") && *p != "0")
                .map(str::to_string)
                .collect();
            format!("({})", compact.join(" + "))
        }
    };
    let text = match (coeff.is_empty(), mono.is_empty()) {
        (true, _) => mono.to_string(),
        (false, true) => coeff,
        (false, false) => format!("{coeff}{mono}"),
    };
    (negative, text)
}

fn pretty_exp(base: &str, e: i64) -> Option<String> {
    if e == 0 {
        return None;
    }
    Some(if e == 12 {
        base.to_string()
    } else if e % 12 == 0 {
        format!("{}^{}", base, e / 12)
    } else {
        let g = num::integer::gcd(e, 12);
        format!("{}^({}/{})", base, e / g, 12 / g)
    })
}

fn pretty_monomial(e: &ExpVec) -> String {
    let mut parts = Vec::new();
    if let Some(p) = pretty_exp("q", e.eq) {
        parts.push(p);
    }
    for v in Var::ALL {
        if let Some(p) = pretty_exp(v.name(), e.get(v)) {
            parts.push(p);
        }
    }
    parts.join("*")
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Series[{} terms, qlow={}, qcut={}]: {}",
            self.terms.len(),
            self.q_low,
            self.q_cut,
            self.pretty()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::rati;

    fn qterm(c: i64, eq: i64) -> (ExpVec, Cyc12) {
        (ExpVec::q(eq), Cyc12::from_int(c))
    }

    fn qs(pairs: &[(i64, i64)], cut: i64) -> Series {
        Series::from_terms(pairs.iter().map(|&(c, e)| qterm(c, e)), cut, None)
    }

    #[test]
    fn add_basics() {
        let a = qs(&[(1, 0), (2, 12)], 120);
        let z = Series::zero(60);
        let sum = a.add(&z);
        assert_eq!(sum.q_cut(), 60);
        assert_eq!(sum.coeff_q(12), Cyc12::from_int(2));
        assert!(a.add(&a.neg()).is_zero());
        let b = qs(&[(3, 12)], 120);
        assert_eq!(a.add(&b), qs(&[(1, 0), (5, 12)], 120));
    }

    #[test]
    fn mul_truncation_rule() {
        // theta3-like truncation: (1+2q+2q^4)^2 cut to q^2 -> 1+4q+4q^2
        let t = qs(&[(1, 0), (2, 12), (2, 48)], 48);
        let prod = t.mul(&t).truncated(24);
        assert_eq!(prod, qs(&[(1, 0), (4, 12), (4, 24)], 24));
        // a * 1 = a
        assert_eq!(t.mul(&Series::one()), t);
        // monomial inverse pair: q^{-1/3} u * q^{1/3} u^{-1} = 1
        let m1 = Series::monomial(Cyc12::from_int(1), ExpVec::new(-4, 12, 0, 0));
        let m2 = Series::monomial(Cyc12::from_int(1), ExpVec::new(4, -12, 0, 0));
        assert_eq!(m1.mul(&m2), Series::one());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = qs(&[(1, 0), (1, 12)], 36);
        assert_eq!(a.pow(1), a);
        assert_eq!(a.pow(3), qs(&[(1, 0), (3, 12), (3, 24), (1, 36)], 36));
        let b = qs(&[(2, -12), (5, 0), (-1, 24)], 48);
        assert_eq!(b.pow(3), b.mul(&b).mul(&b));
    }

    #[test]
    fn div_geometric() {
        // 1/(1-q) to q^3
        let one = Series::one().truncated(36);
        let denom = qs(&[(1, 0), (-1, 12)], 36);
        let d = one.div(&denom).unwrap();
        assert!(d.q_cut() >= 36);
        for k in 0..=3 {
            assert_eq!(d.coeff_q(12 * k), Cyc12::from_int(1));
        }
        // a / a = 1
        let a = qs(&[(2, 0), (3, 12), (7, 24)], 36);
        let r = a.div(&a).unwrap();
        assert_eq!(r.coeff_q(0), Cyc12::from_int(1));
        assert!(r.iter().filter(|(e, _)| e.eq <= r.q_cut()).count() == 1);
    }

    #[test]
    fn div_errors() {
        let a = Series::one();
        assert!(matches!(a.div(&Series::zero(10)), Err(Error::DivisionByZero)));
        // lowest slice with two terms in formal variables
        let b = Series::from_terms(
            [
                (ExpVec::new(0, 12, 0, 0), Cyc12::from_int(1)),
                (ExpVec::new(0, -12, 0, 0), Cyc12::from_int(1)),
            ],
            24,
            None,
        );
        assert!(matches!(a.div(&b), Err(Error::NonMonomialLead)));
    }

    #[test]
    fn div_mul_roundtrip() {
        let a = qs(&[(3, 12), (1, 24), (4, 48)], 72);
        let b = qs(&[(2, 0), (-5, 12), (1, 36)], 72);
        let q = a.div(&b).unwrap();
        let back = q.mul(&b);
        assert!(back.first_mismatch(&a).is_none());
    }

    #[test]
    fn twist_rules() {
        let s = Series::from_terms(
            [(ExpVec::new(0, 12, 0, 0), Cyc12::from_int(1))],
            24,
            None,
        );
        let t = s.phase_twist(Var::X, 4).unwrap();
        assert_eq!(t.coeff(&ExpVec::new(0, 12, 0, 0)), Cyc12::omega());
        // X-exponent 0 terms are untouched by any twist
        let c = qs(&[(5, 12)], 24);
        assert_eq!(c.phase_twist(Var::X, 7).unwrap(), c);
        // omega^{1/3} is not in Q(zeta_12)
        let f = Series::from_terms(
            [(ExpVec::new(0, 4, 0, 0), Cyc12::from_int(1))],
            24,
            None,
        );
        assert!(matches!(
            f.phase_twist(Var::X, 4),
            Err(Error::PhaseOffGrid(_))
        ));
    }

    #[test]
    fn mismatch_reporting() {
        let a = qs(&[(1, 0), (2, 12)], 24);
        assert!(a.first_mismatch(&a).is_none());
        let b = qs(&[(1, 0), (3, 12)], 24);
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!(m.at, ExpVec::q(12));
        assert_eq!(m.lhs, Cyc12::from_int(2));
        assert_eq!(m.rhs, Cyc12::from_int(3));
        // differences above the common cut are invisible
        let c = qs(&[(1, 0), (2, 12), (9, 36)], 36);
        let d = qs(&[(1, 0), (2, 12)], 24);
        assert!(c.first_mismatch(&d).is_none());
    }

    #[test]
    fn dump_parse_examples() {
        let z = Series::zero(36);
        assert_eq!(z.dump(), "qcut=36 qlow=0\n");
        assert_eq!(Series::parse(&z.dump()).unwrap(), z);

        let m = Series::from_terms(
            [(ExpVec::new(4, 4, 4, 0), Cyc12::from_int(3))],
            48,
            None,
        );
        assert_eq!(m.dump(), "qcut=48 qlow=4\n4 4 4 0 : 3 + 0*z + 0*z^2 + 0*z^3\n");
        assert_eq!(Series::parse(&m.dump()).unwrap(), m);

        let bad = "qcut=10 qlow=0\n1 2 3 : 1 + 0*z + 0*z^2 + 0*z^3\n";
        match Series::parse(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn eval_vars_at_one_merges() {
        let s = Series::from_terms(
            [
                (ExpVec::new(12, 12, 0, 0), Cyc12::from_int(2)),
                (ExpVec::new(12, -12, 0, 0), Cyc12::from_int(3)),
            ],
            24,
            None,
        );
        let t = s.eval_vars_at_one(&[Var::X]);
        assert_eq!(t.coeff_q(12), Cyc12::from_int(5));
        assert_eq!(t.num_terms(), 1);
    }

    #[test]
    fn pretty_renders() {
        let s = qs(&[(1, 0), (-3, 24), (9, 48)], 96);
        assert_eq!(s.pretty(), "1 - 3q^2 + 9q^4");
        let m = Series::from_terms(
            [(ExpVec::new(4, 6, 0, 0), Cyc12::from_int(3))],
            48,
            None,
        );
        assert_eq!(m.pretty(), "3q^(1/3)*X^(1/2)");
        assert!(Cyc12::from_rat(rati(0)).is_zero());
    }
}
