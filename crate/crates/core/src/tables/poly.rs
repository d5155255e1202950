use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact integer polynomial in the prime variables p, q, r. Keys are
/// exponent vectors; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TPolynomial {
    terms: BTreeMap<[u8; 3], i64>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        TPolynomial::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(coeff: i64, exps: [u8; 3]) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exps, coeff);
        }
        TPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 3], &i64)> {
        self.terms.iter()
    }

    /// Variables with a nonzero exponent somewhere.
    pub fn variables(&self) -> [bool; 3] {
        let mut used = [false; 3];
        for exps in self.terms.keys() {
            for i in 0..3 {
                used[i] |= exps[i] > 0;
            }
        }
        used
    }

    pub fn eval(&self, assign: [u64; 3]) -> i128 {
        self.terms
            .iter()
            .map(|(exps, &c)| {
                let mut m = c as i128;
                for i in 0..3 {
                    for _ in 0..exps[i] {
                        m *= assign[i] as i128;
                    }
                }
                m
            })
            .sum()
    }

    fn insert(&mut self, exps: [u8; 3], coeff: i64) {
        let entry = self.terms.entry(exps).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exps);
        }
    }

    /// Coefficients of the polynomial viewed as univariate in variable `v`
    /// (index 0..3), lowest degree first. None if another variable appears.
    pub fn univariate_coeffs(&self, v: usize) -> Option<Vec<i64>> {
        let mut coeffs: Vec<i64> = Vec::new();
        for (exps, &c) in &self.terms {
            for (i, &e) in exps.iter().enumerate() {
                if i != v && e > 0 {
                    return None;
                }
            }
            let d = exps[v] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] = c;
        }
        Some(coeffs)
    }

    /// Is `self` a nonzero rational multiple of `other` (same zero set)?
    pub fn proportional_to(&self, other: &TPolynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() == other.is_zero();
        }
        let (k0, &a0) = self.terms.iter().next().unwrap();
        let Some(&b0) = other.terms.get(k0) else { return false };
        // self * b0 == other * a0 term by term
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms.iter().all(|(k, &a)| {
            other
                .terms
                .get(k)
                .is_some_and(|&b| (a as i128) * (b0 as i128) == (b as i128) * (a0 as i128))
        })
    }
}

impl Add for TPolynomial {
    type Output = TPolynomial;
    fn add(mut self, rhs: TPolynomial) -> TPolynomial {
        for (exps, c) in rhs.terms {
            self.insert(exps, c);
        }
        self
    }
}

impl Sub for TPolynomial {
    type Output = TPolynomial;
    fn sub(mut self, rhs: TPolynomial) -> TPolynomial {
        for (exps, c) in rhs.terms {
            self.insert(exps, -c);
        }
        self
    }
}

impl Neg for TPolynomial {
    type Output = TPolynomial;
    fn neg(self) -> TPolynomial {
        TPolynomial { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Mul for TPolynomial {
    type Output = TPolynomial;
    fn mul(self, rhs: TPolynomial) -> TPolynomial {
        let mut out = TPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.insert(exps, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for TPolynomial {
    /// Canonical text form like "14p - 14" or "q^2 - 3q + 2": total degree
    /// descending, then reverse-lexicographic exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&[u8; 3], &i64)> = self.terms.iter().collect();
        entries.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().map(|&e| e as u32).sum();
            let db: u32 = eb.iter().map(|&e| e as u32).sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        for (i, (exps, &c)) in entries.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = exps.iter().all(|&e| e == 0);
            if mag != 1 || is_const {
                write!(f, "{mag}")?;
            }
            for (v, &e) in ["p", "q", "r"].iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Parse a recorded T cell like "14p-14", "q^2-3q+2", "3-11p". Returns None
/// for cells that are not polynomials (e.g. "q=9").
pub fn parse_t_cell(cell: &str) -> Option<TPolynomial> {
    let text: String = cell.trim().trim_end_matches('.').chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return None;
    }
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut out = TPolynomial::zero();
    let mut sign = 1i64;
    let mut first = true;
    while i < bytes.len() {
        match bytes[i] as char {
            '+' => {
                if first {
                    return None;
                }
                sign = 1;
                i += 1;
            }
            '-' => {
                sign = -1;
                i += 1;
            }
            _ => {}
        }
        // term: [coeff][vars]
        let mut coeff: i64 = 1;
        let mut saw_digit = false;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
            saw_digit = true;
        }
        if saw_digit {
            coeff = text[start..i].parse().ok()?;
        }
        let mut exps = [0u8; 3];
        let mut saw_var = false;
        loop {
            let v = match bytes.get(i).map(|&b| b as char) {
                Some('p') => 0usize,
                Some('q') => 1,
                Some('r') => 2,
                _ => break,
            };
            i += 1;
            saw_var = true;
            let mut e = 1u8;
            if bytes.get(i) == Some(&b'^') {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                e = text[es..i].parse().ok()?;
            }
            exps[v] += e;
        }
        if !saw_digit && !saw_var {
            return None;
        }
        out = out + TPolynomial::monomial(sign * coeff, exps);
        sign = 1;
        first = false;
    }
    Some(out)
}
