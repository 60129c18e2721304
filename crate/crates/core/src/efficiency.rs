//! Category cost models and the efficiency order on criteria sets: cost of a
//! set, the more-efficient relation, the binary-criteria condition, coarseness
//! dominance, and Pareto frontier enumeration over discrimination vectors.
//!
//! All cost arithmetic is exact rational; one-category criteria are costless
//! in every model.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::criteria::{CriteriaSet, DiscriminationVector};
use crate::error::{Error, Result};

/// Enumeration bound for budgeted vector searches.
pub const MAX_BUDGET: u64 = 24;

/// Smallest number of binary digits covering `x` values: `ceil(log2 x)`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        (x - 1).ilog2() + 1
    }
}

/// A cost-per-category-count function with `k(1) = 0`.
///
/// The parametric families are consulted only for two or more categories;
/// one-category criteria make no discriminations and are costless regardless
/// of the formula.
#[derive(Clone, Debug, PartialEq)]
pub enum CostModel {
    /// Explicit table from category count to cost.
    Table(BTreeMap<u64, BigRational>),
    /// `k(e) = e^p`.
    Power(u32),
    /// `k(e) = beta * e`.
    Linear(BigRational),
    /// `k(e) = alpha * ceil(log2 e)`.
    CeilLog2(BigRational),
    /// A parsed arithmetic expression over the variable `e`.
    Expr(CostExpr),
}

impl CostModel {
    pub fn table<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        let mut map = BTreeMap::new();
        for (e, cost) in entries {
            if e == 0 {
                return Err(Error::InvalidCategoryCount(0));
            }
            if cost.is_negative() {
                return Err(Error::NegativeCost(e));
            }
            if e == 1 && !cost.is_zero() {
                return Err(Error::NonzeroUnitCost);
            }
            map.insert(e, cost);
        }
        Ok(CostModel::Table(map))
    }

    pub fn power(p: u32) -> Self {
        CostModel::Power(p)
    }

    pub fn linear(beta: BigRational) -> Result<Self> {
        if beta.is_negative() {
            return Err(Error::NegativeCost(2));
        }
        Ok(CostModel::Linear(beta))
    }

    pub fn ceil_log2_scaled(alpha: BigRational) -> Result<Self> {
        if alpha.is_negative() {
            return Err(Error::NegativeCost(2));
        }
        Ok(CostModel::CeilLog2(alpha))
    }

    pub fn expr(src: &str) -> Result<Self> {
        Ok(CostModel::Expr(CostExpr::parse(src)?))
    }

    /// `k(e)`. Always 0 at `e = 1`; errors on `e = 0`, missing table
    /// entries, and negative expression values.
    pub fn cost(&self, e: u64) -> Result<BigRational> {
        if e == 0 {
            return Err(Error::InvalidCategoryCount(0));
        }
        if e == 1 {
            return Ok(BigRational::zero());
        }
        match self {
            CostModel::Table(map) => map.get(&e).cloned().ok_or(Error::MissingTableEntry(e)),
            CostModel::Power(p) => Ok(BigRational::from_integer(BigInt::from(e).pow(*p))),
            CostModel::Linear(beta) => Ok(beta * BigRational::from_integer(BigInt::from(e))),
            CostModel::CeilLog2(alpha) => {
                Ok(alpha * BigRational::from_integer(BigInt::from(ceil_log2(e))))
            }
            CostModel::Expr(expr) => {
                let v = expr.eval(e)?;
                if v.is_negative() {
                    return Err(Error::NegativeCost(e));
                }
                Ok(v)
            }
        }
    }

    /// Marginal costs `m_e = k(e) - k(e-1)` for `e` in `2..=e_max`.
    ///
    /// `k(1) = 0`, so the first increment is `k(2)` itself.
    pub fn marginal_profile(&self, e_max: u64) -> Result<MarginalProfile> {
        if e_max < 2 {
            return Err(Error::BoundTooSmall {
                what: "marginal profile range",
                min: 2,
                got: e_max,
            });
        }
        let mut increments = Vec::with_capacity((e_max - 1) as usize);
        let mut prev = BigRational::zero();
        for e in 2..=e_max {
            let c = self.cost(e)?;
            increments.push(&c - &prev);
            prev = c;
        }
        let increasing = increments.windows(2).all(|w| w[1] >= w[0])
            && increments.iter().all(|m| !m.is_negative());
        let strictly_increasing = increasing && increments.windows(2).all(|w| w[1] > w[0]);
        Ok(MarginalProfile {
            increments,
            increasing,
            strictly_increasing,
        })
    }

    /// Is `k` nondecreasing over `1..=e_max`?
    pub fn is_nondecreasing(&self, e_max: u64) -> Result<bool> {
        Ok(self
            .marginal_profile(e_max)?
            .increments
            .iter()
            .all(|m| !m.is_negative()))
    }
}

/// Marginal costs of categories over a queried range.
#[derive(Clone, Debug, PartialEq)]
pub struct MarginalProfile {
    /// `m_e` for `e` in `2..=e_max`, in order.
    pub increments: Vec<BigRational>,
    /// Nonnegative and nondecreasing increments.
    pub increasing: bool,
    /// Strictly increasing increments.
    pub strictly_increasing: bool,
}

/// A discrimination vector priced under a cost model, with its distinction
/// capacity on a domain of the given size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EfficiencyPoint {
    pub vector: DiscriminationVector,
    pub cost: BigRational,
    pub max_distinctions: u64,
}

impl EfficiencyPoint {
    pub fn new(
        vector: DiscriminationVector,
        model: &CostModel,
        domain_size: u64,
    ) -> Result<Self> {
        let cost = vector_cost(&vector, model)?;
        let max_distinctions = vector.max_distinctions(domain_size);
        Ok(EfficiencyPoint {
            vector,
            cost,
            max_distinctions,
        })
    }
}

/// `sum_i k(e_i)` for a discrimination vector.
pub fn vector_cost(vector: &DiscriminationVector, model: &CostModel) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for &e in vector.entries() {
        total += model.cost(e)?;
    }
    Ok(total)
}

/// `k[C]`: the cost of a criteria set is the sum of its criteria's costs.
pub fn set_cost(cs: &CriteriaSet, model: &CostModel) -> Result<BigRational> {
    vector_cost(&cs.discrimination_vector(), model)
}

/// Outcome of comparing two (distinctions, cost) pairs.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Dominance {
    More,
    Less,
    Equal,
    Incomparable,
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Dominance::More => "MORE",
            Dominance::Less => "LESS",
            Dominance::Equal => "EQUAL",
            Dominance::Incomparable => "INCOMPARABLE",
        };
        f.write_str(s)
    }
}

/// More distinctions at no greater cost, with at least one strict inequality.
pub fn compare_efficiency(
    n_p: u64,
    cost_p: &BigRational,
    n_q: u64,
    cost_q: &BigRational,
) -> Dominance {
    if n_p == n_q && cost_p == cost_q {
        Dominance::Equal
    } else if n_p >= n_q && cost_p <= cost_q {
        Dominance::More
    } else if n_q >= n_p && cost_q <= cost_p {
        Dominance::Less
    } else {
        Dominance::Incomparable
    }
}

/// [`compare_efficiency`] on two efficiency points, using maximal
/// discrimination capacity as the distinction count.
pub fn more_efficient(p: &EfficiencyPoint, q: &EfficiencyPoint) -> Dominance {
    compare_efficiency(p.max_distinctions, &p.cost, q.max_distinctions, &q.cost)
}

/// One row of the binary-criteria condition check.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryConditionRow {
    pub e: u64,
    pub cost: BigRational,
    pub bound: BigRational,
    pub holds: bool,
}

/// Per-`e` report of `k(e) > k(2) * ceil(log2 e)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryConditionReport {
    pub rows: Vec<BinaryConditionRow>,
    pub holds: bool,
}

impl BinaryConditionReport {
    /// Smallest `e` at which the condition fails, if any.
    pub fn first_failure(&self) -> Option<u64> {
        self.rows.iter().find(|r| !r.holds).map(|r| r.e)
    }
}

/// Check `k(e) > k(2) * ceil(log2 e)` for every integer `e` in `3..=e_max`.
pub fn binary_condition(model: &CostModel, e_max: u64) -> Result<BinaryConditionReport> {
    if e_max < 3 {
        return Err(Error::BoundTooSmall {
            what: "binary condition range",
            min: 3,
            got: e_max,
        });
    }
    let base = model.cost(2)?;
    let mut rows = Vec::with_capacity((e_max - 2) as usize);
    for e in 3..=e_max {
        let cost = model.cost(e)?;
        let bound = &base * BigRational::from_integer(BigInt::from(ceil_log2(e)));
        let holds = cost > bound;
        rows.push(BinaryConditionRow {
            e,
            cost,
            bound,
            holds,
        });
    }
    let holds = rows.iter().all(|r| r.holds);
    Ok(BinaryConditionReport { rows, holds })
}

/// First-order dominance of `v`'s category-count distribution toward
/// coarseness: at every threshold `t >= 2` the fraction of `v`'s entries
/// `<= t` is at least `w`'s, with strict inequality somewhere.
///
/// One-category entries are stripped first; both vectors must retain at
/// least one costly entry.
pub fn coarseness_dominates(
    v: &DiscriminationVector,
    w: &DiscriminationVector,
) -> Result<bool> {
    let ve = v.costly_entries();
    let we = w.costly_entries();
    if ve.is_empty() || we.is_empty() {
        return Err(Error::EmptyVector);
    }
    let t_max = *ve.last().unwrap().max(we.last().unwrap());
    let mut strict = false;
    for t in 2..=t_max {
        // fraction comparison via cross multiplication
        let cv = ve.iter().filter(|&&e| e <= t).count() as u128 * we.len() as u128;
        let cw = we.iter().filter(|&&e| e <= t).count() as u128 * ve.len() as u128;
        if cv < cw {
            return Ok(false);
        }
        if cv > cw {
            strict = true;
        }
    }
    Ok(strict)
}

/// Outcome of a single coarser-vs-finer verification.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        };
        f.write_str(s)
    }
}

/// Which marginal-cost assumption applied.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MarginalVariant {
    /// Increasing marginals, and the smaller distinction count is below the
    /// domain size.
    Increasing,
    /// Strictly increasing marginals.
    StrictlyIncreasing,
}

/// Full record of a coarser-more-efficient verification.
#[derive(Clone, Debug)]
pub struct CoarsenessVerdict {
    pub v_point: EfficiencyPoint,
    pub w_point: EfficiencyPoint,
    pub v_budget: u64,
    pub w_budget: u64,
    pub dominates: bool,
    pub profile: MarginalProfile,
    pub variant: Option<MarginalVariant>,
    pub comparison: Dominance,
    pub reasons: Vec<String>,
    pub verdict: Verdict,
}

/// Verify that a coarser vector is more efficient than a finer one at equal
/// costly-category budget, under maximal discrimination.
///
/// Preconditions (equal budgets, coarseness dominance, and an increasing or
/// strictly increasing marginal profile) are reported as `NotApplicable`
/// when violated, never as failure.
pub fn verify_coarser_more_efficient(
    v: &DiscriminationVector,
    w: &DiscriminationVector,
    model: &CostModel,
    domain_size: u64,
) -> Result<CoarsenessVerdict> {
    if domain_size == 0 {
        return Err(Error::BoundTooSmall {
            what: "domain size",
            min: 1,
            got: 0,
        });
    }
    let v_point = EfficiencyPoint::new(v.clone(), model, domain_size)?;
    let w_point = EfficiencyPoint::new(w.clone(), model, domain_size)?;
    let v_budget = v.costly_categories();
    let w_budget = w.costly_categories();
    let mut reasons = Vec::new();
    if v_budget != w_budget {
        reasons.push(format!(
            "costly-category budgets differ: {v_budget} vs {w_budget}"
        ));
    }
    let dominates = match coarseness_dominates(v, w) {
        Ok(d) => {
            if !d {
                reasons.push("coarseness dominance does not hold".to_string());
            }
            d
        }
        Err(_) => {
            reasons.push("a vector has no costly entries".to_string());
            false
        }
    };
    let e_max = v
        .entries()
        .iter()
        .chain(w.entries())
        .copied()
        .max()
        .unwrap()
        .max(2);
    let profile = model.marginal_profile(e_max)?;
    let variant = if profile.strictly_increasing {
        Some(MarginalVariant::StrictlyIncreasing)
    } else if profile.increasing
        && v_point.max_distinctions.min(w_point.max_distinctions) < domain_size
    {
        Some(MarginalVariant::Increasing)
    } else {
        if !profile.increasing {
            reasons.push("marginal costs are not increasing".to_string());
        } else {
            reasons.push(format!(
                "marginals only weakly increasing and min(n, n') = {} is not below the domain size {}",
                v_point.max_distinctions.min(w_point.max_distinctions),
                domain_size
            ));
        }
        None
    };
    let comparison = more_efficient(&v_point, &w_point);
    let verdict = if !reasons.is_empty() {
        Verdict::NotApplicable
    } else if comparison == Dominance::More {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CoarsenessVerdict {
        v_point,
        w_point,
        v_budget,
        w_budget,
        dominates,
        profile,
        variant,
        comparison,
        reasons,
        verdict,
    })
}

/// All discrimination vectors with entries `>= 2` and costly-category budget
/// `sum (e_i - 1) <= budget_max`, as ascending-sorted multisets.
pub fn enumerate_vectors(budget_max: u64) -> Result<Vec<DiscriminationVector>> {
    if budget_max == 0 {
        return Err(Error::BoundTooSmall {
            what: "budget",
            min: 1,
            got: 0,
        });
    }
    if budget_max > MAX_BUDGET {
        return Err(Error::BudgetOutOfRange {
            budget: budget_max,
            max: MAX_BUDGET,
        });
    }
    let mut out = Vec::new();
    let mut acc: Vec<u64> = Vec::new();
    fn rec(remaining: u64, min_part: u64, acc: &mut Vec<u64>, out: &mut Vec<DiscriminationVector>) {
        if !acc.is_empty() {
            out.push(DiscriminationVector::new(acc.clone()).expect("entries >= 2"));
        }
        let mut part = min_part;
        while part <= remaining {
            acc.push(part + 1);
            rec(remaining - part, part, acc, out);
            acc.pop();
            part += 1;
        }
    }
    rec(budget_max, 1, &mut acc, &mut out);
    Ok(out)
}

/// Pareto frontier of budgeted discrimination vectors under a cost model:
/// every enumerated vector not MORE-dominated by another.
///
/// Output is ordered by cost, then distinction capacity, then vector.
pub fn frontier(
    model: &CostModel,
    domain_size: u64,
    budget_max: u64,
) -> Result<Vec<EfficiencyPoint>> {
    let mut points = enumerate_vectors(budget_max)?
        .into_iter()
        .map(|v| EfficiencyPoint::new(v, model, domain_size))
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(|a, b| {
        a.cost
            .cmp(&b.cost)
            .then(a.max_distinctions.cmp(&b.max_distinctions))
            .then(a.vector.cmp(&b.vector))
    });
    // Single pass over cost groups: a point is dominated iff a strictly
    // cheaper point reaches at least its capacity, or an equal-cost point
    // reaches strictly more.
    let mut keep: Vec<EfficiencyPoint> = Vec::new();
    let mut best_prev: Option<u64> = None; // best capacity among strictly cheaper
    let mut i = 0;
    while i < points.len() {
        let mut j = i;
        while j < points.len() && points[j].cost == points[i].cost {
            j += 1;
        }
        let group_best = points[i..j]
            .iter()
            .map(|p| p.max_distinctions)
            .max()
            .unwrap();
        for p in &points[i..j] {
            let dominated = best_prev.is_some_and(|b| b >= p.max_distinctions)
                || p.max_distinctions < group_best;
            if !dominated {
                keep.push(p.clone());
            }
        }
        best_prev = Some(best_prev.map_or(group_best, |b| b.max(group_best)));
        i = j;
    }
    Ok(keep)
}

/// An exact arithmetic expression over the variable `e`.
#[derive(Clone, Debug, PartialEq)]
pub enum CostExpr {
    Var,
    Const(BigRational),
    Add(Box<CostExpr>, Box<CostExpr>),
    Sub(Box<CostExpr>, Box<CostExpr>),
    Mul(Box<CostExpr>, Box<CostExpr>),
    Div(Box<CostExpr>, Box<CostExpr>),
    Pow(Box<CostExpr>, u32),
    Neg(Box<CostExpr>),
}

impl CostExpr {
    /// Parse `+ - * / ^` arithmetic over decimals and the variable `e`.
    pub fn parse(src: &str) -> Result<Self> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens, pos: 0 };
        let expr = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::ExprParse(format!(
                "unexpected trailing input at token {}",
                p.pos
            )));
        }
        Ok(expr)
    }

    pub fn eval(&self, e: u64) -> Result<BigRational> {
        match self {
            CostExpr::Var => Ok(BigRational::from_integer(BigInt::from(e))),
            CostExpr::Const(c) => Ok(c.clone()),
            CostExpr::Add(a, b) => Ok(a.eval(e)? + b.eval(e)?),
            CostExpr::Sub(a, b) => Ok(a.eval(e)? - b.eval(e)?),
            CostExpr::Mul(a, b) => Ok(a.eval(e)? * b.eval(e)?),
            CostExpr::Div(a, b) => {
                let d = b.eval(e)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(a.eval(e)? / d)
            }
            CostExpr::Pow(a, p) => {
                let base = a.eval(e)?;
                let mut acc = BigRational::one();
                for _ in 0..*p {
                    acc *= &base;
                }
                Ok(acc)
            }
            CostExpr::Neg(a) => Ok(-a.eval(e)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigRational),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            'e' => {
                tokens.push(Token::Var);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                tokens.push(Token::Num(parse_decimal(&src[start..i])?));
            }
            other => {
                return Err(Error::ExprParse(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(tokens)
}

/// Exact rational value of a decimal literal like `4` or `0.25`.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::ExprParse(format!("malformed number {s:?}"));
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if frac_part.contains('.') {
        return Err(bad());
    }
    let digits: String = [int_part, frac_part].concat();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(numer, denom))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<CostExpr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = CostExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = CostExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<CostExpr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = CostExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = CostExpr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<CostExpr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(n)) if n.is_integer() && !n.is_negative() => {
                    self.pos += 1;
                    let p: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::ExprParse("exponent too large".into()))?;
                    return Ok(CostExpr::Pow(Box::new(base), p));
                }
                _ => {
                    return Err(Error::ExprParse(
                        "exponent must be a nonnegative integer literal".into(),
                    ))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CostExpr> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(CostExpr::Const(n))
            }
            Some(Token::Var) => {
                self.pos += 1;
                Ok(CostExpr::Var)
            }
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(CostExpr::Neg(Box::new(self.atom()?)))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !matches!(self.peek(), Some(Token::RParen)) {
                    return Err(Error::ExprParse("expected closing parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::ExprParse(format!("unexpected token {other:?}"))),
        }
    }
}
