use std::collections::{BTreeSet, HashSet};

use crate::polynomial::{Monomial, Polynomial};
use crate::scalar::ExactField;

/// The monomial order used for every Gröbner computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic with `x1 > x2 > ... > xn`.
    #[default]
    DegRevLex,
}

/// A reduced Gröbner basis with monic generators, sorted by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<C: ExactField> {
    nvars: usize,
    generators: Vec<Polynomial<C>>,
    order: MonomialOrder,
}

/// Buchberger's algorithm: the reduced Gröbner basis of the ideal spanned by
/// `generators`.
pub fn buchberger<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    order: MonomialOrder,
) -> GroebnerBasis<C> {
    let MonomialOrder::DegRevLex = order;
    Builder::new(nvars, None).run(generators)
}

impl<C: ExactField> GroebnerBasis<C> {
    pub fn compute(nvars: usize, generators: &[Polynomial<C>]) -> Self {
        buchberger(nvars, generators, MonomialOrder::DegRevLex)
    }

    /// Reduced Gröbner basis of `I + m^bound`, where `m = <x1, ..., xn>`.
    ///
    /// The power of the maximal ideal is never expanded during the
    /// computation: every term of degree `>= bound` is discarded on sight and
    /// the S-pairs against the monomial generators of `m^bound` are replaced
    /// by the minimal multiples `t * g` with `deg(t * lm(g)) = bound`. The
    /// surviving degree-`bound` monomials are added to the final basis.
    pub fn compute_truncated(nvars: usize, generators: &[Polynomial<C>], bound: u32) -> Self {
        assert!(bound >= 1, "truncation bound must be positive");
        Builder::new(nvars, Some(bound)).run(generators)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.generators.iter().filter_map(Polynomial::leading_monomial)
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading_monomials().any(Monomial::is_one)
    }

    /// Remainder of multivariate division by the basis.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        assert_eq!(p.nvars(), self.nvars, "dimension mismatch");
        reduce_full(p.clone(), &self.generators, None)
    }

    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        self.normal_form(p).is_zero()
    }

    fn in_leading_ideal(&self, m: &Monomial) -> bool {
        self.leading_monomials().any(|lm| lm.divides(m))
    }

    /// Whether the quotient ring is finite-dimensional, i.e. every variable
    /// has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.leading_monomials().any(|lm| {
                lm.exponents().iter().enumerate().all(|(j, &e)| if j == i { true } else { e == 0 })
            })
        })
    }

    /// The monomials outside the leading-term ideal, or `None` when there
    /// are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars];
        self.collect_standard(0, &mut exps, &mut out);
        Some(out)
    }

    fn collect_standard(&self, pos: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == self.nvars {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        let mut e = 0;
        loop {
            exps[pos] = e;
            // later coordinates are still zero, so this tests the prefix
            if self.in_leading_ideal(&Monomial::new(exps.clone())) {
                break;
            }
            self.collect_standard(pos + 1, exps, out);
            e += 1;
        }
        exps[pos] = 0;
    }

    /// Vector-space dimension of the quotient ring, `None` when infinite.
    pub fn quotient_dim(&self) -> Option<usize> {
        self.standard_monomials().map(|s| s.len())
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.generators;
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                let s = s_polynomial(&g[i], &g[j]);
                if !reduce_full(s, g, None).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// No term of any generator is divisible by the leading monomial of
    /// another generator, and all generators are monic.
    pub fn is_reduced(&self) -> bool {
        let g = &self.generators;
        g.iter().enumerate().all(|(i, gi)| {
            gi.leading_coefficient().is_some_and(|c| c.is_one())
                && g.iter().enumerate().all(|(j, gj)| {
                    i == j || {
                        let lm = gj.leading_monomial().expect("nonzero generator");
                        gi.terms().all(|(m, _)| !lm.divides(m))
                    }
                })
        })
    }
}

fn s_polynomial<C: ExactField>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let mut s = Polynomial::zero(f.nvars());
    s.add_scaled_shifted(&fc.inv(), &fm.quotient_of(&lcm).unwrap(), f);
    s.add_scaled_shifted(&(-gc.inv()), &gm.quotient_of(&lcm).unwrap(), g);
    s
}

/// Full reduction of `p` by monic-or-not divisors; terms of degree `>= bound`
/// are dropped when a bound is given.
fn reduce_full<C: ExactField>(
    mut p: Polynomial<C>,
    divisors: &[Polynomial<C>],
    bound: Option<u32>,
) -> Polynomial<C> {
    let mut remainder = Polynomial::zero(p.nvars());
    while let Some((m, c)) = p.pop_leading() {
        if bound.is_some_and(|b| m.degree() >= b) {
            continue;
        }
        let divisor = divisors.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            lm.quotient_of(&m).map(|q| (g, q, lc))
        });
        match divisor {
            Some((g, q, lc)) => {
                let factor = -(c / lc.clone());
                for (gm, gc) in g.terms().rev().skip(1) {
                    let shifted = gm.mul(&q);
                    if bound.is_some_and(|b| shifted.degree() >= b) {
                        continue;
                    }
                    p.add_term(shifted, factor.clone() * gc.clone());
                }
            }
            None => remainder.add_term(m, c),
        }
    }
    remainder
}

struct Builder<C: ExactField> {
    nvars: usize,
    bound: Option<u32>,
    basis: Vec<Polynomial<C>>,
    pairs: BTreeSet<(Monomial, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl<C: ExactField> Builder<C> {
    fn new(nvars: usize, bound: Option<u32>) -> Self {
        Self {
            nvars,
            bound,
            basis: Vec::new(),
            pairs: BTreeSet::new(),
            pending: HashSet::new(),
        }
    }

    fn run(mut self, generators: &[Polynomial<C>]) -> GroebnerBasis<C> {
        let mut queue: Vec<Polynomial<C>> = Vec::new();
        for g in generators {
            assert_eq!(g.nvars(), self.nvars, "generator dimension mismatch");
            queue.push(g.clone());
        }
        // lower-degree inputs first keeps the intermediate basis small
        queue.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        while let Some(g) = queue.pop() {
            self.insert(g, &mut queue);
        }
        loop {
            while let Some(p) = queue.pop() {
                self.insert(p, &mut queue);
            }
            let Some((lcm, i, j)) = self.pairs.pop_first() else { break };
            self.pending.remove(&(i, j));
            if self.chain_criterion(&lcm, i, j) {
                continue;
            }
            let s = s_polynomial(&self.basis[i], &self.basis[j]);
            self.insert(s, &mut queue);
        }
        self.finish()
    }

    fn insert(&mut self, p: Polynomial<C>, queue: &mut Vec<Polynomial<C>>) {
        let r = reduce_full(p, &self.basis, self.bound);
        if r.is_zero() {
            return;
        }
        let g = r.monic();
        let lm = g.leading_monomial().unwrap().clone();
        let idx = self.basis.len();
        if let Some(bound) = self.bound {
            if !g.is_homogeneous() {
                // S-pairs against the generators of m^bound
                let shift_degree = bound - lm.degree();
                let low = g.truncate_below(lm.degree());
                for t in Monomial::all_of_degree(self.nvars, shift_degree) {
                    let mut multiple = Polynomial::zero(self.nvars);
                    multiple.add_scaled_shifted(&C::one(), &t, &low);
                    let multiple = multiple.truncate_below(bound);
                    if !multiple.is_zero() {
                        queue.push(multiple);
                    }
                }
            }
        }
        for (j, h) in self.basis.iter().enumerate() {
            let Some(hm) = h.leading_monomial() else { continue };
            if hm.is_coprime(&lm) {
                continue;
            }
            let lcm = hm.lcm(&lm);
            if self.bound.is_some_and(|b| lcm.degree() >= b) {
                continue;
            }
            self.pairs.insert((lcm, j, idx));
            self.pending.insert((j, idx));
        }
        self.basis.push(g);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Buchberger's second criterion.
    fn chain_criterion(&self, lcm: &Monomial, i: usize, j: usize) -> bool {
        self.basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.leading_monomial().is_some_and(|m| m.divides(lcm))
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    fn finish(self) -> GroebnerBasis<C> {
        let Builder { nvars, bound, basis, .. } = self;
        // minimalize: drop generators whose leading monomial is divisible by
        // another one (ties broken by position)
        let mut minimal: Vec<Polynomial<C>> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let lm = g.leading_monomial().unwrap();
            let redundant = basis.iter().enumerate().any(|(j, h)| {
                let hm = h.leading_monomial().unwrap();
                j != i && hm.divides(lm) && (hm != lm || j < i)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        if let Some(b) = bound {
            for m in Monomial::all_of_degree(nvars, b) {
                if !minimal.iter().any(|g| g.leading_monomial().unwrap().divides(&m)) {
                    minimal.push(Polynomial::monomial(m, C::one()));
                }
            }
        }
        // interreduce tails
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let (lm, _) = minimal[i].leading_term().unwrap();
            let others: Vec<Polynomial<C>> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let mut tail = minimal[i].clone();
            tail.pop_leading();
            let mut g = reduce_full(tail, &others, None);
            g.add_term(lm.clone(), C::one());
            reduced.push(g);
        }
        reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
        GroebnerBasis {
            nvars,
            generators: reduced,
            order: MonomialOrder::DegRevLex,
        }
    }
}
