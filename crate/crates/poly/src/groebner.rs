use crate::error::PolyError;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::MultiPoly;

/// Default bound on reduction steps for [`buchberger`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Work counters collected during a Buchberger run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    /// Critical pairs created.
    pub pairs_created: u64,
    /// Pairs discarded by the product and chain criteria.
    pub pairs_pruned: u64,
    /// S-polynomials actually reduced.
    pub pairs_reduced: u64,
    /// S-polynomials that reduced to zero.
    pub zero_reductions: u64,
    /// Single cancellation steps performed, the unit charged against the budget.
    pub reduction_steps: u64,
}

/// Reduced Groebner basis: monic, minimal, fully interreduced, sorted by
/// decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<MultiPoly>,
    stats: GroebnerStats,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn stats(&self) -> &GroebnerStats {
        &self.stats
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Whether the ideal is the whole ring, i.e. the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_unit()
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        normal_form(&p.with_order(self.order), &self.polys)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Full reduction of `p` modulo `divisors`, trying divisors in list order.
pub fn normal_form(p: &MultiPoly, divisors: &[MultiPoly]) -> MultiPoly {
    let refs: Vec<&MultiPoly> = divisors.iter().collect();
    let mut steps = 0;
    reduce(p, &refs, &mut steps, u64::MAX).expect("unbounded budget")
}

fn reduce(p: &MultiPoly, divisors: &[&MultiPoly], steps: &mut u64, budget: u64) -> Option<MultiPoly> {
    let mut rest = p.clone();
    let mut rem = MultiPoly::zero(p.nvars(), p.order());
    while let Some(lm) = rest.leading_monomial() {
        let hit = divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(lm)));
        match hit {
            Some(g) => {
                *steps += 1;
                if *steps > budget {
                    return None;
                }
                let gm = g.leading_monomial().expect("nonzero divisor");
                let k = -(rest.leading_coefficient().expect("nonzero") / g.leading_coefficient().expect("nonzero"));
                let shift = lm.div(gm);
                rest = rest.combine(g, &k, &shift);
            }
            None => rem.push_smallest(rest.drop_leading()),
        }
    }
    Some(rem)
}

pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, gm) = (f.leading_monomial().expect("nonzero f"), g.leading_monomial().expect("nonzero g"));
    let l = fm.lcm(gm);
    let zero = MultiPoly::zero(f.nvars(), f.order());
    let fc = f.leading_coefficient().expect("nonzero f").recip().expect("nonzero");
    let gc = -g.leading_coefficient().expect("nonzero g").recip().expect("nonzero");
    zero.combine(f, &fc, &l.div(fm)).combine(g, &gc, &l.div(gm))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<MultiPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GroebnerStats,
}

impl Engine {
    fn lm(&self, k: usize) -> &Monomial {
        self.polys[k].leading_monomial().expect("basis elements are nonzero")
    }

    /// Gebauer-Moeller installation of a new basis element.
    fn update(&mut self, h: usize) {
        let lh = self.lm(h).clone();
        let cands: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, lh.lcm(self.lm(g)))).collect();
        self.stats.pairs_created += cands.len() as u64;
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(*g));
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let before = self.pairs.len();
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let l1 = lh.lcm(self.lm(p.i));
            let l2 = lh.lcm(self.lm(p.j));
            if !(lh.divides(&p.lcm) && l1 != p.lcm && l2 != p.lcm) {
                self.pairs.push(p);
            }
        }
        let mut pruned = (before - self.pairs.len()) as u64 + (cands.len() - kept.len()) as u64;
        for (g, l) in kept {
            if lh.is_coprime(self.lm(g)) {
                pruned += 1;
            } else {
                self.pairs.push(Pair { i: g.min(h), j: g.max(h), lcm: l });
            }
        }
        self.stats.pairs_pruned += pruned;
        let active = std::mem::take(&mut self.active);
        self.active = active.into_iter().filter(|&g| !lh.divides(self.lm(g))).collect();
        self.active.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order.compare(&pa.lcm, &pb.lcm).then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn reduce_active(&mut self, p: &MultiPoly, budget: u64) -> Result<MultiPoly, PolyError> {
        let divisors: Vec<&MultiPoly> = self.active.iter().map(|&k| &self.polys[k]).collect();
        reduce(p, &divisors, &mut self.stats.reduction_steps, budget)
            .ok_or_else(|| PolyError::BudgetExceeded { steps: self.stats.reduction_steps })
    }

    fn add(&mut self, h: MultiPoly) {
        self.polys.push(h.monic());
        self.update(self.polys.len() - 1);
    }
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties broken by pair indices) and Gebauer-Moeller pair pruning.
///
/// Fails with [`PolyError::BudgetExceeded`] once more than `budget`
/// reduction steps have been spent.
pub fn buchberger(gens: &[MultiPoly], budget: u64) -> Result<GroebnerBasis, PolyError> {
    let Some(first) = gens.first() else {
        return Err(PolyError::EmptyGenerators);
    };
    let (nvars, order) = (first.nvars(), first.order());
    if gens.iter().any(|g| g.nvars() != nvars || g.order() != order) {
        return Err(PolyError::RingMismatch);
    }
    let mut e = Engine { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new(), stats: GroebnerStats::default() };
    for g in gens {
        let h = e.reduce_active(g, budget)?;
        if !h.is_zero() {
            e.add(h);
        }
    }
    while let Some(pair) = e.select() {
        let s = s_polynomial(&e.polys[pair.i], &e.polys[pair.j]);
        e.stats.pairs_reduced += 1;
        let h = e.reduce_active(&s, budget)?;
        if h.is_zero() {
            e.stats.zero_reductions += 1;
        } else {
            e.add(h);
        }
    }
    let minimal: Vec<MultiPoly> = e.active.iter().map(|&k| e.polys[k].clone()).collect();
    let mut polys = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&MultiPoly> =
            minimal.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, p)| p).collect();
        let r = reduce(g, &others, &mut e.stats.reduction_steps, budget)
            .ok_or(PolyError::BudgetExceeded { steps: e.stats.reduction_steps })?;
        polys.push(r.monic());
    }
    polys.sort_by(|a, b| {
        let (am, bm) = (a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero"));
        order.compare(bm, am)
    });
    Ok(GroebnerBasis { nvars, order, polys, stats: e.stats })
}

/// Checks the Buchberger criterion: every S-polynomial of `basis` reduces to
/// zero modulo `basis`.
pub fn is_groebner_basis(basis: &[MultiPoly]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}
