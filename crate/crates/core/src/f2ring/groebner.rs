//! Buchberger completion for homogeneous ideals over F2.

use super::poly::{F2Element, Monomial};
use super::F2Error;

/// Full reduction of `e` by `basis` (whose leading terms are used as rewrite rules).
pub fn reduce(e: &F2Element, basis: &[F2Element]) -> F2Element {
    let mut work = e.clone();
    let mut done = F2Element::zero();
    while let Some(lead) = work.pop_leading() {
        match basis.iter().find(|g| g.leading().is_some_and(|l| l.divides(&lead))) {
            Some(g) => {
                let l = g.leading().expect("nonzero");
                let q = l.quotient_of(&lead);
                // lead + q * g: the leading terms cancel, add the tail.
                for t in g.terms().rev().skip(1) {
                    work.toggle(t.mul(&q));
                }
            }
            None => done.toggle(lead),
        }
    }
    done
}

/// Completes `relations` to a reduced Gröbner basis. Fails when a critical
/// pair above `bound` would still have to be examined.
pub fn complete(relations: &[F2Element], weights: &[u32], bound: u32) -> Result<Vec<F2Element>, F2Error> {
    let mut basis: Vec<F2Element> = Vec::new();
    for r in relations {
        let r = reduce(r, &basis);
        if !r.is_zero() {
            basis.push(r);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    loop {
        // Process the pair of smallest degree first.
        let Some(k) = (0..pairs.len()).min_by_key(|&k| pair_lcm(&basis, pairs[k], weights).degree()) else {
            break;
        };
        let (i, j) = pairs.swap_remove(k);
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj, weights);
        if l.degree() > bound {
            return Err(F2Error::NonConfluentPresentation(format!(
                "completion needs degree {} beyond the bound {bound}",
                l.degree()
            )));
        }
        let mut s = basis[i].mul_monomial(&li.quotient_of(&l));
        s.add_assign(&basis[j].mul_monomial(&lj.quotient_of(&l)));
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            let n = basis.len();
            basis.push(r);
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    Ok(interreduce(basis))
}

fn lead(e: &F2Element) -> &Monomial {
    e.leading().expect("basis elements are nonzero")
}

fn pair_lcm(basis: &[F2Element], (i, j): (usize, usize), weights: &[u32]) -> Monomial {
    lead(&basis[i]).lcm(lead(&basis[j]), weights)
}

fn interreduce(mut basis: Vec<F2Element>) -> Vec<F2Element> {
    // Drop elements whose leading term is divisible by another's.
    basis.sort_by(|a, b| lead(a).cmp(lead(b)));
    let mut minimal: Vec<F2Element> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| lead(h).divides(lead(&g))) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let g = &minimal[k];
        let others: Vec<F2Element> =
            minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, h)| h.clone()).collect();
        let mut tail = g.clone();
        let l = tail.pop_leading().expect("nonzero");
        let mut reduced = reduce(&tail, &others);
        reduced.toggle(l);
        out.push(reduced);
    }
    out
}
