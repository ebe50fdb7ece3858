use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::{counter_assignment, Assignment, FiniteAlgebra, Inequality, Variety};
use crate::syntax::HasVars;

/// An algebra of the variety together with an assignment refuting a sequent.
#[derive(Clone, Debug)]
pub struct CounterWitness {
    pub algebra: FiniteAlgebra,
    pub assignment: Assignment,
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Relabelings of `0..n` fixing the bottom `0` and the top `n - 1`.
fn relabelings(n: usize) -> Vec<Vec<usize>> {
    let middle: Vec<usize> = (1..n.saturating_sub(1)).collect();
    permutations(&middle)
        .into_iter()
        .map(|p| {
            let mut full = vec![0];
            full.extend(p);
            if n > 1 {
                full.push(n - 1);
            }
            full
        })
        .collect()
}

type Key = (Vec<bool>, Vec<usize>);

fn key_under(leq: &[Vec<bool>], neg: &[usize], pi: &[usize]) -> Key {
    let n = leq.len();
    let mut inv = vec![0; n];
    for (x, &y) in pi.iter().enumerate() {
        inv[y] = x;
    }
    let order = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| leq[inv[a]][inv[b]]).collect();
    let negs = (0..n).map(|a| pi[neg[inv[a]]]).collect();
    (order, negs)
}

fn canonical(leq: &[Vec<bool>], neg: &[usize], perms: &[Vec<usize>]) -> Key {
    perms.iter().map(|pi| key_under(leq, neg, pi)).min().expect("identity relabeling")
}

fn order_of(alg: &FiniteAlgebra) -> Vec<Vec<bool>> {
    (0..alg.size).map(|a| (0..alg.size).map(|b| alg.leq(a, b)).collect()).collect()
}

impl FiniteAlgebra {
    /// Whether the two algebras differ only by a relabeling of their elements.
    pub fn isomorphic(&self, other: &FiniteAlgebra) -> bool {
        if self.size != other.size {
            return false;
        }
        let relabel = |a: &FiniteAlgebra| {
            // move bottom to 0 and top to n-1
            let mut pi: Vec<usize> = vec![usize::MAX; a.size];
            pi[a.zero] = 0;
            pi[a.one] = a.size - 1;
            let mut next = 1;
            for (x, slot) in pi.iter_mut().enumerate() {
                if x != a.zero && x != a.one {
                    *slot = next;
                    next += 1;
                }
            }
            key_under(&order_of(a), &a.neg, &pi)
        };
        let unflatten = |(order, neg): Key| {
            let n = neg.len();
            let leq: Vec<Vec<bool>> = order.chunks(n).map(|c| c.to_vec()).collect();
            (leq, neg)
        };
        let perms = relabelings(self.size);
        let (l1, n1) = unflatten(relabel(self));
        let (l2, n2) = unflatten(relabel(other));
        canonical(&l1, &n1, &perms) == canonical(&l2, &n2, &perms)
    }
}

/// Bounded distributive lattices with exactly `n` elements, bottom `0` and top
/// `n - 1`, one per isomorphism class, as order matrices.
pub fn enumerate_lattices(n: usize) -> Vec<Vec<Vec<bool>>> {
    if n < 2 {
        return Vec::new();
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
    let perms = relabelings(n);
    let total = 3usize.pow(pairs.len() as u32);
    let mut seen: BTreeMap<Key, Vec<Vec<bool>>> = BTreeMap::new();
    for code in 0..total {
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            leq[a][a] = true;
            leq[0][a] = true;
            leq[a][n - 1] = true;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => leq[i][j] = true,
                2 => leq[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !leq[a][b] || (0..n).all(|c| !leq[b][c] || leq[a][c])));
        if !transitive {
            continue;
        }
        let probe = vec![0; n];
        let ok = FiniteAlgebra::from_order(&leq, probe).map(|a| a.check_lattice().is_ok()).unwrap_or(false);
        if ok {
            seen.entry(canonical(&leq, &vec![0; n], &perms)).or_insert(leq);
        }
    }
    seen.into_values().collect()
}

fn algebras_of_size(variety: Variety, n: usize) -> Vec<FiniteAlgebra> {
    let perms = relabelings(n);
    let m = n - 2;
    let mut found: Vec<(Key, FiniteAlgebra)> = enumerate_lattices(n)
        .into_par_iter()
        .flat_map_iter(|leq| {
            let perms = &perms;
            (0..n.pow(m as u32)).filter_map(move |mut code| {
                let mut neg = vec![0; n];
                neg[0] = n - 1;
                neg[n - 1] = 0;
                for slot in neg.iter_mut().take(n - 1).skip(1) {
                    *slot = code % n;
                    code /= n;
                }
                let alg = FiniteAlgebra::from_order(&leq, neg).ok()?;
                alg.satisfies(variety).then(|| (canonical(&leq, &alg.neg, perms), alg))
            })
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    found.into_iter().map(|(_, a)| a).collect()
}

/// All algebras of `variety` with 2 to `max_size` elements, up to isomorphism,
/// ordered by size.
pub fn enumerate_algebras(variety: Variety, max_size: usize) -> Vec<FiniteAlgebra> {
    (2..=max_size).flat_map(|n| algebras_of_size(variety, n)).collect()
}

fn cached(variety: Variety, max_size: usize) -> Arc<Vec<FiniteAlgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<(Variety, usize), Arc<Vec<FiniteAlgebra>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("algebra cache").get(&(variety, max_size)) {
        return hit.clone();
    }
    let fresh = Arc::new(enumerate_algebras(variety, max_size));
    cache.lock().expect("algebra cache").insert((variety, max_size), fresh.clone());
    fresh
}

/// First algebra of `variety` (smallest first) with an assignment refuting `s`.
pub fn refute<S: Inequality + HasVars>(s: &S, variety: Variety, max_size: usize) -> Option<CounterWitness> {
    cached(variety, max_size).iter().find_map(|alg| {
        counter_assignment(s, alg).map(|assignment| CounterWitness { algebra: alg.clone(), assignment })
    })
}

#[cfg(test)]
mod tests {
    use super::super::{check_variety, dm4};
    use super::*;
    use crate::syntax::{parse_sdm_sequent, Var};

    #[test]
    fn distributive_lattice_counts() {
        let counts: Vec<usize> = (2..=6).map(|n| enumerate_lattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5]);
    }

    #[test]
    fn dm_two_is_boolean() {
        assert_eq!(enumerate_algebras(Variety::Dm, 2).len(), 1);
    }

    #[test]
    fn dm_four_contains_diamond() {
        let all = enumerate_algebras(Variety::Dm, 4);
        assert!(all.iter().any(|a| a.isomorphic(&dm4())));
        assert!(all.iter().all(|a| check_variety(a, Variety::Dm).unwrap()));
    }

    #[test]
    fn sdm_three_chain_pseudocomplement() {
        let all = enumerate_algebras(Variety::Sdm, 3);
        let pc = all.iter().find(|a| a.size == 3 && a.neg == vec![2, 0, 0]);
        let pc = pc.expect("pseudocomplement on the 3-chain");
        assert!(!check_variety(pc, Variety::Dm).unwrap());
    }

    #[test]
    fn refutations() {
        let s = parse_sdm_sequent("p => ~~p").unwrap();
        let w = refute(&s, Variety::Sdm, 3).expect("counter-witness");
        assert_eq!(w.algebra.size, 3);
        assert!(counter_assignment(&s, &w.algebra).is_some());
        assert!(refute(&parse_sdm_sequent("p => p").unwrap(), Variety::Sdm, 4).is_none());
        let fact = parse_sdm_sequent("~(~p & ~q) => p | q").unwrap();
        let w = refute(&fact, Variety::Sdm, 5).expect("counter-witness");
        assert!(w.assignment.contains_key(&Var::base("q")));
    }
}
