//! Finite permutation groups by full enumeration: the 𝔖₂ₙ action on
//! n-subsets, orbital rank (2-transitivity test), alternating-group
//! containment, and the exhaustive overgroup scan in 𝔖₆.

use std::collections::{BTreeSet, HashSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("images are not a bijection")]
    NotBijective,
    #[error("degree mismatch")]
    DegreeMismatch,
    #[error("group enumeration exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error("group is not transitive")]
    NotTransitive,
}

const ELEMENT_CAP: usize = 1_000_000;

/// A permutation of {0..N−1}, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// self ∘ other (other first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn cycle(n: usize, points: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for w in points.windows(2) {
            images[w[0]] = w[1];
        }
        if let (Some(&first), Some(&last)) = (points.first(), points.last()) {
            images[last] = first;
        }
        Permutation { images }
    }
}

/// A permutation group with its complete element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: BTreeSet<Permutation>,
}

impl PermGroup {
    /// Closure of the generators under composition, capped.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self, PermError> {
        Self::generate_capped(degree, gens, ELEMENT_CAP)
    }

    pub fn generate_capped(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<Self, PermError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch);
        }
        let mut elements = BTreeSet::new();
        let id = Permutation::identity(degree);
        elements.insert(id.clone());
        let mut queue = VecDeque::new();
        queue.push_back(id);
        while let Some(e) = queue.pop_front() {
            for g in gens {
                let p = g.compose(&e);
                if !elements.contains(&p) {
                    if elements.len() >= cap {
                        return Err(PermError::CapExceeded(cap));
                    }
                    elements.insert(p.clone());
                    queue.push_back(p);
                }
            }
        }
        Ok(PermGroup { degree, generators: gens.to_vec(), elements })
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = vec![];
        if n >= 2 {
            gens.push(Permutation::transposition(n, 0, 1));
            gens.push(Permutation::cycle(n, &(0..n).collect::<Vec<_>>()));
        }
        PermGroup::generate(n, &gens).expect("symmetric group fits the cap")
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = vec![];
        for i in 0..n.saturating_sub(2) {
            gens.push(Permutation::cycle(n, &[i, i + 1, i + 2]));
        }
        PermGroup::generate(n, &gens).expect("alternating group fits the cap")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.is_subset(&other.elements)
    }

    pub fn is_transitive(&self) -> bool {
        let mut reached = vec![false; self.degree];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for g in &self.generators {
                let j = g.apply(i);
                if !reached[j] {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
        reached.iter().all(|&r| r)
    }
}

/// Image of 𝔖₂ₙ acting on the C(2n,n) n-element subsets of {0..2n−1},
/// ordered lexicographically. The action is faithful for n ≥ 1, which is
/// asserted.
pub fn subset_action(n: usize) -> Result<PermGroup, PermError> {
    let m = 2 * n;
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    fn gen(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=m - left {
            cur.push(i);
            gen(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    gen(0, m, n, &mut Vec::new(), &mut subsets);
    subsets.sort();
    if subsets.len() > ELEMENT_CAP {
        return Err(PermError::CapExceeded(ELEMENT_CAP));
    }
    let index: std::collections::HashMap<&[usize], usize> =
        subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let image_of = |g: &Permutation| -> Result<Permutation, PermError> {
        let images = subsets
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&i| g.apply(i)).collect();
                t.sort_unstable();
                index[t.as_slice()]
            })
            .collect();
        Permutation::new(images)
    };
    let s2n = PermGroup::symmetric(m);
    let gens: Vec<Permutation> = s2n
        .generators()
        .iter()
        .map(image_of)
        .collect::<Result<_, _>>()?;
    let img = PermGroup::generate(subsets.len(), &gens)?;
    // faithfulness: the homomorphism is injective
    assert_eq!(img.order(), s2n.order());
    for g in s2n.elements() {
        if !g.is_identity() {
            assert!(!image_of(g)?.is_identity());
        }
    }
    Ok(img)
}

/// Number of orbits of G on ordered pairs (the permutation rank, diagonal
/// included); rank 2 ⟺ 2-transitive.
pub fn rank_orbitals(g: &PermGroup) -> Result<usize, PermError> {
    if !g.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let n = g.degree();
    let mut orbit_of = vec![usize::MAX; n * n];
    let mut rank = 0;
    for start in 0..n * n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        orbit_of[start] = rank;
        let mut stack = vec![start];
        while let Some(pair) = stack.pop() {
            let (a, b) = (pair / n, pair % n);
            for gen in g.generators() {
                let q = gen.apply(a) * n + gen.apply(b);
                if orbit_of[q] == usize::MAX {
                    orbit_of[q] = rank;
                    stack.push(q);
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// True iff G contains every 3-cycle of its degree, i.e. G ⊇ 𝔄_N.
pub fn contains_alternating(g: &PermGroup) -> bool {
    let n = g.degree();
    if n < 3 {
        return true;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c {
                    continue;
                }
                if !g.contains(&Permutation::cycle(n, &[a, b, c])) {
                    return false;
                }
            }
        }
    }
    true
}

/// One overgroup found by the scan.
#[derive(Debug, Clone)]
pub struct OvergroupRecord {
    pub order: usize,
    pub rank: usize,
    pub two_transitive: bool,
    pub contains_alternating: bool,
}

/// Result of the exhaustive overgroup scan.
#[derive(Debug, Clone)]
pub struct OvergroupScan {
    pub base_order: usize,
    pub overgroups: Vec<OvergroupRecord>,
    /// every 2-transitive overgroup of H contains the alternating group
    pub all_two_transitive_contain_alternating: bool,
}

/// Enumerates every subgroup of Sym(N) containing H by iterated adjunction
/// of single elements, and checks that each 2-transitive one contains the
/// alternating group.
pub fn overgroup_scan(h: &PermGroup) -> Result<OvergroupScan, PermError> {
    if !h.is_transitive() {
        return Err(PermError::NotTransitive);
    }
    let n = h.degree();
    let sym = PermGroup::symmetric(n);
    let mut found: HashSet<Vec<Permutation>> = HashSet::new();
    let key = |g: &PermGroup| -> Vec<Permutation> { g.elements().cloned().collect() };
    let mut worklist: Vec<PermGroup> = vec![h.clone()];
    found.insert(key(h));
    let mut records = Vec::new();
    let mut all_ok = true;
    let mut idx = 0;
    while idx < worklist.len() {
        let current = worklist[idx].clone();
        idx += 1;
        debug_assert!(h.is_subgroup_of(&current));
        let rank = rank_orbitals(&current)?;
        let two_transitive = rank == 2;
        let has_alt = contains_alternating(&current);
        if two_transitive && !has_alt {
            all_ok = false;
        }
        records.push(OvergroupRecord {
            order: current.order(),
            rank,
            two_transitive,
            contains_alternating: has_alt,
        });
        if current.order() == sym.order() {
            continue;
        }
        for g in sym.elements() {
            if current.contains(g) {
                continue;
            }
            let mut gens: Vec<Permutation> = current.generators().to_vec();
            gens.push(g.clone());
            let bigger = PermGroup::generate(n, &gens)?;
            if found.insert(key(&bigger)) {
                worklist.push(bigger);
            }
        }
    }
    records.sort_by_key(|r| r.order);
    Ok(OvergroupScan {
        base_order: h.order(),
        overgroups: records,
        all_two_transitive_contain_alternating: all_ok,
    })
}

pub fn group_order(g: &PermGroup) -> usize {
    g.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        let p = Permutation::cycle(4, &[0, 1, 2]);
        assert_eq!(p.compose(&p.compose(&p)), Permutation::identity(4));
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
    }

    #[test]
    fn standard_groups() {
        assert_eq!(PermGroup::symmetric(6).order(), 720);
        assert_eq!(PermGroup::alternating(6).order(), 360);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert_eq!(PermGroup::symmetric(1).order(), 1);
    }

    #[test]
    fn cap_errors() {
        let gens = PermGroup::symmetric(6).generators().to_vec();
        assert_eq!(
            PermGroup::generate_capped(6, &gens, 100),
            Err(PermError::CapExceeded(100))
        );
    }

    #[test]
    fn subset_action_degree_and_order() {
        let g = subset_action(1).unwrap();
        assert_eq!(g.degree(), 2);
        assert_eq!(g.order(), 2);

        let g = subset_action(2).unwrap();
        assert_eq!(g.degree(), 6);
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn transposition_subset_images() {
        // subsets of {0,1,2,3} in lex order:
        // {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
        // the transposition (0 1) fixes {0,1},{2,3} and swaps
        // {0,2}↔{1,2}, {0,3}↔{1,3}
        let subsets = [
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ];
        let t = Permutation::transposition(4, 0, 1);
        let image: Vec<usize> = subsets
            .iter()
            .map(|s| {
                let mut m: Vec<usize> = s.iter().map(|&i| t.apply(i)).collect();
                m.sort_unstable();
                subsets.iter().position(|x| *x == m).unwrap()
            })
            .collect();
        assert_eq!(image, vec![0, 3, 4, 1, 2, 5]);
    }

    #[test]
    fn orbital_ranks() {
        assert_eq!(rank_orbitals(&PermGroup::symmetric(6)).unwrap(), 2);
        assert_eq!(rank_orbitals(&subset_action(2).unwrap()).unwrap(), 3);
        let c6 = PermGroup::generate(6, &[Permutation::cycle(6, &[0, 1, 2, 3, 4, 5])]).unwrap();
        assert_eq!(rank_orbitals(&c6).unwrap(), 6);
        let intransitive = PermGroup::generate(3, &[Permutation::transposition(3, 0, 1)]).unwrap();
        assert_eq!(rank_orbitals(&intransitive), Err(PermError::NotTransitive));
    }

    #[test]
    fn alternating_membership() {
        assert!(contains_alternating(&PermGroup::symmetric(6)));
        assert!(contains_alternating(&PermGroup::alternating(6)));
        assert!(!contains_alternating(&subset_action(2).unwrap()));
    }

    #[test]
    fn scan_full_symmetric() {
        let scan = overgroup_scan(&PermGroup::symmetric(6)).unwrap();
        assert_eq!(scan.overgroups.len(), 1);
        assert!(scan.all_two_transitive_contain_alternating);
    }

    #[test]
    fn scan_subset_action() {
        let h = subset_action(2).unwrap();
        let scan = overgroup_scan(&h).unwrap();
        assert!(scan.all_two_transitive_contain_alternating);
        assert!(scan.overgroups.iter().any(|r| r.order == 720));
        // H itself is not 2-transitive
        assert!(scan.overgroups.iter().any(|r| r.order == 24 && r.rank == 3));
    }

    #[test]
    fn scan_cyclic() {
        let c6 = PermGroup::generate(6, &[Permutation::cycle(6, &[0, 1, 2, 3, 4, 5])]).unwrap();
        let scan = overgroup_scan(&c6).unwrap();
        // a 6-cycle lies in a conjugate of PGL(2,5), which is 2-transitive
        // of order 120 but does not contain 𝔄₆
        assert!(scan
            .overgroups
            .iter()
            .any(|r| r.order == 120 && r.two_transitive && !r.contains_alternating));
        assert!(!scan.all_two_transitive_contain_alternating);
    }
}
