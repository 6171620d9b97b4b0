//! Shared oracles for the integration suites. Everything here is coded
//! independently of the library's own algorithms: partitions come from
//! restricted growth strings, Green's relations from graph reachability,
//! subgroups from a full subset scan, and the associativity counts from a
//! plain filter (small orders) or a separately written column-major
//! backtracker (order 4).

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use permsg::group::{
    alternating_group, cyclic_group, dicyclic_group, dihedral_group, klein_group, quaternion_group,
    symmetric_group, FiniteGroup,
};
use permsg::semigroup::FiniteSemigroup;

/// All set partitions of `0..n` as restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(a: &mut Vec<usize>, i: usize, maxv: usize, out: &mut Vec<Vec<usize>>) {
        if i == a.len() {
            out.push(a.clone());
            return;
        }
        for v in 0..=maxv + 1 {
            a[i] = v;
            rec(a, i + 1, maxv.max(v), out);
        }
    }
    assert!(n >= 1);
    let mut out = Vec::new();
    rec(&mut vec![0; n], 1, 0, &mut out);
    out
}

/// Converts an arbitrary labeling into the canonical min-representative
/// vector.
pub fn to_class_vector(assign: &[usize]) -> Vec<usize> {
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    assign
        .iter()
        .enumerate()
        .map(|(i, &v)| *first.entry(v).or_insert(i))
        .collect()
}

/// Independent two-sided compatibility test.
pub fn is_congruence_assignment(s: &FiniteSemigroup, assign: &[usize]) -> bool {
    let n = s.order();
    for a in 0..n {
        for b in 0..n {
            if assign[a] != assign[b] {
                continue;
            }
            for t in 0..n {
                if assign[s.mul(t, a)] != assign[s.mul(t, b)]
                    || assign[s.mul(a, t)] != assign[s.mul(b, t)]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The congruence lattice by brute filter over all Bell(n) partitions,
/// as a set of canonical class vectors.
pub fn congruences_by_filter(s: &FiniteSemigroup) -> BTreeSet<Vec<usize>> {
    all_partitions(s.order())
        .into_iter()
        .filter(|assign| is_congruence_assignment(s, assign))
        .map(|assign| to_class_vector(&assign))
        .collect()
}

/// Full relation composition on explicit pair sets; used to re-derive
/// permutability without the library's relation machinery.
pub fn compose_pairs(n: usize, alpha: &[usize], beta: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if (0..n).any(|x| alpha[a] == alpha[x] && beta[x] == beta[b]) {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Permutability decided entirely by oracle machinery.
pub fn permutable_by_oracle(s: &FiniteSemigroup) -> bool {
    let lattice: Vec<Vec<usize>> = congruences_by_filter(s).into_iter().collect();
    for (i, alpha) in lattice.iter().enumerate() {
        for beta in &lattice[i + 1..] {
            if compose_pairs(s.order(), alpha, beta) != compose_pairs(s.order(), beta, alpha) {
                return false;
            }
        }
    }
    true
}

/// Green's relations by mutual reachability in the one-sided Cayley graphs.
pub struct GreenOracle {
    pub r: Vec<usize>,
    pub l: Vec<usize>,
    pub j: Vec<usize>,
    pub h: Vec<usize>,
}

pub fn green_by_reachability(s: &FiniteSemigroup) -> GreenOracle {
    let n = s.order();
    let reach = |edges: &dyn Fn(usize) -> Vec<usize>| -> Vec<BTreeSet<usize>> {
        (0..n)
            .map(|start| {
                let mut seen = BTreeSet::from([start]);
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for y in edges(x) {
                        if seen.insert(y) {
                            queue.push_back(y);
                        }
                    }
                }
                seen
            })
            .collect()
    };
    let right = reach(&|x| (0..n).map(|t| s.mul(x, t)).collect());
    let left = reach(&|x| (0..n).map(|t| s.mul(t, x)).collect());
    let two = reach(&|x| (0..n).flat_map(|t| [s.mul(x, t), s.mul(t, x)]).collect());
    let classes_of = |reach: &[BTreeSet<usize>]| -> Vec<usize> {
        let mutual = |a: usize, b: usize| reach[a].contains(&b) && reach[b].contains(&a);
        (0..n)
            .map(|a| {
                (0..=a)
                    .find(|&b| mutual(a, b))
                    .expect("a relates to itself")
            })
            .collect()
    };
    let r = classes_of(&right);
    let l = classes_of(&left);
    let j = classes_of(&two);
    let h: Vec<usize> = to_class_vector(&(0..n).map(|a| r[a] * n + l[a]).collect::<Vec<usize>>());
    GreenOracle { r, l, j, h }
}

/// Every subgroup by scanning all subsets containing the identity.
pub fn subgroups_by_subset_scan(g: &FiniteGroup) -> BTreeSet<BTreeSet<usize>> {
    let n = g.order();
    assert!(n <= 16, "subset scan oracle is exponential");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << g.identity()) == 0 {
            continue;
        }
        let members: BTreeSet<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let closed = members.iter().all(|&a| {
            members.contains(&g.inverse(a))
                && members.iter().all(|&b| members.contains(&g.mul(a, b)))
        });
        if closed {
            out.insert(members);
        }
    }
    out
}

/// Count of associative tables by filtering every possible table.
pub fn associative_count_by_filter(n: usize) -> usize {
    assert!(n <= 3, "full filter is n^(n^2) tables");
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    let mut count = 0usize;
    let mut table = vec![0usize; cells];
    for code in 0..total {
        let mut c = code;
        for cell in table.iter_mut() {
            *cell = (c % n as u64) as usize;
            c /= n as u64;
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let assoc =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| mul(mul(a, b), c) == mul(a, mul(b, c)))));
        if assoc {
            count += 1;
        }
    }
    count
}

/// A second, separately written enumerator: fills cells column by column
/// and re-scans all fully determined triples at every step.
pub fn associative_count_column_major(n: usize) -> usize {
    const FREE: usize = usize::MAX;

    fn determined_ok(table: &[usize], n: usize) -> bool {
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                if ab == FREE {
                    continue;
                }
                for c in 0..n {
                    let bc = table[b * n + c];
                    if bc == FREE {
                        continue;
                    }
                    let lhs = table[ab * n + c];
                    let rhs = table[a * n + bc];
                    if lhs != FREE && rhs != FREE && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn go(table: &mut [usize], n: usize, k: usize, count: &mut usize) {
        if k == n * n {
            *count += 1;
            return;
        }
        // column-major: cell k is (row k mod n, column k / n)
        let cell = (k % n) * n + k / n;
        for v in 0..n {
            table[cell] = v;
            if determined_ok(table, n) {
                go(table, n, k + 1, count);
            }
        }
        table[cell] = FREE;
    }

    let mut count = 0;
    go(&mut vec![FREE; n * n], n, 0, &mut count);
    count
}

/// One group per isomorphism type of order at most 8.
pub fn groups_up_to_8() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z1", cyclic_group(1)),
        ("Z2", cyclic_group(2)),
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("V4", klein_group()),
        ("Z5", cyclic_group(5)),
        ("Z6", cyclic_group(6)),
        ("S3", symmetric_group(3)),
        ("Z7", cyclic_group(7)),
        ("Z8", cyclic_group(8)),
        ("Z2xZ4", cyclic_group(2).direct_product(&cyclic_group(4))),
        ("Z2^3", cyclic_group(2).direct_product(&klein_group())),
        ("D4", dihedral_group(4)),
        ("Q8", quaternion_group()),
    ]
}

/// One group per isomorphism type of order at most 12.
pub fn groups_up_to_12() -> Vec<(&'static str, FiniteGroup)> {
    let mut out = groups_up_to_8();
    out.extend([
        ("Z9", cyclic_group(9)),
        ("Z3^2", cyclic_group(3).direct_product(&cyclic_group(3))),
        ("Z10", cyclic_group(10)),
        ("D5", dihedral_group(5)),
        ("Z11", cyclic_group(11)),
        ("Z12", cyclic_group(12)),
        ("Z2xZ6", cyclic_group(2).direct_product(&cyclic_group(6))),
        ("D6", dihedral_group(6)),
        ("A4", alternating_group(4)),
        ("Dic3", dicyclic_group(3)),
    ]);
    out
}
