//! Pairwise commutation of Pauli terms and greedy grouping.
//!
//! Two Pauli strings commute iff the number of qubits on which they act
//! with different non-identity letters is even: every such qubit
//! contributes a local anticommutation, and the string-level commutator
//! vanishes exactly when those signs cancel pairwise. Counting shared
//! qubits per cross-letter pair (X,Y), (X,Z), ... and summing mod 2 is the
//! whole test; no matrices are ever built.

use crate::hamiltonian::{HamiltonianSpec, PauliLetter, PauliTerm};

/// True iff `[a, b] = 0`: the cross-letter overlap count is even.
pub fn commutes(a: &PauliTerm, b: &PauliTerm) -> bool {
    cross_letter_overlap(a, b) % 2 == 0
}

/// Number of qubits where `a` and `b` both act non-trivially with
/// different letters (the sum over the six ordered cross-letter
/// intersections |S_v,a and S_w,b|, v != w).
pub fn cross_letter_overlap(a: &PauliTerm, b: &PauliTerm) -> usize {
    shared_qubits(a, b)
        .filter(|&(la, lb)| la != lb)
        .count()
}

/// True iff the supports are fully disjoint (no shared qubits at all,
/// same-letter overlaps included). Stricter than zero cross-letter
/// overlap; this is the variant a gate scheduler needs, since even
/// same-letter gates on one qubit cannot run simultaneously.
pub fn disjoint(a: &PauliTerm, b: &PauliTerm) -> bool {
    shared_qubits(a, b).next().is_none()
}

/// Letters on qubits present in both supports, by merging the two sorted
/// lists.
fn shared_qubits<'a>(
    a: &'a PauliTerm,
    b: &'a PauliTerm,
) -> impl Iterator<Item = (PauliLetter, PauliLetter)> + 'a {
    let mut xs = a.support().iter().peekable();
    let mut ys = b.support().iter().peekable();
    std::iter::from_fn(move || loop {
        let (&&(qa, la), &&(qb, lb)) = (xs.peek()?, ys.peek()?);
        match qa.cmp(&qb) {
            std::cmp::Ordering::Less => {
                xs.next();
            }
            std::cmp::Ordering::Greater => {
                ys.next();
            }
            std::cmp::Ordering::Equal => {
                xs.next();
                ys.next();
                return Some((la, lb));
            }
        }
    })
}

/// Grouping predicate used by [`sort_hamiltonian`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupMode {
    /// Group terms that pairwise commute (mod-2 criterion).
    Commuting,
    /// Group only terms with fully disjoint supports.
    Disjoint,
    /// No grouping: keep input order, one group per term.
    None,
}

/// Partition of term indices (0-based, referring to the sorted spec)
/// into groups, in creation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPartition {
    pub groups: Vec<Vec<usize>>,
    pub mode: GroupMode,
}

/// Summary statistics of a partition.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupStats {
    /// Number of groups.
    pub group_count: usize,
    pub max_group_size: usize,
    pub mean_group_size: f64,
}

pub fn group_count_stats(partition: &GroupPartition) -> GroupStats {
    let group_count = partition.groups.len();
    let total: usize = partition.groups.iter().map(Vec::len).sum();
    GroupStats {
        group_count,
        max_group_size: partition.groups.iter().map(Vec::len).max().unwrap_or(0),
        mean_group_size: if group_count == 0 {
            0.0
        } else {
            total as f64 / group_count as f64
        },
    }
}

/// Greedy first-fit grouping over terms in input order.
///
/// Term j joins the lowest-indexed existing group whose every member
/// passes the mode's pairwise predicate against j, else it opens a new
/// group. The returned spec lists terms group by group (groups in
/// creation order, insertion order within a group) and carries the group
/// boundaries; the partition's indices refer to the returned order.
/// `GroupMode::None` returns the spec unchanged with one group per term.
pub fn sort_hamiltonian(
    spec: &HamiltonianSpec,
    mode: GroupMode,
) -> (HamiltonianSpec, GroupPartition) {
    let m = spec.term_count();
    if mode == GroupMode::None {
        let mut sorted = spec.clone();
        sorted
            .set_groups((0..m).map(|i| i..i + 1).collect())
            .expect("singleton ranges tile the list");
        let groups = (0..m).map(|i| vec![i]).collect();
        return (sorted, GroupPartition { groups, mode });
    }

    let accepts = |a: &PauliTerm, b: &PauliTerm| match mode {
        GroupMode::Commuting => commutes(a, b),
        GroupMode::Disjoint => disjoint(a, b),
        GroupMode::None => unreachable!(),
    };

    // Groups hold original term indices during assignment.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (j, term) in spec.terms().iter().enumerate() {
        let slot = groups
            .iter_mut()
            .find(|group| group.iter().all(|&i| accepts(&spec.terms()[i], term)));
        match slot {
            Some(group) => group.push(j),
            None => groups.push(vec![j]),
        }
    }

    let order: Vec<usize> = groups.iter().flatten().copied().collect();
    let mut sorted = spec.with_terms_reordered(&order);
    let mut ranges = Vec::with_capacity(groups.len());
    let mut start = 0;
    for group in &groups {
        ranges.push(start..start + group.len());
        start += group.len();
    }
    sorted
        .set_groups(ranges.clone())
        .expect("group ranges tile the reordered list");
    // Re-express the partition in sorted-spec indices.
    let groups = ranges.into_iter().map(|r| r.collect()).collect();
    (sorted, GroupPartition { groups, mode })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{make_honeycomb, parse_hamiltonian};

    fn term(text: &str) -> PauliTerm {
        parse_hamiltonian(&format!("n=8\n{text}\n")).unwrap().terms()[0].clone()
    }

    #[test]
    fn paper_pair_xx_yy_commutes() {
        // Overlap on qubits 1 and 2, both cross-letter: sum 2, even.
        assert_eq!(cross_letter_overlap(&term("1 X1 X2"), &term("2 Y1 Y2")), 2);
        assert!(commutes(&term("1 X1 X2"), &term("2 Y1 Y2")));
    }

    #[test]
    fn yy_vs_yz_shares_only_a_same_letter_qubit() {
        // Y1Y2 and Y1Z3 overlap only on qubit 1 where both act as Y, so
        // the cross-letter sum is 0 and the pair commutes. (Checked
        // against the dense commutator oracle in the acceptance suite.)
        assert_eq!(cross_letter_overlap(&term("2 Y1 Y2"), &term("4 Y1 Z3")), 0);
        assert!(commutes(&term("2 Y1 Y2"), &term("4 Y1 Z3")));
    }

    #[test]
    fn single_cross_letter_overlap_anticommutes() {
        // X1X2 vs Y1Z3: qubit 1 is X-vs-Y, sum 1, odd.
        assert_eq!(cross_letter_overlap(&term("1 X1 X2"), &term("4 Y1 Z3")), 1);
        assert!(!commutes(&term("1 X1 X2"), &term("4 Y1 Z3")));
        assert!(!commutes(&term("1 Z1"), &term("1 X1")));
    }

    #[test]
    fn self_commutation() {
        for t in ["1 X1 Y2 Z3", "1 Z1", "-2 Y1 Y2"] {
            assert!(commutes(&term(t), &term(t)));
        }
    }

    #[test]
    fn disjointness_is_full_support_disjointness() {
        assert!(disjoint(&term("1 X1 X2"), &term("1 Z3 Z4")));
        assert!(!disjoint(&term("1 X1 X2"), &term("1 Y1 Y2")));
        assert!(!disjoint(&term("1 Z1"), &term("1 Z1")));
    }

    #[test]
    fn greedy_groups_three_term_example() {
        // X1X2 and Y1Y2 group together; Y1Z3 fails against X1X2 (odd
        // overlap on qubit 1) and opens a second group.
        let spec = parse_hamiltonian("n=3\n1 X1 X2\n2 Y1 Y2\n4 Y1 Z3\n").unwrap();
        let (sorted, partition) = sort_hamiltonian(&spec, GroupMode::Commuting);
        assert_eq!(partition.groups, vec![vec![0, 1], vec![2]]);
        assert_eq!(sorted.terms(), spec.terms());
        assert_eq!(sorted.groups().unwrap(), &[0..2, 2..3]);
    }

    #[test]
    fn single_term_and_all_commuting() {
        let spec = parse_hamiltonian("n=3\n1 Z1\n").unwrap();
        let (_, p) = sort_hamiltonian(&spec, GroupMode::Commuting);
        assert_eq!(p.groups.len(), 1);

        let spec = parse_hamiltonian("n=3\n1 Z1\n1 Z2\n1 Z3\n").unwrap();
        let (_, p) = sort_hamiltonian(&spec, GroupMode::Commuting);
        assert_eq!(p.groups, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn mode_none_keeps_order_with_singleton_groups() {
        let spec = parse_hamiltonian("n=3\n1 X1\n2 Z1\n3 Y2\n").unwrap();
        let (sorted, p) = sort_hamiltonian(&spec, GroupMode::None);
        assert_eq!(sorted.terms(), spec.terms());
        assert_eq!(p.groups.len(), 3);
        let stats = group_count_stats(&p);
        assert_eq!(stats.group_count, 3);
        assert_eq!(stats.max_group_size, 1);
    }

    #[test]
    fn partition_is_sound_and_deterministic() {
        let spec = crate::hamiltonian::sample_random_twobody(5, 3).unwrap();
        let (sorted, p) = sort_hamiltonian(&spec, GroupMode::Commuting);
        for group in &p.groups {
            for (ai, &a) in group.iter().enumerate() {
                for &b in &group[ai + 1..] {
                    assert!(commutes(&sorted.terms()[a], &sorted.terms()[b]));
                }
            }
        }
        let mut seen: Vec<usize> = p.groups.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..spec.term_count()).collect::<Vec<_>>());

        let (sorted2, p2) = sort_hamiltonian(&spec, GroupMode::Commuting);
        assert_eq!(sorted, sorted2);
        assert_eq!(p, p2);

        let (sorted_d, pd) = sort_hamiltonian(&spec, GroupMode::Disjoint);
        for group in &pd.groups {
            for (ai, &a) in group.iter().enumerate() {
                for &b in &group[ai + 1..] {
                    assert!(disjoint(&sorted_d.terms()[a], &sorted_d.terms()[b]));
                }
            }
        }
    }

    #[test]
    fn honeycomb_groups_by_link_type() {
        // All x-links are disjoint, likewise y and z, while cross-type
        // links sharing a qubit fail the mod-2 test; greedy grouping
        // lands on one group per link type.
        let spec = make_honeycomb(2, 2, 1.0, 1.0, 1.0, false).unwrap();
        let (_, p) = sort_hamiltonian(&spec, GroupMode::Commuting);
        let stats = group_count_stats(&p);
        assert_eq!(stats.group_count, 3);
        assert_eq!(stats.max_group_size, 4);
        assert!((stats.mean_group_size - 4.0).abs() < 1e-12);
    }
}
