//! Shared test helpers: a deliberately naive enumeration oracle.

use sedf::{verify_family, AbelianGroup, SetFamily, TargetKind};

/// All k-subsets of `[0, v)` in lexicographic order.
pub fn combinations(v: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(v: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for e in start..=v - remaining {
            current.push(e);
            rec(v, k, e + 1, current, out);
            current.pop();
        }
    }
    if k <= v {
        rec(v, k, 0, &mut current, &mut out);
    }
    out
}

/// No-pruning oracle: walks every ordered m-tuple of k-subsets and keeps the
/// ones the verifier accepts for `kind`. Output order matches the pruned
/// search's lexicographic order.
pub fn naive_enumerate(
    group: &AbelianGroup,
    m: usize,
    k: usize,
    kind: TargetKind,
) -> Vec<SetFamily> {
    let v = group.order();
    let subsets = combinations(v, k);
    let mut found = Vec::new();
    let mut indices = vec![0usize; m];
    'outer: loop {
        let lists: Vec<Vec<usize>> = indices.iter().map(|&i| subsets[i].clone()).collect();
        let family = SetFamily::from_element_lists(group.clone(), lists)
            .expect("tuple of k-subsets is a family");
        if verify_family(&family).satisfies(kind).is_some() {
            found.push(family);
        }
        // Odometer with the last position fastest keeps lexicographic order.
        for pos in (0..m).rev() {
            indices[pos] += 1;
            if indices[pos] < subsets.len() {
                continue 'outer;
            }
            indices[pos] = 0;
            if pos == 0 {
                break 'outer;
            }
        }
    }
    found
}
