//! Basis-tuple indexing and permutation enumeration.

/// Number of tuples of length `len` over `dim` symbols, `None` on overflow.
pub fn tuple_count(dim: usize, len: usize) -> Option<usize> {
    dim.checked_pow(u32::try_from(len).ok()?)
}

/// Flat index of a tuple; the first entry is the most significant digit, so
/// index order is lexicographic order.
pub fn encode(tuple: &[usize], dim: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * dim + i)
}

pub fn decode(mut index: usize, dim: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

/// A permutation of `0..k` as the image list together with its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub images: Vec<usize>,
    pub sign: i8,
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<SignedPermutation> {
    let mut current: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    loop {
        out.push(SignedPermutation {
            sign: sign_of(&current),
            images: current.clone(),
        });
        if !next_permutation(&mut current) {
            return out;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let pivot = i - 1;
    let j = (pivot + 1..p.len())
        .rev()
        .find(|&j| p[j] > p[pivot])
        .unwrap();
    p.swap(pivot, j);
    p[i..].reverse();
    true
}

fn sign_of(p: &[usize]) -> i8 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
