//! Permutation algebra over 1-based index sequences.

use super::SyntaxError;

/// True iff `perm` contains each of `1..=perm.len()` exactly once.
pub fn is_permutation(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return false;
        }
        seen[p - 1] = true;
    }
    true
}

/// The identity permutation `[1, 2, ..., n]`.
pub fn identity(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Inverse permutation: `invert(p)[p[i] - 1] == i + 1`.
pub fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (slot, &src) in perm.iter().enumerate() {
        inv[src - 1] = slot + 1;
    }
    inv
}

/// Reorder `seq` so that `out[i] = seq[perm[i] - 1]`.
pub fn apply_permutation<T: Clone>(seq: &[T], perm: &[usize]) -> Result<Vec<T>, SyntaxError> {
    if seq.len() != perm.len() {
        return Err(SyntaxError::LengthMismatch { seq: seq.len(), perm: perm.len() });
    }
    if !is_permutation(perm) {
        return Err(SyntaxError::NotAPermutation { n: perm.len(), why: format!("{perm:?}") });
    }
    Ok(perm.iter().map(|&p| seq[p - 1].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_noop() {
        let seq = ["a", "b", "c"];
        assert_eq!(apply_permutation(&seq, &[1, 2, 3]).unwrap(), vec!["a", "b", "c"]);
    }

    #[test]
    fn rotates_second_half_first() {
        let seq = ["a", "b", "c", "d", "e"];
        assert_eq!(
            apply_permutation(&seq, &[4, 5, 1, 2, 3]).unwrap(),
            vec!["d", "e", "a", "b", "c"]
        );
    }

    #[test]
    fn rejects_length_mismatch_and_non_permutation() {
        assert!(apply_permutation(&["a", "b"], &[1, 2, 3]).is_err());
        assert!(apply_permutation(&["a", "b", "c"], &[1, 1, 3]).is_err());
        assert!(apply_permutation(&["a", "b", "c"], &[0, 1, 2]).is_err());
    }

    #[test]
    fn invert_round_trips() {
        let p = vec![3usize, 1, 4, 2];
        let seq = ["w", "x", "y", "z"];
        let fwd = apply_permutation(&seq, &p).unwrap();
        let back = apply_permutation(&fwd, &invert(&p)).unwrap();
        assert_eq!(back.as_slice(), &seq);
    }
}
