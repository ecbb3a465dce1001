//! The automaton families whose intersection has a shortest word of length
//! exactly `m·n − 1`, and the word families that go with them.
//!
//! Over `{0, 1}`:
//!
//! * [`ones_modulo`]`(m)` has states `p_0..p_{m-1}`, reads `c` as a step of
//!   `+c (mod m)`, and accepts in `p_0`: it accepts exactly the words whose
//!   number of 1s is a multiple of `m`.
//! * [`cycle_gadget`]`(m, n)` has states `q_0..q_{n-1}` and accepts in
//!   `q_{n-1}`. Below `q_{m-1}` a 1 advances and a 0 stays put; from
//!   `q_{m-1}` onwards a 0 advances cyclically and a 1 resets to `q_0`.
//!
//! Every trip back to `q_0` costs either `m` ones (reset from `q_{m-1}`) or
//! `m − 1` ones plus `n − m + 1` zeros (wrap around through `q_{n-1}`), which
//! is what [`count_profile_admits`] and [`cycle_witness`] encode.

use crate::automaton::{Alphabet, Dfa, Word};
use crate::error::{Error, Result};

const ZERO: usize = 0;
const ONE: usize = 1;

fn check_ordered(m: usize, n: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    if m > n {
        return Err(Error::InvalidParameters(format!(
            "expected m <= n, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

/// The `m`-state binary DFA accepting words whose 1-count is `≡ 0 (mod m)`.
pub fn ones_modulo(m: usize) -> Result<Dfa> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    let delta: Vec<usize> = (0..m).flat_map(|a| [a, (a + 1) % m]).collect();
    let mut accepting = vec![false; m];
    accepting[0] = true;
    Ok(Dfa::from_raw(Alphabet::binary(), 0, accepting, delta))
}

/// The `n`-state binary DFA whose intersection with [`ones_modulo`]`(m)` has
/// shortest word length `m·n − 1`. Requires `1 ≤ m ≤ n`; sizes are never
/// swapped here.
pub fn cycle_gadget(m: usize, n: usize) -> Result<Dfa> {
    check_ordered(m, n)?;
    let mut delta = Vec::with_capacity(2 * n);
    for a in 0..n {
        if a + 1 < m {
            delta.extend([a, a + 1]);
        } else {
            delta.extend([(a + 1) % n, 0]);
        }
    }
    let mut accepting = vec![false; n];
    accepting[n - 1] = true;
    Ok(Dfa::from_raw(Alphabet::binary(), 0, accepting, delta))
}

/// The `k`-state unary DFA accepting words of length `≡ r (mod k)`.
pub fn unary_residue(r: usize, k: usize) -> Result<Dfa> {
    if k == 0 {
        return Err(Error::InvalidParameters(
            "modulus must be at least 1".into(),
        ));
    }
    if r >= k {
        return Err(Error::InvalidParameters(format!(
            "residue {r} out of range for modulus {k}"
        )));
    }
    let delta: Vec<usize> = (0..k).map(|a| (a + 1) % k).collect();
    let mut accepting = vec![false; k];
    accepting[r] = true;
    Ok(Dfa::from_raw(Alphabet::unary(), 0, accepting, delta))
}

/// `(1^{m-1} 0^{n-m+1})^{m-1} 1^{m-1} 0^{n-m}`, a word of length `m·n − 1`
/// accepted by both [`ones_modulo`]`(m)` and [`cycle_gadget`]`(m, n)`.
pub fn tight_witness(m: usize, n: usize) -> Result<Word> {
    check_ordered(m, n)?;
    let mut w = Word::empty();
    for _ in 0..m - 1 {
        w.push_run(ONE, m - 1);
        w.push_run(ZERO, n - m + 1);
    }
    w.push_run(ONE, m - 1);
    w.push_run(ZERO, n - m);
    Ok(w)
}

/// How many times an accepting run of [`cycle_gadget`] returns to `q_0`, by
/// kind of return.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleCounts {
    /// Passes through `q_{n-1}` via `m − 1` ones and a run of zeros,
    /// including the final arrival at `q_{n-1}`. At least 1.
    pub zero_returns: usize,
    /// Resets to `q_0` on a 1 after `m` ones.
    pub one_returns: usize,
    pub m: usize,
    pub n: usize,
}

impl CycleCounts {
    pub fn new(zero_returns: usize, one_returns: usize, m: usize, n: usize) -> Result<Self> {
        let counts = CycleCounts {
            zero_returns,
            one_returns,
            m,
            n,
        };
        counts.check()?;
        Ok(counts)
    }

    pub fn check(&self) -> Result<()> {
        check_ordered(self.m, self.n)?;
        if self.zero_returns == 0 {
            return Err(Error::InvalidParameters(
                "at least one pass through the accepting state is required".into(),
            ));
        }
        Ok(())
    }

    /// `i(m − 1) + j·m`.
    pub fn ones(&self) -> usize {
        self.zero_returns * (self.m - 1) + self.one_returns * self.m
    }

    /// `i(n − m + 1) − 1`, the fewest zeros any matching accepted word has.
    pub fn min_zeros(&self) -> usize {
        self.zero_returns * (self.n - self.m + 1) - 1
    }
}

/// `(1^m)^j (1^{m-1} 0^{n-m+1})^{i-1} 1^{m-1} 0^{n-m}`: an accepted word of
/// [`cycle_gadget`]`(m, n)` with exactly [`CycleCounts::ones`] ones and
/// [`CycleCounts::min_zeros`] zeros.
pub fn cycle_witness(counts: &CycleCounts) -> Result<Word> {
    counts.check()?;
    let CycleCounts {
        zero_returns,
        one_returns,
        m,
        n,
    } = *counts;
    let mut w = Word::empty();
    w.push_run(ONE, m * one_returns);
    for _ in 1..zero_returns {
        w.push_run(ONE, m - 1);
        w.push_run(ZERO, n - m + 1);
    }
    w.push_run(ONE, m - 1);
    w.push_run(ZERO, n - m);
    Ok(w)
}

/// Whether some `i ≥ 1, j ≥ 0` give `ones = i(m−1) + j·m` and
/// `zeros ≥ i(n−m+1) − 1`. Every word accepted by [`cycle_gadget`]`(m, n)`
/// satisfies this; the converse is not claimed.
pub fn count_profile_admits(ones: usize, zeros: usize, m: usize, n: usize) -> bool {
    if m == 0 || m > n {
        return false;
    }
    if m == 1 {
        // ones = j for any j, and the zero bound is weakest at i = 1.
        return zeros + 1 >= n;
    }
    let per_pass = n - m + 1;
    (1..)
        .take_while(|i| i * (m - 1) <= ones)
        .any(|i| (ones - i * (m - 1)).is_multiple_of(m) && zeros + 1 >= i * per_pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(&Alphabet::binary(), text).unwrap()
    }

    #[test]
    fn ones_modulo_tables() {
        let d = ones_modulo(1).unwrap();
        assert_eq!(d.table(), vec![vec![0, 0]]);
        assert!(d.accepts(&w("0110")).unwrap());

        let d = ones_modulo(3).unwrap();
        assert_eq!(d.table(), vec![vec![0, 1], vec![1, 2], vec![2, 0]]);
        assert_eq!(d.run(&w("11")).unwrap(), 2);
        assert!(d.validate().is_ok());

        let d = ones_modulo(2).unwrap();
        assert!(d.accepts(&w("11")).unwrap());
        assert!(!d.accepts(&w("1")).unwrap());
        assert!(ones_modulo(0).is_err());
    }

    #[test]
    fn cycle_gadget_tables() {
        let d = cycle_gadget(2, 3).unwrap();
        assert_eq!(d.table(), vec![vec![0, 1], vec![2, 0], vec![0, 0]]);
        assert_eq!(d.accepting_states().collect::<Vec<_>>(), vec![2]);
        assert_eq!(d.run(&w("100")).unwrap(), 0);
        assert!(d.accepts(&w("10010")).unwrap());
        assert_eq!(d.reachable_states(), vec![0, 1, 2]);

        let d = cycle_gadget(1, 1).unwrap();
        assert_eq!(d.table(), vec![vec![0, 0]]);
        assert!(d.is_accepting(0));

        assert!(cycle_gadget(3, 2).is_err());
        assert!(cycle_gadget(0, 2).is_err());
    }

    #[test]
    fn cycle_gadget_structure() {
        for n in 1..=10 {
            for m in 1..=n {
                let d = cycle_gadget(m, n).unwrap();
                assert_eq!(d.accepting_states().count(), 1);
                assert_eq!(d.step(m - 1, ONE), 0, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn unary_residue_basics() {
        let d = unary_residue(0, 1).unwrap();
        assert!(d.accepts(&Word::new(vec![0; 7])).unwrap());
        let d = unary_residue(2, 5).unwrap();
        for len in 0..20 {
            assert_eq!(d.accepts(&Word::new(vec![0; len])).unwrap(), len % 5 == 2);
        }
        assert!(unary_residue(3, 3).is_err());
    }

    #[test]
    fn tight_witness_examples() {
        let bin = Alphabet::binary();
        assert_eq!(
            tight_witness(2, 3).unwrap().display(&bin).to_string(),
            "10010"
        );
        assert_eq!(tight_witness(1, 4).unwrap(), w("000"));
        assert_eq!(tight_witness(1, 1).unwrap(), Word::empty());
        assert!(tight_witness(4, 3).is_err());
    }

    #[test]
    fn cycle_witness_examples() {
        let c = CycleCounts::new(1, 0, 2, 3).unwrap();
        assert_eq!(cycle_witness(&c).unwrap(), w("10"));
        let c = CycleCounts::new(1, 1, 2, 3).unwrap();
        assert_eq!(cycle_witness(&c).unwrap(), w("1110"));
        assert_eq!((c.ones(), c.min_zeros()), (3, 1));
        for n in 1..=6 {
            for m in 1..=n {
                let c = CycleCounts::new(m, 0, m, n).unwrap();
                assert_eq!(cycle_witness(&c).unwrap(), tight_witness(m, n).unwrap());
            }
        }
        assert!(CycleCounts::new(0, 1, 2, 3).is_err());
    }

    #[test]
    fn count_profile_examples() {
        assert!(count_profile_admits(1, 1, 2, 3));
        assert!(!count_profile_admits(0, 0, 2, 3));
        // i = 1 leaves a single 1 over; i = 2 needs at least 3 zeros.
        assert!(!count_profile_admits(2, 2, 2, 3));
        assert!(count_profile_admits(2, 3, 2, 3));
        // m = 1: any 1-count, zeros >= n - 1.
        assert!(count_profile_admits(7, 3, 1, 4));
        assert!(!count_profile_admits(7, 2, 1, 4));
        assert!(!count_profile_admits(1, 1, 3, 2));
    }
}
