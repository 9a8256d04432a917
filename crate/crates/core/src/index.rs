//! Index combinatorics of the six-block shape.
//!
//! Indices use the numbering `0` (the distinguished direction), `1..=ι₆` (the
//! set `I`) and `ι₆+1..=2ι₆` (the barred set `Ī`). Vectors in ℚ^{1+2ι₆} are
//! stored in *slot order* `(0, 1, 1̄, 2, 2̄, …, ι₆, ῑ₆)`.

use std::ops::RangeInclusive;

use crate::error::{Constraint, Error, Result};
use crate::rational::{q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    ell: [usize; 6],
    iota: [usize; 7],
    gamma_zero_slots: Vec<usize>,
    exp_zero_slots: Vec<usize>,
    theta_alpha_slots: Vec<usize>,
    theta_exp_slots: Vec<usize>,
}

impl Shape {
    pub fn new(ell: [usize; 6]) -> Result<Self> {
        if ell.iter().all(|&l| l == 0) {
            return Err(Error::constraint(
                Constraint::NonemptyShape,
                "all six block sizes are zero",
            ));
        }
        let mut iota = [0usize; 7];
        for i in 1..=6 {
            iota[i] = iota[i - 1] + ell[i - 1];
        }
        let mut shape = Shape {
            ell,
            iota,
            gamma_zero_slots: Vec::new(),
            exp_zero_slots: Vec::new(),
            theta_alpha_slots: Vec::new(),
            theta_exp_slots: Vec::new(),
        };
        for p in 1..=shape.iota6() {
            let b = shape.block_of(p).expect("p in I");
            let (s, sb) = (shape.slot(p), shape.slot(shape.bar(p)));
            match b {
                1 => {
                    shape.exp_zero_slots.extend([s, sb]);
                    shape.theta_alpha_slots.extend([s, sb]);
                }
                2 => {
                    shape.exp_zero_slots.push(s);
                    shape.theta_alpha_slots.extend([s, sb]);
                }
                3 => shape.theta_alpha_slots.extend([s, sb]),
                4 => {
                    shape.exp_zero_slots.push(s);
                    shape.gamma_zero_slots.push(sb);
                    shape.theta_alpha_slots.push(s);
                    shape.theta_exp_slots.push(sb);
                }
                5 => {
                    shape.gamma_zero_slots.push(sb);
                    shape.theta_alpha_slots.push(s);
                    shape.theta_exp_slots.push(sb);
                }
                _ => {
                    shape.gamma_zero_slots.extend([s, sb]);
                    shape.theta_exp_slots.extend([s, sb]);
                }
            }
        }
        for v in [
            &mut shape.gamma_zero_slots,
            &mut shape.exp_zero_slots,
            &mut shape.theta_alpha_slots,
            &mut shape.theta_exp_slots,
        ] {
            v.sort_unstable();
        }
        Ok(shape)
    }

    pub fn ell(&self) -> [usize; 6] {
        self.ell
    }

    /// Cumulative sums `ι₀..ι₆`.
    pub fn iota(&self) -> [usize; 7] {
        self.iota
    }

    pub fn iota6(&self) -> usize {
        self.iota[6]
    }

    /// Length `1 + 2ι₆` of group and exponent vectors.
    pub fn dim(&self) -> usize {
        1 + 2 * self.iota6()
    }

    /// The block `I_i` as a range of unbarred indices (empty when `ℓ_i = 0`).
    pub fn block(&self, i: usize) -> RangeInclusive<usize> {
        assert!((1..=6).contains(&i), "block number {i} out of 1..=6");
        self.iota[i - 1] + 1..=self.iota[i]
    }

    /// `I_{i,j}` as a range of unbarred indices.
    pub fn blocks(&self, i: usize, j: usize) -> RangeInclusive<usize> {
        assert!(1 <= i && i <= j && j <= 6);
        self.iota[i - 1] + 1..=self.iota[j]
    }

    /// The full index set `J = 1..=2ι₆`.
    pub fn j_range(&self) -> RangeInclusive<usize> {
        1..=2 * self.iota6()
    }

    pub fn is_barred(&self, p: usize) -> bool {
        p > self.iota6()
    }

    /// Shift by ι₆ within `J`; an involution.
    pub fn bar(&self, p: usize) -> usize {
        let n = self.iota6();
        debug_assert!((1..=2 * n).contains(&p), "bar of {p} outside J");
        if p <= n {
            p + n
        } else {
            p - n
        }
    }

    pub fn checked_bar(&self, p: usize) -> Result<usize> {
        self.check_in_j(p)?;
        Ok(self.bar(p))
    }

    /// Position of index `p ∈ Ĵ` in slot order.
    pub fn slot(&self, p: usize) -> usize {
        let n = self.iota6();
        if p == 0 {
            0
        } else if p <= n {
            2 * p - 1
        } else {
            2 * (p - n)
        }
    }

    /// Inverse of [`Shape::slot`].
    pub fn index_at_slot(&self, s: usize) -> usize {
        if s == 0 {
            0
        } else if s % 2 == 1 {
            s.div_ceil(2)
        } else {
            s / 2 + self.iota6()
        }
    }

    /// Block number (1..=6) of `p ∈ J`, looking through the bar.
    pub fn block_of(&self, p: usize) -> Option<usize> {
        if p == 0 || p > 2 * self.iota6() {
            return None;
        }
        let u = if self.is_barred(p) { self.bar(p) } else { p };
        (1..=6).find(|&i| self.block(i).contains(&u))
    }

    pub fn check_in_hat_j(&self, p: usize) -> Result<()> {
        if p <= 2 * self.iota6() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: p,
                valid: format!("0..={}", 2 * self.iota6()),
            })
        }
    }

    pub fn check_in_j(&self, p: usize) -> Result<()> {
        if (1..=2 * self.iota6()).contains(&p) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: p,
                valid: format!("1..={}", 2 * self.iota6()),
            })
        }
    }

    /// Human label: `0`, `3`, or `3'` for the barred partner of 3.
    pub fn label(&self, p: usize) -> String {
        if p > self.iota6() {
            format!("{}'", self.bar(p))
        } else {
            p.to_string()
        }
    }

    /// Parses a label produced by [`Shape::label`].
    pub fn parse_label(&self, s: &str) -> Result<usize> {
        let s = s.trim();
        let bad = || Error::parse(0, format!("bad index label {s:?}"));
        let (num, barred) = match s.strip_suffix('\'') {
            Some(n) => (n, true),
            None => (s, false),
        };
        let p: usize = num.parse().map_err(|_| bad())?;
        if barred {
            if p == 0 || p > self.iota6() {
                return Err(bad());
            }
            Ok(self.bar(p))
        } else {
            self.check_in_hat_j(p)?;
            Ok(p)
        }
    }

    /// Slots where every group element must vanish (`I_6 ∪ Ī_{4,6}`).
    pub fn gamma_zero_slots(&self) -> &[usize] {
        &self.gamma_zero_slots
    }

    /// Nonzero slots where exponents must vanish (`I_{1,2} ∪ I_4 ∪ Ī_1`).
    pub fn exp_zero_slots(&self) -> &[usize] {
        &self.exp_zero_slots
    }

    /// Slots summed over the group part in the weight (`J_{1,3} ∪ I_{4,5}`).
    /// These are also the slots whose unit vectors Γ must contain.
    pub fn theta_alpha_slots(&self) -> &[usize] {
        &self.theta_alpha_slots
    }

    /// Slots summed over the exponent part in the weight (`I_6 ∪ Ī_{4,6}`).
    pub fn theta_exp_slots(&self) -> &[usize] {
        &self.theta_exp_slots
    }

    /// The unit vector `a_[p]` in slot order.
    pub fn unit(&self, p: usize, a: i64) -> Vec<Q> {
        let mut v = vec![q(0); self.dim()];
        v[self.slot(p)] = q(a);
        v
    }

    /// `σ_p` in slot order: `−1_[p]−1_[p̄]` on `J_{1,3}`, `−1_[p]` on
    /// `J_{4,5}` (with `p` the unbarred representative), zero on `Ĵ_6` and 0.
    pub fn sigma(&self, p: usize) -> Result<Vec<Q>> {
        self.check_in_hat_j(p)?;
        let mut v = vec![q(0); self.dim()];
        if p == 0 {
            return Ok(v);
        }
        let u = if self.is_barred(p) { self.bar(p) } else { p };
        match self.block_of(p).expect("p in J") {
            1..=3 => {
                v[self.slot(u)] = q(-1);
                v[self.slot(self.bar(u))] = q(-1);
            }
            4 | 5 => v[self.slot(u)] = q(-1),
            _ => {}
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_block_one() {
        let s = Shape::new([1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(s.iota6(), 1);
        assert_eq!(s.block(1), 1..=1);
        assert_eq!(s.j_range(), 1..=2);
        assert_eq!(s.bar(1), 2);
    }

    #[test]
    fn all_blocks_one() {
        let s = Shape::new([1; 6]).unwrap();
        assert_eq!(s.iota(), [0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(s.block(3), 3..=3);
        assert_eq!(s.j_range(), 1..=12);
        assert_eq!(s.bar(3), 9);
        assert_eq!(s.block_of(9), Some(3));
    }

    #[test]
    fn empty_shape_rejected() {
        let err = Shape::new([0; 6]).unwrap_err();
        assert!(matches!(
            err,
            Error::Constraint {
                constraint: Constraint::NonemptyShape,
                ..
            }
        ));
    }

    #[test]
    fn sigma_cases() {
        let s = Shape::new([1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(s.sigma(1).unwrap(), vec![q(0), q(-1), q(-1)]);
        let s = Shape::new([0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(s.sigma(1).unwrap(), vec![q(0), q(-1), q(0)]);
        assert_eq!(s.sigma(2).unwrap(), vec![q(0), q(-1), q(0)]);
        let s = Shape::new([0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(s.sigma(1).unwrap(), vec![q(0); 3]);
        assert!(s.sigma(3).is_err());
    }

    #[test]
    fn slot_order_round_trip() {
        let s = Shape::new([2, 0, 1, 0, 0, 1]).unwrap();
        for p in 0..=2 * s.iota6() {
            assert_eq!(s.index_at_slot(s.slot(p)), p);
        }
        assert_eq!(s.slot(1), 1);
        assert_eq!(s.slot(s.bar(1)), 2);
        assert_eq!(s.slot(2), 3);
    }

    #[test]
    fn labels_round_trip() {
        let s = Shape::new([1, 1, 0, 0, 0, 0]).unwrap();
        for p in 0..=4 {
            assert_eq!(s.parse_label(&s.label(p)).unwrap(), p);
        }
        assert!(s.parse_label("3'").is_err());
        assert!(s.parse_label("5").is_err());
    }

    #[test]
    fn slot_tables_for_mixed_shape() {
        let s = Shape::new([1; 6]).unwrap();
        // I_6 = {6}, Ī_{4,6} = {10, 11, 12}
        let mut expect: Vec<usize> = [6, 10, 11, 12].iter().map(|&p| s.slot(p)).collect();
        expect.sort_unstable();
        assert_eq!(s.gamma_zero_slots(), &expect[..]);
        assert_eq!(s.theta_exp_slots(), &expect[..]);
        // I_{1,2} ∪ I_4 ∪ Ī_1 = {1, 2, 4, 7}
        let mut expect: Vec<usize> = [1, 2, 4, 7].iter().map(|&p| s.slot(p)).collect();
        expect.sort_unstable();
        assert_eq!(s.exp_zero_slots(), &expect[..]);
    }

    fn shapes() -> impl Strategy<Value = Shape> {
        proptest::array::uniform6(0usize..3)
            .prop_filter("nonempty", |e| e.iter().any(|&l| l > 0))
            .prop_map(|e| Shape::new(e).unwrap())
    }

    proptest! {
        #[test]
        fn bar_is_involution(s in shapes()) {
            for p in s.j_range() {
                prop_assert_eq!(s.bar(s.bar(p)), p);
                prop_assert_ne!(s.bar(p), p);
            }
        }

        #[test]
        fn sigma_is_bar_invariant(s in shapes()) {
            for p in s.blocks(1, 5) {
                prop_assert_eq!(s.sigma(p).unwrap(), s.sigma(s.bar(p)).unwrap());
            }
        }

        #[test]
        fn iota_is_cumulative(e in proptest::array::uniform6(0usize..4)) {
            prop_assume!(e.iter().any(|&l| l > 0));
            let s = Shape::new(e).unwrap();
            for i in 1..=6 {
                prop_assert_eq!(s.iota()[i], e[..i].iter().sum::<usize>());
                prop_assert_eq!(s.block(i).count(), e[i - 1]);
            }
        }
    }
}
