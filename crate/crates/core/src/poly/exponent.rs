use std::fmt;
use std::ops::Index;

/// A multi-index `alpha = (alpha_1, ..., alpha_n)`.
///
/// The derived `Ord` is lexicographic with `x_1` most significant; it is the
/// canonical storage order of polynomial terms, not a query order (see
/// [`MonomialOrder`](super::MonomialOrder)).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    /// The unit vector `e_i` scaled by `k`.
    pub fn unit(nvars: usize, i: usize, k: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = k;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self ⪯ other`: componentwise `<=`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self ≺ other`: componentwise `<=` and not equal.
    pub fn strictly_divides(&self, other: &Self) -> bool {
        self.divides(other) && self != other
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` if some coordinate would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Copy with coordinate `i` replaced by `value`.
    pub fn with(&self, i: usize, value: u32) -> Self {
        let mut v = self.0.clone();
        v[i] = value;
        ExponentVector(v)
    }

    /// Immediate predecessors `self - e_i` for every nonzero coordinate.
    pub fn predecessors(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(move |(i, &e)| self.with(i, e - 1))
    }

    /// Every `beta` with `0 ⪯ beta ⪯ self`, in lexicographic order.
    pub fn box_below(&self) -> BoxIter {
        BoxIter::new(self.0.iter().map(|&e| (0..=e).collect()).collect())
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Cartesian product of per-coordinate value lists, yielded in odometer
/// order (last coordinate fastest).
pub struct BoxIter {
    axes: Vec<Vec<u32>>,
    cursor: Option<Vec<usize>>,
}

impl BoxIter {
    pub fn new(axes: Vec<Vec<u32>>) -> Self {
        let cursor = if axes.iter().any(|a| a.is_empty()) {
            None
        } else {
            Some(vec![0; axes.len()])
        };
        BoxIter { axes, cursor }
    }
}

impl Iterator for BoxIter {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let cursor = self.cursor.as_mut()?;
        let out = ExponentVector(cursor.iter().zip(&self.axes).map(|(&c, axis)| axis[c]).collect());
        let mut i = cursor.len();
        loop {
            if i == 0 {
                self.cursor = None;
                break;
            }
            i -= 1;
            cursor[i] += 1;
            if cursor[i] < self.axes[i].len() {
                break;
            }
            cursor[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn box_iteration_covers_everything_once() {
        let all: Vec<_> = ev(&[2, 1]).box_below().collect();
        assert_eq!(
            all,
            vec![
                ev(&[0, 0]),
                ev(&[0, 1]),
                ev(&[1, 0]),
                ev(&[1, 1]),
                ev(&[2, 0]),
                ev(&[2, 1])
            ]
        );
        assert_eq!(ExponentVector::new(vec![]).box_below().count(), 1);
    }

    #[test]
    fn predecessors_skip_zero_coordinates() {
        let preds: Vec<_> = ev(&[2, 0, 1]).predecessors().collect();
        assert_eq!(preds, vec![ev(&[1, 0, 1]), ev(&[2, 0, 0])]);
    }

    proptest! {
        #[test]
        fn componentwise_order_is_partial_order(
            a in prop::collection::vec(0u32..4, 3),
            b in prop::collection::vec(0u32..4, 3),
            c in prop::collection::vec(0u32..4, 3),
        ) {
            let (a, b, c) = (ev(&a), ev(&b), ev(&c));
            prop_assert!(a.divides(&a));
            if a.divides(&b) && b.divides(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.divides(&b) && b.divides(&c) {
                prop_assert!(a.divides(&c));
            }
            let s = a.add(&b);
            prop_assert_eq!(s.checked_sub(&b), Some(a.clone()));
            prop_assert_eq!(s.total_degree(), a.total_degree() + b.total_degree());
        }
    }
}
