use std::collections::BTreeSet;

use crate::coord::{rat, Rational};
use crate::grid::{normalize_path, GridPath, GridPoint, Orientation};

/// Book-keeping of occupied grid-lines on a rational plane, so that new
/// lines can always be squeezed in next to existing ones.
#[derive(Clone, Debug, Default)]
pub(crate) struct Canvas {
    vertical: BTreeSet<Rational>,
    horizontal: BTreeSet<Rational>,
}

impl Canvas {
    pub fn new() -> Self {
        Self::default()
    }

    fn lines(&mut self, o: Orientation) -> &mut BTreeSet<Rational> {
        match o {
            Orientation::Vertical => &mut self.vertical,
            Orientation::Horizontal => &mut self.horizontal,
        }
    }

    pub fn mark(&mut self, o: Orientation, c: Rational) {
        self.lines(o).insert(c);
    }

    /// An unused line strictly between `from` and `to` with no used line
    /// between it and `from`.
    pub fn fresh_between(&mut self, o: Orientation, from: &Rational, to: &Rational) -> Rational {
        assert!(from != to, "empty range for a fresh line");
        let set = self.lines(o);
        let nearest = if from < to {
            set.range((std::ops::Bound::Excluded(from), std::ops::Bound::Excluded(to))).next()
        } else {
            set.range((std::ops::Bound::Excluded(to), std::ops::Bound::Excluded(from))).next_back()
        };
        let stop = nearest.unwrap_or(to).clone();
        let c = (from.clone() + stop) / rat(2);
        set.insert(c.clone());
        c
    }

    /// An unused line beyond every used one, above if `up`.
    pub fn fresh_outside(&mut self, o: Orientation, up: bool) -> Rational {
        let set = self.lines(o);
        let c = if up {
            set.last().map_or(rat(0), |m| m.clone() + rat(1))
        } else {
            set.first().map_or(rat(0), |m| m.clone() - rat(1))
        };
        set.insert(c.clone());
        c
    }
}

pub(crate) fn pt(x: &Rational, y: &Rational) -> GridPoint<Rational> {
    GridPoint::new(x.clone(), y.clone())
}

pub(crate) fn rpath(points: &[GridPoint<Rational>]) -> GridPath<Rational> {
    normalize_path(points).expect("constructed corners are rectilinear")
}
