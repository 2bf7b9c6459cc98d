use std::fmt;

/// One of the three truth values: `t` (true), `f` (false), or `b` (both
/// true and false).
///
/// The designated values are `t` and `b`; a valuation satisfies a formula
/// exactly when the formula evaluates to a designated value. The derived
/// ordering `t < f < b` is the enumeration order used wherever a least
/// witness is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    True,
    False,
    Both,
}

impl TruthValue {
    /// All three values, in enumeration order.
    pub const ALL: [TruthValue; 3] = [TruthValue::True, TruthValue::False, TruthValue::Both];

    /// The two classical values, in enumeration order.
    pub const CLASSICAL: [TruthValue; 2] = [TruthValue::True, TruthValue::False];

    /// Whether the value satisfies a formula (`t` or `b`).
    pub fn is_designated(self) -> bool {
        !matches!(self, TruthValue::False)
    }

    /// Whether the value is one of the two classical values.
    pub fn is_classical(self) -> bool {
        !matches!(self, TruthValue::Both)
    }

    pub fn from_bool(value: bool) -> TruthValue {
        if value {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TruthValue::True => 't',
            TruthValue::False => 'f',
            TruthValue::Both => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<TruthValue> {
        match c {
            't' => Some(TruthValue::True),
            'f' => Some(TruthValue::False),
            'b' => Some(TruthValue::Both),
            _ => None,
        }
    }

    /// Position in [`TruthValue::ALL`]; used to index truth tables.
    pub(crate) fn index(self) -> usize {
        match self {
            TruthValue::True => 0,
            TruthValue::False => 1,
            TruthValue::Both => 2,
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_one_non_designated_value() {
        let designated: Vec<_> = TruthValue::ALL
            .iter()
            .filter(|v| v.is_designated())
            .collect();
        assert_eq!(designated, [&TruthValue::True, &TruthValue::Both]);
        assert!(!TruthValue::False.is_designated());
    }

    #[test]
    fn enumeration_order_is_t_f_b() {
        assert!(TruthValue::True < TruthValue::False);
        assert!(TruthValue::False < TruthValue::Both);
    }

    #[test]
    fn char_roundtrip() {
        for v in TruthValue::ALL {
            assert_eq!(TruthValue::from_char(v.as_char()), Some(v));
        }
        assert_eq!(TruthValue::from_char('x'), None);
    }
}
