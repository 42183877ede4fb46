//! Labels of the set S = {1, 2, 3, 4, 5, 13, 14, 24, 25, 35}.
//!
//! Cycle positions are 0-based here: position `i` is `v_{i+1}`. Label `F(i)`
//! (written `i+1`) sees `{i, i-2, i+2}`, label `C(i)` sees `{i, i+2}` and is
//! written with the two 1-based positions in increasing order.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Numeric values of S in increasing order; a label's index into this table
/// is its bit in a [`LabelSet`].
pub const LABEL_VALUES: [u8; 10] = [1, 2, 3, 4, 5, 13, 14, 24, 25, 35];

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(u8);

impl Label {
    pub const ALL: [Label; 10] = [
        Label(0),
        Label(1),
        Label(2),
        Label(3),
        Label(4),
        Label(5),
        Label(6),
        Label(7),
        Label(8),
        Label(9),
    ];

    /// `F_{i+1}`.
    pub fn f(i: usize) -> Label {
        Label((i % 5) as u8)
    }

    /// `C_{i+1,i+3}`.
    pub fn c(i: usize) -> Label {
        let value = match i % 5 {
            0 => 13,
            1 => 24,
            2 => 35,
            3 => 14,
            _ => 25,
        };
        Label::from_value(value).unwrap()
    }

    pub fn from_value(value: u8) -> Option<Label> {
        LABEL_VALUES
            .iter()
            .position(|&x| x == value)
            .map(|i| Label(i as u8))
    }

    pub fn value(self) -> u8 {
        LABEL_VALUES[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// `Some(i)` for `F(i)`.
    pub fn f_index(self) -> Option<usize> {
        (self.0 < 5).then_some(self.0 as usize)
    }

    /// `Some(i)` for `C(i)`.
    pub fn c_index(self) -> Option<usize> {
        (0..5).find(|&i| Label::c(i) == self)
    }

    /// Cycle positions this label's vertex is adjacent to, as a 5-bit mask.
    pub fn q_mask(self) -> u8 {
        let bit = |i: usize| 1u8 << (i % 5);
        match (self.f_index(), self.c_index()) {
            (Some(i), _) => bit(i) | bit(i + 3) | bit(i + 2),
            (_, Some(i)) => bit(i) | bit(i + 2),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.value())
    }
}

/// A subset of S as a 10-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u16);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);
    pub const ALL: LabelSet = LabelSet(0x3ff);

    pub fn from_bits(bits: u16) -> LabelSet {
        LabelSet(bits & 0x3ff)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn single(l: Label) -> LabelSet {
        LabelSet(1 << l.0)
    }

    pub fn of(labels: &[Label]) -> LabelSet {
        labels.iter().fold(LabelSet::EMPTY, |s, &l| s.with(l))
    }

    pub fn pairs() -> LabelSet {
        LabelSet(0x3e0)
    }

    pub fn with(self, l: Label) -> LabelSet {
        LabelSet(self.0 | 1 << l.0)
    }

    pub fn without(self, l: Label) -> LabelSet {
        LabelSet(self.0 & !(1 << l.0))
    }

    pub fn contains(self, l: Label) -> bool {
        self.0 >> l.0 & 1 == 1
    }

    pub fn intersect(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    pub fn minus(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The label if this is a singleton.
    pub fn only(self) -> Option<Label> {
        (self.len() == 1).then(|| Label(self.0.trailing_zeros() as u8))
    }

    /// Members in increasing numeric order.
    pub fn iter(self) -> impl Iterator<Item = Label> {
        Label::ALL.into_iter().filter(move |&l| self.contains(l))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// One label per Grötzsch vertex, indexed by vertex number.
pub type Labelling = [Label; 11];

/// Formats as an array of singleton arrays, `[[25], [13], ...]`.
pub fn format_labelling(l: &Labelling) -> String {
    let cells: Vec<String> = l.iter().map(|x| format!("[{x}]")).collect();
    format!("[{}]", cells.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabellingParseError {
    #[error("expected '{expected}' at byte {offset}")]
    Expected { expected: char, offset: usize },
    #[error("'{0}' is not a label")]
    UnknownLabel(String),
    #[error("expected 11 labels, found {0}")]
    Count(usize),
}

/// Parses the array-of-singleton-arrays notation; whitespace between tokens
/// is ignored.
pub fn parse_labelling(text: &str) -> Result<Labelling, LabellingParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let expect = |pos: &mut usize, c: u8| {
        skip(pos);
        if bytes.get(*pos) == Some(&c) {
            *pos += 1;
            Ok(())
        } else {
            Err(LabellingParseError::Expected {
                expected: c as char,
                offset: *pos,
            })
        }
    };
    let mut labels = Vec::new();
    expect(&mut pos, b'[')?;
    loop {
        expect(&mut pos, b'[')?;
        skip(&mut pos);
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let token = &text[start..pos];
        let label = token
            .parse::<u8>()
            .ok()
            .and_then(Label::from_value)
            .ok_or_else(|| LabellingParseError::UnknownLabel(token.to_string()))?;
        labels.push(label);
        expect(&mut pos, b']')?;
        skip(&mut pos);
        if bytes.get(pos) == Some(&b',') {
            pos += 1;
            continue;
        }
        expect(&mut pos, b']')?;
        break;
    }
    skip(&mut pos);
    if pos != bytes.len() {
        return Err(LabellingParseError::Expected {
            expected: '\n',
            offset: pos,
        });
    }
    labels
        .clone()
        .try_into()
        .map_err(|_| LabellingParseError::Count(labels.len()))
}

impl FromStr for LabelSet {
    type Err = LabellingParseError;

    /// Comma-separated label values, e.g. `1,25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u8>()
                    .ok()
                    .and_then(Label::from_value)
                    .ok_or_else(|| LabellingParseError::UnknownLabel(t.to_string()))
            })
            .try_fold(LabelSet::EMPTY, |s, l| Ok(s.with(l?)))
    }
}
