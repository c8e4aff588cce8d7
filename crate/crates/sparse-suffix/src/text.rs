use crate::error::{Error, Result};

/// Immutable byte text with 1-based indexing.
///
/// All positions in this crate are 1-based: the suffix starting at
/// position `i` is `T[i..=n]`, matching how positions are written in
/// input files and reports. The text itself is never counted against
/// the auxiliary-memory budget of any construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(bytes: Vec<u8>) -> Self {
        Text { bytes }
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Symbol at 1-based position `i`.
    #[inline]
    pub fn byte(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.bytes.len());
        self.bytes[i - 1]
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Length of the suffix starting at 1-based position `i`.
    #[inline]
    pub fn suffix_len(&self, i: usize) -> usize {
        self.bytes.len() - i + 1
    }

    /// The bytes of the suffix starting at 1-based position `i`.
    pub fn suffix(&self, i: usize) -> &[u8] {
        &self.bytes[i - 1..]
    }

    /// Checks a 1-based position, returning it on success.
    pub fn check_pos(&self, pos: usize) -> Result<usize> {
        if pos == 0 || pos > self.bytes.len() {
            return Err(Error::PositionOutOfRange {
                pos,
                n: self.bytes.len(),
            });
        }
        Ok(pos)
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::new(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Text {
    fn from(b: &[u8]) -> Self {
        Text::new(b.to_vec())
    }
}
