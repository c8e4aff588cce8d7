//! Auxiliary-memory accounting in machine words.
//!
//! Construction data structures (pair trackers, per-round position sets,
//! power caches, sort worklists, tree nodes) register the words they hold
//! through [`charge`]. The counter is a model of algorithmic working
//! space, not process RSS: it deliberately excludes the read-only text
//! and counts logical words, so it is deterministic and reproducible
//! across platforms. `bench` and the space tests read [`peak_words`].
//!
//! Counters are thread-local; each thread accounts for its own runs.

use std::cell::Cell;

thread_local! {
    static CURRENT: Cell<usize> = const { Cell::new(0) };
    static PEAK: Cell<usize> = const { Cell::new(0) };
}

/// Words currently charged on this thread.
pub fn current_words() -> usize {
    CURRENT.with(|c| c.get())
}

/// High-water mark since the last [`reset`] on this thread.
pub fn peak_words() -> usize {
    PEAK.with(|c| c.get())
}

/// Zeroes both the current count and the peak.
///
/// Charges still alive from before the reset release harmlessly
/// (the counter saturates at zero).
pub fn reset() {
    CURRENT.with(|c| c.set(0));
    PEAK.with(|c| c.set(0));
}

fn add(words: usize) {
    CURRENT.with(|c| c.set(c.get() + words));
    let cur = current_words();
    PEAK.with(|p| {
        if cur > p.get() {
            p.set(cur);
        }
    });
}

fn sub(words: usize) {
    CURRENT.with(|c| c.set(c.get().saturating_sub(words)));
}

/// A charged block of auxiliary words, released on drop.
#[derive(Debug)]
pub struct Charge {
    words: usize,
}

/// Charges `words` against the thread's auxiliary-memory counter.
pub fn charge(words: usize) -> Charge {
    add(words);
    Charge { words }
}

impl Charge {
    /// Grows the charge in place (for structures that fill incrementally).
    pub fn grow(&mut self, additional: usize) {
        add(additional);
        self.words += additional;
    }

    pub fn words(&self) -> usize {
        self.words
    }
}

impl Drop for Charge {
    fn drop(&mut self) {
        sub(self.words);
    }
}
