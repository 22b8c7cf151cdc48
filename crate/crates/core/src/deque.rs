use alloc::vec;
use alloc::vec::Vec;

/// Fixed-capacity double-ended queue of stream positions.
///
/// Capacity is rounded up to a power of two so wrap-around is a mask. Pushing
/// beyond capacity is a logic error and panics in debug builds.
#[derive(Debug, Clone)]
pub struct IndexDeque {
    buf: Vec<u64>,
    head: usize,
    len: usize,
    mask: usize,
}

impl IndexDeque {
    pub fn with_capacity(cap: usize) -> Self {
        let size = cap.max(1).next_power_of_two();
        Self { buf: vec![0; size], head: 0, len: 0, mask: size - 1 }
    }

    #[inline(always)]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline(always)]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn capacity(&self) -> usize {
        self.buf.len()
    }

    #[inline(always)]
    pub fn front(&self) -> Option<u64> {
        if self.len == 0 {
            None
        } else {
            Some(self.buf[self.head])
        }
    }

    #[inline(always)]
    pub fn back(&self) -> Option<u64> {
        if self.len == 0 {
            None
        } else {
            Some(self.buf[(self.head + self.len - 1) & self.mask])
        }
    }

    #[inline(always)]
    pub fn push_back(&mut self, pos: u64) {
        debug_assert!(self.len < self.buf.len(), "IndexDeque overflow");
        self.buf[(self.head + self.len) & self.mask] = pos;
        self.len += 1;
    }

    #[inline(always)]
    pub fn pop_back(&mut self) -> Option<u64> {
        let b = self.back()?;
        self.len -= 1;
        Some(b)
    }

    #[inline(always)]
    pub fn pop_front(&mut self) -> Option<u64> {
        let f = self.front()?;
        self.head = (self.head + 1) & self.mask;
        self.len -= 1;
        Some(f)
    }

    pub fn clear(&mut self) {
        self.head = 0;
        self.len = 0;
    }

    /// Front to back.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |k| self.buf[(self.head + k) & self.mask])
    }
}
