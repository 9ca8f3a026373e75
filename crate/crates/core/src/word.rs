//! The unsigned integer type that backs every address cell.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{NumCast, PrimInt, Unsigned};

/// An unsigned machine word usable as a block address.
///
/// The machine never does arithmetic on addresses beyond comparing them with
/// zero and converting to and from array indices, so any primitive unsigned
/// integer qualifies. The word width bounds the memory size: a `u16` machine
/// holds at most 65535 blocks.
pub trait Word:
    PrimInt + Unsigned + Hash + Default + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Converts a block index into a word, failing if it does not fit.
    fn from_index(index: usize) -> Option<Self> {
        <Self as NumCast>::from(index)
    }

    /// The word as a host index. Words never exceed the memory size, which
    /// itself was a `usize`, so this cannot truncate.
    fn index(self) -> usize {
        self.to_usize().expect("address word exceeds host usize")
    }
}

impl Word for u8 {}
impl Word for u16 {}
impl Word for u32 {}
impl Word for u64 {}
impl Word for usize {}
