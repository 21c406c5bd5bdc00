//! Words over `{x, y}`, indices, exact-rational polynomials and the shuffle
//! product: the algebras `h ⊃ h¹ ⊃ h⁰`.

mod index;
mod poly;
mod shuffle;
mod word;

pub use index::{
    admissible_indices, admissible_up_to, compositions, index_from_word, word_from_index, z, Index, IndexStats,
};
pub(crate) use poly::write_linear_combination;
pub use poly::{q, qf, Poly};
pub use shuffle::{clear_shuffle_cache, shuffle, shuffle_poly, shuffle_single_z};
pub use word::{Letter, Word};
