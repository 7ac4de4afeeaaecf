//! Permutations, pattern occurrences and the brute-force oracle.

mod brute;
mod count;
mod funeq;
mod iter;
mod permutation;
mod profile;
mod qpoly;

pub use brute::{brute_count, expand_at_one, gen_poly, BruteTable, Oracle, DEFAULT_CEILING};
pub use count::{count_pattern, count_pattern_naive, inversions};
pub use funeq::{check_functional_equation, functional_equation_sides, FunctionalEquation};
pub use iter::{for_each_permutation, permutation_chunks, Permutations};
pub use permutation::{reduce, Pattern, Permutation};
pub use profile::{occurrence_profile, Family, OccurrenceProfile};
pub use qpoly::QPolynomial;
