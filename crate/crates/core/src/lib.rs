//! Inner edit distance of regular languages given by NFAs.
//!
//! The distance of a language with at least two words is the smallest edit
//! (Levenshtein) distance between two distinct words of it. The fast method
//! is [`dist_best_inp_alter`], which intersects the language with its image
//! under an input-altering, error-counting transducer one error level at a
//! time. The remaining algorithms, the transducer machinery they rely on,
//! and brute-force oracles are exposed for comparison and testing.

pub mod alphabet;
pub mod bench;
pub mod distance;
pub mod edit;
pub mod error;
pub mod families;
pub mod grail;
pub mod nfa;
pub mod oracle;
pub mod product;
pub mod transducer;

pub use alphabet::{Alphabet, Label, Symbol, Word};
pub use distance::{
    dist_best_inp_alter, dist_err_correct, dist_err_detect, dist_first_inp_alter,
    dist_next_inp_alter, working_bound, Algorithm, DistanceOptions, DistanceResult,
};
pub use edit::{edit_distance_words, optimal_edit_string, EditKind, EditOp, EditString};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use families::{gen_family_a, gen_family_b};
pub use grail::{parse_nfa, serialize_nfa};
pub use nfa::{Nfa, StateId};
pub use product::{range_intersection_nfa, ProductNfa, ProductState};
pub use transducer::channel::{
    build_channel_transducer, build_iat_transducer, build_pruned_iat_transducer,
};
pub use transducer::compose::{correct_product, detect_product};
pub use transducer::functional::{check_functional, is_functional};
pub use transducer::{CounterState, Transducer};
