//! Garside normal forms and conjugacy search for the braid groups, through
//! the Artin monoid `B_n⁺` and the Birman–Ko–Lee monoid `BKL_n⁺`.
//!
//! ```
//! use garside::{ArtinMonoid, GroupOps, parse_element, summit_class, SearchOptions};
//!
//! let g = ArtinMonoid::new(3).unwrap();
//! let a = parse_element(&g, "s1^3 s2").unwrap();
//! let class = summit_class(&g, &a, &SearchOptions::default()).unwrap();
//! assert_eq!(class.len(), 2);
//! assert_eq!(g.exponent_sum(&a), 4);
//! ```

pub mod artin;
pub mod bench;
pub mod bkl;
pub mod census;
pub mod conjugacy;
pub mod element;
pub mod error;
pub mod structure;
pub mod word;

pub use artin::{ArtinMonoid, Permutation};
pub use bkl::{BklMonoid, NcPartition};
pub use conjugacy::{
    are_conjugate, ascend_infimum, ascend_summit, conjugate_class_ge, elrifai_morton_class_ge,
    elrifai_morton_summit_class, lcm_with_positive, minimal_conjugator_ge, minimal_conjugator_sum,
    minimal_simple_set_ge, minimal_simple_set_sum, summit_class, Algorithm, ClassMode, Conjugacy, ConjugacyGraph,
    MinimalSimpleSet, SearchOptions, SearchStats,
};
pub use element::{GroupElement, GroupOps, PositiveElement, Token, KEY_VERSION};
pub use error::{Error, Result};
pub use structure::{enumerate_simples, AtomId, Garside};
pub use word::{band_to_artin, evaluate, format_element, parse_element, parse_word, MonoidKind, WordExpr};

pub type ArtinBraid = GroupElement<Permutation>;
pub type BandBraid = GroupElement<NcPartition>;
