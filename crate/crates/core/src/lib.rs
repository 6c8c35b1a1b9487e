//! Exact combinatorics of even linkage classes of codimension-two subschemes.
//!
//! * [`intfn`] and [`character`]: finitely supported integer functions and
//!   admissible characters.
//! * [`domination`]: the domination order and its η/θ descriptions.
//! * [`linkage`]: linkage classes, subscheme models, double links and links.
//! * [`hilbert`]: Hilbert functions and twist-level resolution transforms.
//! * [`oracle`]: exhaustive checks over finite windows.

pub mod character;
pub mod domination;
pub mod error;
pub mod fixtures;
pub mod hilbert;
pub mod intfn;
pub mod linkage;
pub mod oracle;
pub mod poset;

pub use character::{classify, AdmissibleCharacter, Character, Classification};
pub use domination::{BmInvariant, DominationWitness, NatFn};
pub use error::{DominationFailure, Error, EtaFailure, Result, ThetaFailure};
pub use hilbert::{CoreDelta, ResolutionData, ResolutionKind, TwistMultiset};
pub use intfn::{step, Connectivity, EventuallyConstant, ExtDegree, IntFn};
pub use linkage::{DerivedInvariants, DoubleLinkStep, LinkKind, LinkageClass, SubschemeModel};
pub use oracle::{Claim, ClaimReport, SearchWindow};
