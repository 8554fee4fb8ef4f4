//! homdesk — an exact computational homological algebra workbench.
//!
//! Everything here works over a prime field 𝔽_p with exact arithmetic: no
//! floats, no tolerances. The layers build up from dense linear algebra
//! ([`exactfield`]) through finite-dimensional algebras and their module
//! categories ([`algebra`], [`modcat`]), the restriction/induction/coinduction
//! adjunctions along an algebra morphism ([`adjunction`]), cotorsion-pair
//! oracles and Salce-style approximation conversions ([`cotorsion`]), the
//! pullback/pushout tower constructions that lift complete cotorsion pairs
//! along a ring morphism together with Bongartz-style (co)tilting towers
//! ([`towers`]), and a curved differential graded layer where contraacyclic
//! and coacyclic membership become decidable at desk scale ([`cdg`]).
//!
//! Every construction returns *certificates* — explicit matrices, short exact
//! sequences, and towers — that can be re-verified independently of the code
//! that produced them; the [`cli`] layer exposes that as a recheck mode.

pub mod algebra;
pub mod adjunction;
pub mod cdg;
pub mod cli;
pub mod cotorsion;
pub mod exactfield;
pub mod fixtures;
pub mod modcat;
pub mod towers;
