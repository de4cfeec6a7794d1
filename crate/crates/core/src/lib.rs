//! Exact monomial-ideal arithmetic and generic link instances of maximal minors.

pub mod ideal;
pub mod link;
pub mod par;
pub mod verify;
