//! Runs the Rust listings of the guide in `book/` as doc tests, so the book
//! cannot drift from the library.

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}

    #[doc = include_str!("../../../book/src/networks.md")]
    mod networks {}

    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}

    #[doc = include_str!("../../../book/src/feasibility.md")]
    mod feasibility {}

    #[doc = include_str!("../../../book/src/probability.md")]
    mod probability {}

    #[doc = include_str!("../../../book/src/solving.md")]
    mod solving {}

    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}

    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
