#![allow(dead_code, clippy::excessive_precision)]

pub mod golden;
pub mod tables;
