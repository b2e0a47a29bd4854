//! Std companion to `glweight-core`: JSON file formats, a persistent
//! thread-safe memo, parallel oracle runs, the shipped result table and the
//! `glweight` command line.

pub mod cli;
pub mod fixture;
pub mod format;
pub mod memo;
pub mod oracle;
