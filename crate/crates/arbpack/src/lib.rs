//! Documents, instance generation and command implementations behind the `arbpack` tool.

pub mod commands;
pub mod document;
pub mod gen;
