pub mod cli;
pub mod gcp;
pub mod groups;
pub mod oracles;
pub mod relative;
pub mod words;
