pub mod critstruct;
pub mod engine;
pub mod oracle;
pub mod polycore;
pub mod resultants;
pub mod symforms;
