pub mod exprio;
pub mod gammamod;
pub mod ncore;
pub mod qexpops;
pub mod qfield;
pub mod repmod;
pub mod report;
