pub mod field;
pub mod rootsystem;
pub mod matrix;
pub mod chevalley;
pub mod group;
pub mod centralizer;
pub mod scenarios;
