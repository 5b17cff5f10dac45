pub mod codes;
pub mod gf2;
pub mod io;
pub mod perm;
pub mod pipeline;
