//! Alternating sign matrices, their six-vertex images, and exact
//! `q`-weighted statistics by enumeration.

mod asm;
mod config;
mod enumerate;
mod oracle;

pub use asm::Asm;
pub use config::{
    asm_to_sixvertex, efp_event, sixvertex_to_asm, zero_block_event, HArrow, SixVertexConfig,
    VArrow, VertexType, WeightClass,
};
pub use enumerate::{
    count_by_minus_ones, enumerate_asms, enumerate_asms_with_first_row, max_enumeration_n, AsmIter,
    DEFAULT_MAX_N,
};
pub use oracle::{
    boundary_correlation, efp_indicator_disagreements, efp_oracle, efp_oracle_table,
    minus_one_histogram, partition_function, weighted_count, OracleRecord,
};
