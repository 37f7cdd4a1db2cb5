//! Maximum matchings, the Gallai–Edmonds decomposition, and M(G).

mod blossom;
mod gallai_edmonds;
mod m_stat;
pub mod oracle;

pub use blossom::{
    has_near_perfect_matching, has_perfect_matching, is_factor_critical, matching_number,
    maximum_matching, Matching,
};
pub use gallai_edmonds::{gallai_edmonds, GallaiEdmonds};
pub use m_stat::{m_statistic, MStatistic};
pub use oracle::{m_statistic_oracle, m_statistic_oracle_detailed, maximum_matchings, MOracle};
