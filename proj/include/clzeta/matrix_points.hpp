#pragma once

#include <cstdint>
#include <string>

#include "clzeta/rational.hpp"
#include "clzeta/relations.hpp"
#include "clzeta/series.hpp"

namespace clzeta {

enum class Strategy { Auto, LinearInB, Full };

std::string to_string(Strategy s);
/// Accepts "auto", "linear-in-B" and "full".
Strategy parse_strategy(const std::string& text);

struct OracleOptions {
    /// Upper bound on the number of enumerated points: q^{n^2} A-matrices for the
    /// linear-in-B strategy, q^{2n^2} pairs for full enumeration.
    std::uint64_t budget = std::uint64_t{1} << 26;
    int shards = 1;
    Strategy strategy = Strategy::Auto;
};

struct CountResult {
    BigInt value;
    Strategy used;
};

/// |GL_n(F_q)| = prod_{k<n} (q^n - q^k).
BigInt gl_order(int n, long q);

/// Number of pairs (A, B) of n x n matrices over F_q (q prime) satisfying every relation.
/// The A-space is split into contiguous odometer ranges, one thread per shard.
CountResult count_matrix_points(const RelationSystem& system, int n, long q, const OracleOptions& options = {});

/// sum_{n <= n_max} |C_n| / |GL_n(F_q)| t^n, truncated at t^{n_max + 1}.
TruncSeries oracle_cl_series(const RelationSystem& system, long q, int n_max, const OracleOptions& options = {});

} // namespace clzeta
