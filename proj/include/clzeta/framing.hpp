#pragma once

#include <cstdint>

#include "clzeta/pgroup.hpp"
#include "clzeta/rational.hpp"
#include "clzeta/relations.hpp"

namespace clzeta {

/// Relations on (A, B), the module N they act on, and the framing rank d.
/// A vector space F_p^n is the module of type (1^n).
struct FramingConfig {
    RelationSystem relations;
    PGroupModule module;
    int d = 0;
};

struct FramingStats {
    BigInt matrix_points; // |C_N(R)|: pairs in End(N)^2 satisfying R
    BigInt total;         // |C_N(R)| * |N|^d
    BigInt stable;        // (A, B, v) with v_1..v_d generating N as a module over A and B
    BigInt aut_order;     // |Aut(N)|
    BigInt quot_count;    // stable / aut_order
    bool divisible;       // aut_order divides stable
};

struct FramingOptions {
    std::uint64_t budget = std::uint64_t{1} << 24; // bound on |End(N)|^2
    int shards = 1;
};

/// Throws BudgetExceededError when |End(N)|^2 exceeds the budget or |N| > 64.
FramingStats stable_framing_stats(const FramingConfig& config, const FramingOptions& options = {});

} // namespace clzeta
