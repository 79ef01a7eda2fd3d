#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clzeta/rational.hpp"

namespace clzeta {

/// Integer partition: weakly decreasing positive parts. The empty partition is zero.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidArgumentError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept;                     // |lambda|
    int length() const noexcept { return static_cast<int>(parts_.size()); } // l(lambda)
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// i-th part, 1-based, zero past the end.
    int part(int i) const noexcept;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct PartitionBounds {
    std::optional<int> max_part;
    std::optional<int> max_len;
};

/// Visits every partition of `size` within the bounds exactly once, in reverse
/// lexicographic order of parts.
void for_each_partition(int size, PartitionBounds bounds, const std::function<void(const Partition&)>& visit);
std::vector<Partition> gen_partitions(int size, PartitionBounds bounds = {});

Partition transpose(const Partition& lambda);

/// i -> m_i(lambda), only for parts that occur.
std::map<int, int> multiplicities(const Partition& lambda);

/// Side lengths of the successive Durfee squares.
Partition durfee_partition(const Partition& lambda);

/// lambda^2: 2i-1 copies of the part lambda_i, the type of End(N) for N of type lambda.
Partition square_type(const Partition& lambda);

/// sum_i (lambda'_i)^2 over all columns, or over the first `columns` columns.
long transpose_square_sum(const Partition& lambda);
long transpose_square_sum(const Partition& lambda, int columns);

/// |Aut_S(N)| for N of type lambda over a DVR with residue field of size q (q > 1).
Rational aut_order(const Partition& lambda, const Rational& q);
/// |End_S(N)|.
Rational end_order(const Partition& lambda, const Rational& q);
/// |End_S(N)[pi^b]|, b >= 1.
Rational end_torsion_order(const Partition& lambda, int b, const Rational& q);

nlohmann::json to_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);
/// Parses "4,3,1" (empty string is the empty partition).
Partition parse_partition(const std::string& text);
std::string to_string(const Partition& lambda);

} // namespace clzeta
