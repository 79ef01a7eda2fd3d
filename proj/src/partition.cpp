#include "clzeta/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clzeta/errors.hpp"

namespace clzeta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidArgumentError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgumentError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const noexcept
{
    if (i < 1 || i > length())
        return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

namespace {

void recurse(int remaining, int cap, int len_left, std::vector<int>& parts,
             const std::function<void(const Partition&)>& visit)
{
    if (remaining == 0) {
        visit(Partition(parts));
        return;
    }
    if (len_left == 0)
        return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
        // the remaining parts are at most p each
        if (static_cast<long>(p) * len_left < remaining)
            break;
        parts.push_back(p);
        recurse(remaining - p, p, len_left - 1, parts, visit);
        parts.pop_back();
    }
}

} // namespace

void for_each_partition(int size, PartitionBounds bounds, const std::function<void(const Partition&)>& visit)
{
    if (size < 0)
        throw InvalidArgumentError("partition size must be nonnegative");
    const int cap = bounds.max_part.value_or(size);
    const int len = bounds.max_len.value_or(size);
    if (cap < 0 || len < 0)
        throw InvalidArgumentError("partition bounds must be nonnegative");
    std::vector<int> parts;
    recurse(size, cap, len, parts, visit);
}

std::vector<Partition> gen_partitions(int size, PartitionBounds bounds)
{
    std::vector<Partition> out;
    for_each_partition(size, bounds, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Partition transpose(const Partition& lambda)
{
    std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

std::map<int, int> multiplicities(const Partition& lambda)
{
    std::map<int, int> m;
    for (int part : lambda.parts())
        ++m[part];
    return m;
}

Partition durfee_partition(const Partition& lambda)
{
    std::vector<int> sides;
    std::vector<int> rest = lambda.parts();
    while (!rest.empty()) {
        int side = 0;
        while (side < static_cast<int>(rest.size()) && rest[static_cast<std::size_t>(side)] >= side + 1)
            ++side;
        sides.push_back(side);
        rest.erase(rest.begin(), rest.begin() + side);
    }
    return Partition(std::move(sides));
}

Partition square_type(const Partition& lambda)
{
    std::vector<int> parts;
    for (int i = 1; i <= lambda.length(); ++i)
        parts.insert(parts.end(), static_cast<std::size_t>(2 * i - 1), lambda.part(i));
    return Partition(std::move(parts));
}

long transpose_square_sum(const Partition& lambda)
{
    return transpose_square_sum(lambda, lambda.largest());
}

long transpose_square_sum(const Partition& lambda, int columns)
{
    const Partition t = transpose(lambda);
    long sum = 0;
    for (int i = 1; i <= std::min(columns, t.length()); ++i)
        sum += static_cast<long>(t.part(i)) * t.part(i);
    return sum;
}

namespace {

void require_q(const Rational& q)
{
    if (q <= 1)
        throw InvalidArgumentError("residue cardinality q must exceed 1");
}

} // namespace

Rational aut_order(const Partition& lambda, const Rational& q)
{
    require_q(q);
    Rational result = pow(q, transpose_square_sum(lambda));
    const Rational qinv = 1 / q;
    for (const auto& [part, mult] : multiplicities(lambda))
        result *= qpochhammer(qinv, qinv, mult);
    return result;
}

Rational end_order(const Partition& lambda, const Rational& q)
{
    require_q(q);
    return pow(q, transpose_square_sum(lambda));
}

Rational end_torsion_order(const Partition& lambda, int b, const Rational& q)
{
    require_q(q);
    if (b < 1)
        throw InvalidArgumentError("torsion exponent b must be at least 1");
    return pow(q, transpose_square_sum(lambda, b));
}

nlohmann::json to_json(const Partition& lambda)
{
    return lambda.parts();
}

Partition partition_from_json(const nlohmann::json& j)
{
    return Partition(j.get<std::vector<int>>());
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw InvalidArgumentError("bad partition part '" + item + "'");
        } catch (const std::logic_error&) {
            throw InvalidArgumentError("bad partition part '" + item + "'");
        }
    }
    return Partition(std::move(parts));
}

std::string to_string(const Partition& lambda)
{
    std::string out = "(";
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(lambda.parts()[i]);
    }
    return out + ")";
}

} // namespace clzeta
