#include "clzeta/framing.hpp"

#include <map>
#include <thread>
#include <vector>

#include "clzeta/errors.hpp"

namespace clzeta {

namespace {

Endo eval_word(const PGroupModule& m, const RelationWord& w, const Endo& a, const Endo& b)
{
    Endo out = m.identity();
    for (const auto& l : w.letters)
        for (int e = 0; e < l.exp; ++e)
            out = m.compose(out, l.gen == Generator::A ? a : b);
    return out;
}

bool satisfies(const PGroupModule& m, const RelationSystem& system, const Endo& a, const Endo& b)
{
    for (const auto& r : system.relations) {
        Endo acc = m.zero();
        for (const auto& t : r.terms)
            acc = m.add(acc, m.scale(eval_word(m, t.word, a, b), t.coeff));
        if (!m.is_zero(acc))
            return false;
    }
    return true;
}

// Counts d-tuples generating N as a module over the operators, memoized on the
// submodule generated so far (a bitmask, |N| <= 64).
class StableCounter {
public:
    StableCounter(const PGroupModule& m, const Endo& a, const Endo& b) : size_(m.element_count())
    {
        add_.assign(size_ * size_, 0);
        for (std::uint64_t x = 0; x < size_; ++x)
            for (std::uint64_t y = 0; y < size_; ++y)
                add_[x * size_ + y] = static_cast<std::uint8_t>(m.add(x, y));
        for (std::uint64_t x = 0; x < size_; ++x) {
            act_a_.push_back(static_cast<std::uint8_t>(m.apply(a, x)));
            act_b_.push_back(static_cast<std::uint8_t>(m.apply(b, x)));
        }
        full_ = size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
    }

    std::uint64_t count(std::uint64_t h, int k)
    {
        if (h == full_) {
            std::uint64_t v = 1;
            for (int i = 0; i < k; ++i)
                v *= size_;
            return v;
        }
        if (k == 0)
            return 0;
        const auto key = std::make_pair(h, k);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::uint64_t total = 0;
        for (std::uint64_t v = 0; v < size_; ++v)
            total += count(closure(h, v), k - 1);
        memo_.emplace(key, total);
        return total;
    }

    std::uint64_t full() const { return full_; }

private:
    std::uint64_t closure(std::uint64_t h, std::uint64_t v) const
    {
        if ((h >> v) & 1U)
            return h;
        std::vector<std::uint64_t> queue{v};
        h |= std::uint64_t{1} << v;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const std::uint64_t x = queue[i];
            auto push = [&](std::uint64_t y) {
                if (!((h >> y) & 1U)) {
                    h |= std::uint64_t{1} << y;
                    queue.push_back(y);
                }
            };
            push(act_a_[x]);
            push(act_b_[x]);
            for (std::uint64_t y = 0; y < size_; ++y)
                if ((h >> y) & 1U)
                    push(add_[x * size_ + y]);
        }
        return h;
    }

    std::uint64_t size_;
    std::uint64_t full_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> act_a_;
    std::vector<std::uint8_t> act_b_;
    std::map<std::pair<std::uint64_t, int>, std::uint64_t> memo_;
};

} // namespace

FramingStats stable_framing_stats(const FramingConfig& config, const FramingOptions& options)
{
    const PGroupModule& m = config.module;
    if (config.d < 0)
        throw InvalidArgumentError("framing rank must be non-negative");
    if (options.shards < 1)
        throw InvalidArgumentError("shard count must be at least 1");
    if (m.order() > 64)
        throw BudgetExceededError("framing statistics need |N| <= 64");
    const auto ends = all_endomorphisms(m, options.budget);
    const BigInt pairs = BigInt(static_cast<unsigned long>(ends.size())) * static_cast<unsigned long>(ends.size());
    if (pairs > BigInt(static_cast<unsigned long>(options.budget)))
        throw BudgetExceededError(to_string(pairs) + " operator pairs exceed the budget of " +
                                  std::to_string(options.budget));

    const std::uint64_t npairs = pairs.get_ui();
    const auto shards = static_cast<std::uint64_t>(options.shards);
    std::vector<std::uint64_t> points(shards, 0);
    std::vector<BigInt> stable(shards, 0);
    auto run = [&](std::uint64_t s) {
        const std::uint64_t begin = npairs * s / shards;
        const std::uint64_t end = npairs * (s + 1) / shards;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const Endo& a = ends[idx / ends.size()];
            const Endo& b = ends[idx % ends.size()];
            if (!satisfies(m, config.relations, a, b))
                continue;
            ++points[s];
            StableCounter counter(m, a, b);
            stable[s] += BigInt(static_cast<unsigned long>(counter.count(1, config.d)));
        }
    };
    if (shards == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t s = 0; s < shards; ++s)
            threads.emplace_back(run, s);
        for (auto& t : threads)
            t.join();
    }

    FramingStats out;
    out.matrix_points = 0;
    out.stable = 0;
    for (std::uint64_t s = 0; s < shards; ++s) {
        out.matrix_points += static_cast<unsigned long>(points[s]);
        out.stable += stable[s];
    }
    out.total = out.matrix_points * pow(m.order(), static_cast<unsigned long>(config.d));
    out.aut_order = enumerate_endomorphisms(m, EndoMode::invertible(), options.budget);
    out.divisible = out.stable % out.aut_order == 0;
    out.quot_count = out.stable / out.aut_order;
    return out;
}

} // namespace clzeta
