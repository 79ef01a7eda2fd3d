#include "clzeta/pgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "clzeta/dirichlet.hpp"
#include "clzeta/errors.hpp"
#include "clzeta/fmatrix.hpp"

namespace clzeta {

namespace {

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

long ipow(long base, int exp)
{
    long v = 1;
    for (int i = 0; i < exp; ++i)
        v *= base;
    return v;
}

} // namespace

PGroupModule::PGroupModule(long p, Partition type) : p_(p), type_(std::move(type))
{
    if (p < 2 || p >= (1 << 15) || !is_prime(p))
        throw InvalidArgumentError("module prime must be a prime below 32768");
    for (int part : type_.parts()) {
        if (std::log2(static_cast<double>(p)) * part >= 31.0)
            throw InvalidArgumentError("cyclic factor p^" + std::to_string(part) + " is too large");
        moduli_.push_back(ipow(p, part));
    }
}

BigInt PGroupModule::order() const
{
    return pow(BigInt(p_), static_cast<unsigned long>(type_.size()));
}

std::uint64_t PGroupModule::element_count() const
{
    if (order() > BigInt(1UL << 20))
        throw BudgetExceededError("module of order " + to_string(order()) + " is too large to enumerate");
    return order().get_ui();
}

std::vector<long> PGroupModule::decode(std::uint64_t x) const
{
    std::vector<long> out(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        const auto m = static_cast<std::uint64_t>(moduli_[i]);
        out[i] = static_cast<long>(x % m);
        x /= m;
    }
    return out;
}

std::uint64_t PGroupModule::encode(const std::vector<long>& coords) const
{
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        x = x * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(mod(coords[i], moduli_[i]));
    return x;
}

std::uint64_t PGroupModule::add(std::uint64_t x, std::uint64_t y) const
{
    auto a = decode(x);
    const auto b = decode(y);
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = (a[i] + b[i]) % moduli_[i];
    return encode(a);
}

Endo PGroupModule::zero() const
{
    return Endo{rank(), std::vector<long>(static_cast<std::size_t>(rank() * rank()), 0)};
}

Endo PGroupModule::identity() const
{
    Endo e = zero();
    for (int i = 0; i < rank(); ++i)
        e(i, i) = 1 % moduli_[static_cast<std::size_t>(i)];
    return e;
}

Endo PGroupModule::compose(const Endo& f, const Endo& g) const
{
    Endo out = zero();
    const int r = rank();
    for (int i = 0; i < r; ++i) {
        const long m = moduli_[static_cast<std::size_t>(i)];
        for (int j = 0; j < r; ++j) {
            long acc = 0;
            for (int k = 0; k < r; ++k)
                acc = (acc + f(i, k) * g(k, j)) % m;
            out(i, j) = acc;
        }
    }
    return out;
}

Endo PGroupModule::add(const Endo& f, const Endo& g) const
{
    Endo out = zero();
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            out(i, j) = (f(i, j) + g(i, j)) % moduli_[static_cast<std::size_t>(i)];
    return out;
}

Endo PGroupModule::scale(const Endo& f, long c) const
{
    Endo out = zero();
    for (int i = 0; i < rank(); ++i) {
        const long m = moduli_[static_cast<std::size_t>(i)];
        for (int j = 0; j < rank(); ++j)
            out(i, j) = mod(mod(c, m) * f(i, j), m);
    }
    return out;
}

bool PGroupModule::is_zero(const Endo& f) const
{
    return std::all_of(f.c.begin(), f.c.end(), [](long x) { return x == 0; });
}

bool PGroupModule::is_endomorphism(const Endo& f) const
{
    if (f.rank != rank() || f.c.size() != static_cast<std::size_t>(rank() * rank()))
        return false;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) {
            const long v = f(i, j);
            if (v < 0 || v >= moduli_[static_cast<std::size_t>(i)])
                return false;
            const int gap = std::max(0, type_.part(i + 1) - type_.part(j + 1));
            if (v % ipow(p_, gap) != 0)
                return false;
        }
    return true;
}

bool PGroupModule::is_invertible(const Endo& f) const
{
    const int r = rank();
    if (r == 0)
        return true;
    const PrimeField field(static_cast<std::uint32_t>(p_));
    std::vector<std::uint32_t> m(static_cast<std::size_t>(r * r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m[static_cast<std::size_t>(i * r + j)] = field.reduce(f(i, j));
    return rank_mod_p(m, r, r, field) == r;
}

std::vector<long> PGroupModule::apply(const Endo& f, const std::vector<long>& x) const
{
    std::vector<long> out(static_cast<std::size_t>(rank()), 0);
    for (int i = 0; i < rank(); ++i) {
        const long m = moduli_[static_cast<std::size_t>(i)];
        long acc = 0;
        for (int j = 0; j < rank(); ++j)
            acc = (acc + f(i, j) * x[static_cast<std::size_t>(j)]) % m;
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::uint64_t PGroupModule::apply(const Endo& f, std::uint64_t x) const
{
    return encode(apply(f, decode(x)));
}

void for_each_endomorphism(const PGroupModule& m, const std::function<void(const Endo&)>& visit,
                           std::uint64_t budget)
{
    const int r = m.rank();
    const Partition& lambda = m.type();
    long digits = 0;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            digits += std::min(lambda.part(i), lambda.part(j));
    const BigInt total = pow(BigInt(m.p()), static_cast<unsigned long>(digits));
    if (total > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetExceededError("p^" + std::to_string(digits) + " endomorphisms exceed the budget of " +
                                  std::to_string(budget));

    // Entry (i, j) = step * digit with digit < range.
    std::vector<long> step(static_cast<std::size_t>(r * r));
    std::vector<long> range(static_cast<std::size_t>(r * r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const int li = lambda.part(i + 1);
            const int lj = lambda.part(j + 1);
            step[static_cast<std::size_t>(i * r + j)] = ipow(m.p(), std::max(0, li - lj));
            range[static_cast<std::size_t>(i * r + j)] = ipow(m.p(), std::min(li, lj));
        }
    Endo e = m.zero();
    std::vector<long> digit(e.c.size(), 0);
    while (true) {
        visit(e);
        std::size_t k = digit.size();
        while (k-- > 0) {
            if (++digit[k] < range[k]) {
                e.c[k] = digit[k] * step[k];
                break;
            }
            digit[k] = 0;
            e.c[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1))
            return;
    }
}

std::vector<Endo> all_endomorphisms(const PGroupModule& m, std::uint64_t budget)
{
    std::vector<Endo> out;
    for_each_endomorphism(m, [&](const Endo& e) { out.push_back(e); }, budget);
    return out;
}

BigInt enumerate_endomorphisms(const PGroupModule& m, EndoMode mode, std::uint64_t budget)
{
    if (mode.kind == EndoMode::Kind::Torsion && mode.b < 1)
        throw InvalidArgumentError("torsion exponent b must be at least 1");
    const long pb = mode.kind == EndoMode::Kind::Torsion ? ipow(m.p(), std::min(mode.b, 31)) : 1;
    std::uint64_t count = 0;
    for_each_endomorphism(m, [&](const Endo& e) {
        switch (mode.kind) {
        case EndoMode::Kind::All:
            ++count;
            break;
        case EndoMode::Kind::Invertible:
            if (m.is_invertible(e))
                ++count;
            break;
        case EndoMode::Kind::Torsion:
            if (m.is_zero(m.scale(e, pb)))
                ++count;
            break;
        }
    }, budget);
    return BigInt(static_cast<unsigned long>(count));
}

Rational module_groupoid_count(long p, int k, std::uint64_t budget)
{
    if (k < 0)
        throw InvalidArgumentError("module length must be non-negative");
    Rational total = 0;
    for (const auto& lambda : gen_partitions(k)) {
        const PGroupModule m(p, lambda);
        std::uint64_t all = 0;
        std::uint64_t inv = 0;
        for_each_endomorphism(m, [&](const Endo& e) {
            ++all;
            if (m.is_invertible(e))
                ++inv;
        }, budget);
        total += make_rational(BigInt(static_cast<unsigned long>(all)), BigInt(static_cast<unsigned long>(inv)));
    }
    return total;
}

long conj_classes_aut(const PGroupModule& m, std::uint64_t budget)
{
    std::vector<Endo> group;
    for_each_endomorphism(m, [&](const Endo& e) {
        if (m.is_invertible(e)) {
            if (group.size() >= budget)
                throw BudgetExceededError("automorphism group exceeds the budget of " + std::to_string(budget));
            group.push_back(e);
        }
    });
    std::map<Endo, std::size_t> index;
    for (std::size_t i = 0; i < group.size(); ++i)
        index.emplace(group[i], i);

    const Endo id = m.identity();
    std::vector<Endo> inverse(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
        Endo prev = id;
        Endo cur = group[i];
        while (cur != id) {
            prev = cur;
            cur = m.compose(cur, group[i]);
        }
        inverse[i] = prev;
    }

    std::vector<bool> seen(group.size(), false);
    long classes = 0;
    for (std::size_t g = 0; g < group.size(); ++g) {
        if (seen[g])
            continue;
        ++classes;
        for (std::size_t h = 0; h < group.size(); ++h)
            seen[index.at(m.compose(m.compose(group[h], group[g]), inverse[h]))] = true;
    }
    return classes;
}

Rational surj_prob_closed_form(const PGroupModule& m, int d)
{
    if (d < 0)
        throw InvalidArgumentError("number of elements must be non-negative");
    const int r = m.rank();
    if (d < r)
        return Rational(0);
    const Rational x = make_rational(1, m.p());
    return qpochhammer(pow(x, d - r + 1), x, r);
}

double nonsurjection_bound(const PGroupModule& m, int d)
{
    const double size = m.order().get_d();
    return 2.0 * size * std::log(size) * std::pow(2.0, -d);
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& s, std::uint64_t x) { return (s[x >> 6] >> (x & 63)) & 1U; }
void set(Bits& s, std::uint64_t x) { s[x >> 6] |= std::uint64_t{1} << (x & 63); }

class SubgroupCounter {
public:
    SubgroupCounter(const PGroupModule& m) : m_(m), size_(m.element_count()) {}

    // Number of k-tuples that extend h to a generating set.
    std::uint64_t count(const Bits& h, std::uint64_t h_size, int k)
    {
        if (h_size == size_) {
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

        const auto members = elements(h);
        Bits covered(h.size(), 0);
        std::uint64_t total = 0;
        for (std::uint64_t v = 0; v < size_; ++v) {
            if (test(covered, v))
                continue;
            // Every element of the coset v + H generates the same subgroup together with H.
            for (std::uint64_t x : members)
                set(covered, m_.add(x, v));
            Bits next = h;
            std::uint64_t next_size = h_size;
            std::uint64_t mult = v;
            while (!test(h, mult)) {
                for (std::uint64_t x : members) {
                    const std::uint64_t y = m_.add(x, mult);
                    if (!test(next, y)) {
                        set(next, y);
                        ++next_size;
                    }
                }
                mult = m_.add(mult, v);
            }
            total += h_size * count(next, next_size, k - 1);
        }
        memo_.emplace(key, total);
        return total;
    }

    std::uint64_t size() const { return size_; }

private:
    std::vector<std::uint64_t> elements(const Bits& h) const
    {
        std::vector<std::uint64_t> out;
        for (std::uint64_t x = 0; x < size_; ++x)
            if (test(h, x))
                out.push_back(x);
        return out;
    }

    const PGroupModule& m_;
    std::uint64_t size_;
    std::map<std::pair<Bits, int>, std::uint64_t> memo_;
};

} // namespace

SurjProb surj_prob(const PGroupModule& m, int d, std::uint64_t budget)
{
    SurjProb out{std::nullopt, surj_prob_closed_form(m, d)};
    const BigInt tuples = pow(m.order(), static_cast<unsigned long>(d));
    if (tuples > BigInt(static_cast<unsigned long>(budget)))
        return out;
    SubgroupCounter counter(m);
    Bits trivial((counter.size() + 63) / 64, 0);
    set(trivial, 0);
    const std::uint64_t good = counter.count(trivial, 1, d);
    out.enumerated = make_rational(BigInt(static_cast<unsigned long>(good)), tuples);
    return out;
}

} // namespace clzeta
