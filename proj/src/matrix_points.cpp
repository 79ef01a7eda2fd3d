#include "clzeta/matrix_points.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "clzeta/dirichlet.hpp"
#include "clzeta/errors.hpp"
#include "clzeta/fmatrix.hpp"

namespace clzeta {

std::string to_string(Strategy s)
{
    switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::LinearInB: return "linear-in-B";
    case Strategy::Full: return "full";
    }
    return "auto";
}

Strategy parse_strategy(const std::string& text)
{
    if (text == "auto")
        return Strategy::Auto;
    if (text == "linear-in-B" || text == "linear")
        return Strategy::LinearInB;
    if (text == "full")
        return Strategy::Full;
    throw InvalidArgumentError("unknown strategy '" + text + "'");
}

BigInt gl_order(int n, long q)
{
    if (n < 0 || q < 2)
        throw InvalidArgumentError("gl_order needs n >= 0 and q >= 2");
    BigInt order = 1;
    const BigInt qn = pow(BigInt(q), static_cast<unsigned long>(n));
    for (int k = 0; k < n; ++k)
        order *= qn - pow(BigInt(q), static_cast<unsigned long>(k));
    return order;
}

namespace {

// q^e if it does not exceed limit, otherwise nothing.
bool bounded_power(long q, long e, std::uint64_t limit, std::uint64_t& out)
{
    std::uint64_t v = 1;
    for (long i = 0; i < e; ++i) {
        if (v > limit / static_cast<std::uint64_t>(q))
            return false;
        v *= static_cast<std::uint64_t>(q);
    }
    out = v;
    return v <= limit;
}

void set_from_index(FMatrix& m, std::uint64_t index, std::uint32_t q)
{
    auto& d = m.data();
    for (std::size_t k = d.size(); k-- > 0;) {
        d[k] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
}

// Next matrix in row-major odometer order (last entry least significant).
void advance(FMatrix& m)
{
    auto& d = m.data();
    for (std::size_t k = d.size(); k-- > 0;) {
        if (++d[k] < m.p())
            return;
        d[k] = 0;
    }
}

std::vector<FMatrix> powers(const FMatrix& a, int max_exp)
{
    std::vector<FMatrix> out;
    out.push_back(FMatrix::identity(a.n(), a.p()));
    for (int e = 1; e <= max_exp; ++e)
        out.push_back(out.back() * a);
    return out;
}

FMatrix eval_word(const RelationWord& w, const std::vector<FMatrix>& apow, const std::vector<FMatrix>& bpow)
{
    FMatrix out = apow[0];
    for (const auto& l : w.letters)
        out = out * (l.gen == Generator::A ? apow : bpow)[static_cast<std::size_t>(l.exp)];
    return out;
}

FMatrix eval_relation(const Relation& r, const std::vector<FMatrix>& apow, const std::vector<FMatrix>& bpow,
                      const PrimeField& field)
{
    FMatrix acc(apow[0].n(), field.p());
    for (const auto& t : r.terms)
        acc.add_scaled(eval_word(t.word, apow, bpow), field.reduce(t.coeff));
    return acc;
}

struct Context {
    const RelationSystem& system;
    int n;
    PrimeField field;
    int max_a;
    int max_b;
};

// Per shard: how many A admit a solution space of each dimension.
std::vector<std::uint64_t> linear_shard(const Context& ctx, std::uint64_t begin, std::uint64_t end)
{
    const int n = ctx.n;
    const int nn = n * n;
    const std::uint32_t q = ctx.field.p();
    std::vector<std::uint64_t> by_dim(static_cast<std::size_t>(nn) + 1, 0);
    std::vector<const Relation*> a_only;
    std::vector<const Relation*> linear;
    for (const auto& r : ctx.system.relations)
        (r.a_only() ? a_only : linear).push_back(&r);

    const std::vector<FMatrix> no_b{FMatrix::identity(n, q)};
    FMatrix a(n, q);
    set_from_index(a, begin, q);
    std::vector<std::uint32_t> sys;
    std::vector<std::uint32_t> work;
    const int cols = nn + 1;
    for (std::uint64_t idx = begin; idx < end; ++idx, advance(a)) {
        const auto apow = powers(a, ctx.max_a);
        bool ok = true;
        for (const Relation* r : a_only)
            if (!eval_relation(*r, apow, no_b, ctx.field).is_zero()) {
                ok = false;
                break;
            }
        if (!ok)
            continue;

        // Row (rel, i, j) of M vec(B) = -C, with column k*n+l for B_kl.
        const int rows = static_cast<int>(linear.size()) * nn;
        sys.assign(static_cast<std::size_t>(rows) * cols, 0);
        for (std::size_t ri = 0; ri < linear.size(); ++ri) {
            const int base = static_cast<int>(ri) * nn;
            for (const auto& t : linear[ri]->terms) {
                const std::uint32_t c = ctx.field.reduce(t.coeff);
                if (c == 0)
                    continue;
                FMatrix left = apow[0];
                FMatrix right = apow[0];
                bool seen_b = false;
                for (const auto& l : t.word.letters) {
                    if (l.gen == Generator::B)
                        seen_b = true;
                    else if (seen_b)
                        right = right * apow[static_cast<std::size_t>(l.exp)];
                    else
                        left = left * apow[static_cast<std::size_t>(l.exp)];
                }
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        auto* row = &sys[static_cast<std::size_t>(base + i * n + j) * cols];
                        if (!seen_b) {
                            row[nn] = ctx.field.sub(row[nn], ctx.field.mul(c, left(i, j)));
                            continue;
                        }
                        for (int k = 0; k < n; ++k) {
                            const std::uint32_t lik = ctx.field.mul(c, left(i, k));
                            if (lik == 0)
                                continue;
                            for (int l = 0; l < n; ++l)
                                row[k * n + l] = ctx.field.add(row[k * n + l], ctx.field.mul(lik, right(l, j)));
                        }
                    }
            }
        }
        work = sys;
        const int rank_aug = rank_mod_p(work, rows, cols, ctx.field);
        std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(rows) * nn);
        for (int r = 0; r < rows; ++r)
            std::copy_n(&sys[static_cast<std::size_t>(r) * cols], nn, &coeffs[static_cast<std::size_t>(r) * nn]);
        const int rank = rank_mod_p(coeffs, rows, nn, ctx.field);
        if (rank == rank_aug)
            ++by_dim[static_cast<std::size_t>(nn - rank)];
    }
    return by_dim;
}

// Per shard: the number of B for A in [begin, end).
std::vector<std::uint64_t> full_shard(const Context& ctx, std::uint64_t begin, std::uint64_t end)
{
    const int n = ctx.n;
    const std::uint32_t q = ctx.field.p();
    const std::uint64_t bcount = [&] {
        std::uint64_t v = 1;
        for (int k = 0; k < n * n; ++k)
            v *= q;
        return v;
    }();
    std::uint64_t total = 0;
    FMatrix a(n, q);
    set_from_index(a, begin, q);
    for (std::uint64_t idx = begin; idx < end; ++idx, advance(a)) {
        const auto apow = powers(a, ctx.max_a);
        FMatrix b(n, q);
        for (std::uint64_t j = 0; j < bcount; ++j, advance(b)) {
            const auto bpow = powers(b, ctx.max_b);
            bool ok = true;
            for (const auto& r : ctx.system.relations)
                if (!eval_relation(r, apow, bpow, ctx.field).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok)
                ++total;
        }
    }
    return {total};
}

} // namespace

CountResult count_matrix_points(const RelationSystem& system, int n, long q, const OracleOptions& options)
{
    if (n < 0)
        throw InvalidArgumentError("matrix size must be non-negative");
    if (q < 2 || q >= (1 << 15) || !is_prime(q))
        throw InvalidArgumentError("the matrix oracle supports prime q only");
    if (options.shards < 1)
        throw InvalidArgumentError("shard count must be at least 1");

    Strategy strategy = options.strategy;
    std::uint64_t acount = 0;
    std::uint64_t pairs = 0;
    const bool a_fits = bounded_power(q, static_cast<long>(n) * n, options.budget, acount);
    const bool pairs_fit = bounded_power(q, 2L * n * n, options.budget, pairs);
    if (strategy == Strategy::Auto)
        strategy = system.b_linear() && a_fits ? Strategy::LinearInB : Strategy::Full;
    if (strategy == Strategy::LinearInB) {
        if (!system.b_linear())
            throw InvalidArgumentError("linear-in-B strategy needs every relation to be at most linear in B");
        if (!a_fits)
            throw BudgetExceededError("q^(n^2) = " + to_string(pow(BigInt(q), static_cast<unsigned long>(n * n))) +
                                      " A-matrices exceed the budget of " + std::to_string(options.budget));
    } else if (!pairs_fit) {
        throw BudgetExceededError("q^(2n^2) = " + to_string(pow(BigInt(q), static_cast<unsigned long>(2 * n * n))) +
                                  " matrix pairs exceed the budget of " + std::to_string(options.budget));
    }

    if (n == 0)
        return {BigInt(1), strategy};

    const Context ctx{system, n, PrimeField(static_cast<std::uint32_t>(q)),
                      system.max_exponent(Generator::A), system.max_exponent(Generator::B)};
    const auto shards = static_cast<std::uint64_t>(options.shards);
    std::vector<std::vector<std::uint64_t>> partial(shards);
    auto run = [&](std::uint64_t s) {
        const std::uint64_t begin = acount * s / shards;
        const std::uint64_t end = acount * (s + 1) / shards;
        partial[s] = strategy == Strategy::LinearInB ? linear_shard(ctx, begin, end) : full_shard(ctx, begin, end);
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

    BigInt value = 0;
    for (const auto& part : partial)
        for (std::size_t dim = 0; dim < part.size(); ++dim)
            if (part[dim] != 0) {
                const BigInt weight = strategy == Strategy::LinearInB
                                          ? pow(BigInt(q), static_cast<unsigned long>(dim))
                                          : BigInt(1);
                value += BigInt(static_cast<unsigned long>(part[dim])) * weight;
            }
    return {value, strategy};
}

TruncSeries oracle_cl_series(const RelationSystem& system, long q, int n_max, const OracleOptions& options)
{
    if (n_max < 0)
        throw InvalidArgumentError("n_max must be non-negative");
    TruncSeries out(VarSpec::single(Var::t, n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        const BigInt count = count_matrix_points(system, n, q, options).value;
        const int e[1] = {n};
        out.add_term(e, make_rational(count, gl_order(n, q)));
    }
    return out;
}

} // namespace clzeta
