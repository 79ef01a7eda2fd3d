#include "clzeta/series.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "clzeta/errors.hpp"

namespace clzeta {

namespace {

constexpr std::size_t kMaxVars = 3;
// Above this many window points the dense accumulator is never used.
constexpr std::uint64_t kDenseVolumeLimit = std::uint64_t{1} << 24;

struct Term {
    std::uint64_t index;
    std::array<int, kMaxVars> exps;
    const Rational* coeff;
};

std::vector<Term> unpack(const VarSpec& spec, const std::map<std::uint64_t, Rational>& terms)
{
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& [index, c] : terms) {
        Term term{index, {0, 0, 0}, &c};
        auto exps = spec.decode(index);
        std::copy(exps.begin(), exps.end(), term.exps.begin());
        out.push_back(term);
    }
    return out;
}

bool fits(const VarSpec& spec, const Term& a, const Term& b)
{
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (a.exps[i] + b.exps[i] >= spec.trunc(i))
            return false;
    return true;
}

double density(const TruncSeries& a)
{
    return static_cast<double>(a.term_count()) / static_cast<double>(a.spec().volume());
}

void require_same_spec(const TruncSeries& a, const TruncSeries& b)
{
    if (!(a.spec() == b.spec()))
        throw IncompatibleSpecError("series have different variable specs");
}

} // namespace

char var_name(Var v)
{
    switch (v) {
    case Var::t: return 't';
    case Var::u: return 'u';
    case Var::q: return 'q';
    }
    return '?';
}

Var parse_var(std::string_view name)
{
    if (name == "t")
        return Var::t;
    if (name == "u")
        return Var::u;
    if (name == "q")
        return Var::q;
    throw InvalidArgumentError("unknown variable '" + std::string(name) + "'");
}

VarSpec::VarSpec(std::vector<Var> vars, std::vector<int> trunc)
    : vars_(std::move(vars)), trunc_(std::move(trunc))
{
    if (vars_.size() != trunc_.size())
        throw InvalidArgumentError("one truncation order per variable is required");
    if (vars_.size() > kMaxVars)
        throw InvalidArgumentError("at most three variables are supported");
    std::set<Var> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size())
        throw InvalidArgumentError("variable names must be distinct");
    stride_.assign(vars_.size(), 1);
    volume_ = 1;
    for (std::size_t i = vars_.size(); i-- > 0;) {
        if (trunc_[i] < 1)
            throw InvalidArgumentError("truncation orders must be at least 1");
        stride_[i] = volume_;
        volume_ *= static_cast<std::uint64_t>(trunc_[i]);
    }
}

std::optional<std::size_t> VarSpec::index_of(Var v) const
{
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t VarSpec::require_index(Var v) const
{
    auto idx = index_of(v);
    if (!idx)
        throw IncompatibleSpecError(std::string("variable '") + var_name(v) + "' is not in the spec");
    return *idx;
}

bool VarSpec::in_window(std::span<const int> exps) const
{
    if (exps.size() != vars_.size())
        return false;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 || exps[i] >= trunc_[i])
            return false;
    return true;
}

std::uint64_t VarSpec::encode(std::span<const int> exps) const
{
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        index += static_cast<std::uint64_t>(exps[i]) * stride_[i];
    return index;
}

std::vector<int> VarSpec::decode(std::uint64_t index) const
{
    std::vector<int> exps(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        exps[i] = static_cast<int>(index / stride_[i]);
        index %= stride_[i];
    }
    return exps;
}

VarSpec VarSpec::without(Var v) const
{
    std::vector<Var> vars;
    std::vector<int> trunc;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == v)
            continue;
        vars.push_back(vars_[i]);
        trunc.push_back(trunc_[i]);
    }
    return VarSpec(std::move(vars), std::move(trunc));
}

TruncSeries TruncSeries::constant(VarSpec spec, const Rational& c)
{
    TruncSeries s(std::move(spec));
    s.add_indexed(0, c);
    return s;
}

TruncSeries TruncSeries::monomial(VarSpec spec, const Rational& c, std::span<const int> exps)
{
    TruncSeries s(std::move(spec));
    if (exps.size() != s.spec_.size())
        throw InvalidArgumentError("exponent vector length does not match the spec");
    s.add_term(exps, c);
    return s;
}

TruncSeries TruncSeries::variable(VarSpec spec, Var v)
{
    std::vector<int> exps(spec.size(), 0);
    exps[spec.require_index(v)] = 1;
    return monomial(std::move(spec), 1, exps);
}

Rational TruncSeries::coeff(std::span<const int> exps) const
{
    if (!spec_.in_window(exps))
        throw OutOfWindowError("exponent vector outside the truncation window");
    auto it = terms_.find(spec_.encode(exps));
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::add_term(std::span<const int> exps, const Rational& c)
{
    if (!spec_.in_window(exps))
        return;
    add_indexed(spec_.encode(exps), c);
}

void TruncSeries::add_indexed(std::uint64_t index, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::vector<std::pair<std::vector<int>, Rational>> TruncSeries::terms() const
{
    std::vector<std::pair<std::vector<int>, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [index, c] : terms_)
        out.emplace_back(spec_.decode(index), c);
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other)
{
    require_same_spec(*this, other);
    for (const auto& [index, c] : other.terms_)
        add_indexed(index, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other)
{
    require_same_spec(*this, other);
    for (const auto& [index, c] : other.terms_)
        add_indexed(index, -c);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [index, coeff] : terms_)
        coeff *= c;
    return *this;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries out(*this);
    for (auto& [index, c] : out.terms_)
        c = -c;
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    require_same_spec(a, b);
    const VarSpec& spec = a.spec();
    TruncSeries out(spec);
    if (a.is_zero() || b.is_zero())
        return out;

    const auto ta = unpack(spec, a.terms_);
    const auto tb = unpack(spec, b.terms_);
    Rational prod;

    const bool dense = spec.volume() <= kDenseVolumeLimit && std::max(density(a), density(b)) > 0.5;
    if (dense) {
        std::vector<Rational> acc(spec.volume());
        std::vector<bool> touched(spec.volume(), false);
        for (const auto& x : ta)
            for (const auto& y : tb) {
                if (!fits(spec, x, y))
                    continue;
                const std::uint64_t index = x.index + y.index;
                mpq_mul(prod.get_mpq_t(), x.coeff->get_mpq_t(), y.coeff->get_mpq_t());
                acc[index] += prod;
                touched[index] = true;
            }
        for (std::uint64_t i = 0; i < acc.size(); ++i)
            if (touched[i] && acc[i] != 0)
                out.terms_.emplace_hint(out.terms_.end(), i, std::move(acc[i]));
        return out;
    }

    for (const auto& x : ta)
        for (const auto& y : tb) {
            if (!fits(spec, x, y))
                continue;
            mpq_mul(prod.get_mpq_t(), x.coeff->get_mpq_t(), y.coeff->get_mpq_t());
            out.add_indexed(x.index + y.index, prod);
        }
    return out;
}

TruncSeries series_inv(const TruncSeries& a)
{
    const VarSpec& spec = a.spec();
    auto it0 = a.terms_.find(0);
    if (it0 == a.terms_.end())
        throw NotInvertibleError("constant term is zero");
    const Rational inv0 = 1 / it0->second;

    // b_e = -(1/a_0) * sum_{0 < f <= e} a_f b_{e-f}, filled in increasing index order.
    std::vector<Term> ta = unpack(spec, a.terms_);
    ta.erase(ta.begin()); // constant term
    std::vector<Rational> b(spec.volume());
    b[0] = inv0;
    std::vector<int> e(spec.size(), 0);
    Rational sum, prod;
    for (std::uint64_t idx = 1; idx < spec.volume(); ++idx) {
        // odometer increment, last variable fastest
        for (std::size_t i = spec.size(); i-- > 0;) {
            if (++e[i] < spec.trunc(i))
                break;
            e[i] = 0;
        }
        sum = 0;
        for (const auto& f : ta) {
            if (f.index > idx)
                break;
            bool below = true;
            for (std::size_t i = 0; i < spec.size(); ++i)
                if (f.exps[i] > e[i]) {
                    below = false;
                    break;
                }
            if (!below)
                continue;
            const Rational& other = b[idx - f.index];
            if (other == 0)
                continue;
            mpq_mul(prod.get_mpq_t(), f.coeff->get_mpq_t(), other.get_mpq_t());
            sum += prod;
        }
        if (sum != 0)
            b[idx] = -sum * inv0;
    }
    TruncSeries out(spec);
    for (std::uint64_t i = 0; i < b.size(); ++i)
        if (b[i] != 0)
            out.terms_.emplace_hint(out.terms_.end(), i, std::move(b[i]));
    return out;
}

TruncSeries divide_by_one_minus(const TruncSeries& a, const Rational& c, std::span<const int> exps)
{
    const VarSpec& spec = a.spec();
    if (exps.size() != spec.size())
        throw InvalidArgumentError("exponent vector length does not match the spec");
    if (std::all_of(exps.begin(), exps.end(), [](int x) { return x == 0; }))
        throw InvalidArgumentError("divide_by_one_minus needs a non-constant monomial");
    if (!spec.in_window(exps) || c == 0)
        return a;

    const std::uint64_t step = spec.encode(exps);
    std::vector<Rational> b(spec.volume());
    for (const auto& [index, coeff] : a.terms_)
        b[index] = coeff;
    std::vector<int> e(spec.size(), 0);
    for (std::uint64_t idx = 0; idx < spec.volume(); ++idx) {
        if (idx > 0)
            for (std::size_t i = spec.size(); i-- > 0;) {
                if (++e[i] < spec.trunc(i))
                    break;
                e[i] = 0;
            }
        bool above = true;
        for (std::size_t i = 0; i < spec.size(); ++i)
            if (e[i] < exps[i]) {
                above = false;
                break;
            }
        if (above && b[idx - step] != 0)
            b[idx] += c * b[idx - step];
    }
    TruncSeries out(spec);
    for (std::uint64_t i = 0; i < b.size(); ++i)
        if (b[i] != 0)
            out.terms_.emplace_hint(out.terms_.end(), i, std::move(b[i]));
    return out;
}

TruncSeries shift_by_monomial(const TruncSeries& a, const Rational& c, std::span<const int> exps)
{
    const VarSpec& spec = a.spec();
    if (exps.size() != spec.size())
        throw InvalidArgumentError("exponent vector length does not match the spec");
    TruncSeries out(spec);
    if (c == 0)
        return out;
    for (const auto& [index, coeff] : a.terms_) {
        auto e = spec.decode(index);
        bool inside = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] += exps[i];
            if (e[i] < 0 || e[i] >= spec.trunc(i)) {
                inside = false;
                break;
            }
        }
        if (inside)
            out.terms_.emplace_hint(out.terms_.end(), spec.encode(e), coeff * c);
    }
    return out;
}

TruncSeries pochhammer(const TruncSeries& a, Var qvar, long n)
{
    if (n < 0)
        throw InvalidArgumentError("pochhammer length must be nonnegative");
    const VarSpec& spec = a.spec();
    std::vector<int> qstep(spec.size(), 0);
    qstep[spec.require_index(qvar)] = 1;
    const TruncSeries one = TruncSeries::constant(spec, 1);

    TruncSeries result = one;
    TruncSeries term = a;
    for (long k = 0; k < n && !term.is_zero(); ++k) {
        result = series_mul(result, one - term);
        term = shift_by_monomial(term, 1, qstep);
    }
    return result;
}

TruncSeries pochhammer(const TruncSeries& a, Var qvar, Infinity)
{
    const std::vector<int> zero(a.spec().size(), 0);
    if (a.coeff(zero) != 0)
        throw DivergentProductError("(a;q)_inf needs a with zero constant term");
    const VarSpec& spec = a.spec();
    const long qtrunc = spec.trunc(spec.require_index(qvar));
    // Every factor with k >= q-truncation is 1 inside the window.
    return pochhammer(a, qvar, qtrunc);
}

TruncSeries specialize(const TruncSeries& a, Var var, const Rational& value)
{
    const VarSpec& spec = a.spec();
    const std::size_t vi = spec.require_index(var);
    TruncSeries out(spec.without(var));

    std::vector<Rational> powers(static_cast<std::size_t>(spec.trunc(vi)));
    powers[0] = 1;
    for (std::size_t k = 1; k < powers.size(); ++k)
        powers[k] = powers[k - 1] * value;

    for (const auto& [index, c] : a.raw_terms()) {
        auto e = spec.decode(index);
        const int power = e[vi];
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(vi));
        out.add_term(e, c * powers[static_cast<std::size_t>(power)]);
    }
    return out;
}

TruncSeries retruncate(const TruncSeries& a, const VarSpec& spec)
{
    if (spec.vars() != a.spec().vars())
        throw IncompatibleSpecError("retruncate needs the same variables");
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (spec.trunc(i) > a.spec().trunc(i))
            throw OutOfWindowError("retruncate cannot enlarge the window");
    TruncSeries out(spec);
    for (const auto& [exps, c] : a.terms())
        out.add_term(exps, c);
    return out;
}

nlohmann::json to_json(const TruncSeries& a)
{
    nlohmann::json vars = nlohmann::json::array();
    for (Var v : a.spec().vars())
        vars.push_back(std::string(1, var_name(v)));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, c] : a.terms())
        terms.push_back(nlohmann::json::array({exps, to_string(c)}));
    return {{"vars", vars}, {"trunc", a.spec().truncs()}, {"terms", terms}};
}

TruncSeries series_from_json(const nlohmann::json& j)
{
    std::vector<Var> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back(parse_var(v.get<std::string>()));
    VarSpec spec(std::move(vars), j.at("trunc").get<std::vector<int>>());
    TruncSeries out(spec);
    for (const auto& term : j.at("terms")) {
        auto exps = term.at(0).get<std::vector<int>>();
        if (!spec.in_window(exps))
            throw OutOfWindowError("serialized term outside the truncation window");
        out.add_term(exps, parse_rational(term.at(1).get<std::string>()));
    }
    return out;
}

std::string to_string(const TruncSeries& a)
{
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : a.terms()) {
        Rational mag = abs(c);
        const bool negative = c < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var_name(a.spec().var(i));
            if (exps[i] > 1)
                mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << "*" << mono;
    }
    return os.str();
}

} // namespace clzeta
