#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clzeta/rational.hpp"

namespace clzeta {

/// Formal variables. u stands in for q^{-1} wherever a formal inverse is needed.
enum class Var : std::uint8_t { t, u, q };

char var_name(Var v);
Var parse_var(std::string_view name);

/// Ordered variables with an exclusive truncation bound on each exponent.
/// An empty VarSpec describes constants.
class VarSpec {
public:
    VarSpec() = default;
    VarSpec(std::vector<Var> vars, std::vector<int> trunc);

    static VarSpec single(Var v, int trunc) { return VarSpec({v}, {trunc}); }

    std::size_t size() const noexcept { return vars_.size(); }
    Var var(std::size_t i) const { return vars_.at(i); }
    int trunc(std::size_t i) const { return trunc_.at(i); }
    const std::vector<Var>& vars() const noexcept { return vars_; }
    const std::vector<int>& truncs() const noexcept { return trunc_; }

    std::optional<std::size_t> index_of(Var v) const;
    std::size_t require_index(Var v) const;

    /// Number of exponent vectors inside the window.
    std::uint64_t volume() const noexcept { return volume_; }
    std::uint64_t stride(std::size_t i) const { return stride_.at(i); }

    bool in_window(std::span<const int> exps) const;
    std::uint64_t encode(std::span<const int> exps) const;
    std::vector<int> decode(std::uint64_t index) const;

    VarSpec without(Var v) const;

    friend bool operator==(const VarSpec& a, const VarSpec& b)
    {
        return a.vars_ == b.vars_ && a.trunc_ == b.trunc_;
    }

private:
    std::vector<Var> vars_;
    std::vector<int> trunc_;
    std::vector<std::uint64_t> stride_;
    std::uint64_t volume_ = 1;
};

/// Truncated power series with exact rational coefficients. Terms outside the
/// window are dropped eagerly and zero coefficients are never stored.
///
/// Exponent vectors are kept as mixed-radix indices with the first variable most
/// significant, so iteration order is lexicographic in the exponent vector.
class TruncSeries {
public:
    explicit TruncSeries(VarSpec spec) : spec_(std::move(spec)) {}

    static TruncSeries constant(VarSpec spec, const Rational& c);
    static TruncSeries monomial(VarSpec spec, const Rational& c, std::span<const int> exps);
    /// The series consisting of the single variable v.
    static TruncSeries variable(VarSpec spec, Var v);

    const VarSpec& spec() const noexcept { return spec_; }

    /// Throws OutOfWindowError for exponents at or beyond the truncation.
    Rational coeff(std::span<const int> exps) const;
    Rational coeff(std::initializer_list<int> exps) const
    {
        return coeff(std::span<const int>(exps.begin(), exps.size()));
    }

    /// Adds c to the coefficient at exps; silently ignores exponents outside the window.
    void add_term(std::span<const int> exps, const Rational& c);

    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Sorted lexicographically by exponent vector.
    std::vector<std::pair<std::vector<int>, Rational>> terms() const;

    const std::map<std::uint64_t, Rational>& raw_terms() const noexcept { return terms_; }

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const Rational& c);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
    TruncSeries operator-() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b)
    {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

private:
    friend TruncSeries series_mul(const TruncSeries&, const TruncSeries&);
    friend TruncSeries series_inv(const TruncSeries&);
    friend TruncSeries divide_by_one_minus(const TruncSeries&, const Rational&, std::span<const int>);
    friend TruncSeries shift_by_monomial(const TruncSeries&, const Rational&, std::span<const int>);

    void add_indexed(std::uint64_t index, const Rational& c);

    VarSpec spec_;
    std::map<std::uint64_t, Rational> terms_;
};

/// Product truncated to the shared spec. Throws IncompatibleSpecError on mismatch.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse up to truncation. Throws NotInvertibleError for a zero constant term.
TruncSeries series_inv(const TruncSeries& a);

/// a / (1 - c * x^exps) for a non-constant monomial x^exps, in one linear pass.
TruncSeries divide_by_one_minus(const TruncSeries& a, const Rational& c, std::span<const int> exps);

/// c * x^exps * a.
TruncSeries shift_by_monomial(const TruncSeries& a, const Rational& c, std::span<const int> exps);

struct Infinity {};
inline constexpr Infinity INF{};

/// (a; q)_n = prod_{k<n} (1 - a q^k) where q is one of the spec's variables.
TruncSeries pochhammer(const TruncSeries& a, Var qvar, long n);

/// (a; q)_inf. Requires a to have zero constant term; throws DivergentProductError otherwise.
/// Only the factors that differ from 1 inside the window are multiplied.
TruncSeries pochhammer(const TruncSeries& a, Var qvar, Infinity);

/// Substitutes var := value and drops var from the spec.
TruncSeries specialize(const TruncSeries& a, Var var, const Rational& value);

/// Re-expresses a in a spec with the same variables and truncation bounds no larger
/// than a's; terms beyond the new window are dropped.
TruncSeries retruncate(const TruncSeries& a, const VarSpec& spec);

nlohmann::json to_json(const TruncSeries& a);
TruncSeries series_from_json(const nlohmann::json& j);

/// Human-readable rendering, e.g. "1 - t - t*q + t^2*q".
std::string to_string(const TruncSeries& a);

} // namespace clzeta
