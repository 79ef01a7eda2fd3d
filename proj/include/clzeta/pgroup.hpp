#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clzeta/partition.hpp"
#include "clzeta/rational.hpp"

namespace clzeta {

/// Endomorphism of N = (+)_i Z/p^{lambda_i}. Entry (i, j) is the e_i-coordinate of the
/// image of e_j, read mod p^{lambda_i} and divisible by p^{max(0, lambda_i - lambda_j)}.
struct Endo {
    int rank = 0;
    std::vector<long> c; // row-major, rank x rank

    long operator()(int i, int j) const { return c[static_cast<std::size_t>(i * rank + j)]; }
    long& operator()(int i, int j) { return c[static_cast<std::size_t>(i * rank + j)]; }

    friend auto operator<=>(const Endo&, const Endo&) = default;
};

/// The finite abelian p-group (+)_i Z/p^{lambda_i}, i.e. a module of type lambda over Z_p.
class PGroupModule {
public:
    /// Throws InvalidArgumentError unless p is prime and every p^{lambda_i} < 2^31.
    PGroupModule(long p, Partition type);

    long p() const noexcept { return p_; }
    const Partition& type() const noexcept { return type_; }
    int rank() const noexcept { return type_.length(); }
    /// p^{lambda_i}, 0-based.
    long modulus(int i) const { return moduli_.at(static_cast<std::size_t>(i)); }
    BigInt order() const;

    /// Elements as mixed-radix integers, coordinate 0 most significant.
    /// Throws BudgetExceededError when |N| > 2^20.
    std::uint64_t element_count() const;
    std::vector<long> decode(std::uint64_t x) const;
    std::uint64_t encode(const std::vector<long>& coords) const;
    std::uint64_t add(std::uint64_t x, std::uint64_t y) const;

    Endo zero() const;
    Endo identity() const;
    /// f after g.
    Endo compose(const Endo& f, const Endo& g) const;
    Endo add(const Endo& f, const Endo& g) const;
    Endo scale(const Endo& f, long c) const;
    bool is_zero(const Endo& f) const;
    /// Checks the ranges and divisibility conditions.
    bool is_endomorphism(const Endo& f) const;
    /// Invertible iff the induced map on N/pN is.
    bool is_invertible(const Endo& f) const;
    std::vector<long> apply(const Endo& f, const std::vector<long>& x) const;
    std::uint64_t apply(const Endo& f, std::uint64_t x) const;

    friend bool operator==(const PGroupModule& a, const PGroupModule& b) { return a.p_ == b.p_ && a.type_ == b.type_; }

private:
    long p_;
    Partition type_;
    std::vector<long> moduli_;
};

struct EndoMode {
    enum class Kind { All, Invertible, Torsion };
    Kind kind = Kind::All;
    int b = 0; // for Torsion: endomorphisms killed by p^b

    static EndoMode all() { return {Kind::All, 0}; }
    static EndoMode invertible() { return {Kind::Invertible, 0}; }
    static EndoMode torsion(int b) { return {Kind::Torsion, b}; }
};

inline constexpr std::uint64_t kEndoBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kAutBudget = std::uint64_t{1} << 20;

/// Visits every endomorphism, digit by digit over the free entries.
/// Throws BudgetExceededError when p^{sum min(lambda_i, lambda_j)} exceeds the budget.
void for_each_endomorphism(const PGroupModule& m, const std::function<void(const Endo&)>& visit,
                           std::uint64_t budget = kEndoBudget);
std::vector<Endo> all_endomorphisms(const PGroupModule& m, std::uint64_t budget = kEndoBudget);

BigInt enumerate_endomorphisms(const PGroupModule& m, EndoMode mode, std::uint64_t budget = kEndoBudget);

/// sum_{|lambda| = k} |End N_lambda| / |Aut N_lambda| over modules of order p^k.
Rational module_groupoid_count(long p, int k, std::uint64_t budget = kEndoBudget);

/// Number of conjugacy classes of Aut(N), from an explicit orbit partition.
long conj_classes_aut(const PGroupModule& m, std::uint64_t budget = kAutBudget);

struct SurjProb {
    std::optional<Rational> enumerated; // empty when |N|^d exceeds the budget
    Rational closed_form;
};

/// Probability that d uniform elements of N generate it.
SurjProb surj_prob(const PGroupModule& m, int d, std::uint64_t budget = kEndoBudget);

/// (p^{-(d-r+1)}; p^{-1})_r with r = l(lambda), and 0 when d < r.
Rational surj_prob_closed_form(const PGroupModule& m, int d);

/// 2 |N| ln|N| 2^{-d}.
double nonsurjection_bound(const PGroupModule& m, int d);

} // namespace clzeta
