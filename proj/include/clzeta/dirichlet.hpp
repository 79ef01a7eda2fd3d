#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "clzeta/rational.hpp"

namespace clzeta {

/// Prefix a_1..a_N of a formal Dirichlet series sum_n a_n n^{-s}.
class DirichletSeries {
public:
    /// All-zero prefix of length n >= 1.
    explicit DirichletSeries(long length);
    /// The multiplicative unit (a_1 = 1).
    static DirichletSeries unit(long length);

    long length() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// 1-based; throws OutOfWindowError beyond the prefix.
    const Rational& operator[](long n) const;
    Rational& operator[](long n);

    friend bool operator==(const DirichletSeries&, const DirichletSeries&) = default;

private:
    std::vector<Rational> coeffs_; // index 0 unused
};

enum class RingKind { Z, Zp, FqPoly, FqPowerSeries };

/// One of Z, Z_p, F_q[T], F_q[[T]].
struct BaseRing {
    RingKind kind;
    long parameter = 0; // p or q; unused for Z

    static BaseRing integers() { return {RingKind::Z, 0}; }
    static BaseRing padic(long p);
    static BaseRing poly(long q);
    static BaseRing power_series(long q);

    bool is_local() const noexcept { return kind == RingKind::Zp || kind == RingKind::FqPowerSeries; }
};

bool is_prime(long n);
/// n = p^k with p prime, k >= 1.
bool is_prime_power(long n);
std::vector<long> primes_up_to(long n);

/// a_n(fg) = sum_{de = n} a_d(f) a_e(g), truncated to the shorter length.
DirichletSeries dir_mul(const DirichletSeries& f, const DirichletSeries& g);

/// f(ms + n): a_{j^m}(g) = a_j(f) j^{-n}, other coefficients zero. m >= 1.
DirichletSeries shift(const DirichletSeries& f, long m, long n);

/// Prefix of the Dedekind zeta function.
DirichletSeries dedekind_zeta(const BaseRing& ring, long length);

/// Product of local factors, each with a_1 = 1 (NonUnitFactorError otherwise).
DirichletSeries euler_product(std::span<const DirichletSeries> factors, long length);

/// Residue cardinalities of the maximal ideals of a global ring with norm <= bound,
/// listed with multiplicity (F_q[T] has several places of the same norm).
std::vector<long> maximal_ideal_norms(const BaseRing& ring, long bound);

/// Cohen-Lenstra zeta of a local Dedekind ring: 1/(q^{-1-s}; q^{-1})_inf.
DirichletSeries clzeta_base(const BaseRing& ring, long length);

/// Cohen-Lenstra zeta of S[T] for S = Z or F_q[T]: prod_{i,j>=1} zeta_S(is + j - 1).
DirichletSeries clzeta_ZT(const BaseRing& ring, long length);

/// p^{-ks} coefficient of prod_{i,j>=1} 1/(1 - p^{1-is-j}).
Rational an_local(long p, long k);

nlohmann::json to_json(const DirichletSeries& f);
DirichletSeries dirichlet_from_json(const nlohmann::json& j);

} // namespace clzeta
