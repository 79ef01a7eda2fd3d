#include "clzeta/dirichlet.hpp"

#include <algorithm>

#include "clzeta/errors.hpp"

namespace clzeta {

DirichletSeries::DirichletSeries(long length)
{
    if (length < 1)
        throw InvalidArgumentError("Dirichlet prefix length must be at least 1");
    coeffs_.assign(static_cast<std::size_t>(length) + 1, Rational(0));
}

DirichletSeries DirichletSeries::unit(long length)
{
    DirichletSeries f(length);
    f[1] = 1;
    return f;
}

const Rational& DirichletSeries::operator[](long n) const
{
    if (n < 1 || n > length())
        throw OutOfWindowError("Dirichlet index " + std::to_string(n) + " outside 1.." + std::to_string(length()));
    return coeffs_[static_cast<std::size_t>(n)];
}

Rational& DirichletSeries::operator[](long n)
{
    if (n < 1 || n > length())
        throw OutOfWindowError("Dirichlet index " + std::to_string(n) + " outside 1.." + std::to_string(length()));
    return coeffs_[static_cast<std::size_t>(n)];
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_prime_power(long n)
{
    if (n < 2)
        return false;
    long p = 2;
    while (n % p != 0)
        ++p;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

std::vector<long> primes_up_to(long n)
{
    std::vector<long> primes;
    if (n < 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        primes.push_back(i);
        for (long j = i * i; j <= n; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

BaseRing BaseRing::padic(long p)
{
    if (!is_prime(p))
        throw InvalidArgumentError("Z_p needs a prime p");
    return {RingKind::Zp, p};
}

BaseRing BaseRing::poly(long q)
{
    if (!is_prime_power(q))
        throw InvalidArgumentError("F_q[T] needs a prime power q");
    return {RingKind::FqPoly, q};
}

BaseRing BaseRing::power_series(long q)
{
    if (!is_prime_power(q))
        throw InvalidArgumentError("F_q[[T]] needs a prime power q");
    return {RingKind::FqPowerSeries, q};
}

DirichletSeries dir_mul(const DirichletSeries& f, const DirichletSeries& g)
{
    const long n = std::min(f.length(), g.length());
    DirichletSeries out(n);
    std::vector<long> support_g;
    for (long e = 1; e <= n; ++e)
        if (g[e] != 0)
            support_g.push_back(e);
    Rational prod;
    for (long d = 1; d <= n; ++d) {
        if (f[d] == 0)
            continue;
        for (long e : support_g) {
            if (d * e > n)
                break;
            mpq_mul(prod.get_mpq_t(), f[d].get_mpq_t(), g[e].get_mpq_t());
            out[d * e] += prod;
        }
    }
    return out;
}

DirichletSeries shift(const DirichletSeries& f, long m, long n)
{
    if (m < 1)
        throw InvalidArgumentError("shift needs m >= 1");
    DirichletSeries out(f.length());
    for (long j = 1;; ++j) {
        // k = j^m, stopping once it leaves the prefix
        long k = 1;
        bool overflow = false;
        for (long r = 0; r < m; ++r) {
            if (k > f.length() / j) {
                overflow = true;
                break;
            }
            k *= j;
        }
        if (overflow || k > f.length())
            break;
        if (f[j] != 0)
            out[k] = f[j] * pow(Rational(j), -n);
    }
    return out;
}

namespace {

// Adds c at every power Q^k (k >= 0) of the prefix, scaled by weight(k).
template <typename Weight>
DirichletSeries supported_on_powers(long Q, long length, Weight weight)
{
    DirichletSeries f(length);
    long n = 1;
    for (long k = 0; n <= length; ++k) {
        f[n] = weight(k);
        if (n > length / Q)
            break;
        n *= Q;
    }
    return f;
}

long mobius(long n)
{
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

// Number of monic irreducible polynomials of degree d over F_q.
long irreducible_count(long q, long d)
{
    BigInt total = 0;
    for (long e = 1; e <= d; ++e)
        if (d % e == 0)
            total += mobius(e) * pow(BigInt(q), static_cast<unsigned long>(d / e));
    total /= d;
    return total.get_si();
}

// Local factor prod_{j>=1} 1/(1 - Q^{1-j} Q^{-s}) = sum_m Q^{-ms}/(Q^{-1};Q^{-1})_m,
// resummed exactly by Euler's identity.
DirichletSeries resummed_local_factor(long Q, long length)
{
    const Rational x = make_rational(1, Q);
    return supported_on_powers(Q, length, [&](long m) -> Rational { return 1 / qpochhammer(x, x, m); });
}

} // namespace

DirichletSeries dedekind_zeta(const BaseRing& ring, long length)
{
    switch (ring.kind) {
    case RingKind::Z: {
        DirichletSeries f(length);
        for (long n = 1; n <= length; ++n)
            f[n] = 1;
        return f;
    }
    case RingKind::Zp:
    case RingKind::FqPowerSeries:
        return supported_on_powers(ring.parameter, length, [](long) { return Rational(1); });
    case RingKind::FqPoly:
        return supported_on_powers(ring.parameter, length,
                                   [&](long k) { return Rational(pow(BigInt(ring.parameter), static_cast<unsigned long>(k))); });
    }
    throw UnsupportedRingError("unknown ring kind");
}

DirichletSeries euler_product(std::span<const DirichletSeries> factors, long length)
{
    DirichletSeries out = DirichletSeries::unit(length);
    for (const auto& factor : factors) {
        if (factor[1] != 1)
            throw NonUnitFactorError("local Euler factor must have a_1 = 1");
        out = dir_mul(out, factor);
    }
    return out;
}

std::vector<long> maximal_ideal_norms(const BaseRing& ring, long bound)
{
    std::vector<long> norms;
    switch (ring.kind) {
    case RingKind::Z:
        return primes_up_to(bound);
    case RingKind::FqPoly: {
        long norm = ring.parameter;
        for (long d = 1; norm <= bound; ++d) {
            const long count = irreducible_count(ring.parameter, d);
            norms.insert(norms.end(), static_cast<std::size_t>(count), norm);
            if (norm > bound / ring.parameter)
                break;
            norm *= ring.parameter;
        }
        return norms;
    }
    case RingKind::Zp:
    case RingKind::FqPowerSeries:
        if (ring.parameter <= bound)
            norms.push_back(ring.parameter);
        return norms;
    }
    return norms;
}

DirichletSeries clzeta_base(const BaseRing& ring, long length)
{
    if (!ring.is_local())
        throw UnsupportedRingError("clzeta_base needs a local ring (Z_p or F_q[[T]])");
    const Rational x = make_rational(1, ring.parameter);
    // 1/(x z; x)_inf with z = Q^{-s}: coefficient of z^k is x^k/(x;x)_k.
    return supported_on_powers(ring.parameter, length,
                               [&](long k) -> Rational { return pow(x, k) / qpochhammer(x, x, k); });
}

DirichletSeries clzeta_ZT(const BaseRing& ring, long length)
{
    if (ring.kind != RingKind::Z && ring.kind != RingKind::FqPoly)
        throw UnsupportedRingError("clzeta_ZT needs a global ring (Z or F_q[T])");

    // G(s) = prod_{j>=1} zeta_S(s + j - 1), one resummed factor per maximal ideal.
    std::vector<DirichletSeries> locals;
    for (long norm : maximal_ideal_norms(ring, length))
        locals.push_back(resummed_local_factor(norm, length));
    const DirichletSeries g = euler_product(locals, length);

    // prod_i G(is). G(is) is the unit on the prefix once (min norm)^i > length.
    const long min_norm = ring.kind == RingKind::Z ? 2 : ring.parameter;
    DirichletSeries out = DirichletSeries::unit(length);
    long power = min_norm;
    for (long i = 1; power <= length; ++i) {
        out = dir_mul(out, shift(g, i, 0));
        if (power > length / min_norm)
            break;
        power *= min_norm;
    }
    return out;
}

Rational an_local(long p, long k)
{
    if (k < 0)
        throw InvalidArgumentError("an_local needs k >= 0");
    const Rational x = make_rational(1, p);
    // coefficient of z^k in prod_{i=1}^{k} sum_m z^{im}/(x;x)_m
    std::vector<Rational> poly(static_cast<std::size_t>(k) + 1, Rational(0));
    poly[0] = 1;
    for (long i = 1; i <= k; ++i) {
        std::vector<Rational> factor(poly.size(), Rational(0));
        for (long m = 0; i * m <= k; ++m)
            factor[static_cast<std::size_t>(i * m)] = 1 / qpochhammer(x, x, m);
        std::vector<Rational> next(poly.size(), Rational(0));
        for (std::size_t a = 0; a < poly.size(); ++a) {
            if (poly[a] == 0)
                continue;
            for (std::size_t b = 0; a + b < poly.size(); ++b)
                if (factor[b] != 0)
                    next[a + b] += poly[a] * factor[b];
        }
        poly = std::move(next);
    }
    return poly[static_cast<std::size_t>(k)];
}

nlohmann::json to_json(const DirichletSeries& f)
{
    nlohmann::json a = nlohmann::json::array();
    for (long n = 1; n <= f.length(); ++n)
        a.push_back(to_string(f[n]));
    return {{"N", f.length()}, {"a", a}};
}

DirichletSeries dirichlet_from_json(const nlohmann::json& j)
{
    const long n = j.at("N").get<long>();
    const auto& a = j.at("a");
    if (static_cast<long>(a.size()) != n)
        throw InvalidArgumentError("Dirichlet JSON: 'a' must hold exactly N coefficients");
    DirichletSeries f(n);
    for (long k = 1; k <= n; ++k)
        f[k] = parse_rational(a.at(static_cast<std::size_t>(k - 1)).get<std::string>());
    return f;
}

} // namespace clzeta
