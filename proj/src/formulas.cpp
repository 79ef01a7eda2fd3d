#include "clzeta/formulas.hpp"

#include <array>

#include "clzeta/errors.hpp"
#include "clzeta/partition.hpp"

namespace clzeta {

namespace {

VarSpec tspec(int trunc)
{
    return VarSpec::single(Var::t, trunc);
}

TruncSeries one_t(int trunc)
{
    return TruncSeries::constant(tspec(trunc), 1);
}

TruncSeries mono_t(const Rational& c, int power, int trunc)
{
    const std::array<int, 1> e{power};
    return TruncSeries::monomial(tspec(trunc), c, e);
}

void require_base(const Rational& x)
{
    if (x <= -1 || x >= 1)
        throw InvalidArgumentError("q-series base must satisfy |x| < 1");
}

void require_q(const Rational& q)
{
    if (q <= 1)
        throw InvalidArgumentError("q must exceed 1");
}

void require_b(int b)
{
    if (b < 1)
        throw InvalidArgumentError("b must be at least 1");
}

void require_trunc(int trunc)
{
    if (trunc < 1)
        throw InvalidArgumentError("truncation must be at least 1");
}

} // namespace

TruncSeries inv_pochhammer_inf_t(const Rational& c, int i, const Rational& x, int trunc)
{
    require_base(x);
    if (i <= 0)
        throw InvalidArgumentError("t-power must be positive");
    TruncSeries out(tspec(trunc));
    Rational coeff = 1;
    for (int m = 0; static_cast<long>(i) * m < trunc; ++m) {
        if (m > 0)
            coeff = coeff * c / (1 - pow(x, m));
        const std::array<int, 1> e{i * m};
        out.add_term(e, coeff);
    }
    return out;
}

TruncSeries pochhammer_inf_t(const Rational& c, int i, const Rational& x, int trunc)
{
    require_base(x);
    if (i <= 0)
        throw InvalidArgumentError("t-power must be positive");
    TruncSeries out(tspec(trunc));
    Rational coeff = 1;
    for (int m = 0; static_cast<long>(i) * m < trunc; ++m) {
        // ratio of consecutive terms: -x^{m-1} c / (1 - x^m)
        if (m > 0)
            coeff = -coeff * pow(x, m - 1) * c / (1 - pow(x, m));
        const std::array<int, 1> e{i * m};
        out.add_term(e, coeff);
    }
    return out;
}

TruncSeries pochhammer_t(const Rational& c, int i, const Rational& x, long n, int trunc)
{
    if (i <= 0)
        throw InvalidArgumentError("t-power must be positive");
    TruncSeries out = one_t(trunc);
    Rational a = c;
    for (long k = 0; k < n; ++k) {
        out = series_mul(out, one_t(trunc) - mono_t(a, i, trunc));
        a *= x;
    }
    return out;
}

TruncSeries clzeta_dvr_poly(const Rational& q, int trunc)
{
    require_q(q);
    require_trunc(trunc);
    const Rational x = 1 / q;
    TruncSeries out = one_t(trunc);
    for (int i = 1; i < trunc; ++i)
        out = series_mul(out, inv_pochhammer_inf_t(1, i, x, trunc));
    return out;
}

TruncSeries feit_fine_plane(const Rational& q, int trunc)
{
    require_q(q);
    require_trunc(trunc);
    const Rational x = 1 / q;
    TruncSeries out = one_t(trunc);
    // prod_{j>=1} 1/(1 - t^i q^{2-j}) = 1/(q t^i; q^{-1})_inf
    for (int i = 1; i < trunc; ++i)
        out = series_mul(out, inv_pochhammer_inf_t(q, i, x, trunc));
    return out;
}

TruncSeries clzeta_line(const Rational& q, int trunc)
{
    require_q(q);
    require_trunc(trunc);
    return inv_pochhammer_inf_t(1, 1, 1 / q, trunc);
}

TruncSeries clzeta_dedekind_local(const Rational& q, int trunc)
{
    require_q(q);
    require_trunc(trunc);
    return inv_pochhammer_inf_t(1 / q, 1, 1 / q, trunc);
}

TruncSeries clzeta_fat_line(int b, const Rational& q, int trunc)
{
    require_b(b);
    require_q(q);
    require_trunc(trunc);
    const Rational x = 1 / q;
    TruncSeries out = one_t(trunc);
    for (int i = 1; i <= b && i < trunc; ++i)
        out = series_mul(out, inv_pochhammer_inf_t(1, i, x, trunc));
    return out;
}

TruncSeries zhat_specialized(int b, const Rational& x, int trunc)
{
    require_b(b);
    require_base(x);
    require_trunc(trunc);
    TruncSeries out(tspec(trunc));
    for (long k = 0; (b + 1) * k < trunc; ++k) {
        const Rational c = pow(x, k * k) / qpochhammer(x, x, k);
        const TruncSeries denom = pochhammer_t(x, 1, x, k, trunc); // (tx;x)_k
        out += series_mul(mono_t(c, static_cast<int>((b + 1) * k), trunc), series_inv(denom));
    }
    return out;
}

TruncSeries hfunc_specialized(int b, const Rational& x, int trunc)
{
    return series_mul(pochhammer_inf_t(x, 1, x, trunc), zhat_specialized(b, x, trunc));
}

TruncSeries clzeta_nonred_node_local(int b, const Rational& q, int trunc)
{
    return series_mul(clzeta_fat_line(b, q, trunc), zhat_specialized(b, 1 / q, trunc));
}

TruncSeries clzeta_nonred_node_plane(int b, const Rational& q, int trunc)
{
    require_b(b);
    require_q(q);
    require_trunc(trunc);
    const Rational x = 1 / q;

    TruncSeries prefactor = inv_pochhammer_inf_t(1, 1, x, trunc); // 1/(t;x)_inf
    for (int i = 1; i <= b && i < trunc; ++i)
        prefactor = series_mul(prefactor, inv_pochhammer_inf_t(1, i, x, trunc));

    TruncSeries sum(tspec(trunc));
    for (long k = 0; (b + 1) * k < trunc; ++k) {
        const Rational c = pow(x, k * k) / qpochhammer(x, x, k);
        const TruncSeries tail = pochhammer_inf_t(pow(x, k + 1), 1, x, trunc); // (t x^{k+1}; x)_inf
        sum += series_mul(mono_t(c, static_cast<int>((b + 1) * k), trunc), tail);
    }
    return series_mul(prefactor, sum);
}

VarSpec formal_spec(int trunc_t, int trunc_u, int trunc_q)
{
    return VarSpec({Var::t, Var::u, Var::q}, {trunc_t, trunc_u, trunc_q});
}

TruncSeries zhat_partition_sum(int trunc_t, int trunc_u, int trunc_q)
{
    const VarSpec spec = formal_spec(trunc_t, trunc_u, trunc_q);
    TruncSeries out(spec);
    for (int n = 0; n < trunc_t; ++n) {
        for_each_partition(n, {std::nullopt, trunc_u - 1}, [&](const Partition& lambda) {
            const long qdeg = transpose_square_sum(lambda);
            if (qdeg >= trunc_q)
                return;
            const std::array<int, 3> e{n, lambda.length(), static_cast<int>(qdeg)};
            TruncSeries term = TruncSeries::monomial(spec, 1, e);
            for (const auto& [part, mult] : multiplicities(lambda))
                for (int r = 1; r <= mult; ++r) {
                    const std::array<int, 3> qr{0, 0, r};
                    term = divide_by_one_minus(term, 1, qr);
                }
            out += term;
        });
    }
    return out;
}

TruncSeries zhat_hypergeometric(int trunc_t, int trunc_u, int trunc_q)
{
    const VarSpec spec = formal_spec(trunc_t, trunc_u, trunc_q);
    TruncSeries out = TruncSeries::constant(spec, 1);
    TruncSeries term = out;
    for (int k = 1; k < trunc_t && k < trunc_u && static_cast<long>(k) * k < trunc_q; ++k) {
        // term_k = term_{k-1} * q^{2k-1} t u / ((1 - q^k)(1 - t q^k))
        const std::array<int, 3> step{1, 1, 2 * k - 1};
        const std::array<int, 3> qk{0, 0, k};
        const std::array<int, 3> tqk{1, 0, k};
        term = shift_by_monomial(term, 1, step);
        term = divide_by_one_minus(term, 1, qk);
        term = divide_by_one_minus(term, 1, tqk);
        out += term;
    }
    return out;
}

TruncSeries hfunc(int trunc_t, int trunc_u, int trunc_q)
{
    const VarSpec spec = formal_spec(trunc_t, trunc_u, trunc_q);
    TruncSeries out(spec);
    for (int k = 0; k < trunc_t && k < trunc_u && static_cast<long>(k) * k < trunc_q; ++k) {
        const std::array<int, 3> e{k, k, k * k};
        TruncSeries term = TruncSeries::monomial(spec, 1, e);
        for (int r = 1; r <= k; ++r) {
            const std::array<int, 3> qr{0, 0, r};
            term = divide_by_one_minus(term, 1, qr);
        }
        const std::array<int, 3> tq{1, 0, k + 1};
        const TruncSeries tail = pochhammer(TruncSeries::monomial(spec, 1, tq), Var::q, INF);
        out += series_mul(term, tail);
    }
    return out;
}

namespace {

struct FamilyName {
    CurveFamily family;
    const char* id;
    bool formal;
    bool uses_b;
};

constexpr std::array<FamilyName, 10> kFamilies{{
    {CurveFamily::DvrPoly, "dvr-poly", false, false},
    {CurveFamily::FeitFinePlane, "feit-fine", false, false},
    {CurveFamily::Line, "line", false, false},
    {CurveFamily::DedekindLocal, "dedekind-local", false, false},
    {CurveFamily::FatLine, "fat-line", false, true},
    {CurveFamily::NonredNodeLocal, "nonred-node-local", false, true},
    {CurveFamily::NonredNodePlane, "nonred-node-plane", false, true},
    {CurveFamily::ZhatPartition, "zhat-partition", true, false},
    {CurveFamily::ZhatHypergeometric, "zhat-hypergeometric", true, false},
    {CurveFamily::HFunc, "hfunc", true, false},
}};

const FamilyName& lookup(CurveFamily family)
{
    for (const auto& f : kFamilies)
        if (f.family == family)
            return f;
    throw InvalidArgumentError("unknown curve family");
}

} // namespace

std::string formula_id(CurveFamily family)
{
    return lookup(family).id;
}

CurveFamily parse_formula_id(const std::string& id)
{
    for (const auto& f : kFamilies)
        if (id == f.id)
            return f.family;
    throw InvalidArgumentError("unknown formula id '" + id + "'");
}

std::vector<std::string> formula_ids()
{
    std::vector<std::string> ids;
    for (const auto& f : kFamilies)
        ids.emplace_back(f.id);
    return ids;
}

bool is_formal(CurveFamily family)
{
    return lookup(family).formal;
}

bool uses_b(CurveFamily family)
{
    return lookup(family).uses_b;
}

TruncSeries build_formula(const CurveDescriptor& curve)
{
    if (is_formal(curve.family)) {
        switch (curve.family) {
        case CurveFamily::ZhatPartition:
            return zhat_partition_sum(curve.trunc_t, curve.trunc_u, curve.trunc_q);
        case CurveFamily::ZhatHypergeometric:
            return zhat_hypergeometric(curve.trunc_t, curve.trunc_u, curve.trunc_q);
        case CurveFamily::HFunc:
            return hfunc(curve.trunc_t, curve.trunc_u, curve.trunc_q);
        default:
            break;
        }
    }
    if (!curve.q)
        throw InvalidArgumentError("formula '" + formula_id(curve.family) + "' needs a value for q");
    const Rational& q = *curve.q;
    switch (curve.family) {
    case CurveFamily::DvrPoly:
        return clzeta_dvr_poly(q, curve.trunc_t);
    case CurveFamily::FeitFinePlane:
        return feit_fine_plane(q, curve.trunc_t);
    case CurveFamily::Line:
        return clzeta_line(q, curve.trunc_t);
    case CurveFamily::DedekindLocal:
        return clzeta_dedekind_local(q, curve.trunc_t);
    case CurveFamily::FatLine:
        return clzeta_fat_line(curve.b, q, curve.trunc_t);
    case CurveFamily::NonredNodeLocal:
        return clzeta_nonred_node_local(curve.b, q, curve.trunc_t);
    case CurveFamily::NonredNodePlane:
        return clzeta_nonred_node_plane(curve.b, q, curve.trunc_t);
    default:
        break;
    }
    throw InvalidArgumentError("unhandled formula family");
}

} // namespace clzeta
