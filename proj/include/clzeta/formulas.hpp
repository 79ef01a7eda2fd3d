#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clzeta/rational.hpp"
#include "clzeta/series.hpp"

namespace clzeta {

// Closed-form Cohen-Lenstra generating functions.
//
// Specialized mode: q is a rational > 1, results are series in t alone (t = q^{-s}).
// Formal mode: series in (t, u, q) over Z[[t,u,q]], used for the Z-hat / H identities.

// ---- q-series building blocks at a specialized base x (|x| < 1) --------------------

/// 1/(c t^i; x)_inf = sum_m c^m t^{im} / (x;x)_m, truncated at t^trunc.
TruncSeries inv_pochhammer_inf_t(const Rational& c, int i, const Rational& x, int trunc);

/// (c t^i; x)_inf = sum_m (-1)^m x^{m(m-1)/2} c^m t^{im} / (x;x)_m.
TruncSeries pochhammer_inf_t(const Rational& c, int i, const Rational& x, int trunc);

/// (c t^i; x)_n as a finite product.
TruncSeries pochhammer_t(const Rational& c, int i, const Rational& x, long n, int trunc);

// ---- specialized-q formulas ---------------------------------------------------------

/// DVR S with residue field F_q: prod_{i,j>=1} 1/(1 - q^{1-j} t^i).
TruncSeries clzeta_dvr_poly(const Rational& q, int trunc);

/// Commuting pairs: prod_{i,j>=1} 1/(1 - t^i q^{2-j}).
TruncSeries feit_fine_plane(const Rational& q, int trunc);

/// Modules over F_q[x,y]/(y), i.e. F_q[x]: 1/(t; q^{-1})_inf.
TruncSeries clzeta_line(const Rational& q, int trunc);

/// Cohen-Lenstra series of a DVR itself: 1/(t q^{-1}; q^{-1})_inf.
TruncSeries clzeta_dedekind_local(const Rational& q, int trunc);

/// x^b = 0: prod_{i=1}^{b} prod_{j>=0} 1/(1 - t^i q^{-j}).
TruncSeries clzeta_fat_line(int b, const Rational& q, int trunc);

/// Z-hat(t, t^b, x) = sum_k x^{k^2} t^{(b+1)k} / ((x;x)_k (tx;x)_k).
TruncSeries zhat_specialized(int b, const Rational& x, int trunc);

/// H(t, t^b, x) = (tx;x)_inf * Z-hat(t, t^b, x).
TruncSeries hfunc_specialized(int b, const Rational& x, int trunc);

/// S[T]/(pi^b T) over a DVR: fat line times Z-hat(t, t^b, q^{-1}).
TruncSeries clzeta_nonred_node_local(int b, const Rational& q, int trunc);

/// x^b y = 0 in the plane, built from its sum over k with (t q^{-(k+1)}; q^{-1})_inf factors.
TruncSeries clzeta_nonred_node_plane(int b, const Rational& q, int trunc);

// ---- formal (t, u, q) series ---------------------------------------------------------

VarSpec formal_spec(int trunc_t, int trunc_u, int trunc_q);

/// sum_lambda q^{sum lambda'_i^2} / prod_i (q;q)_{m_i} t^{|lambda|} u^{l(lambda)}.
TruncSeries zhat_partition_sum(int trunc_t, int trunc_u, int trunc_q);

/// sum_k q^{k^2} t^k u^k / ((q;q)_k (tq;q)_k).
TruncSeries zhat_hypergeometric(int trunc_t, int trunc_u, int trunc_q);

/// H(t,u,q) = sum_k q^{k^2} t^k u^k / (q;q)_k * (t q^{k+1}; q)_inf.
TruncSeries hfunc(int trunc_t, int trunc_u, int trunc_q);

// ---- stable ids ------------------------------------------------------------------------

enum class CurveFamily {
    DvrPoly,
    FeitFinePlane,
    Line,
    DedekindLocal,
    FatLine,
    NonredNodeLocal,
    NonredNodePlane,
    ZhatPartition,
    ZhatHypergeometric,
    HFunc,
};

struct CurveDescriptor {
    CurveFamily family = CurveFamily::DvrPoly;
    int b = 1;
    std::optional<Rational> q; // nullopt: formal mode
    int trunc_t = 6;
    int trunc_u = 6;
    int trunc_q = 20;
};

std::string formula_id(CurveFamily family);
/// Throws InvalidArgumentError for an unknown id.
CurveFamily parse_formula_id(const std::string& id);
std::vector<std::string> formula_ids();
bool is_formal(CurveFamily family);
bool uses_b(CurveFamily family);

TruncSeries build_formula(const CurveDescriptor& curve);

} // namespace clzeta
