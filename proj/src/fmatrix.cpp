#include "clzeta/fmatrix.hpp"

#include <algorithm>
#include <utility>

#include "clzeta/dirichlet.hpp"
#include "clzeta/errors.hpp"

namespace clzeta {

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 15) || !is_prime(static_cast<long>(p)))
        throw InvalidArgumentError("field size must be a prime below 32768");
    inverse_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = 1; b < p; ++b)
            if ((a * b) % p == 1) {
                inverse_[a] = b;
                break;
            }
}

std::uint32_t PrimeField::reduce(long a) const noexcept
{
    const long p = static_cast<long>(p_);
    long r = a % p;
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

FMatrix FMatrix::identity(int n, std::uint32_t p)
{
    FMatrix m(n, p);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1 % p;
    return m;
}

bool FMatrix::is_zero() const noexcept
{
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

FMatrix FMatrix::operator*(const FMatrix& other) const
{
    FMatrix out(n_, p_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const std::uint32_t aik = (*this)(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                out(i, j) = (out(i, j) + aik * other(k, j)) % p_;
        }
    return out;
}

FMatrix& FMatrix::add_scaled(const FMatrix& other, std::uint32_t c)
{
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] = (a_[i] + c * other.a_[i]) % p_;
    return *this;
}

int rank_mod_p(std::vector<std::uint32_t>& m, int rows, int cols, const PrimeField& field)
{
    auto at = [&](int r, int c) -> std::uint32_t& { return m[static_cast<std::size_t>(r * cols + c)]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int k = 0; k < cols; ++k)
                std::swap(at(pivot, k), at(rank, k));
        const std::uint32_t inv = field.inv(at(rank, c));
        for (int k = c; k < cols; ++k)
            at(rank, k) = field.mul(at(rank, k), inv);
        for (int r = rank + 1; r < rows; ++r) {
            const std::uint32_t f = at(r, c);
            if (f == 0)
                continue;
            for (int k = c; k < cols; ++k)
                at(r, k) = field.sub(at(r, k), field.mul(f, at(rank, k)));
        }
        ++rank;
    }
    return rank;
}

} // namespace clzeta
