#pragma once

#include <cstdint>
#include <vector>

namespace clzeta {

/// Arithmetic modulo a prime p.
class PrimeField {
public:
    /// Throws InvalidArgumentError unless p is a prime below 2^15.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % p_; }
    std::uint32_t inv(std::uint32_t a) const { return inverse_.at(a); }
    /// Reduces any signed integer into 0..p-1.
    std::uint32_t reduce(long a) const noexcept;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> inverse_;
};

/// Square matrix over F_p, row-major.
class FMatrix {
public:
    FMatrix(int n, std::uint32_t p) : n_(n), p_(p), a_(static_cast<std::size_t>(n) * n, 0) {}

    static FMatrix identity(int n, std::uint32_t p);

    int n() const noexcept { return n_; }
    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    std::uint32_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    std::vector<std::uint32_t>& data() noexcept { return a_; }
    const std::vector<std::uint32_t>& data() const noexcept { return a_; }

    bool is_zero() const noexcept;

    FMatrix operator*(const FMatrix& other) const;
    FMatrix& add_scaled(const FMatrix& other, std::uint32_t c);

    friend bool operator==(const FMatrix&, const FMatrix&) = default;

private:
    int n_;
    std::uint32_t p_;
    std::vector<std::uint32_t> a_;
};

/// Rank of a rows x cols matrix (row-major, entries reduced mod p); destroys its input.
int rank_mod_p(std::vector<std::uint32_t>& m, int rows, int cols, const PrimeField& field);

} // namespace clzeta
