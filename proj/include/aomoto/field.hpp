#pragma once

#include <cstdint>
#include <vector>

namespace aomoto {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

/// The prime field F_p, 2 <= p <= 251.
class PrimeField {
 public:
    static constexpr std::uint32_t kMaxCharacteristic = 251;

    /// Throws std::invalid_argument unless p is a prime in [2, 251].
    explicit PrimeField(std::uint32_t p = 2);

    std::uint32_t characteristic() const { return p_; }

    Scalar reduce(long long value) const
    {
        long long r = value % static_cast<long long>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
    Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    /// Multiplicative inverse of a nonzero element.
    Scalar inv(Scalar a) const;
    /// (-1)^k as a field element.
    Scalar sign(long long k) const { return (k % 2 == 0) ? 1 : neg(1); }

    /// v += c * w, entrywise.
    void axpy(Vector& v, Scalar c, const Vector& w) const;
    Vector scaled(const Vector& v, Scalar c) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
    std::uint32_t p_;
    std::vector<Scalar> inverses_;
};

bool is_prime(std::uint32_t n);

}  // namespace aomoto
