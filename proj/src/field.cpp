#include "aomoto/field.hpp"

#include <stdexcept>
#include <string>

namespace aomoto {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (!is_prime(p) || p > kMaxCharacteristic)
        throw std::invalid_argument("field characteristic must be a prime in [2, 251], got " + std::to_string(p));
    inverses_.assign(p, 0);
    for (Scalar a = 1; a < p; ++a)
        for (Scalar b = 1; b < p; ++b)
            if ((a * b) % p == 1) {
                inverses_[a] = b;
                break;
            }
}

Scalar PrimeField::inv(Scalar a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    return inverses_[a % p_];
}

void PrimeField::axpy(Vector& v, Scalar c, const Vector& w) const
{
    if (c == 0)
        return;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = (v[i] + c * w[i]) % p_;
}

Vector PrimeField::scaled(const Vector& v, Scalar c) const
{
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = (v[i] * c) % p_;
    return out;
}

}  // namespace aomoto
