#pragma once

#include <string>

#include "gdet/bigint.hpp"

namespace gdet {

/// Exact element a + b*w of Z[w], where w = exp(2*pi*i/3) and w^2 = -1 - w.
class EisensteinInt {
public:
    EisensteinInt() = default;
    EisensteinInt(BigInt a, BigInt b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    EisensteinInt(long a, long b = 0) : a_(a), b_(b) {}

    static EisensteinInt omega() { return {0L, 1L}; }
    /// w^k for any integer k.
    static EisensteinInt omega_pow(long k);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    EisensteinInt& operator+=(const EisensteinInt& rhs);
    EisensteinInt& operator-=(const EisensteinInt& rhs);
    EisensteinInt& operator*=(const EisensteinInt& rhs);

    friend EisensteinInt operator+(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs += rhs; }
    friend EisensteinInt operator-(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs -= rhs; }
    friend EisensteinInt operator*(EisensteinInt lhs, const EisensteinInt& rhs) { return lhs *= rhs; }
    EisensteinInt operator-() const { return {BigInt(-a_), BigInt(-b_)}; }

    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Complex conjugate; maps w to w^2.
    EisensteinInt conj() const;
    /// a^2 - ab + b^2, always >= 0.
    BigInt norm() const;

    bool is_rational() const { return b_ == 0; }
    /// Returns a when b == 0, otherwise throws Error(NonRealValue).
    BigInt as_rational_integer() const;

    std::string to_string() const;

private:
    BigInt a_;
    BigInt b_;
};

}  // namespace gdet
