#include "gdet/eisenstein.hpp"

#include "gdet/error.hpp"

namespace gdet {

EisensteinInt EisensteinInt::omega_pow(long k) {
    switch (((k % 3) + 3) % 3) {
    case 0: return {1L, 0L};
    case 1: return {0L, 1L};
    default: return {-1L, -1L};
    }
}

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

// (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& rhs) {
    const BigInt bd = b_ * rhs.b_;
    BigInt re = a_ * rhs.a_ - bd;
    BigInt im = a_ * rhs.b_ + b_ * rhs.a_ - bd;
    a_ = std::move(re);
    b_ = std::move(im);
    return *this;
}

EisensteinInt EisensteinInt::conj() const { return {BigInt(a_ - b_), BigInt(-b_)}; }

BigInt EisensteinInt::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

BigInt EisensteinInt::as_rational_integer() const {
    if (b_ != 0)
        throw Error(ErrorCode::NonRealValue,
                    "expected a rational integer, got " + to_string());
    return a_;
}

std::string EisensteinInt::to_string() const {
    return "(" + gdet::to_string(a_) + "," + gdet::to_string(b_) + ")";
}

}  // namespace gdet
