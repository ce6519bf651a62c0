#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gdet/bigint.hpp"
#include "gdet/eisenstein.hpp"
#include "gdet/group.hpp"

namespace gdet {

/// Integer combination sum_g a_g g, coefficients indexed by flat element index.
class GroupRingElement {
public:
    /// Throws Error(InvalidArgument) unless coeffs.size() equals the group order.
    GroupRingElement(GroupId group, std::vector<BigInt> coeffs);

    static GroupRingElement zero(GroupId group);
    static GroupRingElement identity(GroupId group);
    /// f + Z*g from the two |H|-sized blocks.
    static GroupRingElement from_blocks(GroupId group, std::span<const BigInt> f, std::span<const BigInt> g);
    /// Canonical text form: comma-separated coefficients in flat-index order.
    static GroupRingElement parse(GroupId group, std::string_view text);

    GroupId group() const { return group_; }
    const GroupTable& table() const { return group_table(group_); }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& operator[](ElementIndex i) const { return coeffs_[i]; }

    std::span<const BigInt> f_block() const;
    std::span<const BigInt> g_block() const;

    /// Exchanges f and g.
    GroupRingElement swapped() const;
    /// Coefficient of g becomes a_{g^-1}; its regular matrix is the transpose.
    GroupRingElement antipode() const;

    std::string to_string() const;

    friend GroupRingElement operator*(const GroupRingElement& lhs, const GroupRingElement& rhs);
    friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
        return x.group_ == y.group_ && x.coeffs_ == y.coeffs_;
    }

private:
    GroupId group_;
    std::vector<BigInt> coeffs_;
};

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> data_;
};

/// (a_{g h^-1}) with g indexing rows and h columns.
IntMatrix regular_matrix(const GroupRingElement& element);

/// Fraction-free (Bareiss) elimination; every division is checked for
/// exactness. Small inputs run in 128-bit arithmetic when the Hadamard bound
/// guarantees no intermediate can overflow.
BigInt det_exact(const IntMatrix& m);

/// det_exact(regular_matrix(element)).
BigInt det_regular(const GroupRingElement& element);

/// p(w^s, w^t) for p given as 9 coefficients, p[i + 3j] multiplying x^i y^j.
EisensteinInt eval_bivariate(std::span<const BigInt> p, int s, int t);

struct G18_4Profile {
    BigInt a;
    std::array<BigInt, 4> b;
};

struct Z3xD6Profile {
    std::array<BigInt, 4> a;
};

struct FactorProfile {
    std::variant<G18_4Profile, Z3xD6Profile> factors;
    BigInt product;
};

/// Integer factors of the character-grouped determinant:
///   g18-4: product = A * B1^2 * B2^2 * B3^2 * B4^2
///   z3xd6: product = A1 * A2^2 * A3 * A4^2
/// Throws Error(UnsupportedGroup) for d18.
FactorProfile factor_profile(const GroupRingElement& element);

/// u = f*(f o sigma) - g*(g o sigma) in Z[H], indexed like the f block.
std::vector<BigInt> h_reduce(const GroupRingElement& element);

/// Determinant of the |H| x |H| regular matrix of u over the abelian subgroup.
BigInt det_h(GroupId group, std::span<const BigInt> u);

/// D_G(f + Zg) = D_H(h_reduce(f + Zg)).
BigInt det_via_reduction(const GroupRingElement& element);

}  // namespace gdet
