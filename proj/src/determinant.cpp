#include "gdet/determinant.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>

#include "gdet/error.hpp"

namespace gdet {

using i128 = __int128;
using u128 = unsigned __int128;

// ---- GroupRingElement --------------------------------------------------------

GroupRingElement::GroupRingElement(GroupId group, std::vector<BigInt> coeffs)
    : group_(group), coeffs_(std::move(coeffs)) {
    const std::size_t order = group_table(group).order();
    if (coeffs_.size() != order)
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(order) + " coefficients, got " +
                        std::to_string(coeffs_.size()));
}

GroupRingElement GroupRingElement::zero(GroupId group) {
    return {group, std::vector<BigInt>(group_table(group).order())};
}

GroupRingElement GroupRingElement::identity(GroupId group) {
    std::vector<BigInt> c(group_table(group).order());
    c[0] = 1;
    return {group, std::move(c)};
}

GroupRingElement GroupRingElement::from_blocks(GroupId group, std::span<const BigInt> f,
                                               std::span<const BigInt> g) {
    const std::size_t nh = group_table(group).h_order();
    if (f.size() != nh || g.size() != nh)
        throw Error(ErrorCode::InvalidArgument, "f and g blocks must have |H| coefficients");
    std::vector<BigInt> c(f.begin(), f.end());
    c.insert(c.end(), g.begin(), g.end());
    return {group, std::move(c)};
}

GroupRingElement GroupRingElement::parse(GroupId group, std::string_view text) {
    return {group, parse_bigint_list(text)};
}

std::span<const BigInt> GroupRingElement::f_block() const {
    return std::span<const BigInt>(coeffs_).first(coeffs_.size() / 2);
}

std::span<const BigInt> GroupRingElement::g_block() const {
    return std::span<const BigInt>(coeffs_).last(coeffs_.size() / 2);
}

GroupRingElement GroupRingElement::swapped() const { return from_blocks(group_, g_block(), f_block()); }

GroupRingElement GroupRingElement::antipode() const {
    const GroupTable& t = table();
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t g = 0; g < c.size(); ++g) c[g] = coeffs_[t.inverse(g)];
    return {group_, std::move(c)};
}

std::string GroupRingElement::to_string() const { return join(coeffs_); }

GroupRingElement operator*(const GroupRingElement& lhs, const GroupRingElement& rhs) {
    if (lhs.group_ != rhs.group_)
        throw Error(ErrorCode::InvalidArgument, "product of elements from different groups");
    const GroupTable& t = lhs.table();
    std::vector<BigInt> c(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.size(); ++j) c[t.mult(i, j)] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return {lhs.group_, std::move(c)};
}

// ---- exact determinants ------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix regular_matrix(const GroupRingElement& element) {
    const GroupTable& t = element.table();
    const std::size_t n = t.order();
    IntMatrix m(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) m(g, h) = element[t.mult(g, t.inverse(h))];
    }
    return m;
}

namespace {

BigInt to_bigint(i128 v) {
    const bool neg = v < 0;
    u128 mag = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
    BigInt r = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
    return neg ? BigInt(-r) : r;
}

bool divisible(const i128& a, const i128& b) { return a % b == 0; }
bool divisible(const BigInt& a, const BigInt& b) { return divides(b, a); }

void exact_div(i128& a, const i128& b) { a /= b; }
void exact_div(BigInt& a, const BigInt& b) { mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }

// Bareiss elimination on a row-major n x n matrix. Each step k replaces the
// trailing block by (p*a_ij - a_ik*a_kj) / p_prev, which is a (k+1)-minor of
// the input, so the division is exact.
template <class T>
T bareiss(std::vector<T> a, std::size_t n) {
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * n + c]; };
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return T(0);
            for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            negate = !negate;
        }
        const T pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = pivot * at(i, j) - at(i, k) * at(k, j);
                if (!divisible(v, prev)) throw Error(ErrorCode::Internal, "inexact division in Bareiss step");
                exact_div(v, prev);
                at(i, j) = std::move(v);
            }
        }
        prev = pivot;
    }
    T d = std::move(at(n - 1, n - 1));
    return negate ? T(-d) : d;
}

constexpr long kSmallEntry = 1L << 31;
constexpr unsigned kMaxMinorBits = 62;

// Determinant of small-entry matrices in 128-bit arithmetic, or nullopt if the
// Hadamard bound on the minors exceeds 2^62 (products would not fit).
std::optional<i128> det_small(const std::vector<long>& entries, std::size_t n) {
    unsigned bits = 0;
    for (std::size_t r = 0; r < n; ++r) {
        u128 norm2 = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const long v = entries[r * n + c];
            if (v >= kSmallEntry || v <= -kSmallEntry) return std::nullopt;
            norm2 += static_cast<u128>(static_cast<i128>(v) * v);
        }
        if (norm2 == 0) return i128(0);
        // |row| <= 2^ceil(bitlen(norm2) / 2)
        const auto hi = static_cast<std::uint64_t>(norm2 >> 64);
        const auto lo = static_cast<std::uint64_t>(norm2);
        const unsigned len = hi ? 64 + std::bit_width(hi) : std::bit_width(lo);
        bits += (len + 1) / 2;
        if (bits > kMaxMinorBits) return std::nullopt;
    }
    std::vector<i128> a(entries.begin(), entries.end());
    return bareiss(std::move(a), n);
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<long> small;
    small.reserve(n * n);
    bool fits = true;
    for (std::size_t r = 0; r < n && fits; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!m(r, c).fits_slong_p()) {
                fits = false;
                break;
            }
            small.push_back(m(r, c).get_si());
        }
    }
    if (fits) {
        if (auto d = det_small(small, n)) return to_bigint(*d);
    }
    std::vector<BigInt> a;
    a.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a.push_back(m(r, c));
    }
    return bareiss(std::move(a), n);
}

BigInt det_regular(const GroupRingElement& element) { return det_exact(regular_matrix(element)); }

// ---- Eisenstein evaluation and factor profiles -------------------------------

EisensteinInt eval_bivariate(std::span<const BigInt> p, int s, int t) {
    if (p.size() != 9) throw Error(ErrorCode::InvalidArgument, "bivariate polynomial needs 9 coefficients");
    // Bucket coefficients by the exponent of w they pick up.
    std::array<BigInt, 3> bucket;
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            const int e = (((i * s + j * t) % 3) + 3) % 3;
            bucket[e] += p[i + 3 * j];
        }
    }
    // c0 + c1 w + c2 w^2 = (c0 - c2) + (c1 - c2) w
    return {BigInt(bucket[0] - bucket[2]), BigInt(bucket[1] - bucket[2])};
}

namespace {

class CharacterValues {
public:
    explicit CharacterValues(const GroupRingElement& element) {
        for (int s = 0; s < 3; ++s) {
            for (int t = 0; t < 3; ++t) {
                f_[s][t] = eval_bivariate(element.f_block(), s, t);
                g_[s][t] = eval_bivariate(element.g_block(), s, t);
            }
        }
    }

    // f(w^s1, w^t1) f(w^s2, w^t2) - g(w^s1, w^t1) g(w^s2, w^t2)
    EisensteinInt pair(int s1, int t1, int s2, int t2) const {
        return f_[m3(s1)][m3(t1)] * f_[m3(s2)][m3(t2)] - g_[m3(s1)][m3(t1)] * g_[m3(s2)][m3(t2)];
    }

private:
    static int m3(int v) { return ((v % 3) + 3) % 3; }

    std::array<std::array<EisensteinInt, 3>, 3> f_;
    std::array<std::array<EisensteinInt, 3>, 3> g_;
};

}  // namespace

FactorProfile factor_profile(const GroupRingElement& element) {
    const CharacterValues cv(element);
    FactorProfile out;
    switch (element.group()) {
    case GroupId::G18_4: {
        // Pairs chi with chi^-1: (s, t) with (-s, -t).
        G18_4Profile p;
        p.a = cv.pair(0, 0, 0, 0).as_rational_integer();
        p.b[0] = cv.pair(0, 1, 0, -1).as_rational_integer();
        p.b[1] = cv.pair(1, 0, -1, 0).as_rational_integer();
        p.b[2] = cv.pair(1, 1, -1, -1).as_rational_integer();
        p.b[3] = cv.pair(1, 2, -1, -2).as_rational_integer();
        out.product = p.a;
        for (const BigInt& b : p.b) out.product *= b * b;
        out.factors = std::move(p);
        break;
    }
    case GroupId::Z3xD6: {
        // sigma only inverts x: pairs (s, t) with (-s, t).
        Z3xD6Profile p;
        p.a[0] = cv.pair(0, 0, 0, 0).as_rational_integer();
        p.a[1] = cv.pair(1, 0, 2, 0).as_rational_integer();
        p.a[2] = (cv.pair(0, 1, 0, 1) * cv.pair(0, 2, 0, 2)).as_rational_integer();
        p.a[3] = (cv.pair(1, 1, 2, 1) * cv.pair(2, 2, 1, 2)).as_rational_integer();
        out.product = p.a[0] * p.a[1] * p.a[1] * p.a[2] * p.a[3] * p.a[3];
        out.factors = std::move(p);
        break;
    }
    case GroupId::D18:
        throw Error(ErrorCode::UnsupportedGroup, "no factor profile for d18");
    }
    return out;
}

// ---- H-reduction -------------------------------------------------------------

namespace {

// Small-coefficient version of h_reduce; nullopt when any input coefficient
// is too large for the 128-bit accumulation to be safe.
std::optional<std::vector<i128>> h_reduce_small(const GroupRingElement& element) {
    const GroupTable& t = element.table();
    const std::size_t nh = t.h_order();
    std::vector<long> c(element.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!element[i].fits_slong_p()) return std::nullopt;
        c[i] = element[i].get_si();
        if (c[i] >= kSmallEntry || c[i] <= -kSmallEntry) return std::nullopt;
    }
    std::vector<i128> u(nh, 0);
    for (std::size_t a = 0; a < nh; ++a) {
        for (std::size_t b = 0; b < nh; ++b) {
            const i128 term = static_cast<i128>(c[a]) * c[b] - static_cast<i128>(c[nh + a]) * c[nh + b];
            if (term != 0) u[t.mult(a, t.involution(b))] += term;
        }
    }
    return u;
}

}  // namespace

std::vector<BigInt> h_reduce(const GroupRingElement& element) {
    const GroupTable& t = element.table();
    const std::size_t nh = t.h_order();
    const auto f = element.f_block();
    const auto g = element.g_block();
    std::vector<BigInt> u(nh);
    for (std::size_t a = 0; a < nh; ++a) {
        for (std::size_t b = 0; b < nh; ++b) {
            // (f o sigma) has coefficient f_b at sigma(b).
            u[t.mult(a, t.involution(b))] += f[a] * f[b] - g[a] * g[b];
        }
    }
    return u;
}

BigInt det_h(GroupId group, std::span<const BigInt> u) {
    const GroupTable& t = group_table(group);
    const std::size_t nh = t.h_order();
    if (u.size() != nh) throw Error(ErrorCode::InvalidArgument, "H-element needs |H| coefficients");
    IntMatrix m(nh, nh);
    for (std::size_t a = 0; a < nh; ++a) {
        for (std::size_t b = 0; b < nh; ++b) m(a, b) = u[t.mult(a, t.inverse(b))];
    }
    return det_exact(m);
}

BigInt det_via_reduction(const GroupRingElement& element) {
    const GroupTable& t = element.table();
    const std::size_t nh = t.h_order();
    if (auto u = h_reduce_small(element)) {
        std::vector<long> entries(nh * nh);
        bool fits = true;
        for (std::size_t a = 0; a < nh && fits; ++a) {
            for (std::size_t b = 0; b < nh; ++b) {
                const i128 v = (*u)[t.mult(a, t.inverse(b))];
                if (v >= kSmallEntry || v <= -kSmallEntry) {
                    fits = false;
                    break;
                }
                entries[a * nh + b] = static_cast<long>(v);
            }
        }
        if (fits) {
            if (auto d = det_small(entries, nh)) return to_bigint(*d);
        }
    }
    const auto u = h_reduce(element);
    return det_h(element.group(), u);
}

}  // namespace gdet
