#pragma once

// Membership of integers in the determinant spectra of the order-18 groups,
// and explicit group-ring elements attaining every member.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gdet/bigint.hpp"
#include "gdet/determinant.hpp"
#include "gdet/group.hpp"

namespace gdet {

enum class SpectrumClass { CoprimeSix, TwoNotThree, ThreeNotTwo, DivSix, NotMember };

std::string_view class_name(SpectrumClass c);

/// One achieving family: f = f0 + f_m*m*h, g = g0 + g_m*m*h with
/// h = (1+x+x^2)(1+y+y^2), optionally with f and g exchanged. Its
/// determinant is sign * 2^two_exp * 3^three_exp * (offset + step*m).
struct Family {
    std::string_view id;
    GroupId group;
    SpectrumClass cls;
    int sign;  // +1 / -1 for a swap pair, 0 when m alone covers both signs
    bool swapped;
    std::array<int, 9> f0;
    std::array<int, 9> g0;
    int f_m;
    int g_m;
    unsigned two_exp;
    unsigned three_exp;
    long offset;
    long step;
    std::string_view value_form;

    BigInt scale() const;
    BigInt value(const BigInt& m) const;
    /// m with value(m) == d, or nullopt when no integer m exists.
    std::optional<BigInt> solve(const BigInt& d) const;
};

/// Families in table order (achieve returns the first match).
std::span<const Family> family_table(GroupId group);
/// Throws Error(UnknownFamily).
const Family& find_family(GroupId group, std::string_view id);

GroupRingElement family_element(const Family& family, const BigInt& m);
GroupRingElement family_element(GroupId group, std::string_view family_id, const BigInt& m);

struct MembershipForm {
    SpectrumClass cls = SpectrumClass::NotMember;
    std::optional<char> sign;           // '+' or '-'
    std::optional<BigInt> m;
    std::optional<std::string> family;

    bool member() const { return cls != SpectrumClass::NotMember; }
    friend bool operator==(const MembershipForm&, const MembershipForm&) = default;
};

/// Exponent e with 3^e | D required for the 3-divisible classes (9 or 6).
unsigned three_exponent(GroupId group);

/// Total classification. For d18 only membership and the divisibility class
/// are reported (no witness parameters).
MembershipForm classify(const BigInt& d, GroupId group);

/// Element of Z[G] with determinant exactly d. Throws Error(NotInSpectrum)
/// for non-members and Error(UnsupportedGroup) for d18.
GroupRingElement achieve(const BigInt& d, GroupId group);

bool in_spectrum_z3xz3(const BigInt& d);
/// 2^a p^b m with gcd(m, 2p) = 1, a = 0 or a >= 2, b = 0 or b >= min_p_exp.
bool in_spectrum_dihedral(const BigInt& d, unsigned long p, unsigned min_p_exp);
bool in_spectrum_d6(const BigInt& d);
bool in_spectrum_d18(const BigInt& d);

struct SubgroupSpectra {
    bool d18 = false;
    bool z3xz3 = false;
    bool d6 = false;
};

SubgroupSpectra classify_subgroup_spectra(const BigInt& d);

}  // namespace gdet
