#include "gdet/spectrum.hpp"

#include <vector>

#include "gdet/error.hpp"

namespace gdet {

std::string_view class_name(SpectrumClass c) {
    switch (c) {
    case SpectrumClass::CoprimeSix: return "CoprimeSix";
    case SpectrumClass::TwoNotThree: return "TwoNotThree";
    case SpectrumClass::ThreeNotTwo: return "ThreeNotTwo";
    case SpectrumClass::DivSix: return "DivSix";
    case SpectrumClass::NotMember: return "NotMember";
    }
    return "?";
}

BigInt Family::scale() const {
    BigInt s = pow_ui(2, two_exp) * pow_ui(3, three_exp);
    return sign < 0 ? BigInt(-s) : s;
}

BigInt Family::value(const BigInt& m) const { return scale() * (offset + step * m); }

std::optional<BigInt> Family::solve(const BigInt& d) const {
    const BigInt s = scale();
    if (!divides(s, d)) return std::nullopt;
    const BigInt t = d / s - offset;
    if (!divides(BigInt(step), t)) return std::nullopt;
    return BigInt(t / step);
}

namespace {

using SC = SpectrumClass;
constexpr GroupId G4 = GroupId::G18_4;
constexpr GroupId Z3 = GroupId::Z3xD6;

// Coefficients x^i y^j at index i + 3j. Each sign of m*h was checked against
// the 18x18 determinant at m = -1, 0, 1.
// clang-format off
constexpr std::array<int, 9> kOne{1, 0, 0, 0, 0, 0, 0, 0, 0};
constexpr std::array<int, 9> kZero{};

// f = 1+x+x^2+y-y^2x^2, g = 1+x+yx-y^2(x+x^2)
constexpr std::array<int, 9> kG4TwoF{1, 1, 1, 1, 0, 0, 0, 0, -1};
constexpr std::array<int, 9> kG4TwoG{1, 1, 0, 0, 1, 0, 0, -1, -1};
// f = 1+x-yx^2-y^2(1+x), g = 1+y-y^2(1+x+x^2)
constexpr std::array<int, 9> kG4SixZeroF{1, 1, 0, 0, 0, -1, -1, -1, 0};
constexpr std::array<int, 9> kG4SixZeroG{1, 0, 0, 1, 0, 0, -1, -1, -1};
// f = 1+x+x^2+y(1+x)-y^2x^2, g = (1+x^2)(1+y-y^2)
constexpr std::array<int, 9> kG4SixF{1, 1, 1, 1, 1, 0, 0, 0, -1};
constexpr std::array<int, 9> kG4SixG{1, 0, 1, 1, 0, 1, -1, 0, -1};
// f = 1+x+x^2+y(1+x+x^2)+y^2(1-x-x^2), g = 1+x+x^2+y(1+x)+y^2(1-x-x^2)
constexpr std::array<int, 9> kG4OddF{1, 1, 1, 1, 1, 1, 1, -1, -1};
constexpr std::array<int, 9> kG4OddG{1, 1, 1, 1, 1, 0, 1, -1, -1};
// f = 1+x+x^2+y(1+x)-y^2(1+x+x^2), g = 1+x+x^2+y(1+x-x^2)-y^2(1+x+x^2)
constexpr std::array<int, 9> kG4ThreeF{1, 1, 1, 1, 1, 0, -1, -1, -1};
constexpr std::array<int, 9> kG4ThreeG{1, 1, 1, 1, 1, -1, -1, -1, -1};

// f = (1+x)+y+y^2, g = 1+y
constexpr std::array<int, 9> kZ3SixF{1, 1, 0, 1, 0, 0, 1, 0, 0};
constexpr std::array<int, 9> kZ3SixG{1, 0, 0, 1, 0, 0, 0, 0, 0};
// f = (1+x-x^2)+y(1-x^2)+y^2(1-x^2), g = (1-x^2)+y(1+x-x^2)+y^2(x-x^2)
constexpr std::array<int, 9> kZ3SixZeroF{1, 1, -1, 1, 0, -1, 1, 0, -1};
constexpr std::array<int, 9> kZ3SixZeroG{1, 0, -1, 1, 1, -1, 0, 1, -1};
// f = 1+y, g = 1
constexpr std::array<int, 9> kZ3ThreeF{1, 0, 0, 1, 0, 0, 0, 0, 0};
// f = (1+x)+y(1+x)+y^2(1+x-x^2), g = (1+x)+y(1+x-x^2)+y^2
constexpr std::array<int, 9> kZ3OddF{1, 1, 0, 1, 1, 0, 1, 1, -1};
constexpr std::array<int, 9> kZ3OddG{1, 1, 0, 1, 1, -1, 1, 0, 0};
// f = (1+x-x^2)+yx^2+y^2x^2, g = (1+x-x^2)+y(-x+x^2)+y^2(-1+x^2)
constexpr std::array<int, 9> kZ3TwoF{1, 1, -1, 0, 0, 1, 0, 0, 1};
constexpr std::array<int, 9> kZ3TwoG{1, 1, -1, 0, -1, 1, -1, 0, 1};

const std::array<Family, 10> kG18_4Families{{
    {"coprime+",   G4, SC::CoprimeSix,  +1, false, kOne,        kZero,       1,  1, 0, 0,  1, 18, "1+18m"},
    {"coprime-",   G4, SC::CoprimeSix,  -1, true,  kOne,        kZero,       1,  1, 0, 0,  1, 18, "-(1+18m)"},
    {"2not3+",     G4, SC::TwoNotThree, +1, false, kG4TwoF,     kG4TwoG,     1,  1, 2, 0,  2,  9, "2^2*(2+9m)"},
    {"2not3-",     G4, SC::TwoNotThree, -1, true,  kG4TwoF,     kG4TwoG,     1,  1, 2, 0,  2,  9, "-2^2*(2+9m)"},
    {"div6-zero",  G4, SC::DivSix,       0, false, kG4SixZeroF, kG4SixZeroG, -1, 1, 2, 10, 0,  1, "2^2*3^10*m"},
    {"div6+",      G4, SC::DivSix,      +1, false, kG4SixF,     kG4SixG,     1,  1, 2, 9,  1,  3, "2^2*3^9*(1+3m)"},
    {"div6-",      G4, SC::DivSix,      -1, true,  kG4SixF,     kG4SixG,     1,  1, 2, 9,  1,  3, "-2^2*3^9*(1+3m)"},
    {"3not2-odd3", G4, SC::ThreeNotTwo,  0, false, kG4OddF,     kG4OddG,     1,  1, 0, 10, 1,  2, "3^10*(1+2m)"},
    {"3not2+",     G4, SC::ThreeNotTwo, +1, false, kG4ThreeF,   kG4ThreeG,   1,  1, 0, 9,  1,  6, "3^9*(1+6m)"},
    {"3not2-",     G4, SC::ThreeNotTwo, -1, true,  kG4ThreeF,   kG4ThreeG,   1,  1, 0, 9,  1,  6, "-3^9*(1+6m)"},
}};

const std::array<Family, 10> kZ3xD6Families{{
    {"coprime+",   Z3, SC::CoprimeSix,  +1, false, kOne,        kZero,       1,  1, 0, 0,  1, 18, "1+18m"},
    {"coprime-",   Z3, SC::CoprimeSix,  -1, true,  kOne,        kZero,       1,  1, 0, 0,  1, 18, "-(1+18m)"},
    {"2not3+",     Z3, SC::TwoNotThree, +1, false, kZ3TwoF,     kZ3TwoG,     1,  1, 2, 0,  2,  9, "2^2*(2+9m)"},
    {"2not3-",     Z3, SC::TwoNotThree, -1, true,  kZ3TwoF,     kZ3TwoG,     1,  1, 2, 0,  2,  9, "-2^2*(2+9m)"},
    {"div6-zero",  Z3, SC::DivSix,       0, false, kZ3SixZeroF, kZ3SixZeroG, 1, -1, 2, 7,  0,  1, "2^2*3^7*m"},
    {"div6+",      Z3, SC::DivSix,      +1, false, kZ3SixF,     kZ3SixG,     1,  1, 2, 6,  1,  3, "2^2*3^6*(1+3m)"},
    {"div6-",      Z3, SC::DivSix,      -1, true,  kZ3SixF,     kZ3SixG,     1,  1, 2, 6,  1,  3, "-2^2*3^6*(1+3m)"},
    {"3not2-odd3", Z3, SC::ThreeNotTwo,  0, false, kZ3OddF,     kZ3OddG,     1,  1, 0, 7,  1,  2, "3^7*(1+2m)"},
    {"3not2+",     Z3, SC::ThreeNotTwo, +1, false, kZ3ThreeF,   kOne,        1,  1, 0, 6,  1,  6, "3^6*(1+6m)"},
    {"3not2-",     Z3, SC::ThreeNotTwo, -1, true,  kZ3ThreeF,   kOne,        1,  1, 0, 6,  1,  6, "-3^6*(1+6m)"},
}};
// clang-format on

}  // namespace

std::span<const Family> family_table(GroupId group) {
    switch (group) {
    case GroupId::G18_4: return kG18_4Families;
    case GroupId::Z3xD6: return kZ3xD6Families;
    case GroupId::D18: break;
    }
    return {};
}

const Family& find_family(GroupId group, std::string_view id) {
    for (const Family& f : family_table(group)) {
        if (f.id == id) return f;
    }
    throw Error(ErrorCode::UnknownFamily,
                "unknown family '" + std::string(id) + "' for " + std::string(group_name(group)));
}

GroupRingElement family_element(const Family& family, const BigInt& m) {
    // h = (1+x+x^2)(1+y+y^2) has every coefficient equal to 1.
    std::vector<BigInt> f(9), g(9);
    for (std::size_t i = 0; i < 9; ++i) {
        f[i] = family.f0[i] + family.f_m * m;
        g[i] = family.g0[i] + family.g_m * m;
    }
    if (family.swapped) std::swap(f, g);
    return GroupRingElement::from_blocks(family.group, f, g);
}

GroupRingElement family_element(GroupId group, std::string_view family_id, const BigInt& m) {
    return family_element(find_family(group, family_id), m);
}

unsigned three_exponent(GroupId group) {
    switch (group) {
    case GroupId::G18_4: return 9;
    case GroupId::Z3xD6: return 6;
    case GroupId::D18: return 5;
    }
    return 0;
}

namespace {

SpectrumClass divisibility_class(const BigInt& d) {
    const bool two = divides(2, d);
    const bool three = divides(3, d);
    if (two && three) return SC::DivSix;
    if (two) return SC::TwoNotThree;
    if (three) return SC::ThreeNotTwo;
    return SC::CoprimeSix;
}

// Family id selected for d, or empty when d is not in the spectrum.
std::string_view select_family(const BigInt& d, GroupId group) {
    const BigInt p3 = pow_ui(3, three_exponent(group));
    switch (divisibility_class(d)) {
    case SC::CoprimeSix: {
        const unsigned long r = residue(d, 18);
        if (r == 1) return "coprime+";
        if (r == 17) return "coprime-";
        return {};
    }
    case SC::TwoNotThree: {
        if (!divides(4, d)) return {};
        const unsigned long r = residue(BigInt(d / 4), 9);
        if (r == 2) return "2not3+";
        if (r == 7) return "2not3-";
        return {};
    }
    case SC::ThreeNotTwo: {
        if (!divides(p3, d)) return {};
        const BigInt t = d / p3;
        if (divides(3, t)) return "3not2-odd3";
        return residue(t, 6) == 1 ? "3not2+" : "3not2-";
    }
    case SC::DivSix: {
        const BigInt q = 4 * p3;
        if (!divides(q, d)) return {};
        const BigInt t = d / q;
        if (divides(3, t)) return "div6-zero";
        return residue(t, 3) == 1 ? "div6+" : "div6-";
    }
    case SC::NotMember: break;
    }
    return {};
}

}  // namespace

MembershipForm classify(const BigInt& d, GroupId group) {
    MembershipForm form;
    if (group == GroupId::D18) {
        if (in_spectrum_d18(d)) form.cls = divisibility_class(d);
        return form;
    }
    const std::string_view id = select_family(d, group);
    if (id.empty()) return form;
    const Family& family = find_family(group, id);
    auto m = family.solve(d);
    if (!m) throw Error(ErrorCode::Internal, "family " + std::string(id) + " does not reach " + to_string(d));
    form.cls = family.cls;
    if (family.sign != 0) form.sign = family.sign > 0 ? '+' : '-';
    form.m = std::move(*m);
    form.family = std::string(id);
    return form;
}

GroupRingElement achieve(const BigInt& d, GroupId group) {
    if (group == GroupId::D18) throw Error(ErrorCode::UnsupportedGroup, "no witness construction for d18");
    const MembershipForm form = classify(d, group);
    if (!form.member())
        throw Error(ErrorCode::NotInSpectrum,
                    to_string(d) + " is not a group determinant of " + std::string(group_name(group)));
    GroupRingElement element = family_element(group, *form.family, *form.m);
    if (det_via_reduction(element) != d)
        throw Error(ErrorCode::Internal, "witness for " + to_string(d) + " does not verify");
    return element;
}

bool in_spectrum_z3xz3(const BigInt& d) {
    const unsigned long r = residue(d, 9);
    return r == 1 || r == 8 || divides(pow_ui(3, 6), d);
}

bool in_spectrum_dihedral(const BigInt& d, unsigned long p, unsigned min_p_exp) {
    // 0 = det(0) is attained in every group.
    if (d == 0) return true;
    const unsigned a = valuation(d, 2);
    const unsigned b = valuation(d, p);
    return (a == 0 || a >= 2) && (b == 0 || b >= min_p_exp);
}

bool in_spectrum_d6(const BigInt& d) { return in_spectrum_dihedral(d, 3, 3); }
bool in_spectrum_d18(const BigInt& d) { return in_spectrum_dihedral(d, 3, 5); }

SubgroupSpectra classify_subgroup_spectra(const BigInt& d) {
    return {in_spectrum_d18(d), in_spectrum_z3xz3(d), in_spectrum_d6(d)};
}

}  // namespace gdet
