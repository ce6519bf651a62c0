#pragma once

// Finite groups of the form H x| Z_2 with H = Z_{m1} x ... x Z_{mr} abelian and
// the non-trivial element Z acting on H by an involutive automorphism sigma.
//
// Element X1^i1 ... Xr^ir Z^k has flat index
//   i1 + m1*(i2 + m2*(... ir)) + |H|*k,
// so the identity is index 0, the first |H| indices form the subgroup H and a
// group-ring vector splits as f (first |H| coefficients) + Z*g (the rest).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gdet {

enum class GroupId { G18_4, Z3xD6, D18 };

std::string_view group_name(GroupId id);
std::optional<GroupId> parse_group_id(std::string_view name);

using ElementIndex = std::size_t;

struct GroupSpec {
    std::string name;
    std::vector<unsigned> moduli;  // cycle structure of H
    // sigma as an integer matrix: sigma(e_j) = sum_i involution[i][j] * e_i.
    std::vector<std::vector<long>> involution;

    std::size_t h_order() const;
    std::size_t order() const { return 2 * h_order(); }
};

GroupSpec spec_for(GroupId id);

struct ElementLabel {
    std::vector<unsigned> h;  // exponents of X1..Xr
    unsigned z = 0;

    friend bool operator==(const ElementLabel&, const ElementLabel&) = default;
};

class GroupTable {
public:
    /// Throws Error(InvalidArgument) when sigma is not a well-defined
    /// involutive automorphism of H.
    static GroupTable build(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    std::size_t order() const { return order_; }
    std::size_t h_order() const { return h_order_; }

    ElementIndex mult(ElementIndex a, ElementIndex b) const { return mult_[a * order_ + b]; }
    ElementIndex inverse(ElementIndex a) const { return inv_[a]; }
    /// sigma applied to an element of H (index < h_order()).
    ElementIndex involution(ElementIndex h) const { return sigma_[h]; }

    ElementIndex index_of(const ElementLabel& label) const;
    ElementLabel element_of(ElementIndex index) const;

private:
    GroupTable() = default;

    GroupSpec spec_;
    std::size_t order_ = 0;
    std::size_t h_order_ = 0;
    std::vector<ElementIndex> mult_;
    std::vector<ElementIndex> inv_;
    std::vector<ElementIndex> sigma_;
};

/// Shared immutable table for a named group.
const GroupTable& group_table(GroupId id);

}  // namespace gdet
