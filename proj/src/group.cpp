#include "gdet/group.hpp"

#include <array>

#include "gdet/error.hpp"

namespace gdet {

std::string_view group_name(GroupId id) {
    switch (id) {
    case GroupId::G18_4: return "g18-4";
    case GroupId::Z3xD6: return "z3xd6";
    case GroupId::D18: return "d18";
    }
    return "?";
}

std::optional<GroupId> parse_group_id(std::string_view name) {
    for (GroupId id : {GroupId::G18_4, GroupId::Z3xD6, GroupId::D18}) {
        if (group_name(id) == name) return id;
    }
    return std::nullopt;
}

std::size_t GroupSpec::h_order() const {
    std::size_t n = 1;
    for (unsigned m : moduli) n *= m;
    return n;
}

GroupSpec spec_for(GroupId id) {
    switch (id) {
    case GroupId::G18_4:
        return {"g18-4", {3, 3}, {{-1, 0}, {0, -1}}};
    case GroupId::Z3xD6:
        return {"z3xd6", {3, 3}, {{-1, 0}, {0, 1}}};
    case GroupId::D18:
        return {"d18", {9}, {{-1}}};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown group id");
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

struct HCoder {
    const std::vector<unsigned>& moduli;

    std::vector<unsigned> decode(std::size_t idx) const {
        std::vector<unsigned> h(moduli.size());
        for (std::size_t t = 0; t < moduli.size(); ++t) {
            h[t] = static_cast<unsigned>(idx % moduli[t]);
            idx /= moduli[t];
        }
        return h;
    }

    std::size_t encode(const std::vector<long>& h) const {
        std::size_t idx = 0;
        for (std::size_t t = moduli.size(); t-- > 0;)
            idx = idx * moduli[t] + static_cast<std::size_t>(mod(h[t], moduli[t]));
        return idx;
    }
};

}  // namespace

GroupTable GroupTable::build(GroupSpec spec) {
    const std::size_t r = spec.moduli.size();
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "H needs at least one cyclic factor");
    for (unsigned m : spec.moduli) {
        if (m == 0) throw Error(ErrorCode::InvalidArgument, "cyclic factor of order 0");
    }
    if (spec.involution.size() != r)
        throw Error(ErrorCode::InvalidArgument, "involution matrix has wrong shape");
    for (const auto& row : spec.involution) {
        if (row.size() != r) throw Error(ErrorCode::InvalidArgument, "involution matrix has wrong shape");
    }
    // sigma is a well-defined homomorphism iff m_j * sigma(e_j) = 0 in H.
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (mod(static_cast<long>(spec.moduli[j]) * spec.involution[i][j], spec.moduli[i]) != 0)
                throw Error(ErrorCode::InvalidArgument, "involution is not a homomorphism of H");
        }
    }

    GroupTable t;
    t.h_order_ = spec.h_order();
    t.order_ = 2 * t.h_order_;
    const HCoder coder{spec.moduli};
    const std::size_t nh = t.h_order_;

    t.sigma_.resize(nh);
    for (std::size_t h = 0; h < nh; ++h) {
        const auto comp = coder.decode(h);
        std::vector<long> img(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) img[i] += spec.involution[i][j] * static_cast<long>(comp[j]);
        }
        t.sigma_[h] = coder.encode(img);
    }
    for (std::size_t h = 0; h < nh; ++h) {
        if (t.sigma_[t.sigma_[h]] != h)
            throw Error(ErrorCode::InvalidArgument, "sigma is not an involution");
    }

    auto h_add = [&](std::size_t a, std::size_t b) {
        const auto x = coder.decode(a);
        const auto y = coder.decode(b);
        std::vector<long> s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = static_cast<long>(x[i]) + static_cast<long>(y[i]);
        return coder.encode(s);
    };

    // (h1, k1)(h2, k2) = (h1 + sigma^k1(h2), k1 xor k2)
    t.mult_.resize(t.order_ * t.order_);
    for (std::size_t a = 0; a < t.order_; ++a) {
        const std::size_t h1 = a % nh, k1 = a / nh;
        for (std::size_t b = 0; b < t.order_; ++b) {
            const std::size_t h2 = b % nh, k2 = b / nh;
            const std::size_t h = h_add(h1, k1 ? t.sigma_[h2] : h2);
            t.mult_[a * t.order_ + b] = h + nh * (k1 ^ k2);
        }
    }
    t.inv_.assign(t.order_, 0);
    for (std::size_t a = 0; a < t.order_; ++a) {
        for (std::size_t b = 0; b < t.order_; ++b) {
            if (t.mult_[a * t.order_ + b] == 0) {
                t.inv_[a] = b;
                break;
            }
        }
    }
    t.spec_ = std::move(spec);
    return t;
}

ElementIndex GroupTable::index_of(const ElementLabel& label) const {
    const auto& moduli = spec_.moduli;
    if (label.h.size() != moduli.size() || label.z > 1)
        throw Error(ErrorCode::InvalidArgument, "element label has wrong shape");
    std::vector<long> h(label.h.size());
    for (std::size_t t = 0; t < moduli.size(); ++t) {
        if (label.h[t] >= moduli[t]) throw Error(ErrorCode::InvalidArgument, "exponent out of range");
        h[t] = label.h[t];
    }
    return HCoder{moduli}.encode(h) + h_order_ * label.z;
}

ElementLabel GroupTable::element_of(ElementIndex index) const {
    if (index >= order_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return {HCoder{spec_.moduli}.decode(index % h_order_), static_cast<unsigned>(index / h_order_)};
}

const GroupTable& group_table(GroupId id) {
    static const std::array<GroupTable, 3> tables{
        GroupTable::build(spec_for(GroupId::G18_4)),
        GroupTable::build(spec_for(GroupId::Z3xD6)),
        GroupTable::build(spec_for(GroupId::D18)),
    };
    return tables[static_cast<std::size_t>(id)];
}

}  // namespace gdet
