// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact integer comparisons.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gdet/determinant.hpp"
#include "gdet/eisenstein.hpp"
#include "gdet/search.hpp"
#include "gdet/spectrum.hpp"

using namespace gdet;

namespace {

constexpr GroupId kOrder18[] = {GroupId::G18_4, GroupId::Z3xD6};

struct Outcome {
    bool pass = true;
    unsigned long checks = 0;
    std::string detail;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what();
        }
    }
};

// Determinants seen by criteria 2-4, re-checked by criterion 5.
std::vector<std::pair<GroupId, BigInt>> g_seen;

GroupRingElement random_element(GroupId g, std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<BigInt> c(18);
    for (auto& v : c) v = d(rng);
    return {g, std::move(c)};
}

// Spectrum sets written directly as residue and valuation tests, independent
// of the family-selection logic in classify().
bool set_member(long d, GroupId g) {
    const long p3 = g == GroupId::G18_4 ? 19683 : 729;
    const bool two = d % 2 == 0, three = d % 3 == 0;
    if (!two && !three) {
        const long r = ((d % 18) + 18) % 18;
        return r == 1 || r == 17;
    }
    if (two && !three) {
        if (d % 4 != 0) return false;
        const long r = (((d / 4) % 9) + 9) % 9;
        return r == 2 || r == 7;
    }
    if (!two) return d % p3 == 0;
    return d % (4 * p3) == 0;
}

// Expected determinant of each family, spelled out independently of Family::value.
BigInt stated_value(GroupId g, std::string_view id, const BigInt& m) {
    const bool g4 = g == GroupId::G18_4;
    const BigInt e = pow_ui(3, g4 ? 9 : 6);
    if (id == "coprime+") return 1 + 18 * m;
    if (id == "coprime-") return -1 - 18 * m;
    if (id == "2not3+") return 4 * (2 + 9 * m);
    if (id == "2not3-") return 4 * (-2 - 9 * m);
    if (id == "div6-zero") return 4 * e * 3 * m;
    if (id == "div6+") return 4 * e * (1 + 3 * m);
    if (id == "div6-") return 4 * e * (-1 - 3 * m);
    if (id == "3not2-odd3") return e * 3 * (1 + 2 * m);
    if (id == "3not2+") return e * (1 + 6 * m);
    if (id == "3not2-") return e * (-1 - 6 * m);
    return BigInt(-999);
}

Outcome family_round_trips() {
    Outcome o;
    std::size_t families = 0;
    for (GroupId g : kOrder18) {
        for (const Family& f : family_table(g)) {
            ++families;
            for (long m = -10; m <= 10; ++m) {
                const BigInt want = stated_value(g, f.id, BigInt(m));
                const BigInt got = det_via_reduction(family_element(f, BigInt(m)));
                o.expect(got == want, [&] {
                    return std::string(group_name(g)) + " " + std::string(f.id) + " m=" + std::to_string(m) +
                           ": got " + to_string(got) + ", want " + to_string(want);
                });
            }
        }
    }
    o.expect(families == 20, [&] { return "expected 20 families, found " + std::to_string(families); });
    return o;
}

Outcome three_way_agreement() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (GroupId g : kOrder18) {
        for (int i = 0; i < 1000; ++i) {
            const auto e = random_element(g, rng, -3, 3);
            const BigInt oracle = det_regular(e);
            const BigInt profile = factor_profile(e).product;
            const BigInt reduced = det_via_reduction(e);
            o.expect(oracle == profile && profile == reduced,
                     [&] { return std::string(group_name(g)) + " disagreement on " + e.to_string(); });
            g_seen.emplace_back(g, oracle);
        }
    }
    return o;
}

void check_lemmas(Outcome& o, GroupId g, const GroupRingElement& e, const BigInt& d) {
    const BigInt p3 = pow_ui(3, g == GroupId::G18_4 ? 9 : 6);
    auto where = [&](const char* what) {
        return [&, what] { return std::string(group_name(g)) + " " + what + " fails on " + e.to_string(); };
    };
    o.expect(classify(d, g).member(), where("membership"));
    o.expect(!divides(2, d) || divides(4, d), where("2|D => 4|D"));
    o.expect(!divides(3, d) || divides(p3, d), where("3|D => 3^e|D"));
    const FactorProfile p = factor_profile(e);
    auto m3 = [](const BigInt& v) { return residue(v, 3); };
    if (const auto* q = std::get_if<G18_4Profile>(&p.factors)) {
        for (const BigInt& b : q->b) o.expect(m3(b) == m3(q->a), where("B_i = A mod 3"));
    } else {
        const auto& a = std::get<Z3xD6Profile>(p.factors).a;
        const unsigned long sq = m3(a[0]) * m3(a[0]) % 3;
        o.expect(m3(a[1]) == m3(a[0]), where("A2 = A1 mod 3"));
        o.expect(m3(a[2]) == sq && m3(a[3]) == sq, where("A3 = A4 = A1^2 mod 3"));
    }
}

Outcome membership_sweep() {
    Outcome o;
    std::mt19937_64 rng(424242);
    for (GroupId g : kOrder18) {
        for (int i = 0; i < 100000; ++i) {
            const auto e = random_element(g, rng, -2, 2);
            const BigInt d = det_via_reduction(e);
            check_lemmas(o, g, e, d);
            g_seen.emplace_back(g, d);
        }
    }
    // Same predicates through the search module.
    for (GroupId g : kOrder18) {
        SearchConfig cfg;
        cfg.group = g;
        cfg.lo = -2;
        cfg.hi = 2;
        cfg.samples = 100000;
        cfg.seed = 99;
        const SearchReport r = verify_congruence_lemmas(cfg);
        o.expect(r.total == 100000 && r.violation_count == 0 &&
                     r.class_counts[static_cast<std::size_t>(SpectrumClass::NotMember)] == 0,
                 [&] { return std::string(group_name(g)) + " search module reported violations"; });
    }
    return o;
}

Outcome exhaustive_small() {
    Outcome o;
    std::mt19937_64 rng(77);
    for (GroupId g : kOrder18) {
        // 24 support sets of 10 positions: the two 9-blocks plus one position
        // of the other block, and random choices.
        std::vector<std::uint32_t> supports;
        for (unsigned extra = 0; extra < 9; ++extra) supports.push_back(0x1ffu | (1u << (9 + extra)));
        for (unsigned extra = 0; extra < 5; ++extra) supports.push_back((0x1ffu << 9) | (1u << extra));
        while (supports.size() < 24) {
            std::vector<unsigned> pos(18);
            for (unsigned i = 0; i < 18; ++i) pos[i] = i;
            std::shuffle(pos.begin(), pos.end(), rng);
            std::uint32_t mask = 0;
            for (unsigned i = 0; i < 10; ++i) mask |= 1u << pos[i];
            supports.push_back(mask);
        }
        for (std::uint32_t mask : supports) {
            for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
                std::vector<BigInt> c(18);
                unsigned k = 0;
                for (unsigned p = 0; p < 18; ++p) {
                    if (mask >> p & 1u) c[p] = (bits >> k++) & 1u;
                }
                const GroupRingElement e(g, std::move(c));
                const BigInt d = det_via_reduction(e);
                check_lemmas(o, g, e, d);
                g_seen.emplace_back(g, d);
            }
        }
        o.expect(supports.size() >= 20, [] { return "too few support sets"; });
    }
    return o;
}

Outcome subgroup_containment() {
    Outcome o;
    for (const auto& [g, d] : g_seen) {
        o.expect(in_spectrum_z3xz3(d) && in_spectrum_d6(d),
                 [&] { return std::string(group_name(g)) + " determinant " + to_string(d) + " outside subgroup spectra"; });
    }
    o.expect(g_seen.size() > 200000, [] { return "criteria 2-4 produced too few determinants"; });
    return o;
}

Outcome classify_totality() {
    Outcome o;
    for (GroupId g : kOrder18) {
        for (long v = -10000; v <= 10000; ++v) {
            const BigInt d(v);
            const bool member = classify(d, g).member();
            o.expect(member == set_member(v, g),
                     [&] { return std::string(group_name(g)) + " classify mismatch at " + std::to_string(v); });
            if (member) {
                o.expect(det_via_reduction(achieve(d, g)) == d,
                         [&] { return std::string(group_name(g)) + " achieve fails at " + std::to_string(v); });
            }
        }
    }
    return o;
}

Outcome algebraic_properties() {
    Outcome o;
    std::mt19937_64 rng(31337);
    for (GroupId g : {GroupId::G18_4, GroupId::Z3xD6, GroupId::D18}) {
        for (int i = 0; i < 500; ++i) {
            const auto a = random_element(g, rng, -2, 2);
            const auto b = random_element(g, rng, -2, 2);
            const BigInt da = det_via_reduction(a);
            o.expect(det_via_reduction(a * b) == da * det_via_reduction(b),
                     [&] { return std::string(group_name(g)) + " multiplicativity fails on " + a.to_string(); });
            o.expect(det_via_reduction(a.antipode()) == da,
                     [&] { return std::string(group_name(g)) + " antipode invariance fails on " + a.to_string(); });
        }
    }
    std::uniform_int_distribution<long> d(-1'000'000'000L, 1'000'000'000L);
    for (int i = 0; i < 10000; ++i) {
        const EisensteinInt x(d(rng), d(rng)), y(d(rng), d(rng));
        o.expect((x * y).norm() == x.norm() * y.norm(), [&] { return "norm not multiplicative at " + x.to_string(); });
    }
    return o;
}

Outcome d18_generic_paths() {
    Outcome o;
    std::mt19937_64 rng(1818);
    for (int i = 0; i < 10000; ++i) {
        const auto e = random_element(GroupId::D18, rng, -2, 2);
        const BigInt oracle = det_regular(e);
        const BigInt reduced = det_via_reduction(e);
        o.expect(oracle == reduced, [&] { return "d18 paths disagree on " + e.to_string(); });
        o.expect(in_spectrum_d18(oracle), [&] { return "d18 determinant " + to_string(oracle) + " outside S(D18)"; });
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_seconds;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 family round-trips m in [-10,10]", 5, family_round_trips},
        {"2 three-way agreement, 1000 elements per group in [-3,3]", 30, three_way_agreement},
        {"3 membership + congruence lemmas, 1e5 elements per group in [-2,2]", 120, membership_sweep},
        {"4 exhaustive {0,1} sweeps on 24 ten-position supports", 60, exhaustive_small},
        {"5 containment in S(Z3xZ3) and S(D6)", 60, subgroup_containment},
        {"6 classify/achieve totality for |D| <= 1e4", 60, classify_totality},
        {"7 multiplicativity, antipode, Eisenstein norm", 30, algebraic_properties},
        {"8 d18 oracle/reduction agreement and S(D18) membership", 60, d18_generic_paths},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.pass = false;
            o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
        }
        std::printf("[%s] criterion %s (%lu checks, %.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.checks, secs,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
