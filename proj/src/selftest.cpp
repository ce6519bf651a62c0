#include "gdet/selftest.hpp"

#include <functional>
#include <random>

#include "gdet/determinant.hpp"
#include "gdet/error.hpp"
#include "gdet/search.hpp"
#include "gdet/spectrum.hpp"

namespace gdet {

namespace {

constexpr GroupId kAllGroups[] = {GroupId::G18_4, GroupId::Z3xD6, GroupId::D18};
constexpr GroupId kOrder18Groups[] = {GroupId::G18_4, GroupId::Z3xD6};

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what) {
        ++result_.checks;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what();
        }
    }

    SuiteResult finish() && { return std::move(result_); }

private:
    SuiteResult result_;
};

GroupRingElement random_element(GroupId group, std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<BigInt> c(group_table(group).order());
    for (auto& v : c) v = dist(rng);
    return {group, std::move(c)};
}

SuiteResult group_axioms() {
    Suite s("group axioms");
    for (GroupId id : kAllGroups) {
        const GroupTable& t = group_table(id);
        const std::size_t n = t.order();
        for (std::size_t a = 0; a < n; ++a) {
            s.check(t.mult(0, a) == a && t.mult(a, 0) == a, [&] { return "identity fails in " + t.spec().name; });
            s.check(t.mult(a, t.inverse(a)) == 0, [&] { return "inverse fails in " + t.spec().name; });
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c)
                    s.check(t.mult(t.mult(a, b), c) == t.mult(a, t.mult(b, c)),
                            [&] { return "associativity fails in " + t.spec().name; });
            }
        }
    }
    return std::move(s).finish();
}

SuiteResult eisenstein() {
    Suite s("eisenstein arithmetic");
    const EisensteinInt w = EisensteinInt::omega();
    s.check(w * w * w == EisensteinInt(1L), [] { return "w^3 != 1"; });
    s.check(EisensteinInt(1L) + w + w * w == EisensteinInt(0L), [] { return "1 + w + w^2 != 0"; });
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
        const EisensteinInt x(dist(rng), dist(rng)), y(dist(rng), dist(rng));
        s.check((x * y).norm() == x.norm() * y.norm(), [&] { return "norm not multiplicative at " + x.to_string(); });
        s.check((x * x.conj()).is_rational(), [&] { return "x*conj(x) not rational at " + x.to_string(); });
    }
    return std::move(s).finish();
}

SuiteResult family_round_trips() {
    Suite s("family round-trips m in [-3,3]");
    for (GroupId id : kOrder18Groups) {
        for (const Family& f : family_table(id)) {
            for (long m = -3; m <= 3; ++m) {
                const BigInt d = det_via_reduction(family_element(f, BigInt(m)));
                s.check(d == f.value(BigInt(m)), [&] {
                    return std::string(group_name(id)) + " " + std::string(f.id) + " m=" + std::to_string(m) +
                           " gave " + to_string(d);
                });
            }
        }
    }
    return std::move(s).finish();
}

SuiteResult three_way_agreement() {
    Suite s("three-way determinant agreement");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const GroupId id = kAllGroups[i % 3];
        const auto e = random_element(id, rng, -3, 3);
        const BigInt oracle = det_regular(e);
        s.check(det_via_reduction(e) == oracle, [&] { return "reduction disagrees on " + e.to_string(); });
        if (id != GroupId::D18)
            s.check(factor_profile(e).product == oracle, [&] { return "factor profile disagrees on " + e.to_string(); });
    }
    return std::move(s).finish();
}

SuiteResult ring_homomorphism() {
    Suite s("multiplicativity and antipode");
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        const GroupId id = kAllGroups[i % 3];
        const auto a = random_element(id, rng, -2, 2);
        const auto b = random_element(id, rng, -2, 2);
        s.check(det_via_reduction(a * b) == det_via_reduction(a) * det_via_reduction(b),
                [&] { return "multiplicativity fails for " + a.to_string(); });
        s.check(det_via_reduction(a.antipode()) == det_via_reduction(a),
                [&] { return "antipode invariance fails for " + a.to_string(); });
        if (id != GroupId::D18)
            s.check(det_via_reduction(a.swapped()) == -det_via_reduction(a),
                    [&] { return "swap antisymmetry fails for " + a.to_string(); });
    }
    return std::move(s).finish();
}

SuiteResult classify_achieve() {
    Suite s("classify/achieve consistency |D| <= 2000");
    for (GroupId id : kOrder18Groups) {
        for (long v = -2000; v <= 2000; ++v) {
            const BigInt d(v);
            const MembershipForm form = classify(d, id);
            if (!form.member()) continue;
            s.check(in_spectrum_z3xz3(d) && in_spectrum_d6(d), [&] { return "containment fails at " + to_string(d); });
            s.check(det_via_reduction(achieve(d, id)) == d, [&] { return "achieve fails at " + to_string(d); });
        }
    }
    return std::move(s).finish();
}

SuiteResult congruences() {
    Suite s("congruence lemmas (random)");
    for (GroupId id : kOrder18Groups) {
        SearchConfig cfg;
        cfg.group = id;
        cfg.lo = -2;
        cfg.hi = 2;
        cfg.samples = 2000;
        cfg.seed = 17;
        const SearchReport lemmas = verify_congruence_lemmas(cfg);
        const SearchReport membership = run_search(cfg);
        s.check(lemmas.violation_count == 0 && membership.violation_count == 0,
                [&] { return std::string("violations in ") + std::string(group_name(id)); });
    }
    return std::move(s).finish();
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
    std::vector<SuiteResult> out;
    for (auto suite : {group_axioms, eisenstein, family_round_trips, three_way_agreement, ring_homomorphism,
                       classify_achieve, congruences}) {
        try {
            out.push_back(suite());
        } catch (const std::exception& e) {
            out.push_back({"exception", false, 0, e.what()});
        }
    }
    return out;
}

}  // namespace gdet
