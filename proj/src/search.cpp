#include "gdet/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <thread>
#include <variant>

#include "gdet/determinant.hpp"
#include "gdet/error.hpp"

namespace gdet {

void SearchReport::record_violation(Violation v) {
    ++violation_count;
    auto pos = std::lower_bound(violations.begin(), violations.end(), v);
    if (violations.size() < kMaxStoredViolations) {
        violations.insert(pos, std::move(v));
    } else if (pos != violations.end()) {
        violations.insert(pos, std::move(v));
        violations.pop_back();
    }
}

void SearchReport::merge(const SearchReport& other) {
    if (other.total == 0) return;
    if (total == 0) {
        min_det = other.min_det;
        max_det = other.max_det;
    } else {
        if (other.min_det < min_det) min_det = other.min_det;
        if (other.max_det > max_det) max_det = other.max_det;
    }
    total += other.total;
    for (std::size_t i = 0; i < class_counts.size(); ++i) class_counts[i] += other.class_counts[i];
    const std::uint64_t count = violation_count + other.violation_count;
    for (const Violation& v : other.violations) record_violation(v);
    violation_count = count;
    residues_mod18.insert(other.residues_mod18.begin(), other.residues_mod18.end());
    residues_mod36.insert(other.residues_mod36.begin(), other.residues_mod36.end());
    residues_mod_big.insert(other.residues_mod_big.begin(), other.residues_mod_big.end());
}

namespace {

std::vector<std::size_t> support_positions(const SearchConfig& cfg, std::size_t order) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < order; ++i) {
        if (cfg.support >> i & 1u) pos.push_back(i);
    }
    return pos;
}

void validate(const SearchConfig& cfg) {
    if (cfg.lo > cfg.hi) throw Error(ErrorCode::InvalidArgument, "coefficient range has lo > hi");
    const std::size_t order = group_table(cfg.group).order();
    if (order < 32 && (cfg.support >> order) != 0)
        throw Error(ErrorCode::InvalidArgument, "support mask has bits beyond the group order");
}

using Checker = std::function<void(const std::vector<long>&, const GroupRingElement&, const BigInt&, SearchReport&)>;

void record_det(SearchReport& report, const BigInt& d) {
    if (report.total == 0) {
        report.min_det = d;
        report.max_det = d;
    } else {
        if (d < report.min_det) report.min_det = d;
        if (d > report.max_det) report.max_det = d;
    }
    ++report.total;
    report.residues_mod18.insert(residue(d, 18));
    report.residues_mod36.insert(residue(d, 36));
    report.residues_mod_big.insert(residue(d, report.big_modulus));
}

SearchReport empty_report(const SearchConfig& cfg, std::string kind) {
    SearchReport r;
    r.group = cfg.group;
    r.kind = std::move(kind);
    r.big_modulus = 4 * pow_ui(3, three_exponent(cfg.group)).get_ui();
    return r;
}

void evaluate(const SearchConfig& cfg, const std::vector<long>& coeffs, const Checker& check, SearchReport& report) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    const GroupRingElement element(cfg.group, std::move(c));
    const BigInt d = det_via_reduction(element);
    record_det(report, d);
    if (cfg.oracle_cross_check) {
        if (det_regular(element) != d) report.record_violation({coeffs, d, "oracle agreement"});
    }
    check(coeffs, element, d, report);
}

SearchReport run(const SearchConfig& cfg, const std::string& kind, const Checker& check) {
    validate(cfg);
    const std::size_t order = group_table(cfg.group).order();
    const auto positions = support_positions(cfg, order);
    const BigInt size = search_size(cfg);
    if (size > cfg.budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "search would evaluate " + to_string(size) + " elements, budget is " + std::to_string(cfg.budget));
    const std::uint64_t total = size.get_ui();

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 256)));
    threads = std::max(1u, threads);

    const unsigned long radix = static_cast<unsigned long>(cfg.hi - cfg.lo + 1);
    std::vector<SearchReport> partial(threads, empty_report(cfg, kind));

    auto exhaustive_task = [&](unsigned task) {
        const std::uint64_t begin = total * task / threads;
        const std::uint64_t end = total * (task + 1) / threads;
        std::vector<long> coeffs(order, 0);
        for (std::uint64_t n = begin; n < end; ++n) {
            std::uint64_t rest = n;
            for (std::size_t k = positions.size(); k-- > 0;) {
                coeffs[positions[k]] = cfg.lo + static_cast<long>(rest % radix);
                rest /= radix;
            }
            evaluate(cfg, coeffs, check, partial[task]);
        }
    };

    // Tasks own whole blocks so every sample comes from the same substream
    // no matter how many threads run.
    const std::uint64_t blocks = (total + kRandomBlock - 1) / kRandomBlock;
    auto random_task = [&](unsigned task) {
        std::uniform_int_distribution<long> dist(cfg.lo, cfg.hi);
        std::vector<long> coeffs(order, 0);
        for (std::uint64_t b = blocks * task / threads; b < blocks * (task + 1) / threads; ++b) {
            std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                              static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
            std::mt19937_64 rng(seq);
            const std::uint64_t end = std::min(total, (b + 1) * kRandomBlock);
            for (std::uint64_t n = b * kRandomBlock; n < end; ++n) {
                for (std::size_t p : positions) coeffs[p] = dist(rng);
                evaluate(cfg, coeffs, check, partial[task]);
            }
        }
    };

    auto body = [&](unsigned task) {
        if (cfg.mode == SearchMode::Exhaustive) exhaustive_task(task);
        else random_task(task);
    };

    if (threads == 1) {
        body(0);
    } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    body(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        pool.clear();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    SearchReport report = empty_report(cfg, kind);
    for (const auto& p : partial) report.merge(p);
    return report;
}

}  // namespace

BigInt search_size(const SearchConfig& cfg) {
    if (cfg.mode == SearchMode::Random) return BigInt(static_cast<unsigned long>(cfg.samples));
    validate(cfg);
    const auto positions = support_positions(cfg, group_table(cfg.group).order());
    return pow_ui(static_cast<unsigned long>(cfg.hi - cfg.lo + 1), positions.size());
}

SearchReport run_search(const SearchConfig& cfg) {
    const GroupId group = cfg.group;
    return run(cfg, "search", [group](const std::vector<long>& coeffs, const GroupRingElement&, const BigInt& d,
                                      SearchReport& report) {
        const MembershipForm form = classify(d, group);
        report.class_counts[static_cast<std::size_t>(form.cls)]++;
        if (!form.member()) report.record_violation({coeffs, d, "spectrum membership"});
        if (group != GroupId::D18) {
            if (!in_spectrum_z3xz3(d)) report.record_violation({coeffs, d, "S(Z3xZ3) containment"});
            if (!in_spectrum_d6(d)) report.record_violation({coeffs, d, "S(D6) containment"});
        }
    });
}

SearchReport verify_congruence_lemmas(const SearchConfig& cfg) {
    const GroupId group = cfg.group;
    if (group == GroupId::D18) throw Error(ErrorCode::UnsupportedGroup, "congruence lemmas cover g18-4 and z3xd6");
    const BigInt p3 = pow_ui(3, three_exponent(group));
    return run(cfg, "congruence", [group, p3](const std::vector<long>& coeffs, const GroupRingElement& element,
                                              const BigInt& d, SearchReport& report) {
        const MembershipForm form = classify(d, group);
        report.class_counts[static_cast<std::size_t>(form.cls)]++;
        if (divides(2, d) && !divides(4, d)) report.record_violation({coeffs, d, "2|D => 4|D"});
        if (divides(3, d) && !divides(p3, d))
            report.record_violation({coeffs, d, "3|D => 3^" + std::to_string(three_exponent(group)) + "|D"});
        const FactorProfile profile = factor_profile(element);
        if (profile.product != d) report.record_violation({coeffs, d, "factor product = D"});
        auto mod3 = [](const BigInt& v) { return residue(v, 3); };
        if (const auto* p = std::get_if<G18_4Profile>(&profile.factors)) {
            for (std::size_t i = 0; i < 4; ++i) {
                if (mod3(p->b[i]) != mod3(p->a))
                    report.record_violation({coeffs, d, "B" + std::to_string(i + 1) + " = A mod 3"});
            }
        } else if (const auto* q = std::get_if<Z3xD6Profile>(&profile.factors)) {
            const unsigned long a1 = mod3(q->a[0]);
            const unsigned long a1_sq = (a1 * a1) % 3;
            if (mod3(q->a[1]) != a1) report.record_violation({coeffs, d, "A2 = A1 mod 3"});
            if (mod3(q->a[2]) != a1_sq) report.record_violation({coeffs, d, "A3 = A1^2 mod 3"});
            if (mod3(q->a[3]) != a1_sq) report.record_violation({coeffs, d, "A4 = A1^2 mod 3"});
        }
    });
}

}  // namespace gdet
