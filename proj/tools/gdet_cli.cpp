// Command-line front end. Everything goes through the C API in gdet/gdet.h.
//
// Exit codes: 0 success, 1 domain error (value not in the spectrum, search
// violations, unsupported group for a command, budget exceeded), 2 usage error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gdet/gdet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct GroupCloser {
    void operator()(gdet_group* g) const { gdet_group_close(g); }
};
struct ElementFreer {
    void operator()(gdet_element* e) const { gdet_element_free(e); }
};
struct ConfigFreer {
    void operator()(gdet_search_config* c) const { gdet_search_config_free(c); }
};
using GroupPtr = std::unique_ptr<gdet_group, GroupCloser>;
using ElementPtr = std::unique_ptr<gdet_element, ElementFreer>;
using ConfigPtr = std::unique_ptr<gdet_search_config, ConfigFreer>;

class OwnedString {
public:
    ~OwnedString() { gdet_string_free(p_); }
    char** out() { return &p_; }
    const char* c_str() const { return p_ ? p_ : ""; }

private:
    char* p_ = nullptr;
};

struct Options {
    std::string group = "g18-4";
    std::string emit = "text";
    std::string coeffs;
    std::string value;
    std::uint64_t seed = 1;
    std::string range = "-1..1";
    std::uint64_t samples = 10000;
    std::string support = "all";
    std::string mode = "random";
    std::uint64_t budget = 100'000'000;
    unsigned threads = 0;
    bool congruence = false;
    bool oracle = false;
    bool subgroups = false;
};

int exit_for(gdet_status status) {
    switch (status) {
    case GDET_OK: return kExitOk;
    case GDET_ERR_INVALID_ARGUMENT:
    case GDET_ERR_PARSE: return kExitUsage;
    default: return kExitDomain;
    }
}

int report_error(gdet_status status) {
    std::cerr << "error: " << gdet_status_name(status) << ": " << gdet_last_error() << "\n";
    return exit_for(status);
}

gdet_emit emit_of(const Options& o) { return o.emit == "json" ? GDET_EMIT_JSON : GDET_EMIT_TEXT; }

std::optional<std::pair<long, long>> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return std::nullopt;
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) return std::nullopt;
        const long hi = std::stol(b, &used);
        if (used != b.size() || lo > hi) return std::nullopt;
        return std::make_pair(lo, hi);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// "all", "f" (first half), "g" (second half) or an integer bit mask.
std::optional<std::uint32_t> parse_support(const std::string& text, std::size_t order) {
    const std::uint32_t all = order >= 32 ? 0xffffffffu : (1u << order) - 1;
    const std::uint32_t f = (1u << (order / 2)) - 1;
    if (text == "all") return all;
    if (text == "f") return f;
    if (text == "g") return all & ~f;
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(text, &used, 0);
        if (used != text.size() || (v & ~static_cast<unsigned long>(all)) != 0) return std::nullopt;
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int open_group(const Options& o, GroupPtr& group) {
    gdet_group* g = nullptr;
    const gdet_status s = gdet_group_open(o.group.c_str(), &g);
    if (s != GDET_OK) return report_error(s);
    group.reset(g);
    return kExitOk;
}

int parse_element(const Options& o, const gdet_group* group, ElementPtr& element) {
    if (o.coeffs.empty()) {
        std::cerr << "error: coefficients required (positional or --coeffs)\n";
        return kExitUsage;
    }
    gdet_element* e = nullptr;
    const gdet_status s = gdet_element_parse(group, o.coeffs.c_str(), &e);
    if (s != GDET_OK) return report_error(s);
    element.reset(e);
    return kExitOk;
}

int cmd_det(const Options& o) {
    GroupPtr group;
    ElementPtr element;
    if (int rc = open_group(o, group)) return rc;
    if (int rc = parse_element(o, group.get(), element)) return rc;
    OwnedString out;
    int agree = 0;
    if (gdet_status s = gdet_det_report(element.get(), emit_of(o), out.out(), &agree); s != GDET_OK)
        return report_error(s);
    std::cout << out.c_str();
    return agree ? kExitOk : kExitDomain;
}

int cmd_factor(const Options& o) {
    GroupPtr group;
    ElementPtr element;
    if (int rc = open_group(o, group)) return rc;
    if (int rc = parse_element(o, group.get(), element)) return rc;
    OwnedString out;
    if (gdet_status s = gdet_factor_profile(element.get(), emit_of(o), out.out()); s != GDET_OK)
        return report_error(s);
    std::cout << out.c_str();
    return kExitOk;
}

int cmd_classify(const Options& o) {
    OwnedString out;
    if (o.subgroups) {
        if (gdet_status s = gdet_subgroup_spectra(o.value.c_str(), emit_of(o), out.out()); s != GDET_OK)
            return report_error(s);
        std::cout << out.c_str();
        return kExitOk;
    }
    GroupPtr group;
    if (int rc = open_group(o, group)) return rc;
    if (gdet_status s = gdet_classify(group.get(), o.value.c_str(), emit_of(o), out.out(), nullptr); s != GDET_OK)
        return report_error(s);
    std::cout << out.c_str();
    return kExitOk;
}

int cmd_achieve(const Options& o) {
    GroupPtr group;
    if (int rc = open_group(o, group)) return rc;
    gdet_element* e = nullptr;
    if (gdet_status s = gdet_element_achieve(group.get(), o.value.c_str(), &e); s != GDET_OK) return report_error(s);
    ElementPtr witness(e);
    OwnedString out;
    int verified = 0;
    if (gdet_status s = gdet_witness_report(group.get(), o.value.c_str(), witness.get(), emit_of(o), out.out(),
                                            &verified);
        s != GDET_OK)
        return report_error(s);
    if (!verified) {
        std::cerr << "error: witness failed re-verification\n";
        return kExitDomain;
    }
    std::cout << out.c_str();
    return kExitOk;
}

int cmd_search(const Options& o) {
    GroupPtr group;
    if (int rc = open_group(o, group)) return rc;
    const auto range = parse_range(o.range);
    if (!range) {
        std::cerr << "error: --range expects lo..hi with lo <= hi\n";
        return kExitUsage;
    }
    const auto support = parse_support(o.support, gdet_group_order(group.get()));
    if (!support) {
        std::cerr << "error: --support expects all, f, g or a bit mask within the group order\n";
        return kExitUsage;
    }
    gdet_search_config* c = nullptr;
    if (gdet_status s = gdet_search_config_create(group.get(), &c); s != GDET_OK) return report_error(s);
    ConfigPtr cfg(c);
    gdet_search_config_set_range(c, range->first, range->second);
    gdet_search_config_set_support(c, *support);
    gdet_search_config_set_mode(c, o.mode == "exhaustive" ? GDET_SEARCH_EXHAUSTIVE : GDET_SEARCH_RANDOM);
    gdet_search_config_set_samples(c, o.samples);
    gdet_search_config_set_seed(c, o.seed);
    gdet_search_config_set_budget(c, o.budget);
    gdet_search_config_set_threads(c, o.threads);
    gdet_search_config_set_oracle(c, o.oracle ? 1 : 0);
    OwnedString out;
    std::uint64_t violations = 0;
    if (gdet_status s = gdet_search_run(c, o.congruence ? 1 : 0, emit_of(o), out.out(), &violations); s != GDET_OK)
        return report_error(s);
    std::cout << out.c_str();
    return violations == 0 ? kExitOk : kExitDomain;
}

int cmd_selftest(const Options& o) {
    OwnedString out;
    int failures = 0;
    if (gdet_status s = gdet_selftest(emit_of(o), out.out(), &failures); s != GDET_OK) return report_error(s);
    std::cout << out.c_str();
    return failures == 0 ? kExitOk : kExitDomain;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--group", o.group, "Group: g18-4, z3xd6 or d18")
        ->check(CLI::IsMember({"g18-4", "z3xd6", "d18"}));
    cmd->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer group determinants for the non-abelian groups of order 18"};
    app.require_subcommand(1);
    Options o;

    auto* det = app.add_subcommand("det", "Determinant of a group-ring element by every available path");
    add_common(det, o);
    det->add_option("coeffs,--coeffs", o.coeffs, "Comma-separated coefficients in flat-index order");

    auto* factor = app.add_subcommand("factor", "Integer factor profile of a group-ring element");
    add_common(factor, o);
    factor->add_option("coeffs,--coeffs", o.coeffs, "Comma-separated coefficients in flat-index order");

    auto* classify = app.add_subcommand("classify", "Classify an integer against the determinant spectrum");
    add_common(classify, o);
    classify->add_option("value", o.value, "Integer to classify")->required();
    classify->add_flag("--subgroups", o.subgroups, "Report membership in S(D18), S(Z3xZ3) and S(D6) instead");

    auto* achieve = app.add_subcommand("achieve", "Group-ring element with the given determinant");
    add_common(achieve, o);
    achieve->add_option("value", o.value, "Target determinant")->required();

    auto* search = app.add_subcommand("search", "Check determinants of many elements against the spectrum predicates");
    add_common(search, o);
    search->add_option("--mode", o.mode, "random or exhaustive")->check(CLI::IsMember({"random", "exhaustive"}));
    search->add_option("--range", o.range, "Coefficient range lo..hi");
    search->add_option("--samples", o.samples, "Random samples");
    search->add_option("--seed", o.seed, "Random seed");
    search->add_option("--support", o.support, "Positions allowed nonzero: all, f, g or a bit mask");
    search->add_option("--budget", o.budget, "Maximum number of evaluations");
    search->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
    search->add_flag("--congruence", o.congruence, "Check the congruence lemmas and factor profile");
    search->add_flag("--oracle", o.oracle, "Cross-check every determinant against the regular-matrix oracle");

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite at small scale");
    add_common(selftest, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (det->parsed()) return cmd_det(o);
    if (factor->parsed()) return cmd_factor(o);
    if (classify->parsed()) return cmd_classify(o);
    if (achieve->parsed()) return cmd_achieve(o);
    if (search->parsed()) return cmd_search(o);
    if (selftest->parsed()) return cmd_selftest(o);
    return kExitUsage;
}
