#include "gdet/gdet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gdet/determinant.hpp"
#include "gdet/error.hpp"
#include "gdet/render.hpp"
#include "gdet/search.hpp"
#include "gdet/selftest.hpp"
#include "gdet/spectrum.hpp"

struct gdet_group {
    gdet::GroupId id;
};

struct gdet_element {
    gdet::GroupRingElement value;
};

struct gdet_search_config {
    gdet::SearchConfig cfg;
};

namespace {

thread_local std::string last_error;

gdet_status to_status(gdet::ErrorCode code) {
    switch (code) {
    case gdet::ErrorCode::InvalidArgument: return GDET_ERR_INVALID_ARGUMENT;
    case gdet::ErrorCode::Parse: return GDET_ERR_PARSE;
    case gdet::ErrorCode::UnsupportedGroup: return GDET_ERR_UNSUPPORTED_GROUP;
    case gdet::ErrorCode::NonRealValue: return GDET_ERR_NON_REAL_VALUE;
    case gdet::ErrorCode::NotInSpectrum: return GDET_ERR_NOT_IN_SPECTRUM;
    case gdet::ErrorCode::UnknownFamily: return GDET_ERR_UNKNOWN_FAMILY;
    case gdet::ErrorCode::BudgetExceeded: return GDET_ERR_BUDGET_EXCEEDED;
    case gdet::ErrorCode::Internal: return GDET_ERR_INTERNAL;
    }
    return GDET_ERR_INTERNAL;
}

gdet_status fail(gdet_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
gdet_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const gdet::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(GDET_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GDET_ERR_INTERNAL, e.what());
    }
}

char* owned(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

gdet::Emit to_emit(gdet_emit emit) { return emit == GDET_EMIT_JSON ? gdet::Emit::Json : gdet::Emit::Text; }

#define GDET_REQUIRE(cond)                                                         \
    do {                                                                           \
        if (!(cond)) return fail(GDET_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
    } while (0)

}  // namespace

extern "C" {

const char* gdet_version(void) { return "1.0.0"; }

const char* gdet_status_name(gdet_status status) {
    switch (status) {
    case GDET_OK: return "Ok";
    case GDET_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case GDET_ERR_PARSE: return "ParseError";
    case GDET_ERR_UNSUPPORTED_GROUP: return "UnsupportedGroup";
    case GDET_ERR_NON_REAL_VALUE: return "NonRealValue";
    case GDET_ERR_NOT_IN_SPECTRUM: return "NotInSpectrum";
    case GDET_ERR_UNKNOWN_FAMILY: return "UnknownFamily";
    case GDET_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case GDET_ERR_INTERNAL: return "InternalError";
    }
    return "Unknown";
}

const char* gdet_last_error(void) { return last_error.c_str(); }

void gdet_string_free(char* s) { std::free(s); }

gdet_status gdet_group_open(const char* name, gdet_group** out) {
    GDET_REQUIRE(name && out);
    return guarded([&] {
        const auto id = gdet::parse_group_id(name);
        if (!id) return fail(GDET_ERR_INVALID_ARGUMENT, std::string("unknown group '") + name + "'");
        *out = new gdet_group{*id};
        return GDET_OK;
    });
}

void gdet_group_close(gdet_group* group) { delete group; }

const char* gdet_group_name(const gdet_group* group) {
    return group ? gdet::group_name(group->id).data() : nullptr;
}

size_t gdet_group_order(const gdet_group* group) {
    return group ? gdet::group_table(group->id).order() : 0;
}

gdet_status gdet_group_mult(const gdet_group* group, size_t a, size_t b, size_t* out) {
    GDET_REQUIRE(group && out);
    const auto& t = gdet::group_table(group->id);
    GDET_REQUIRE(a < t.order() && b < t.order());
    *out = t.mult(a, b);
    return GDET_OK;
}

gdet_status gdet_group_inverse(const gdet_group* group, size_t a, size_t* out) {
    GDET_REQUIRE(group && out);
    const auto& t = gdet::group_table(group->id);
    GDET_REQUIRE(a < t.order());
    *out = t.inverse(a);
    return GDET_OK;
}

gdet_status gdet_group_index_of(const gdet_group* group, const unsigned* h, size_t h_len, unsigned z,
                                size_t* out) {
    GDET_REQUIRE(group && h && out);
    return guarded([&] {
        gdet::ElementLabel label{std::vector<unsigned>(h, h + h_len), z};
        *out = gdet::group_table(group->id).index_of(label);
        return GDET_OK;
    });
}

gdet_status gdet_group_element_of(const gdet_group* group, size_t index, unsigned* h, size_t h_len, unsigned* z) {
    GDET_REQUIRE(group && h && z);
    return guarded([&] {
        const auto label = gdet::group_table(group->id).element_of(index);
        if (label.h.size() != h_len) return fail(GDET_ERR_INVALID_ARGUMENT, "h buffer has the wrong length");
        std::copy(label.h.begin(), label.h.end(), h);
        *z = label.z;
        return GDET_OK;
    });
}

gdet_status gdet_element_parse(const gdet_group* group, const char* text, gdet_element** out) {
    GDET_REQUIRE(group && text && out);
    return guarded([&] {
        auto coeffs = gdet::parse_bigint_list(text);
        const std::size_t order = gdet::group_table(group->id).order();
        if (coeffs.size() != order)
            return fail(GDET_ERR_PARSE, "expected " + std::to_string(order) + " comma-separated integers, got " +
                                            std::to_string(coeffs.size()));
        *out = new gdet_element{gdet::GroupRingElement(group->id, std::move(coeffs))};
        return GDET_OK;
    });
}

gdet_status gdet_element_family(const gdet_group* group, const char* family_id, const char* m, gdet_element** out) {
    GDET_REQUIRE(group && family_id && m && out);
    return guarded([&] {
        *out = new gdet_element{gdet::family_element(group->id, family_id, gdet::parse_bigint(m))};
        return GDET_OK;
    });
}

gdet_status gdet_element_achieve(const gdet_group* group, const char* value, gdet_element** out) {
    GDET_REQUIRE(group && value && out);
    return guarded([&] {
        *out = new gdet_element{gdet::achieve(gdet::parse_bigint(value), group->id)};
        return GDET_OK;
    });
}

void gdet_element_free(gdet_element* element) { delete element; }

gdet_status gdet_element_format(const gdet_element* element, char** out) {
    GDET_REQUIRE(element && out);
    return guarded([&] {
        *out = owned(element->value.to_string());
        return GDET_OK;
    });
}

gdet_status gdet_det(const gdet_element* element, char** out) {
    GDET_REQUIRE(element && out);
    return guarded([&] {
        *out = owned(gdet::to_string(gdet::det_via_reduction(element->value)));
        return GDET_OK;
    });
}

gdet_status gdet_det_regular(const gdet_element* element, char** out) {
    GDET_REQUIRE(element && out);
    return guarded([&] {
        *out = owned(gdet::to_string(gdet::det_regular(element->value)));
        return GDET_OK;
    });
}

gdet_status gdet_det_report(const gdet_element* element, gdet_emit emit, char** out, int* agree) {
    GDET_REQUIRE(element && out);
    return guarded([&] {
        const auto record = gdet::det_record(element->value);
        if (agree) *agree = record["agree"].get<bool>() ? 1 : 0;
        *out = owned(gdet::render(record, to_emit(emit)));
        return GDET_OK;
    });
}

gdet_status gdet_factor_profile(const gdet_element* element, gdet_emit emit, char** out) {
    GDET_REQUIRE(element && out);
    return guarded([&] {
        *out = owned(gdet::render(gdet::profile_record(gdet::factor_profile(element->value)), to_emit(emit)));
        return GDET_OK;
    });
}

gdet_status gdet_classify(const gdet_group* group, const char* value, gdet_emit emit, char** out, int* member) {
    GDET_REQUIRE(group && value && out);
    return guarded([&] {
        const gdet::BigInt d = gdet::parse_bigint(value);
        const auto form = gdet::classify(d, group->id);
        if (member) *member = form.member() ? 1 : 0;
        *out = owned(gdet::render(gdet::membership_record(d, group->id, form), to_emit(emit)));
        return GDET_OK;
    });
}

gdet_status gdet_witness_report(const gdet_group* group, const char* value, const gdet_element* witness,
                                gdet_emit emit, char** out, int* verified) {
    GDET_REQUIRE(group && value && witness && out);
    GDET_REQUIRE(witness->value.group() == group->id);
    return guarded([&] {
        const auto record = gdet::witness_record(gdet::parse_bigint(value), witness->value);
        if (verified) *verified = record["verified"].get<bool>() ? 1 : 0;
        *out = owned(gdet::render(record, to_emit(emit)));
        return GDET_OK;
    });
}

gdet_status gdet_subgroup_spectra(const char* value, gdet_emit emit, char** out) {
    GDET_REQUIRE(value && out);
    return guarded([&] {
        const gdet::BigInt d = gdet::parse_bigint(value);
        *out = owned(gdet::render(gdet::subgroup_record(d, gdet::classify_subgroup_spectra(d)), to_emit(emit)));
        return GDET_OK;
    });
}

gdet_status gdet_search_config_create(const gdet_group* group, gdet_search_config** out) {
    GDET_REQUIRE(group && out);
    return guarded([&] {
        auto* c = new gdet_search_config{};
        c->cfg.group = group->id;
        *out = c;
        return GDET_OK;
    });
}

void gdet_search_config_free(gdet_search_config* cfg) { delete cfg; }

gdet_status gdet_search_config_set_range(gdet_search_config* cfg, long lo, long hi) {
    GDET_REQUIRE(cfg && lo <= hi);
    cfg->cfg.lo = lo;
    cfg->cfg.hi = hi;
    return GDET_OK;
}

gdet_status gdet_search_config_set_support(gdet_search_config* cfg, uint32_t mask) {
    GDET_REQUIRE(cfg);
    const std::size_t order = gdet::group_table(cfg->cfg.group).order();
    GDET_REQUIRE((mask >> order) == 0);
    cfg->cfg.support = mask;
    return GDET_OK;
}

gdet_status gdet_search_config_set_mode(gdet_search_config* cfg, gdet_search_mode mode) {
    GDET_REQUIRE(cfg && (mode == GDET_SEARCH_RANDOM || mode == GDET_SEARCH_EXHAUSTIVE));
    cfg->cfg.mode = mode == GDET_SEARCH_RANDOM ? gdet::SearchMode::Random : gdet::SearchMode::Exhaustive;
    return GDET_OK;
}

gdet_status gdet_search_config_set_samples(gdet_search_config* cfg, uint64_t samples) {
    GDET_REQUIRE(cfg);
    cfg->cfg.samples = samples;
    return GDET_OK;
}

gdet_status gdet_search_config_set_seed(gdet_search_config* cfg, uint64_t seed) {
    GDET_REQUIRE(cfg);
    cfg->cfg.seed = seed;
    return GDET_OK;
}

gdet_status gdet_search_config_set_budget(gdet_search_config* cfg, uint64_t budget) {
    GDET_REQUIRE(cfg);
    cfg->cfg.budget = budget;
    return GDET_OK;
}

gdet_status gdet_search_config_set_threads(gdet_search_config* cfg, unsigned threads) {
    GDET_REQUIRE(cfg);
    cfg->cfg.threads = threads;
    return GDET_OK;
}

gdet_status gdet_search_config_set_oracle(gdet_search_config* cfg, int enabled) {
    GDET_REQUIRE(cfg);
    cfg->cfg.oracle_cross_check = enabled != 0;
    return GDET_OK;
}

gdet_status gdet_search_run(const gdet_search_config* cfg, int congruence, gdet_emit emit, char** out,
                            uint64_t* violations) {
    GDET_REQUIRE(cfg && out);
    return guarded([&] {
        const auto report =
            congruence ? gdet::verify_congruence_lemmas(cfg->cfg) : gdet::run_search(cfg->cfg);
        if (violations) *violations = report.violation_count;
        *out = owned(gdet::render(gdet::search_record(report), to_emit(emit)));
        return GDET_OK;
    });
}

gdet_status gdet_selftest(gdet_emit emit, char** out, int* failures) {
    GDET_REQUIRE(out);
    return guarded([&] {
        const auto results = gdet::run_selftest();
        int failed = 0;
        for (const auto& r : results) failed += r.passed ? 0 : 1;
        if (failures) *failures = failed;
        *out = owned(gdet::render(gdet::selftest_record(results), to_emit(emit)));
        return GDET_OK;
    });
}

}  // extern "C"
