#include "gdet/render.hpp"

#include <algorithm>
#include <variant>

namespace gdet {

Record membership_record(const BigInt& value, GroupId group, const MembershipForm& form) {
    Record r;
    r["group"] = group_name(group);
    r["value"] = to_string(value);
    r["member"] = form.member();
    r["class"] = class_name(form.cls);
    r["sign"] = form.sign ? Record(std::string(1, *form.sign)) : Record(nullptr);
    r["m"] = form.m ? Record(to_string(*form.m)) : Record(nullptr);
    r["family"] = form.family ? Record(*form.family) : Record(nullptr);
    return r;
}

Record subgroup_record(const BigInt& value, const SubgroupSpectra& spectra) {
    Record r;
    r["value"] = to_string(value);
    r["d18"] = spectra.d18;
    r["z3xz3"] = spectra.z3xz3;
    r["d6"] = spectra.d6;
    return r;
}

Record profile_record(const FactorProfile& profile) {
    Record r;
    if (const auto* p = std::get_if<G18_4Profile>(&profile.factors)) {
        r["form"] = "A*B1^2*B2^2*B3^2*B4^2";
        r["A"] = to_string(p->a);
        for (std::size_t i = 0; i < 4; ++i) r["B" + std::to_string(i + 1)] = to_string(p->b[i]);
    } else if (const auto* q = std::get_if<Z3xD6Profile>(&profile.factors)) {
        r["form"] = "A1*A2^2*A3*A4^2";
        for (std::size_t i = 0; i < 4; ++i) r["A" + std::to_string(i + 1)] = to_string(q->a[i]);
    }
    r["product"] = to_string(profile.product);
    return r;
}

Record det_record(const GroupRingElement& element) {
    const BigInt reduction = det_via_reduction(element);
    const BigInt regular = det_regular(element);
    bool agree = reduction == regular;

    Record r;
    r["group"] = group_name(element.group());
    r["coeffs"] = element.to_string();
    r["det"] = to_string(reduction);
    Record paths;
    paths["regular"] = to_string(regular);
    paths["reduction"] = to_string(reduction);
    Record profile = nullptr;
    if (element.group() != GroupId::D18) {
        const FactorProfile fp = factor_profile(element);
        paths["factor_product"] = to_string(fp.product);
        agree = agree && fp.product == reduction;
        profile = profile_record(fp);
    }
    r["paths"] = std::move(paths);
    r["agree"] = agree;
    r["profile"] = std::move(profile);
    return r;
}

Record witness_record(const BigInt& value, const GroupRingElement& witness) {
    Record r = membership_record(value, witness.group(), classify(value, witness.group()));
    Record det = det_record(witness);
    r["coeffs"] = det["coeffs"];
    r["det"] = det["det"];
    r["paths"] = det["paths"];
    r["profile"] = det["profile"];
    r["verified"] = det["agree"].get<bool>() && det["det"].get<std::string>() == to_string(value);
    return r;
}

namespace {

Record residue_list(const std::set<unsigned long>& s) {
    Record a = Record::array();
    for (unsigned long v : s) a.push_back(v);
    return a;
}

}  // namespace

Record search_record(const SearchReport& report) {
    Record r;
    r["kind"] = report.kind;
    r["group"] = group_name(report.group);
    r["total"] = report.total;
    Record counts;
    for (SpectrumClass c : {SpectrumClass::CoprimeSix, SpectrumClass::TwoNotThree, SpectrumClass::ThreeNotTwo,
                            SpectrumClass::DivSix, SpectrumClass::NotMember})
        counts[std::string(class_name(c))] = report.class_counts[static_cast<std::size_t>(c)];
    r["class_counts"] = std::move(counts);
    r["violation_count"] = report.violation_count;
    Record violations = Record::array();
    for (const Violation& v : report.violations) {
        Record e;
        std::string coeffs;
        for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
            if (i) coeffs += ',';
            coeffs += std::to_string(v.coeffs[i]);
        }
        e["coeffs"] = coeffs;
        e["det"] = to_string(v.det);
        e["predicate"] = v.predicate;
        violations.push_back(std::move(e));
    }
    r["violations"] = std::move(violations);
    Record residues;
    residues["mod18"] = residue_list(report.residues_mod18);
    residues["mod36"] = residue_list(report.residues_mod36);
    residues["big_modulus"] = report.big_modulus;
    residues["big_count"] = report.residues_mod_big.size();
    residues["big"] = residue_list(report.residues_mod_big);
    r["residues"] = std::move(residues);
    r["min_det"] = report.total ? Record(to_string(report.min_det)) : Record(nullptr);
    r["max_det"] = report.total ? Record(to_string(report.max_det)) : Record(nullptr);
    return r;
}

namespace {

std::string scalar_text(const Record& v) {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const Record& v, const std::string& key, std::string& out) {
    if (v.is_object()) {
        if (v.empty()) out += key + ": {}\n";
        for (const auto& [k, child] : v.items()) flatten(child, key.empty() ? k : key + "." + k, out);
        return;
    }
    if (v.is_array()) {
        const bool scalars = std::all_of(v.begin(), v.end(), [](const Record& e) { return e.is_primitive(); });
        if (scalars) {
            std::string line;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) line += ',';
                line += scalar_text(v[i]);
            }
            out += key + ": " + line + "\n";
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], key + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out += key + ": " + scalar_text(v) + "\n";
}

}  // namespace

std::string render(const Record& record, Emit emit) {
    if (emit == Emit::Json) return record.dump(2) + "\n";
    std::string out;
    flatten(record, "", out);
    return out;
}

}  // namespace gdet

namespace gdet {

Record selftest_record(const std::vector<SuiteResult>& results) {
    Record r;
    Record suites = Record::array();
    unsigned passed = 0;
    for (const SuiteResult& s : results) {
        Record e;
        e["name"] = s.name;
        e["passed"] = s.passed;
        e["checks"] = s.checks;
        e["detail"] = s.detail.empty() ? Record(nullptr) : Record(s.detail);
        suites.push_back(std::move(e));
        passed += s.passed ? 1 : 0;
    }
    r["suites"] = std::move(suites);
    r["passed"] = passed;
    r["failed"] = results.size() - passed;
    return r;
}

}  // namespace gdet
