#pragma once

// Structured records shared by the C API and the CLI. Every record is built
// once as an ordered JSON document; the text form is a flattening of that
// same document, so both renderings carry identical data. Integers that may
// exceed 64 bits are emitted as decimal strings.

#include <string>

#include "json.hpp"

#include "gdet/determinant.hpp"
#include "gdet/search.hpp"
#include "gdet/spectrum.hpp"

namespace gdet {

using Record = nlohmann::ordered_json;

enum class Emit { Text, Json };

Record membership_record(const BigInt& value, GroupId group, const MembershipForm& form);
Record subgroup_record(const BigInt& value, const SubgroupSpectra& spectra);
Record profile_record(const FactorProfile& profile);
/// All available determinant paths for the element and whether they agree.
Record det_record(const GroupRingElement& element);
/// Membership fields for `value` followed by the det record of `witness`
/// and a `verified` flag (all paths agree and equal `value`).
Record witness_record(const BigInt& value, const GroupRingElement& witness);
Record search_record(const SearchReport& report);

/// JSON: two-space indented document plus newline. Text: one "key: value"
/// line per leaf, nested keys joined with '.', arrays of scalars
/// comma-joined, null rendered as "none".
std::string render(const Record& record, Emit emit);

}  // namespace gdet

#include "gdet/selftest.hpp"

namespace gdet {

Record selftest_record(const std::vector<SuiteResult>& results);

}  // namespace gdet
