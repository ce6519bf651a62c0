#pragma once

// Enumerates or samples group-ring elements and checks every determinant
// against the spectrum classification and the congruence lemmas.
//
// Work partitioning: an exhaustive sweep is a mixed-radix counter over the
// supported positions with the lowest supported position as the most
// significant digit, so each task owns a contiguous counter range (a fixed
// prefix of leading coefficients). Random mode draws sample i from block
// i / kRandomBlock; block b is generated by std::mt19937_64 seeded with
// std::seed_seq{seed_lo, seed_hi, b_lo, b_hi}. Both schemes are independent of
// the thread count, and partial reports merge associatively.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gdet/bigint.hpp"
#include "gdet/group.hpp"
#include "gdet/spectrum.hpp"

namespace gdet {

enum class SearchMode { Exhaustive, Random };

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
inline constexpr std::size_t kMaxStoredViolations = 100;
inline constexpr std::uint64_t kRandomBlock = 4096;

struct SearchConfig {
    GroupId group = GroupId::G18_4;
    long lo = -1;
    long hi = 1;
    std::uint32_t support = 0x3ffff;  // bit i allows position i to be nonzero
    SearchMode mode = SearchMode::Random;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 0;  // 0: hardware concurrency
    /// Also compute the 18x18 regular-matrix determinant and require agreement.
    bool oracle_cross_check = false;
};

struct Violation {
    std::vector<long> coeffs;
    BigInt det;
    std::string predicate;

    friend auto operator<=>(const Violation& a, const Violation& b) {
        if (auto c = a.coeffs <=> b.coeffs; c != 0) return c;
        return a.predicate <=> b.predicate;
    }
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct SearchReport {
    GroupId group = GroupId::G18_4;
    std::string kind = "search";  // "search" or "congruence"
    std::uint64_t total = 0;
    std::array<std::uint64_t, 5> class_counts{};  // indexed by SpectrumClass
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;  // canonical order, at most kMaxStoredViolations
    std::set<unsigned long> residues_mod18;
    std::set<unsigned long> residues_mod36;
    std::set<unsigned long> residues_mod_big;  // modulo 4 * 3^e
    unsigned long big_modulus = 0;
    BigInt min_det;
    BigInt max_det;

    void record_violation(Violation v);
    /// Associative, commutative merge of partial results.
    void merge(const SearchReport& other);
};

/// Every element's determinant (via H-reduction) is classified; non-members
/// and subgroup-spectrum misses are violations. Throws Error(BudgetExceeded).
SearchReport run_search(const SearchConfig& cfg);

/// Checks 2|D => 4|D, 3|D => 3^e|D, B_i = A (mod 3) for g18-4 and
/// A2 = A1, A3 = A4 = A1^2 (mod 3) for z3xd6. Throws Error(UnsupportedGroup)
/// for d18 and Error(BudgetExceeded).
SearchReport verify_congruence_lemmas(const SearchConfig& cfg);

/// Number of elements the config would evaluate.
BigInt search_size(const SearchConfig& cfg);

}  // namespace gdet
