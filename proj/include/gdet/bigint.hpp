#pragma once

// Arbitrary-precision integers. GMP's C++ wrapper does the arithmetic; this
// header only adds parsing, formatting and the few number-theoretic helpers
// the rest of the library needs.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gdet {

using BigInt = mpz_class;

/// Parses an optionally signed decimal integer. Throws Error(Parse).
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

/// Exponent of the prime `p` in `value`; `value` must be nonzero.
unsigned valuation(const BigInt& value, unsigned long p);

/// True when `divisor` divides `value` (0 is divisible by everything).
bool divides(const BigInt& divisor, const BigInt& value);

/// Least non-negative residue of `value` modulo `modulus` (modulus > 0).
unsigned long residue(const BigInt& value, unsigned long modulus);

BigInt pow_ui(unsigned long base, unsigned long exponent);

/// Parses "a,b,c" into integers; whitespace around entries is ignored.
std::vector<BigInt> parse_bigint_list(std::string_view text);

std::string join(const std::vector<BigInt>& values, std::string_view sep = ",");

}  // namespace gdet
