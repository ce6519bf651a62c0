#include "gdet/bigint.hpp"

#include <cctype>

#include "gdet/error.hpp"

namespace gdet {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::NonRealValue: return "NonRealValue";
    case ErrorCode::NotInSpectrum: return "NotInSpectrum";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Internal: return "InternalError";
    }
    return "InternalError";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    const std::string_view s = trim(text);
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
    if (pos == s.size())
        throw Error(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
    }
    // mpz_class rejects a leading '+'.
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

unsigned valuation(const BigInt& value, unsigned long p) {
    if (value == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
    unsigned e = 0;
    BigInt v = abs(value);
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++e;
    }
    return e;
}

bool divides(const BigInt& divisor, const BigInt& value) {
    return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

unsigned long residue(const BigInt& value, unsigned long modulus) {
    return mpz_fdiv_ui(value.get_mpz_t(), modulus);
}

BigInt pow_ui(unsigned long base, unsigned long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

std::vector<BigInt> parse_bigint_list(std::string_view text) {
    std::vector<BigInt> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_bigint(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join(const std::vector<BigInt>& values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += to_string(values[i]);
    }
    return out;
}

}  // namespace gdet
