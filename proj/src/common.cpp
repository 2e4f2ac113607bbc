#include "srkit/common.hpp"

#include <cstdlib>
#include <string>

namespace srk {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::IncompatibleTower: return "IncompatibleTower";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadBlock: return "BadBlock";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::TrivialCode: return "TrivialCode";
    case ErrorCode::NotMsrd: return "NotMsrd";
    case ErrorCode::IndexOutOfTheoremRange: return "IndexOutOfTheoremRange";
    case ErrorCode::BadDistance: return "BadDistance";
    case ErrorCode::DecompositionUnavailable: return "DecompositionUnavailable";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::IncompleteDistribution: return "IncompleteDistribution";
    case ErrorCode::UnequalColumnSizes: return "UnequalColumnSizes";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::LengthTooLong: return "LengthTooLong";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

const Limits& Limits::defaults() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("SRKIT_MAX_ENUM")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) {
        l.max_codewords = v;
        l.max_subspaces = v;
      }
    }
    return l;
  }();
  return limits;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

BigInt ipow(std::uint64_t base, std::uint64_t exp) { return ipow(BigInt(base), exp); }

std::uint64_t floor_log(const BigInt& value, std::uint64_t q) {
  if (value < 1) fail(ErrorCode::DomainError, "floor_log of a value below 1");
  std::uint64_t e = 0;
  BigInt p = q;
  while (p <= value) {
    p *= q;
    ++e;
  }
  return e;
}

BigInt floor_div(const BigRat& r) {
  BigInt num = numerator(r), den = denominator(r);
  BigInt quo = num / den;
  if (num % den != 0 && num < 0) quo -= 1;
  return quo;
}

BigInt ceil_div(const BigRat& r) { return -floor_div(-r); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace srk
