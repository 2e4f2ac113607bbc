#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  MixedFields,
  IncompatibleTower,
  AmbientMismatch,
  TooLarge,
  BadBlock,
  ProfileMismatch,
  NotComparable,
  TrivialCode,
  NotMsrd,
  IndexOutOfTheoremRange,
  BadDistance,
  DecompositionUnavailable,
  HypothesisFailed,
  IncompleteDistribution,
  UnequalColumnSizes,
  DomainError,
  BadParameters,
  LengthTooLong,
  ParseError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Enumeration guards. Codeword sweeps default to 2^24 and subspace streams to
// 2^28; SRKIT_MAX_ENUM overrides both.
struct Limits {
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
  std::uint64_t max_subspaces = std::uint64_t{1} << 28;
  std::uint64_t max_keys = 10000000;
  static const Limits& defaults();
};

BigInt ipow(const BigInt& base, std::uint64_t exp);
BigInt ipow(std::uint64_t base, std::uint64_t exp);

// Largest e with q^e <= value (value >= 1).
std::uint64_t floor_log(const BigInt& value, std::uint64_t q);

BigInt floor_div(const BigRat& r);
BigInt ceil_div(const BigRat& r);

bool is_prime(std::uint64_t n);

}  // namespace srk
