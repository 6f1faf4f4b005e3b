#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace primfield {

enum class Errc {
  ok = 0,
  not_prime,
  size_limit,
  invalid_polynomial,
  not_a_divisor,
  field_mismatch,
  dimension_mismatch,
  no_avoiding_vector,
  empty_family,
  trivial_extension,
  no_covering_exists,
  ti_too_large,
  not_a_partition,
  not_primitive,
  map_not_injective,
  parse_error,
  bad_argument,
  io_error,
  internal_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "Ok";
    case Errc::not_prime: return "NotPrime";
    case Errc::size_limit: return "SizeLimit";
    case Errc::invalid_polynomial: return "InvalidPolynomial";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::no_avoiding_vector: return "NoAvoidingVector";
    case Errc::empty_family: return "EmptyFamily";
    case Errc::trivial_extension: return "TrivialExtension";
    case Errc::no_covering_exists: return "NoCoveringExists";
    case Errc::ti_too_large: return "TiTooLarge";
    case Errc::not_a_partition: return "NotAPartitionOfW";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::map_not_injective: return "MapNotInjective";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_argument: return "BadArgument";
    case Errc::io_error: return "IoError";
    case Errc::internal_error: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace primfield
