#include "primfield.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "fieldcore.hpp"
#include "report.hpp"

using namespace primfield;

struct pf_tower {
  Tower tower;
};

namespace {

thread_local std::string g_last_error;

pf_status map_errc(Errc c) {
  switch (c) {
    case Errc::ok: return PF_OK;
    case Errc::not_prime: return PF_ERR_NOT_PRIME;
    case Errc::size_limit: return PF_ERR_SIZE_LIMIT;
    case Errc::invalid_polynomial: return PF_ERR_INVALID_POLYNOMIAL;
    case Errc::not_a_divisor: return PF_ERR_NOT_A_DIVISOR;
    case Errc::field_mismatch: return PF_ERR_FIELD_MISMATCH;
    case Errc::dimension_mismatch: return PF_ERR_DIMENSION_MISMATCH;
    case Errc::no_avoiding_vector: return PF_ERR_NO_AVOIDING_VECTOR;
    case Errc::empty_family: return PF_ERR_EMPTY_FAMILY;
    case Errc::trivial_extension: return PF_ERR_TRIVIAL_EXTENSION;
    case Errc::no_covering_exists: return PF_ERR_NO_COVERING_EXISTS;
    case Errc::ti_too_large: return PF_ERR_TI_TOO_LARGE;
    case Errc::not_a_partition: return PF_ERR_NOT_A_PARTITION;
    case Errc::not_primitive: return PF_ERR_NOT_PRIMITIVE;
    case Errc::map_not_injective: return PF_ERR_MAP_NOT_INJECTIVE;
    case Errc::parse_error: return PF_ERR_PARSE;
    case Errc::bad_argument: return PF_ERR_BAD_ARGUMENT;
    case Errc::io_error: return PF_ERR_IO;
    case Errc::internal_error: return PF_ERR_INTERNAL;
  }
  return PF_ERR_INTERNAL;
}

template <class Fn>
pf_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return PF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PF_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pf_status require(bool ok, const char* what) {
  if (ok) return PF_OK;
  g_last_error = what;
  return PF_ERR_NULL_POINTER;
}

Tower::Elem elem_from(const pf_tower* t, const uint64_t* a) {
  return t->tower.from_coords(std::vector<u64>(a, a + t->tower.n()));
}

}  // namespace

extern "C" {

const char* pf_version(void) { return kLibVersion; }

const char* pf_status_name(pf_status status) {
  switch (status) {
    case PF_OK: return "Ok";
    case PF_ERR_NOT_PRIME: return "NotPrime";
    case PF_ERR_SIZE_LIMIT: return "SizeLimit";
    case PF_ERR_INVALID_POLYNOMIAL: return "InvalidPolynomial";
    case PF_ERR_NOT_A_DIVISOR: return "NotADivisor";
    case PF_ERR_FIELD_MISMATCH: return "FieldMismatch";
    case PF_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case PF_ERR_NO_AVOIDING_VECTOR: return "NoAvoidingVector";
    case PF_ERR_EMPTY_FAMILY: return "EmptyFamily";
    case PF_ERR_TRIVIAL_EXTENSION: return "TrivialExtension";
    case PF_ERR_NO_COVERING_EXISTS: return "NoCoveringExists";
    case PF_ERR_TI_TOO_LARGE: return "TiTooLarge";
    case PF_ERR_NOT_A_PARTITION: return "NotAPartitionOfW";
    case PF_ERR_NOT_PRIMITIVE: return "NotPrimitive";
    case PF_ERR_MAP_NOT_INJECTIVE: return "MapNotInjective";
    case PF_ERR_PARSE: return "ParseError";
    case PF_ERR_BAD_ARGUMENT: return "BadArgument";
    case PF_ERR_IO: return "IoError";
    case PF_ERR_NULL_POINTER: return "NullPointer";
    case PF_ERR_INTERNAL: return "InternalError";
    case PF_ERR_OUT_OF_MEMORY: return "OutOfMemory";
  }
  return "Unknown";
}

const char* pf_last_error(void) { return g_last_error.c_str(); }

void pf_string_free(char* s) { std::free(s); }

pf_status pf_tower_create(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                          uint64_t enum_limit, pf_tower** out) {
  if (const pf_status st = require(out != nullptr, "out is null")) return st;
  return guarded([&] { *out = new pf_tower{Tower::build(p, r, n, seed, enum_limit)}; });
}

pf_status pf_tower_from_json(const char* json, uint64_t enum_limit, pf_tower** out) {
  if (const pf_status st = require(json && out, "json or out is null")) return st;
  return guarded([&] { *out = new pf_tower{tower_from_json(json, enum_limit)}; });
}

pf_status pf_tower_to_json(const pf_tower* tower, char** out_json) {
  if (const pf_status st = require(tower && out_json, "tower or out is null")) return st;
  return guarded([&] { *out_json = dup_string(tower_to_json(tower->tower)); });
}

void pf_tower_free(pf_tower* tower) { delete tower; }

uint64_t pf_tower_p(const pf_tower* tower) { return tower ? tower->tower.p() : 0; }
uint32_t pf_tower_r(const pf_tower* tower) { return tower ? tower->tower.r() : 0; }
uint32_t pf_tower_n(const pf_tower* tower) { return tower ? tower->tower.n() : 0; }
uint64_t pf_tower_q(const pf_tower* tower) { return tower ? tower->tower.q() : 0; }
uint64_t pf_tower_seed(const pf_tower* tower) { return tower ? tower->tower.seed() : 0; }

pf_status pf_add(const pf_tower* tower, const uint64_t* a, const uint64_t* b, uint64_t* out) {
  if (const pf_status st = require(tower && a && b && out, "null argument")) return st;
  return guarded([&] {
    const auto v = tower->tower.add(elem_from(tower, a), elem_from(tower, b));
    std::copy(v.begin(), v.end(), out);
  });
}

pf_status pf_sub(const pf_tower* tower, const uint64_t* a, const uint64_t* b, uint64_t* out) {
  if (const pf_status st = require(tower && a && b && out, "null argument")) return st;
  return guarded([&] {
    const auto v = tower->tower.sub(elem_from(tower, a), elem_from(tower, b));
    std::copy(v.begin(), v.end(), out);
  });
}

pf_status pf_mul(const pf_tower* tower, const uint64_t* a, const uint64_t* b, uint64_t* out) {
  if (const pf_status st = require(tower && a && b && out, "null argument")) return st;
  return guarded([&] {
    const auto v = tower->tower.mul(elem_from(tower, a), elem_from(tower, b));
    std::copy(v.begin(), v.end(), out);
  });
}

pf_status pf_inv(const pf_tower* tower, const uint64_t* a, uint64_t* out) {
  if (const pf_status st = require(tower && a && out, "null argument")) return st;
  return guarded([&] {
    const auto v = tower->tower.inv(elem_from(tower, a));
    std::copy(v.begin(), v.end(), out);
  });
}

pf_status pf_frobenius(const pf_tower* tower, const uint64_t* a, uint64_t* out) {
  if (const pf_status st = require(tower && a && out, "null argument")) return st;
  return guarded([&] {
    const auto v = tower->tower.frobenius(elem_from(tower, a));
    std::copy(v.begin(), v.end(), out);
  });
}

pf_status pf_element_degree(const pf_tower* tower, const uint64_t* a, uint32_t* out) {
  if (const pf_status st = require(tower && a && out, "null argument")) return st;
  return guarded([&] { *out = tower->tower.element_degree(elem_from(tower, a)); });
}

pf_status pf_subfield_basis_json(const pf_tower* tower, uint32_t d, char** out_json) {
  if (const pf_status st = require(tower && out_json, "tower or out is null")) return st;
  return guarded([&] { *out_json = dup_string(subfield_basis_json(tower->tower, d)); });
}

pf_status pf_analyze_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                          uint64_t enum_limit, char** out_json) {
  if (const pf_status st = require(out_json != nullptr, "out is null")) return st;
  return guarded(
      [&] { *out_json = dup_string(analyze_report({p, r, n, seed, enum_limit})); });
}

pf_status pf_construct_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                            uint64_t enum_limit, char** out_json) {
  if (const pf_status st = require(out_json != nullptr, "out is null")) return st;
  return guarded(
      [&] { *out_json = dup_string(construct_report({p, r, n, seed, enum_limit})); });
}

pf_status pf_oracle_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                         uint64_t enum_limit, char** out_json) {
  if (const pf_status st = require(out_json != nullptr, "out is null")) return st;
  return guarded([&] { *out_json = dup_string(oracle_report({p, r, n, seed, enum_limit})); });
}

pf_status pf_covering_json(uint64_t q, uint32_t n, uint64_t enum_limit, char** out_json) {
  if (const pf_status st = require(out_json != nullptr, "out is null")) return st;
  return guarded([&] { *out_json = dup_string(covering_report(q, n, enum_limit)); });
}

pf_status pf_partition_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                            uint64_t enum_limit, const uint32_t* piece_dims,
                            size_t piece_count, char** out_json) {
  if (const pf_status st =
          require(out_json && (piece_dims || piece_count == 0), "null argument"))
    return st;
  return guarded([&] {
    const std::vector<unsigned> dims(piece_dims, piece_dims + piece_count);
    *out_json = dup_string(partition_report({p, r, n, seed, enum_limit}, dims));
  });
}

pf_status pf_avoid_json(const char* file_text, char** out_json) {
  if (const pf_status st = require(file_text && out_json, "null argument")) return st;
  return guarded([&] { *out_json = dup_string(avoid_report(file_text)); });
}

pf_status pf_boundary_search_json(uint64_t q, uint32_t n_min, uint32_t n_max, uint64_t seed,
                                  uint64_t enum_limit, char** out_json) {
  if (const pf_status st = require(out_json != nullptr, "out is null")) return st;
  return guarded(
      [&] { *out_json = dup_string(boundary_report(q, n_min, n_max, seed, enum_limit)); });
}

int pf_report_exit_code(const char* json) { return json ? report_exit_code(json) : 0; }

}  // extern "C"
