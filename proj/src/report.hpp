#pragma once

#include <string>
#include <vector>

#include "avoidance.hpp"
#include "covering.hpp"
#include "extension.hpp"
#include "fieldcore.hpp"
#include "partition.hpp"

namespace primfield {

// All reports carry this schema id; numeric values are decimal strings so no
// consumer ever rounds them.
inline constexpr const char* kSchemaId = "primfield-lab/1";
inline constexpr const char* kLibVersion = "1.0.0";

std::string tower_to_json(const Tower& tower);
Tower tower_from_json(const std::string& text, u64 enum_limit = kDefaultEnumLimit);

struct TowerParams {
  u64 p = 2;
  unsigned r = 1;
  unsigned n = 2;
  u64 seed = 0;
  u64 enum_limit = kDefaultEnumLimit;
};

// Reports are byte-identical for identical inputs. Errors surface as Error
// exceptions; the builders never embed a failure of their own command.
std::string analyze_report(const TowerParams& params);
std::string construct_report(const TowerParams& params);
std::string oracle_report(const TowerParams& params);
std::string covering_report(u64 q, unsigned n, u64 enum_limit = kDefaultEnumLimit);
std::string partition_report(const TowerParams& params, const std::vector<unsigned>& piece_dims);
std::string avoid_report(const std::string& file_text);
std::string boundary_report(u64 q, unsigned n_min, unsigned n_max, u64 seed,
                            u64 enum_limit = kDefaultEnumLimit);
std::string subfield_basis_json(const Tower& tower, unsigned d);

// Process exit advice encoded in a finished report: 0 for confirmed results,
// 2 for an undetermined or refuted boundary verdict.
int report_exit_code(const std::string& json_text);

// Block file for the avoidance scan: blocks are separated by blank lines,
// the first block is the ambient dimension, every further block is one
// subspace given by rows of rationals ("3/4 -1 0").
struct AvoidInput {
  unsigned ambient = 0;
  std::vector<std::vector<std::vector<mpq_class>>> blocks;
};
AvoidInput parse_avoid_file(const std::string& text);

}  // namespace primfield
