// Command-line front end.  Everything goes through the public C API so this
// translation unit doubles as a smoke test for the shared-library surface:
// it includes primfield.h and the vendored argument/JSON parsers, nothing
// from src/.

#include <primfield.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
  uint64_t seed = 0;
  uint64_t limit = PF_DEFAULT_ENUM_LIMIT;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--seed", opts->seed, "Deterministic seed for modulus and scan choices");
  cmd->add_option("--limit", opts->limit, "Enumeration budget for exhaustive passes");
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts->out_path, "Write the report to this file instead of stdout");
}

// Indented key/value rendering of a report.  Scalars stay inline; arrays of
// scalars print as one bracketed row so basis vectors read naturally.
void render_text(const ordered_json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value.front().is_object() || value.front().is_array()))) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      } else if (value.is_array()) {
        os << pad << key << ": " << value.dump() << "\n";
      } else if (value.is_string()) {
        os << pad << key << ": " << value.get<std::string>() << "\n";
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

// Runs one API call, prints the report, and maps the result to a process
// exit code: 1 on API error, otherwise whatever the report itself demands.
int emit(pf_status status, char* json, const CommonOpts& opts) {
  if (status != PF_OK) {
    std::cerr << "error: " << pf_status_name(status) << ": " << pf_last_error() << "\n";
    pf_string_free(json);
    return 1;
  }
  std::unique_ptr<char, decltype(&pf_string_free)> guard(json, &pf_string_free);

  std::string body;
  if (opts.format == "text") {
    std::ostringstream os;
    render_text(ordered_json::parse(json), os, 0);
    body = os.str();
  } else {
    body = json;
    body += '\n';
  }

  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file || !(file << body) || !file.flush()) {
      std::cerr << "error: IoError: cannot write " << opts.out_path << "\n";
      return 1;
    }
  } else {
    std::cout << body;
  }
  return pf_report_exit_code(json);
}

std::vector<uint32_t> split_dims(const std::vector<std::string>& tokens) {
  std::vector<uint32_t> dims;
  for (const auto& token : tokens) {
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      dims.push_back(static_cast<uint32_t>(std::stoul(part)));
    }
  }
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primitive-subspace laboratory for finite field extensions"};
  app.set_version_flag("--version", std::string(pf_version()));
  app.require_subcommand(1);

  uint64_t p = 0, q = 0;
  uint32_t r = 0, n = 0, n_min = 0, n_max = 0;
  std::vector<std::string> dim_tokens;
  std::string avoid_path;

  CommonOpts opts;

  auto* analyze = app.add_subcommand("analyze", "Profile an extension and run the full pipeline");
  analyze->add_option("p", p, "Characteristic (prime)")->required();
  analyze->add_option("r", r, "Base extension degree over the prime field")->required();
  analyze->add_option("n", n, "Top extension degree over the base field")->required();
  add_common(analyze, &opts);

  auto* construct = app.add_subcommand("construct", "Build a primitive subspace witness");
  construct->add_option("p", p, "Characteristic (prime)")->required();
  construct->add_option("r", r, "Base extension degree over the prime field")->required();
  construct->add_option("n", n, "Top extension degree over the base field")->required();
  add_common(construct, &opts);

  auto* oracle = app.add_subcommand("oracle", "Exhaustively count primitive subspaces");
  oracle->add_option("p", p, "Characteristic (prime)")->required();
  oracle->add_option("r", r, "Base extension degree over the prime field")->required();
  oracle->add_option("n", n, "Top extension degree over the base field")->required();
  add_common(oracle, &opts);

  auto* covering = app.add_subcommand("covering", "Minimal covering of a vector space by proper subspaces");
  covering->add_option("q", q, "Field order (prime power)")->required();
  covering->add_option("n", n, "Ambient dimension")->required();
  add_common(covering, &opts);

  auto* partition = app.add_subcommand("partition", "Partition the top field along a primitive subspace");
  partition->add_option("p", p, "Characteristic (prime)")->required();
  partition->add_option("r", r, "Base extension degree over the prime field")->required();
  partition->add_option("n", n, "Top extension degree over the base field")->required();
  partition->add_option("dims", dim_tokens, "Piece dimensions for the witness (space or comma separated)")
      ->required();
  add_common(partition, &opts);

  auto* avoid = app.add_subcommand("avoid", "Zero-intersection complement for a family from a file");
  avoid->add_option("file", avoid_path, "Family description file")->required();
  add_common(avoid, &opts);

  auto* boundary = app.add_subcommand("boundary-search", "Probe extensions where the counting condition fails");
  boundary->add_option("q", q, "Field order (prime power)")->required();
  boundary->add_option("n_min", n_min, "Lowest degree to probe")->required();
  boundary->add_option("n_max", n_max, "Highest degree to probe")->required();
  add_common(boundary, &opts);

  CLI11_PARSE(app, argc, argv);

  char* json = nullptr;
  pf_status status = PF_ERR_INTERNAL;

  if (analyze->parsed()) {
    status = pf_analyze_json(p, r, n, opts.seed, opts.limit, &json);
  } else if (construct->parsed()) {
    status = pf_construct_json(p, r, n, opts.seed, opts.limit, &json);
  } else if (oracle->parsed()) {
    status = pf_oracle_json(p, r, n, opts.seed, opts.limit, &json);
  } else if (covering->parsed()) {
    status = pf_covering_json(q, n, opts.limit, &json);
  } else if (partition->parsed()) {
    const auto dims = split_dims(dim_tokens);
    status = pf_partition_json(p, r, n, opts.seed, opts.limit, dims.data(), dims.size(), &json);
  } else if (avoid->parsed()) {
    std::ifstream file(avoid_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: IoError: cannot read " << avoid_path << "\n";
      return 1;
    }
    std::ostringstream text;
    text << file.rdbuf();
    status = pf_avoid_json(text.str().c_str(), &json);
  } else if (boundary->parsed()) {
    status = pf_boundary_search_json(q, n_min, n_max, opts.seed, opts.limit, &json);
  }

  return emit(status, json, opts);
}
