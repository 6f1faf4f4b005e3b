#include "report.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace primfield {

namespace {

using oj = nlohmann::ordered_json;

std::string dec(u64 v) { return std::to_string(v); }

oj vec_oj(const std::vector<u64>& v) {
  oj a = oj::array();
  for (u64 c : v) a.push_back(dec(c));
  return a;
}

oj basis_oj(const std::vector<std::vector<u64>>& rows) {
  oj a = oj::array();
  for (const auto& r : rows) a.push_back(vec_oj(r));
  return a;
}

oj subspace_oj(const Subspace<GaloisField>& s) {
  oj j;
  j["dim"] = dec(s.dim());
  j["basis"] = basis_oj(s.basis());
  return j;
}

oj subspace_oj(const Subspace<RationalField>& s) {
  oj j;
  j["dim"] = dec(s.dim());
  oj b = oj::array();
  for (const auto& row : s.basis()) {
    oj r = oj::array();
    for (const auto& e : row) r.push_back(s.field().to_string(e));
    b.push_back(r);
  }
  j["basis"] = b;
  return j;
}

oj tower_oj(const Tower& t) {
  oj j;
  j["p"] = dec(t.p());
  j["r"] = dec(t.r());
  j["n"] = dec(t.n());
  j["q"] = dec(t.q());
  j["seed"] = dec(t.seed());
  j["h"] = vec_oj(t.h());
  j["g"] = vec_oj(t.g());
  return j;
}

oj witness_oj(const PrimitiveWitness& w) {
  oj j;
  j["dim"] = dec(w.subspace.dim());
  j["basis"] = basis_oj(w.subspace.basis());
  oj trace = oj::array();
  for (const auto& s : w.steps) trace.push_back(vec_oj(s));
  j["trace"] = trace;
  oj cand = oj::array();
  for (u64 c : w.candidates_per_step) cand.push_back(dec(c));
  j["candidates_per_step"] = cand;
  j["rank_certified"] = w.rank_certified;
  j["verified_exhaustive"] = w.verified_exhaustive;
  j["degree_checks"] = dec(w.degree_checks);
  return j;
}

oj oracle_oj(const OracleResult& o) {
  oj j;
  j["phi"] = dec(o.phi);
  oj stats = oj::array();
  for (const auto& st : o.stats) {
    oj s;
    s["k"] = dec(st.k);
    s["total"] = dec(st.total);
    s["scanned"] = dec(st.scanned);
    if (st.primitive_count)
      s["primitive_count"] = dec(*st.primitive_count);
    else
      s["primitive_count"] = nullptr;
    stats.push_back(s);
  }
  j["stats"] = stats;
  return j;
}

oj divisors_oj(const std::vector<unsigned>& ds) {
  oj a = oj::array();
  for (unsigned d : ds) a.push_back(dec(d));
  return a;
}

u64 parse_u64_field(const oj& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    fail(Errc::parse_error, std::string("missing or non-string field '") + key + "'");
  const std::string s = j.at(key).get<std::string>();
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(Errc::parse_error, std::string("field '") + key + "' is not a decimal integer");
  return v;
}

std::vector<u64> parse_u64_array(const oj& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    fail(Errc::parse_error, std::string("missing or non-array field '") + key + "'");
  std::vector<u64> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_string()) fail(Errc::parse_error, std::string("field '") + key + "' holds a non-string entry");
    const std::string s = e.get<std::string>();
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(Errc::parse_error, std::string("entry in '") + key + "' is not a decimal integer");
    out.push_back(v);
  }
  return out;
}

const Subspace<GaloisField>& psi_intermediate(const ExtensionProfile& prof) {
  for (std::size_t i = 0; i < prof.proper_divisors.size(); ++i)
    if (prof.proper_divisors[i] == prof.psi) return prof.intermediates[i];
  fail(Errc::internal_error, "profile lacks the psi-dimensional intermediate");
}

void put_params(oj& j, const TowerParams& params, u64 q) {
  j["p"] = dec(params.p);
  j["r"] = dec(params.r);
  j["n"] = dec(params.n);
  j["q"] = dec(q);
  j["seed"] = dec(params.seed);
  j["enum_limit"] = dec(params.enum_limit);
}

void put_profile(oj& j, const ExtensionProfile& prof) {
  j["divisors"] = divisors_oj(prof.proper_divisors);
  j["d_n"] = dec(prof.d_n);
  j["m"] = dec(prof.m);
  j["psi"] = dec(prof.psi);
  j["condition_ok"] = prof.condition_ok;
}

}  // namespace

std::string tower_to_json(const Tower& tower) {
  oj j;
  j["schema"] = kSchemaId;
  const oj t = tower_oj(tower);
  for (const auto& [key, val] : t.items()) j[key] = val;
  return j.dump(2);
}

Tower tower_from_json(const std::string& text, u64 enum_limit) {
  const oj j = oj::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON tower record");
  const u64 p = parse_u64_field(j, "p");
  const u64 r = parse_u64_field(j, "r");
  const u64 n = parse_u64_field(j, "n");
  const u64 seed = parse_u64_field(j, "seed");
  const auto h = parse_u64_array(j, "h");
  const auto g = parse_u64_array(j, "g");
  if (h.size() != r + 1) fail(Errc::parse_error, "h does not have degree r");
  Tower t = Tower::from_parts(p, h, static_cast<unsigned>(n), g, seed, enum_limit);
  if (j.contains("q") && parse_u64_field(j, "q") != t.q())
    fail(Errc::parse_error, "stored q is inconsistent with p^r");
  return t;
}

std::string analyze_report(const TowerParams& params) {
  const Tower tower = Tower::build(params.p, params.r, params.n, params.seed, params.enum_limit);
  const IdentityReport rep = verify_identity(tower);
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "analyze";
  put_params(j, params, tower.q());
  put_profile(j, rep.profile);
  if (rep.witness) {
    j["witness_basis"] = basis_oj(rep.witness->subspace.basis());
    oj trace = oj::array();
    for (const auto& s : rep.witness->steps) trace.push_back(vec_oj(s));
    j["trace"] = trace;
    j["witness"] = witness_oj(*rep.witness);
    j["witness_error"] = nullptr;
  } else {
    j["witness_basis"] = nullptr;
    j["trace"] = nullptr;
    j["witness"] = nullptr;
    j["witness_error"] = rep.witness_error;
  }
  j["phi_lower"] = dec(rep.witness ? rep.witness->subspace.dim() : 0);
  j["phi_upper"] = dec(rep.phi_upper);
  if (rep.oracle) {
    j["phi_oracle"] = dec(rep.oracle->phi);
    j["oracle"] = oracle_oj(*rep.oracle);
    j["oracle_error"] = nullptr;
  } else {
    j["phi_oracle"] = nullptr;
    j["oracle"] = nullptr;
    j["oracle_error"] = rep.oracle_error;
  }
  if (rep.phi)
    j["phi"] = dec(*rep.phi);
  else
    j["phi"] = nullptr;
  j["verdict"] = verdict_name(rep.verdict);
  j["tower"] = tower_oj(tower);
  return j.dump(2);
}

std::string construct_report(const TowerParams& params) {
  const Tower tower = Tower::build(params.p, params.r, params.n, params.seed, params.enum_limit);
  const ExtensionProfile prof = extension_profile(tower);
  const PrimitiveWitness w = construct_primitive_subspace(tower, prof);
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "construct";
  put_params(j, params, tower.q());
  put_profile(j, prof);
  j["phi_upper"] = dec(tower.n() - prof.psi);
  j["witness"] = witness_oj(w);
  j["tower"] = tower_oj(tower);
  return j.dump(2);
}

std::string oracle_report(const TowerParams& params) {
  const Tower tower = Tower::build(params.p, params.r, params.n, params.seed, params.enum_limit);
  const ExtensionProfile prof = extension_profile(tower);
  const OracleResult o = phi_oracle(tower, prof);
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "oracle";
  put_params(j, params, tower.q());
  put_profile(j, prof);
  j["phi_upper"] = dec(tower.n() - prof.psi);
  j["phi"] = dec(o.phi);
  j["oracle"] = oracle_oj(o);
  j["tower"] = tower_oj(tower);
  return j.dump(2);
}

std::string covering_report(u64 q, unsigned n, u64 enum_limit) {
  const GaloisField field = field_of_order(q);
  const Covering cov = construct_covering(field, n, enum_limit);
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "covering";
  j["q"] = dec(q);
  j["p"] = dec(field.characteristic());
  j["r"] = dec(field.degree());
  j["n"] = dec(n);
  j["enum_limit"] = dec(enum_limit);
  j["field_modulus"] = vec_oj(field.modulus());
  j["lc"] = dec(linear_covering_number(field, n));
  oj members = oj::array();
  for (const auto& m : cov.members) members.push_back(subspace_oj(m));
  j["members"] = members;
  j["member_count"] = dec(cov.members.size());
  j["verified"] = cov.verified;
  j["verify_mode"] = cov.verify_mode;
  try {
    const MinCoveringResult mc = min_covering_exhaustive(field, n, enum_limit);
    j["min_covering"] = dec(mc.k);
    j["min_families_checked"] = dec(mc.families_checked);
    j["min_covering_error"] = nullptr;
  } catch (const Error& e) {
    if (e.code() != Errc::size_limit) throw;
    j["min_covering"] = nullptr;
    j["min_families_checked"] = nullptr;
    j["min_covering_error"] = std::string(errc_name(e.code())) + ": " + e.what();
  }
  return j.dump(2);
}

std::string partition_report(const TowerParams& params, const std::vector<unsigned>& piece_dims) {
  const Tower tower = Tower::build(params.p, params.r, params.n, params.seed, params.enum_limit);
  const ExtensionProfile prof = extension_profile(tower);
  const PrimitiveWitness w = construct_primitive_subspace(tower, prof);
  PartitionSpec spec{w.subspace, make_pieces(tower, w.subspace, piece_dims),
                     psi_intermediate(prof), {}};
  std::vector<unsigned> actual_dims;
  for (const auto& piece : spec.pieces) actual_dims.push_back(piece.dim());
  spec.maps = default_maps(actual_dims, prof.psi);
  const PartitionResult res = build_partition(tower, prof, spec, params.enum_limit);
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "partition";
  put_params(j, params, tower.q());
  j["piece_dims"] = divisors_oj(piece_dims);
  j["psi"] = dec(prof.psi);
  j["w"] = subspace_oj(spec.w);
  j["m1"] = subspace_oj(spec.m1);
  oj members = oj::array();
  for (const auto& m : res.members) members.push_back(subspace_oj(m));
  j["members"] = members;
  j["member_count"] = dec(res.members.size());
  j["mode"] = res.exhaustive ? "exhaustive" : "certificate";
  j["ok"] = res.ok;
  j["counting_identity"] = res.counting_identity;
  j["vectors_checked"] = dec(res.vectors_checked);
  j["tower"] = tower_oj(tower);
  return j.dump(2);
}

std::string avoid_report(const std::string& file_text) {
  const AvoidInput input = parse_avoid_file(file_text);
  const RationalField K;
  std::vector<Subspace<RationalField>> family;
  family.reserve(input.blocks.size());
  for (const auto& block : input.blocks)
    family.push_back(Subspace<RationalField>::span(K, input.ambient, block));
  const auto res = max_zero_intersection(K, input.ambient, family);
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "avoid";
  j["field"] = "rational";
  j["ambient"] = dec(input.ambient);
  oj fam = oj::array();
  for (const auto& s : family) fam.push_back(subspace_oj(s));
  j["family"] = fam;
  j["s"] = dec(res.family_max_dim);
  j["complement"] = subspace_oj(res.complement);
  oj steps = oj::array();
  for (const auto& v : res.steps) {
    oj row = oj::array();
    for (const auto& e : v) row.push_back(K.to_string(e));
    steps.push_back(row);
  }
  j["steps"] = steps;
  oj cand = oj::array();
  for (u64 c : res.candidates_per_step) cand.push_back(dec(c));
  j["candidates_per_step"] = cand;
  j["step_budget"] = dec(static_cast<u64>(family.size()) * (input.ambient - 1) + 1);
  j["all_intersections_trivial"] = true;  // certified inside the greedy run
  j["max_members_complemented"] = true;
  return j.dump(2);
}

std::string boundary_report(u64 q, unsigned n_min, unsigned n_max, u64 seed, u64 enum_limit) {
  const auto probes = boundary_search(q, n_min, n_max, seed, enum_limit);
  const auto pr = prime_power_decompose(q);
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "boundary-search";
  j["q"] = dec(q);
  j["p"] = dec(pr->first);
  j["r"] = dec(pr->second);
  j["n_min"] = dec(n_min);
  j["n_max"] = dec(n_max);
  j["seed"] = dec(seed);
  j["enum_limit"] = dec(enum_limit);
  bool all_determined = true;
  oj records = oj::array();
  for (const auto& probe : probes) {
    oj rec;
    rec["n"] = dec(probe.n);
    rec["skipped"] = probe.skipped;
    if (probe.skipped) {
      rec["skip_reason"] = probe.skip_reason;
      records.push_back(rec);
      continue;
    }
    const IdentityReport& rep = *probe.report;
    put_profile(rec, rep.profile);
    rec["phi_upper"] = dec(rep.phi_upper);
    if (rep.witness) {
      rec["witness_dim"] = dec(rep.witness->subspace.dim());
      rec["witness_error"] = nullptr;
    } else {
      rec["witness_dim"] = nullptr;
      rec["witness_error"] = rep.witness_error;
    }
    if (rep.oracle) {
      rec["oracle"] = oracle_oj(*rep.oracle);
      rec["oracle_error"] = nullptr;
    } else {
      rec["oracle"] = nullptr;
      rec["oracle_error"] = rep.oracle_error;
    }
    if (rep.phi) {
      rec["phi"] = dec(*rep.phi);
      rec["identity_holds"] = *rep.phi == rep.phi_upper;
    } else {
      rec["phi"] = nullptr;
      rec["identity_holds"] = nullptr;
    }
    rec["verdict"] = verdict_name(rep.verdict);
    if (rep.verdict != Verdict::proved && rep.verdict != Verdict::oracle_confirmed)
      all_determined = false;
    records.push_back(rec);
  }
  j["records"] = records;
  j["all_determined"] = all_determined;
  return j.dump(2);
}

std::string subfield_basis_json(const Tower& tower, unsigned d) {
  oj j;
  j["schema"] = kSchemaId;
  j["command"] = "subfield-basis";
  j["d"] = dec(d);
  const auto s = subfield_basis(tower, d);
  j["dim"] = dec(s.dim());
  j["basis"] = basis_oj(s.basis());
  return j.dump(2);
}

int report_exit_code(const std::string& json_text) {
  const oj j = oj::parse(json_text, nullptr, false);
  if (j.is_discarded()) return 0;
  if (j.contains("verdict") && j.at("verdict").is_string()) {
    const std::string v = j.at("verdict").get<std::string>();
    return (v == "Proved" || v == "OracleConfirmed") ? 0 : 2;
  }
  if (j.contains("all_determined") && j.at("all_determined").is_boolean())
    return j.at("all_determined").get<bool>() ? 0 : 2;
  return 0;
}

AvoidInput parse_avoid_file(const std::string& text) {
  std::vector<std::vector<std::vector<std::string>>> token_blocks;
  std::vector<std::vector<std::string>> current;
  std::istringstream is(text);
  std::string line;
  const auto flush = [&]() {
    if (!current.empty()) {
      token_blocks.push_back(current);
      current.clear();
    }
  };
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty())
      flush();
    else
      current.push_back(std::move(tokens));
  }
  flush();
  if (token_blocks.empty()) fail(Errc::parse_error, "empty input");
  if (token_blocks[0].size() != 1 || token_blocks[0][0].size() != 1)
    fail(Errc::parse_error, "the first block must be a single integer, the ambient dimension");
  const std::string& head = token_blocks[0][0][0];
  u64 ambient = 0;
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), ambient);
  if (ec != std::errc() || ptr != head.data() + head.size() || ambient == 0)
    fail(Errc::parse_error, "ambient dimension must be a positive integer");
  if (ambient > 64) fail(Errc::size_limit, "ambient dimension exceeds 64");
  AvoidInput input;
  input.ambient = static_cast<unsigned>(ambient);
  for (std::size_t b = 1; b < token_blocks.size(); ++b) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& tokens : token_blocks[b]) {
      if (tokens.size() != input.ambient)
        fail(Errc::parse_error, "row has " + std::to_string(tokens.size()) +
                                    " entries, expected " + std::to_string(input.ambient));
      std::vector<mpq_class> row;
      row.reserve(tokens.size());
      for (const auto& t : tokens) row.push_back(parse_rational(t));
      rows.push_back(std::move(row));
    }
    input.blocks.push_back(std::move(rows));
  }
  return input;
}

}  // namespace primfield
