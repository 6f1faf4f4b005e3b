#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avoidance.hpp"
#include "fieldcore.hpp"
#include "linspace.hpp"

namespace primfield {

// Divisor structure of GF(q^n)/GF(q) together with the intermediate fields
// as GF(q)-subspaces. psi is the largest proper-divisor degree, so n - psi
// is the ceiling for subspaces meeting every intermediate field trivially.
struct ExtensionProfile {
  std::vector<unsigned> proper_divisors;   // ascending, starts at 1
  std::vector<unsigned> maximal_divisors;  // n/l over the distinct primes l | n
  unsigned d_n = 0;                        // number of divisors of n
  unsigned m = 0;                          // d_n - 1 proper intermediate fields
  unsigned psi = 0;                        // n / smallest prime factor of n
  bool condition_ok = false;               // d(n) < q + 2
  std::vector<Subspace<GaloisField>> intermediates;  // aligned with proper_divisors
};

// TrivialExtension when n = 1.
ExtensionProfile extension_profile(const Tower& tower);

// V generates the whole top field from every nonzero vector, equivalently V
// meets each maximal intermediate field only in zero.
bool is_primitive_subspace(const Tower& tower, const ExtensionProfile& prof,
                           const Subspace<GaloisField>& v);
bool is_primitive_subspace(const Tower& tower, const Subspace<GaloisField>& v);

struct ConstructOptions {
  ScanOrder order = ScanOrder::canonical;
  u64 sample_count = 1000;           // degree spot checks when exhaustion is off the table
  u64 witness_exhaustive_cap = 4096;  // walk all of V only up to this many vectors
};

struct PrimitiveWitness {
  Subspace<GaloisField> subspace;
  std::vector<Tower::Elem> steps;  // greedy choices, in order
  std::vector<u64> candidates_per_step;
  bool rank_certified = false;      // trivial meet with every maximal intermediate
  bool verified_exhaustive = false; // every nonzero member checked for full degree
  u64 degree_checks = 0;
};

// Greedy tower walk: grow all m intermediate fields in lockstep, each stage
// picking a vector outside their union. After n - psi stages the chosen
// vectors span a primitive subspace of the maximal dimension.
// NoAvoidingVector or SizeLimit when a stage scan fails.
PrimitiveWitness construct_primitive_subspace(const Tower& tower, const ExtensionProfile& prof,
                                              const ConstructOptions& opts = {});
PrimitiveWitness construct_primitive_subspace(const Tower& tower,
                                              const ConstructOptions& opts = {});

unsigned phi_upper_bound(const Tower& tower);  // n - psi

struct OracleStats {
  unsigned k = 0;
  u64 total = 0;    // number of k-dim subspaces
  u64 scanned = 0;
  std::optional<u64> primitive_count;  // set when the whole layer was counted
};

struct OracleOptions {
  bool count_all_at_top = false;  // scan the full top layer instead of first hit
};

struct OracleResult {
  unsigned phi = 0;
  std::vector<OracleStats> stats;  // descending k
};

// Exhaustive scan for the true maximal primitive dimension, from n - psi
// downward. SizeLimit when q^n or a layer's subspace count exceeds the limit.
OracleResult phi_oracle(const Tower& tower, const ExtensionProfile& prof,
                        const OracleOptions& opts = {});

enum class Verdict {
  proved,                 // greedy witness reached n - psi with an exact certificate
  oracle_confirmed,       // no witness, but the oracle found phi = n - psi
  oracle_refuted,         // oracle disagrees with n - psi (no known instance)
  boundary_undetermined,  // condition fails and no decisive check was feasible
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::proved: return "Proved";
    case Verdict::oracle_confirmed: return "OracleConfirmed";
    case Verdict::oracle_refuted: return "OracleRefuted";
    case Verdict::boundary_undetermined: return "BoundaryUndetermined";
  }
  return "Unknown";
}

struct IdentityReport {
  ExtensionProfile profile;
  unsigned psi = 0;
  unsigned phi_upper = 0;
  std::optional<PrimitiveWitness> witness;
  std::string witness_error;  // empty when the witness exists
  std::optional<OracleResult> oracle;
  std::string oracle_error;   // empty when the oracle ran
  std::optional<unsigned> phi;
  Verdict verdict = Verdict::boundary_undetermined;
};

IdentityReport verify_identity(const Tower& tower, const ConstructOptions& copts = {},
                               const OracleOptions& oopts = {});

struct BoundaryProbe {
  unsigned n = 0;
  bool skipped = false;      // condition holds there, not a boundary case
  std::string skip_reason;
  std::optional<IdentityReport> report;
};

// Probe every n in [n_min, n_max] where d(n) < q + 2 fails, counting the
// full top layer so each feasible case gets a definite verdict.
std::vector<BoundaryProbe> boundary_search(u64 q, unsigned n_min, unsigned n_max, u64 seed,
                                           u64 enum_limit = kDefaultEnumLimit);

}  // namespace primfield
