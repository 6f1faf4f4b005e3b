#include "extension.hpp"

#include <algorithm>

namespace primfield {

ExtensionProfile extension_profile(const Tower& tower) {
  const unsigned n = tower.n();
  if (n < 2) fail(Errc::trivial_extension, "n = 1: no proper intermediate structure");
  ExtensionProfile prof;
  for (u64 d : proper_divisors(n)) prof.proper_divisors.push_back(static_cast<unsigned>(d));
  for (u64 d : maximal_proper_divisors(n)) prof.maximal_divisors.push_back(static_cast<unsigned>(d));
  prof.d_n = divisor_count(n);
  prof.m = prof.d_n - 1;
  prof.psi = static_cast<unsigned>(n / smallest_prime_factor(n));
  prof.condition_ok = u64(prof.d_n) < tower.q() + 2;
  prof.intermediates.reserve(prof.proper_divisors.size());
  for (unsigned d : prof.proper_divisors) prof.intermediates.push_back(subfield_basis(tower, d));
  return prof;
}

namespace {

const Subspace<GaloisField>& intermediate_of(const ExtensionProfile& prof, unsigned d) {
  for (std::size_t i = 0; i < prof.proper_divisors.size(); ++i) {
    if (prof.proper_divisors[i] == d) return prof.intermediates[i];
  }
  fail(Errc::internal_error, "profile has no intermediate of dimension " + std::to_string(d));
}

// v = sum coeffs[i] * rows[i], coefficients over GF(q)
Tower::Elem combine(const GaloisField& K, const std::vector<Tower::Elem>& rows,
                    const std::vector<u64>& coeffs) {
  Tower::Elem v(rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = K.add(v[j], K.mul(coeffs[i], rows[i][j]));
  }
  return v;
}

}  // namespace

bool is_primitive_subspace(const Tower& tower, const ExtensionProfile& prof,
                           const Subspace<GaloisField>& v) {
  if (v.ambient_dim() != tower.n())
    fail(Errc::dimension_mismatch, "subspace does not live in GF(q^n)");
  if (!v.field().same_field(tower.fq()))
    fail(Errc::field_mismatch, "subspace coordinates are over the wrong field");
  // degree d < n elements sit inside a maximal intermediate field, so these
  // meets decide primitivity exactly
  for (unsigned d : prof.maximal_divisors) {
    if (intersect(v, intermediate_of(prof, d)).dim() != 0) return false;
  }
  return true;
}

bool is_primitive_subspace(const Tower& tower, const Subspace<GaloisField>& v) {
  return is_primitive_subspace(tower, extension_profile(tower), v);
}

unsigned phi_upper_bound(const Tower& tower) {
  const unsigned n = tower.n();
  if (n < 2) fail(Errc::trivial_extension, "n = 1: no proper intermediate structure");
  return n - static_cast<unsigned>(n / smallest_prime_factor(n));
}

PrimitiveWitness construct_primitive_subspace(const Tower& tower, const ExtensionProfile& prof,
                                              const ConstructOptions& opts) {
  const unsigned n = tower.n();
  const unsigned target = n - prof.psi;
  const GaloisField& K = tower.fq();
  std::vector<Subspace<GaloisField>> walls = prof.intermediates;
  PrimitiveWitness w{Subspace<GaloisField>(K, n), {}, {}, false, false, 0};
  const ScanOptions sopts{opts.order, tower.seed(), tower.enum_limit()};
  for (unsigned stage = 0; stage < target; ++stage) {
    auto step = find_avoiding_vector(K, n, walls, sopts);
    for (auto& wall : walls)
      wall = sum(wall, Subspace<GaloisField>::span(K, n, {step.vector}));
    w.steps.push_back(std::move(step.vector));
    w.candidates_per_step.push_back(step.candidates_tried);
  }
  w.subspace = Subspace<GaloisField>::span(K, n, w.steps);
  if (w.subspace.dim() != target)
    fail(Errc::internal_error, "greedy choices came out linearly dependent");
  w.rank_certified = is_primitive_subspace(tower, prof, w.subspace);
  if (!w.rank_certified)
    fail(Errc::internal_error, "greedy witness meets an intermediate field");

  // density check on element degrees, independent of the rank certificate
  const auto& rows = w.subspace.basis();
  std::vector<Tower::Elem> basis_rows(rows.begin(), rows.end());
  const auto points = checked_pow_u64(K.order(), target, opts.witness_exhaustive_cap);
  if (points) {
    VectorOdometer<GaloisField> odo(K, target);
    while (auto coeffs = odo.next()) {
      bool zero = true;
      for (u64 c : *coeffs)
        if (c) { zero = false; break; }
      if (zero) continue;
      const Tower::Elem v = combine(K, basis_rows, *coeffs);
      if (tower.element_degree(v) != n)
        fail(Errc::internal_error, "witness member fails to generate the top field");
      ++w.degree_checks;
    }
    w.verified_exhaustive = true;
  } else {
    CounterRng rng(tower.seed(), 3);
    for (u64 i = 0; i < opts.sample_count; ++i) {
      std::vector<u64> coeffs(target);
      do {
        for (auto& c : coeffs) c = rng.below(K.order());
      } while (std::all_of(coeffs.begin(), coeffs.end(), [](u64 c) { return c == 0; }));
      const Tower::Elem v = combine(K, basis_rows, coeffs);
      if (tower.element_degree(v) != n)
        fail(Errc::internal_error, "witness member fails to generate the top field");
      ++w.degree_checks;
    }
  }
  return w;
}

PrimitiveWitness construct_primitive_subspace(const Tower& tower, const ConstructOptions& opts) {
  return construct_primitive_subspace(tower, extension_profile(tower), opts);
}

OracleResult phi_oracle(const Tower& tower, const ExtensionProfile& prof,
                        const OracleOptions& opts) {
  const auto points = tower.order_u64();
  if (!points || *points > tower.enum_limit())
    fail(Errc::size_limit, "q^n exceeds the enumeration limit");
  const unsigned n = tower.n();
  OracleResult out;
  for (unsigned k = n - prof.psi; k >= 1; --k) {
    OracleStats st;
    st.k = k;
    st.total = gaussian_binomial(n, k, tower.q());
    if (st.total > tower.enum_limit())
      fail(Errc::size_limit,
           "the layer of " + std::to_string(k) + "-dim subspaces exceeds the enumeration limit");
    SubspaceEnumerator<GaloisField> en(tower.fq(), n, k, tower.enum_limit());
    const bool count_all = opts.count_all_at_top && k == n - prof.psi;
    u64 hits = 0;
    while (auto v = en.next()) {
      ++st.scanned;
      if (is_primitive_subspace(tower, prof, *v)) {
        ++hits;
        if (!count_all) break;
      }
    }
    if (count_all) st.primitive_count = hits;
    out.stats.push_back(st);
    if (hits > 0) {
      out.phi = k;
      return out;
    }
  }
  out.phi = 0;  // unreachable in theory: a generator spans a primitive line
  return out;
}

IdentityReport verify_identity(const Tower& tower, const ConstructOptions& copts,
                               const OracleOptions& oopts) {
  IdentityReport rep;
  rep.profile = extension_profile(tower);
  rep.psi = rep.profile.psi;
  rep.phi_upper = tower.n() - rep.psi;
  try {
    rep.witness = construct_primitive_subspace(tower, rep.profile, copts);
  } catch (const Error& e) {
    if (e.code() != Errc::no_avoiding_vector && e.code() != Errc::size_limit) throw;
    rep.witness_error = std::string(errc_name(e.code())) + ": " + e.what();
  }
  try {
    rep.oracle = phi_oracle(tower, rep.profile, oopts);
  } catch (const Error& e) {
    if (e.code() != Errc::size_limit) throw;
    rep.oracle_error = std::string(errc_name(e.code())) + ": " + e.what();
  }
  const bool witness_full = rep.witness && rep.witness->subspace.dim() == rep.phi_upper &&
                            rep.witness->rank_certified;
  if (witness_full && rep.oracle && rep.oracle->phi != rep.phi_upper)
    fail(Errc::internal_error, "witness and oracle disagree");
  if (witness_full) {
    rep.phi = rep.phi_upper;
    rep.verdict = Verdict::proved;
  } else if (rep.oracle) {
    rep.phi = rep.oracle->phi;
    rep.verdict = rep.oracle->phi == rep.phi_upper ? Verdict::oracle_confirmed
                                                   : Verdict::oracle_refuted;
  } else {
    rep.verdict = Verdict::boundary_undetermined;
  }
  return rep;
}

std::vector<BoundaryProbe> boundary_search(u64 q, unsigned n_min, unsigned n_max, u64 seed,
                                           u64 enum_limit) {
  const auto pr = prime_power_decompose(q);
  if (!pr) fail(Errc::not_prime, "q = " + std::to_string(q) + " is not a prime power");
  if (n_min > n_max) fail(Errc::bad_argument, "empty range of extension degrees");
  std::vector<BoundaryProbe> out;
  for (unsigned n = n_min; n <= n_max; ++n) {
    BoundaryProbe probe;
    probe.n = n;
    if (n < 2) {
      probe.skipped = true;
      probe.skip_reason = "trivial extension";
      out.push_back(std::move(probe));
      continue;
    }
    if (u64(divisor_count(n)) < q + 2) {
      probe.skipped = true;
      probe.skip_reason = "d(n) < q + 2 holds; not a boundary case";
      out.push_back(std::move(probe));
      continue;
    }
    const Tower tower = Tower::build(pr->first, pr->second, n, seed, enum_limit);
    probe.report = verify_identity(tower, ConstructOptions{}, OracleOptions{true});
    out.push_back(std::move(probe));
  }
  return out;
}

}  // namespace primfield
