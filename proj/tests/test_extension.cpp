#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "extension.hpp"
#include "fieldcore.hpp"
#include "linspace.hpp"

using namespace primfield;

namespace {

// Reference primitivity check straight from the definition: every nonzero
// member must generate the whole top field.
bool primitive_by_definition(const Tower& tower, const Subspace<GaloisField>& v) {
  VectorOdometer<GaloisField> odo(tower.fq(), v.dim());
  while (auto coeffs = odo.next()) {
    bool all_zero = true;
    for (u64 c : *coeffs)
      if (c != 0) all_zero = false;
    if (all_zero) continue;
    auto x = tower.zero();
    for (unsigned i = 0; i < v.dim(); ++i) {
      auto scaled = v.basis()[i];
      for (auto& coord : scaled) coord = tower.fq().mul(coord, (*coeffs)[i]);
      x = tower.add(x, scaled);
    }
    if (tower.element_degree(x) != tower.n()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("extension profile lists the intermediate lattice") {
  const auto t = Tower::build(2, 1, 6, 0);
  const auto prof = extension_profile(t);
  CHECK(prof.proper_divisors == std::vector<unsigned>({1, 2, 3}));
  CHECK(prof.maximal_divisors == std::vector<unsigned>({2, 3}));  // 6/3, 6/2, ascending
  CHECK(prof.d_n == 4);
  CHECK(prof.m == 3);
  CHECK(prof.psi == 3);
  CHECK_FALSE(prof.condition_ok);  // d(6) = 4 = q + 2 for q = 2
  REQUIRE(prof.intermediates.size() == 3);
  CHECK(prof.intermediates[0].dim() == 1);
  CHECK(prof.intermediates[1].dim() == 2);
  CHECK(prof.intermediates[2].dim() == 3);

  const auto t2 = Tower::build(2, 1, 4, 0);
  const auto prof2 = extension_profile(t2);
  CHECK(prof2.psi == 2);
  CHECK(prof2.d_n == 3);
  CHECK(prof2.condition_ok);  // 3 < 4

  const auto t3 = Tower::build(13, 2, 4, 0);
  const auto prof3 = extension_profile(t3);
  CHECK(prof3.psi == 2);
  CHECK(prof3.condition_ok);
  CHECK(phi_upper_bound(t3) == 2);
}

TEST_CASE("psi is the largest proper divisor") {
  for (const auto& [n, psi] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 3}, {8, 4}, {9, 3}, {12, 6}}) {
    const auto t = Tower::build(3, 1, n, 0);
    CHECK(extension_profile(t).psi == psi);
    CHECK(phi_upper_bound(t) == n - psi);
  }
}

TEST_CASE("trivial extensions are rejected") {
  const auto t = Tower::build(2, 1, 1, 0);  // the field itself is fine
  try {
    (void)extension_profile(t);  // the lattice of proper intermediates is not
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::trivial_extension);
  }
}

TEST_CASE("primitivity matches the generate-everything definition") {
  const auto t = Tower::build(2, 1, 4, 0);
  const auto prof = extension_profile(t);
  // every 2-dimensional subspace, both verdicts side by side
  SubspaceEnumerator<GaloisField> en(t.fq(), t.n(), 2);
  u64 primitive = 0, total = 0;
  while (auto s = en.next()) {
    const bool fast = is_primitive_subspace(t, prof, *s);
    CHECK(fast == primitive_by_definition(t, *s));
    primitive += fast;
    ++total;
  }
  CHECK(total == 35);
  CHECK(primitive > 0);
}

TEST_CASE("a line through a generator is primitive, one through 1 is not") {
  const auto t = Tower::build(2, 1, 4, 0);
  const auto gen = multiplicative_generator(t);
  REQUIRE(t.element_degree(gen) == 4);  // a generator of GF(16)* has full degree
  const auto prim = Subspace<GaloisField>::span(t.fq(), t.n(), {gen});
  CHECK(is_primitive_subspace(t, prim));
  const auto unit = Subspace<GaloisField>::span(t.fq(), t.n(), {t.one()});
  CHECK_FALSE(is_primitive_subspace(t, unit));
}

TEST_CASE("greedy construction reaches n - psi with certificates") {
  for (const auto& [p, r, n] : std::vector<std::tuple<u64, unsigned, unsigned>>{
           {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 1, 5}, {3, 1, 2}, {3, 1, 4},
           {2, 2, 2}, {2, 2, 4}, {5, 1, 3}}) {
    const auto t = Tower::build(p, r, n, 0);
    const auto prof = extension_profile(t);
    const auto w = construct_primitive_subspace(t, prof);
    CHECK(w.subspace.dim() == n - prof.psi);
    CHECK(w.rank_certified);
    CHECK(w.verified_exhaustive);  // q^n <= 4096 everywhere in this list
    CHECK(is_primitive_subspace(t, prof, w.subspace));
    CHECK(primitive_by_definition(t, w.subspace));
    CHECK(w.steps.size() == w.subspace.dim());
    CHECK(w.candidates_per_step.size() == w.steps.size());
  }
}

TEST_CASE("greedy construction is deterministic per seed") {
  const auto t = Tower::build(3, 1, 4, 5);
  const auto a = construct_primitive_subspace(t, extension_profile(t));
  const auto b = construct_primitive_subspace(t, extension_profile(t));
  CHECK(a.subspace == b.subspace);
  CHECK(a.steps == b.steps);
}

TEST_CASE("large-field witness uses sampling but exact rank certificates") {
  const auto t = Tower::build(13, 2, 4, 0);
  const auto prof = extension_profile(t);
  ConstructOptions opts;
  const auto w = construct_primitive_subspace(t, prof, opts);
  CHECK(w.subspace.dim() == 2);
  CHECK(w.rank_certified);
  CHECK_FALSE(w.verified_exhaustive);  // 169^2 - 1 nonzero members
  CHECK(w.degree_checks == opts.sample_count);
  CHECK(is_primitive_subspace(t, prof, w.subspace));
}

TEST_CASE("phi oracle counts layers from the top") {
  const auto t = Tower::build(2, 1, 4, 0);
  const auto res = phi_oracle(t, extension_profile(t));
  CHECK(res.phi == 2);
  REQUIRE(!res.stats.empty());
  CHECK(res.stats.front().k == 2);
  CHECK(res.stats.front().total == 35);

  OracleOptions all;
  all.count_all_at_top = true;
  const auto full = phi_oracle(t, extension_profile(t), all);
  CHECK(full.phi == 2);
  REQUIRE(full.stats.front().primitive_count.has_value());
  CHECK(*full.stats.front().primitive_count > 0);
  CHECK(full.stats.front().scanned == 35);

  const auto t3 = Tower::build(3, 1, 2, 0);
  CHECK(phi_oracle(t3, extension_profile(t3)).phi == 1);
}

TEST_CASE("phi oracle respects the enumeration budget") {
  const auto t = Tower::build(2, 1, 6, 0, 100);  // 2^6 = 64 fits, layers do not
  try {
    (void)phi_oracle(t, extension_profile(t));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size_limit);
  }
}

TEST_CASE("identity verification composes witness and oracle") {
  const auto t = Tower::build(2, 1, 4, 0);
  const auto rep = verify_identity(t);
  CHECK(rep.psi == 2);
  CHECK(rep.phi_upper == 2);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->subspace.dim() == 2);
  CHECK(rep.witness_error.empty());
  REQUIRE(rep.phi.has_value());
  CHECK(*rep.phi == 2);
  CHECK(rep.verdict == Verdict::proved);

  // boundary case d(6) = q + 2: greedy still certifies n - psi here
  const auto t6 = Tower::build(2, 1, 6, 0);
  const auto rep6 = verify_identity(t6);
  CHECK_FALSE(rep6.profile.condition_ok);
  REQUIRE(rep6.witness.has_value());
  CHECK(rep6.witness->subspace.dim() == 3);
  CHECK(rep6.verdict == Verdict::proved);
}

TEST_CASE("verdict names are stable strings") {
  CHECK(std::string(verdict_name(Verdict::proved)) == "Proved");
  CHECK(std::string(verdict_name(Verdict::oracle_confirmed)) == "OracleConfirmed");
  CHECK(std::string(verdict_name(Verdict::oracle_refuted)) == "OracleRefuted");
  CHECK(std::string(verdict_name(Verdict::boundary_undetermined)) == "BoundaryUndetermined");
}

TEST_CASE("boundary search probes exactly the failing cases") {
  const auto probes = boundary_search(2, 2, 6, 0);
  REQUIRE(probes.size() == 5);
  // d(n) < 4 holds for n = 2, 3, 4, 5 and fails at n = 6
  for (const auto& probe : probes) {
    if (probe.n < 6) {
      CHECK(probe.skipped);
      CHECK(!probe.skip_reason.empty());
    } else {
      CHECK_FALSE(probe.skipped);
      REQUIRE(probe.report.has_value());
      const auto& rep = *probe.report;
      REQUIRE(rep.oracle.has_value());
      REQUIRE(!rep.oracle->stats.empty());
      const auto& top = rep.oracle->stats.front();
      CHECK(top.k == 3);
      CHECK(top.total == 1395);
      CHECK(top.scanned == top.total);
      REQUIRE(top.primitive_count.has_value());
      REQUIRE(rep.phi.has_value());
      CHECK((rep.verdict == Verdict::proved || rep.verdict == Verdict::oracle_confirmed ||
             rep.verdict == Verdict::oracle_refuted));
    }
  }
  CHECK_THROWS_AS((void)boundary_search(6, 2, 4, 0), Error);   // q not a prime power
  CHECK_THROWS_AS((void)boundary_search(2, 5, 4, 0), Error);   // empty range
}
