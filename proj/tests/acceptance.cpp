// Acceptance gate: one line per criterion, PASS or FAIL, exit 0 only if
// every criterion passes. Each check pins its tolerances in code next to
// the assertion; all equalities are exact.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "avoidance.hpp"
#include "covering.hpp"
#include "extension.hpp"
#include "fieldcore.hpp"
#include "linspace.hpp"
#include "partition.hpp"
#include "report.hpp"
#include "rng.hpp"

using namespace primfield;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

template <class Fn>
Outcome timed(double budget_seconds, Fn&& fn) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    fn(c);
    out.pass = c.ok;
    out.detail = c.ok ? "" : c.first_failure;
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.pass && out.seconds >= budget_seconds) {
    out.pass = false;
    out.detail = "runtime " + std::to_string(out.seconds) + "s exceeds " +
                 std::to_string(budget_seconds) + "s";
  }
  return out;
}

// ----- criterion 1: the worked example at p = 13, r = 2, n = 4 -------------

Outcome criterion1() {
  return timed(30.0, [](Check& c) {
    const auto tower = Tower::build(13, 2, 4, 0);
    const auto rep = verify_identity(tower);
    c.expect(rep.psi == 2, "psi != 2");
    c.expect(rep.phi.has_value() && *rep.phi == 2, "phi != 2");
    c.expect(rep.verdict == Verdict::proved, "verdict is not Proved");
    c.expect(rep.witness.has_value(), "no witness");
    if (rep.witness) {
      c.expect(rep.witness->subspace.dim() == 2, "witness dimension != 2");
      c.expect(rep.witness->rank_certified, "intersection rank check missing");
      c.expect(rep.witness->degree_checks == 1000, "expected exactly 1000 degree samples");
      c.expect(!rep.witness->verified_exhaustive,
               "169^2 - 1 vectors cannot be walked exhaustively under the cap");
    }
  });
}

// ----- criterion 2: identity sweep over all q^n <= 2^12 with d(n) < q+2 ----

Outcome criterion2() {
  return timed(60.0, [](Check& c) {
    constexpr u64 kSweepCap = 4096;  // q^n <= 2^12
    std::vector<std::tuple<u64, unsigned, unsigned>> cases;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
      for (unsigned r = 1; r <= 12; ++r) {
        const auto q = checked_pow_u64(p, r, kSweepCap);
        if (!q) break;
        for (unsigned n = 2; n <= 12; ++n) {
          if (!checked_pow_u64(*q, n, kSweepCap)) break;
          if (divisor_count(n) >= *q + 2) continue;
          cases.emplace_back(p, r, n);
        }
      }
    }
    const std::set<std::tuple<u64, unsigned, unsigned>> must_include = {
        {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 1, 5}, {3, 1, 2},
        {3, 1, 4}, {2, 2, 2}, {2, 2, 4}, {5, 1, 3}};
    for (const auto& t : must_include) {
      c.expect(std::find(cases.begin(), cases.end(), t) != cases.end(),
               "sweep misses a required tuple");
    }
    for (const auto& [p, r, n] : cases) {
      const std::string tag =
          " at (" + std::to_string(p) + "," + std::to_string(r) + "," + std::to_string(n) + ")";
      const auto tower = Tower::build(p, r, n, 0);
      const auto prof = extension_profile(tower);
      const auto witness = construct_primitive_subspace(tower, prof);
      c.expect(witness.subspace.dim() == n - prof.psi, "witness dim != n - psi" + tag);
      c.expect(witness.verified_exhaustive, "witness not exhaustively verified" + tag);
      c.expect(witness.rank_certified, "witness rank check missing" + tag);
      const auto oracle = phi_oracle(tower, prof);
      c.expect(oracle.phi == n - prof.psi, "oracle phi != n - psi" + tag);
    }
    c.expect(cases.size() >= must_include.size(), "sweep produced too few cases");
  });
}

// ----- criterion 3: minimal covering numbers ------------------------------

Outcome criterion3() {
  return timed(10.0, [](Check& c) {
    for (const auto& [q, n] : std::vector<std::pair<u64, unsigned>>{
             {2, 2}, {2, 3}, {3, 2}, {4, 2}, {5, 2}}) {
      const std::string tag = " at (q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")";
      const auto K = field_of_order(q);
      const auto min = min_covering_exhaustive(K, n, u64(1) << 24);
      c.expect(min.k == q + 1, "minimal covering size != q + 1" + tag);
      const auto cov = construct_covering(K, n);
      c.expect(cov.members.size() == q + 1, "constructed covering size != q + 1" + tag);
      c.expect(cov.verified, "constructed covering unverified" + tag);
      c.expect(verify_covering(K, n, cov.members), "constructed covering fails verify" + tag);
    }
  });
}

// ----- criterion 4: partitions --------------------------------------------

Outcome criterion4() {
  return timed(30.0, [](Check& c) {
    {
      const auto tower = Tower::build(2, 1, 4, 0);
      const auto prof = extension_profile(tower);
      const auto witness = construct_primitive_subspace(tower, prof);
      const PartitionSpec spec{witness.subspace, make_pieces(tower, witness.subspace, {2}),
                               subfield_basis(tower, prof.psi), default_maps({2}, prof.psi)};
      const auto res = build_partition(tower, prof, spec);
      c.expect(res.members.size() == 5, "spread of GF(16) must have 5 members");
      for (const auto& member : res.members)
        c.expect(member.dim() == 2, "spread member of dimension != 2");
      c.expect(res.exhaustive, "verification was not exhaustive");
      c.expect(res.ok, "some nonzero vector not in exactly one member");
      c.expect(res.vectors_checked == 15, "expected all 15 nonzero vectors checked");
    }

    // 50 randomized valid piece specifications across three towers
    const std::vector<std::tuple<u64, unsigned, unsigned>> towers = {
        {2, 1, 4}, {2, 1, 6}, {3, 1, 4}};
    CounterRng rng(2026, 8);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& [p, r, n] = towers[rng.below(towers.size())];
      const auto tower = Tower::build(p, r, n, rng.below(1 << 16));
      const auto prof = extension_profile(tower);
      const auto witness = construct_primitive_subspace(tower, prof);
      const unsigned wd = witness.subspace.dim();
      const u64 q = tower.q();
      // valid patterns: the whole of W, all its lines, or one bigger piece
      // plus the lines outside it
      std::vector<unsigned> dims;
      const unsigned lines_in_w = static_cast<unsigned>((checked_pow_u64(q, wd, 1 << 20).value() - 1) / (q - 1));
      switch (rng.below(wd >= 3 ? 3 : 2)) {
        case 0: dims = {wd}; break;
        case 1: dims.assign(lines_in_w, 1); break;
        default: {
          const unsigned t = 2;
          const unsigned outside =
              static_cast<unsigned>((checked_pow_u64(q, wd, 1 << 20).value() -
                                     checked_pow_u64(q, t, 1 << 20).value()) / (q - 1));
          dims.assign(outside, 1);
          dims.insert(dims.begin(), t);
          break;
        }
      }
      auto pieces = make_pieces(tower, witness.subspace, dims);
      std::vector<unsigned> piece_dims;
      for (const auto& piece : pieces) piece_dims.push_back(piece.dim());
      const PartitionSpec spec{witness.subspace, std::move(pieces),
                               subfield_basis(tower, prof.psi),
                               default_maps(piece_dims, prof.psi)};
      const auto res = build_partition(tower, prof, spec);
      const std::string tag = " at trial " + std::to_string(trial);
      c.expect(res.ok, "randomized spec fails to partition" + tag);
      c.expect(res.counting_identity, "counting identity fails" + tag);
    }
  });
}

// ----- criterion 5: maximal zero-intersection subspaces over Q ------------

Outcome criterion5() {
  return timed(20.0, [](Check& c) {
    const RationalField Q;
    CounterRng rng(2026, 9);
    for (int trial = 0; trial < 100; ++trial) {
      const unsigned n = 3 + static_cast<unsigned>(rng.below(4));   // 3..6
      const unsigned m = 1 + static_cast<unsigned>(rng.below(5));   // 1..5
      std::vector<Subspace<RationalField>> family;
      unsigned s = 0;
      while (family.size() < m) {
        const unsigned k = 1 + static_cast<unsigned>(rng.below(n - 1));  // dims < n
        std::vector<std::vector<mpq_class>> rows;
        for (unsigned i = 0; i < k; ++i) {
          std::vector<mpq_class> v(n);
          for (auto& coord : v) coord = mpq_class(static_cast<long>(rng.below(11)) - 5);
          rows.push_back(std::move(v));
        }
        auto sub = Subspace<RationalField>::span(Q, n, std::move(rows));
        if (sub.is_full() || sub.dim() == 0) continue;
        s = std::max(s, sub.dim());
        family.push_back(std::move(sub));
      }
      const auto res = max_zero_intersection(Q, n, family);
      const std::string tag = " at trial " + std::to_string(trial);
      c.expect(res.complement.dim() == n - s, "dim T != n - s" + tag);
      for (const auto& S : family) {
        c.expect(intersect(res.complement, S).dim() == 0, "T meets a member" + tag);
        if (S.dim() == s)
          c.expect(sum(res.complement, S).is_full(), "T + S not the full space" + tag);
      }
      for (const u64 tried : res.candidates_per_step)
        c.expect(tried <= u64(m) * (n - 1) + 1, "candidate count over the moment bound" + tag);
    }
  });
}

// ----- criterion 6: property suites, >= 1000 cases each -------------------

Outcome criterion6() {
  return timed(120.0, [](Check& c) {
    // (a) triple property: x outside A + B keeps (A + <x>) meeting B trivially
    {
      long cases = 0;
      for (const u64 p : {2ull, 3ull}) {
        const auto K = GaloisField::prime_field(p);
        CounterRng rng(p, 10);
        const long want = p == 2 ? 500 : 1000;
        while (cases < want) {
          const unsigned n = 3 + static_cast<unsigned>(rng.below(3));
          auto draw = [&] {
            const unsigned k = 1 + static_cast<unsigned>(rng.below(n - 1));
            std::vector<std::vector<u64>> rows;
            for (unsigned i = 0; i < k; ++i) {
              std::vector<u64> v(n);
              for (auto& coord : v) coord = rng.below(p);
              rows.push_back(std::move(v));
            }
            return Subspace<GaloisField>::span(K, n, std::move(rows));
          };
          const auto a = draw(), b = draw();
          if (intersect(a, b).dim() != 0) continue;
          const auto ab = sum(a, b);
          if (ab.is_full()) continue;
          const auto x = find_avoiding_vector(K, n, {ab});
          const auto ac = sum(a, Subspace<GaloisField>::span(K, n, {x.vector}));
          c.expect(intersect(ac, b).dim() == 0, "triple property violated");
          ++cases;
        }
      }
      c.expect(cases >= 1000, "triple property: too few cases");
    }

    // (b) dimension formula over both field kinds
    {
      long cases = 0;
      for (const u64 p : {2ull, 3ull}) {
        const auto K = GaloisField::prime_field(p);
        CounterRng rng(p, 11);
        for (int trial = 0; trial < 350; ++trial) {
          const unsigned n = 2 + static_cast<unsigned>(rng.below(4));
          auto draw = [&] {
            const unsigned k = static_cast<unsigned>(rng.below(n + 1));
            std::vector<std::vector<u64>> rows;
            for (unsigned i = 0; i < k; ++i) {
              std::vector<u64> v(n);
              for (auto& coord : v) coord = rng.below(p);
              rows.push_back(std::move(v));
            }
            return Subspace<GaloisField>::span(K, n, std::move(rows));
          };
          const auto a = draw(), b = draw();
          c.expect(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim(),
                   "dimension formula violated over GF(p)");
          ++cases;
        }
      }
      const RationalField Q;
      CounterRng rng(7, 12);
      for (int trial = 0; trial < 350; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng.below(4));
        auto draw = [&] {
          const unsigned k = static_cast<unsigned>(rng.below(n + 1));
          std::vector<std::vector<mpq_class>> rows;
          for (unsigned i = 0; i < k; ++i) {
            std::vector<mpq_class> v(n);
            for (auto& coord : v) coord = mpq_class(static_cast<long>(rng.below(9)) - 4);
            rows.push_back(std::move(v));
          }
          return Subspace<RationalField>::span(Q, n, std::move(rows));
        };
        const auto a = draw(), b = draw();
        c.expect(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim(),
                 "dimension formula violated over Q");
        ++cases;
      }
      c.expect(cases >= 1000, "dimension formula: too few cases");
    }

    // (c) frobenius is a ring homomorphism whose fixed space is the base
    {
      long cases = 0;
      for (const auto& [p, r, n] : std::vector<std::tuple<u64, unsigned, unsigned>>{
               {3, 1, 3}, {2, 2, 2}, {5, 1, 2}}) {
        const auto tower = Tower::build(p, r, n, 0);
        CounterRng rng(p, 13);
        for (int trial = 0; trial < 400; ++trial) {
          std::vector<u64> va(tower.n()), vb(tower.n());
          for (auto& coord : va) coord = rng.below(tower.q());
          for (auto& coord : vb) coord = rng.below(tower.q());
          const auto a = tower.from_coords(va), b = tower.from_coords(vb);
          c.expect(tower.frobenius(tower.add(a, b)) ==
                       tower.add(tower.frobenius(a), tower.frobenius(b)),
                   "frobenius is not additive");
          c.expect(tower.frobenius(tower.mul(a, b)) ==
                       tower.mul(tower.frobenius(a), tower.frobenius(b)),
                   "frobenius is not multiplicative");
          ++cases;
        }
        // fixed space == subfield_basis(1), element by element
        const auto base = subfield_basis(tower, 1);
        VectorOdometer<GaloisField> odo(tower.fq(), tower.n());
        while (auto v = odo.next()) {
          const auto a = tower.from_coords(*v);
          c.expect((tower.frobenius(a) == a) == base.contains(a),
                   "fixed field differs from subfield_basis(1)");
        }
      }
      c.expect(cases >= 1000, "frobenius suite: too few cases");
    }

    // (d) enumeration counts match the closed form for n <= 5, q in {2, 3}
    {
      long layers = 0;
      u64 enumerated = 0;
      for (const u64 p : {2ull, 3ull}) {
        const auto K = GaloisField::prime_field(p);
        for (unsigned n = 1; n <= 5; ++n) {
          for (unsigned k = 0; k <= n; ++k) {
            SubspaceEnumerator<GaloisField> en(K, n, k, u64(1) << 22);
            u64 count = 0;
            while (auto s = en.next()) {
              c.expect(s->dim() == k, "enumerated subspace has the wrong dimension");
              ++count;
            }
            c.expect(count == gaussian_binomial(n, k, p), "enumeration count mismatch");
            enumerated += count;
            ++layers;
          }
        }
      }
      c.expect(layers == 40 && enumerated >= 1000, "enumeration suite: too few cases");
    }
  });
}

// ----- criterion 7: boundary probe at q = 2, n = 6 -------------------------

Outcome criterion7() {
  return timed(60.0, [](Check& c) {
    const std::string json = boundary_report(2, 6, 6, 0, kDefaultEnumLimit);
    c.expect(report_exit_code(json) == 0, "boundary report exit code != 0");
    const auto doc = ordered_json::parse(json);
    c.expect(doc.at("all_determined").get<bool>(), "probe left the verdict undetermined");
    const auto& records = doc.at("records");
    c.expect(records.size() == 1, "expected exactly one probe record");
    const auto& rec = records.at(0);
    c.expect(rec.at("n").get<std::string>() == "6", "probe is not n = 6");
    c.expect(!rec.at("condition_ok").get<bool>(), "d(6) < q+2 should fail at q = 2");
    const auto& stats = rec.at("oracle").at("stats").at(0);
    c.expect(stats.at("k").get<std::string>() == "3", "top layer is not k = 3");
    c.expect(stats.at("total").get<std::string>() == "1395", "layer size != 1395");
    c.expect(stats.at("scanned") == stats.at("total"), "scan did not finish the layer");
    c.expect(!stats.at("primitive_count").is_null(), "no definite primitive count");
    c.expect(!rec.at("phi").is_null(), "no definite phi");
    const std::string verdict = rec.at("verdict").get<std::string>();
    c.expect(verdict == "Proved" || verdict == "OracleConfirmed" || verdict == "OracleRefuted",
             "verdict is not definite");
    // internal consistency: a positive count at the top layer is exactly
    // what phi = 3 means
    const u64 count = std::stoull(stats.at("primitive_count").get<std::string>());
    const std::string phi = rec.at("phi").get<std::string>();
    c.expect((count > 0) == (phi == "3"), "primitive count and phi disagree");
  });
}

}  // namespace

int main() {
  struct Named {
    const char* name;
    Outcome (*run)();
  };
  const Named criteria[] = {
      {"worked example (13,2,4): psi = 2, phi = 2, verdict Proved", criterion1},
      {"identity sweep over q^n <= 4096 with d(n) < q+2", criterion2},
      {"minimal covering number q + 1 on five small spaces", criterion3},
      {"partition of GF(16)* and 50 randomized piece specs", criterion4},
      {"rational zero-intersection subspaces, 100 seeded families", criterion5},
      {"property suites, >= 1000 cases each", criterion6},
      {"boundary probe (2, 6): definite oracle verdict on 1395 subspaces", criterion7},
  };
  int failures = 0;
  int index = 0;
  for (const auto& cr : criteria) {
    ++index;
    const auto out = cr.run();
    std::ostringstream line;
    line << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << index << " (" << std::fixed;
    line.precision(2);
    line << out.seconds << "s): " << cr.name;
    if (!out.pass) line << " -- " << out.detail;
    std::cout << line.str() << std::endl;
    failures += !out.pass;
  }
  if (failures == 0) {
    std::cout << "all 7 acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " acceptance criteria failed" << std::endl;
  return 1;
}
