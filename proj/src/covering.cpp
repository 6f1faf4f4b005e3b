#include "covering.hpp"

#include <gmpxx.h>

namespace primfield {

u64 linear_covering_number(const GaloisField& field, unsigned dim) {
  if (dim < 2)
    fail(Errc::no_covering_exists,
         "no covering by proper subspaces exists in dimension " + std::to_string(dim));
  return field.order() + 1;
}

Covering construct_covering(const GaloisField& field, unsigned n, u64 limit) {
  linear_covering_number(field, n);  // validates n >= 2
  const u64 q = field.order();
  Covering cov;
  std::vector<FVec<GaloisField>> core;
  for (unsigned j = 2; j < n; ++j) {
    FVec<GaloisField> e(n, 0);
    e[j] = 1;
    core.push_back(std::move(e));
  }
  const auto member_for = [&](u64 a, u64 b) {
    std::vector<FVec<GaloisField>> rows = core;
    FVec<GaloisField> dir(n, 0);
    dir[0] = a;
    dir[1] = b;
    rows.push_back(std::move(dir));
    return Subspace<GaloisField>::span(field, n, std::move(rows));
  };
  for (u64 t = 0; t < q; ++t) cov.members.push_back(member_for(1, t));
  cov.members.push_back(member_for(0, 1));

  if (checked_pow_u64(q, n, limit)) {
    if (!verify_covering(field, n, cov.members, limit))
      fail(Errc::internal_error, "canonical covering failed exhaustive verification");
    cov.verify_mode = "exhaustive";
  } else {
    const Subspace<GaloisField> core_space = Subspace<GaloisField>::span(field, n, core);
    for (std::size_t i = 0; i < cov.members.size(); ++i) {
      if (cov.members[i].dim() != n - 1)
        fail(Errc::internal_error, "covering member is not a hyperplane");
      for (std::size_t j = i + 1; j < cov.members.size(); ++j) {
        if (intersect(cov.members[i], cov.members[j]) != core_space)
          fail(Errc::internal_error, "covering members do not meet in the common core");
      }
    }
    // q+1 hyperplanes sharing a codim-2 core cover (q+1)(q^{n-1} - q^{n-2})
    // vectors outside the core plus q^{n-2} inside it
    const mpz_class qz(static_cast<unsigned long>(q));
    mpz_class qn, qn1, qn2;
    mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), n);
    mpz_pow_ui(qn1.get_mpz_t(), qz.get_mpz_t(), n - 1);
    mpz_pow_ui(qn2.get_mpz_t(), qz.get_mpz_t(), n - 2);
    if ((qz + 1) * (qn1 - qn2) + qn2 != qn)
      fail(Errc::internal_error, "covering counting identity failed");
    cov.verify_mode = "counting";
  }
  cov.verified = true;
  return cov;
}

bool verify_covering(const GaloisField& field, unsigned n,
                     const std::vector<Subspace<GaloisField>>& members, u64 limit) {
  for (const auto& s : members) {
    if (!s.field().same_field(field))
      fail(Errc::field_mismatch, "covering member lives over a different field");
    if (s.ambient_dim() != n)
      fail(Errc::dimension_mismatch, "covering member has the wrong ambient dimension");
    if (s.is_full()) return false;  // proper members only
  }
  if (!checked_pow_u64(field.order(), n, limit))
    fail(Errc::size_limit, "q^n exceeds the enumeration limit");
  VectorOdometer<GaloisField> odo(field, n);
  while (auto v = odo.next()) {
    bool covered = false;
    for (const auto& s : members) {
      if (s.contains(*v)) { covered = true; break; }
    }
    if (!covered) return false;
  }
  return true;
}

MinCoveringResult min_covering_exhaustive(const GaloisField& field, unsigned n, u64 limit) {
  linear_covering_number(field, n);  // validates n >= 2
  const u64 q = field.order();
  const auto points = checked_pow_u64(q, n, limit);
  if (!points) fail(Errc::size_limit, "q^n exceeds the enumeration limit");

  // hyperplanes <-> normals up to scale; representatives have first nonzero
  // coordinate 1, listed in canonical vector order
  std::vector<FVec<GaloisField>> normals;
  {
    VectorOdometer<GaloisField> odo(field, n);
    while (auto v = odo.next()) {
      u64 first = 0;
      for (u64 c : *v) {
        if (c) { first = c; break; }
      }
      if (first == 1) normals.push_back(*v);
    }
  }
  std::vector<FVec<GaloisField>> vectors;
  {
    VectorOdometer<GaloisField> odo(field, n);
    while (auto v = odo.next()) {
      bool zero = true;
      for (u64 c : *v)
        if (c) { zero = false; break; }
      if (!zero) vectors.push_back(*v);
    }
  }
  const auto ortho = [&](const FVec<GaloisField>& v, const FVec<GaloisField>& w) {
    u64 acc = 0;
    for (unsigned i = 0; i < n; ++i) acc = field.add(acc, field.mul(v[i], w[i]));
    return acc == 0;
  };

  // total subsets to scan must fit the budget
  {
    mpz_class subsets = 0, binom;
    for (u64 k = 2; k <= q + 1 && k <= normals.size(); ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), normals.size(), static_cast<unsigned long>(k));
      subsets += binom;
    }
    if (subsets > mpz_class(static_cast<unsigned long>(limit)))
      fail(Errc::size_limit, "hyperplane family count exceeds the enumeration limit");
  }

  MinCoveringResult res;
  for (u64 k = 2; k <= q + 1 && k <= normals.size(); ++k) {
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    for (;;) {
      ++res.families_checked;
      bool covers = true;
      for (const auto& v : vectors) {
        bool hit = false;
        for (std::size_t i : combo) {
          if (ortho(v, normals[i])) { hit = true; break; }
        }
        if (!hit) { covers = false; break; }
      }
      if (covers) {
        res.k = static_cast<unsigned>(k);
        return res;
      }
      // next k-combination of indices into normals
      std::size_t i = k;
      bool advanced = false;
      while (i-- > 0) {
        if (combo[i] < normals.size() - k + i) {
          ++combo[i];
          for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  fail(Errc::internal_error, "no covering found up to q + 1 hyperplanes");
}

}  // namespace primfield
