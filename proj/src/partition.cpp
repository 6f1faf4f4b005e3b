#include "partition.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace primfield {

namespace {

mpz_class qpow(u64 q, unsigned e) {
  mpz_class out;
  const mpz_class qz(static_cast<unsigned long>(q));
  mpz_pow_ui(out.get_mpz_t(), qz.get_mpz_t(), e);
  return out;
}

// sum over members of (q^dim - 1) == q^n - 1, checked exactly
bool counting_identity_holds(u64 q, unsigned n,
                             const std::vector<Subspace<GaloisField>>& members) {
  mpz_class lhs = 0;
  for (const auto& s : members) lhs += qpow(q, s.dim()) - 1;
  return lhs == qpow(q, n) - 1;
}

Tower::Elem combine(const GaloisField& K, const std::vector<Tower::Elem>& rows,
                    const std::vector<u64>& coeffs, unsigned n) {
  Tower::Elem v(n, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) v[j] = K.add(v[j], K.mul(coeffs[i], rows[i][j]));
  }
  return v;
}

}  // namespace

std::vector<std::vector<std::vector<u64>>> default_maps(const std::vector<unsigned>& piece_dims,
                                                        unsigned psi) {
  std::vector<std::vector<std::vector<u64>>> maps;
  maps.reserve(piece_dims.size());
  for (unsigned t : piece_dims) {
    if (t > psi) fail(Errc::ti_too_large, "piece dimension exceeds psi; no injective map exists");
    std::vector<std::vector<u64>> mat(t, std::vector<u64>(psi, 0));
    for (unsigned b = 0; b < t; ++b) mat[b][b] = 1;
    maps.push_back(std::move(mat));
  }
  return maps;
}

PartitionResult build_partition(const Tower& tower, const ExtensionProfile& prof,
                                const PartitionSpec& spec, u64 limit) {
  const unsigned n = tower.n();
  const unsigned psi = prof.psi;
  const GaloisField& K = tower.fq();

  if (!spec.w.field().same_field(K))
    fail(Errc::field_mismatch, "W is a subspace over the wrong field");
  if (spec.w.ambient_dim() != n)
    fail(Errc::dimension_mismatch, "W does not live in GF(q^n)");
  if (spec.w.dim() != n - psi)
    fail(Errc::bad_argument, "W must have dimension n - psi = " + std::to_string(n - psi));
  if (!is_primitive_subspace(tower, prof, spec.w))
    fail(Errc::not_primitive, "W meets an intermediate field nontrivially");

  const Subspace<GaloisField>& m1_expected = [&]() -> const Subspace<GaloisField>& {
    for (std::size_t i = 0; i < prof.proper_divisors.size(); ++i)
      if (prof.proper_divisors[i] == psi) return prof.intermediates[i];
    fail(Errc::internal_error, "profile lacks the psi-dimensional intermediate");
  }();
  if (spec.m1 != m1_expected)
    fail(Errc::bad_argument, "M1 must be the intermediate field of dimension psi");

  for (const auto& piece : spec.pieces) {
    if (!piece.field().same_field(K))
      fail(Errc::field_mismatch, "piece is a subspace over the wrong field");
    if (piece.ambient_dim() != n)
      fail(Errc::dimension_mismatch, "piece does not live in GF(q^n)");
    for (const auto& row : piece.basis()) {
      if (!spec.w.contains(row)) fail(Errc::not_a_partition, "piece is not inside W");
    }
  }
  for (std::size_t i = 0; i < spec.pieces.size(); ++i)
    for (std::size_t j = i + 1; j < spec.pieces.size(); ++j)
      if (intersect(spec.pieces[i], spec.pieces[j]).dim() != 0)
        fail(Errc::not_a_partition, "two pieces meet nontrivially");
  if (!counting_identity_holds(K.order(), spec.w.dim(), spec.pieces))
    fail(Errc::not_a_partition, "piece dimensions do not tile W");

  for (const auto& piece : spec.pieces) {
    if (piece.dim() > psi)
      fail(Errc::ti_too_large, "piece dimension exceeds psi; no injective map exists");
  }
  if (spec.maps.size() != spec.pieces.size())
    fail(Errc::bad_argument, "one map per piece is required");
  for (std::size_t i = 0; i < spec.pieces.size(); ++i) {
    const unsigned t = spec.pieces[i].dim();
    if (spec.maps[i].size() != t)
      fail(Errc::dimension_mismatch, "map row count does not match piece dimension");
    std::vector<FVec<GaloisField>> rows;
    for (const auto& row : spec.maps[i]) {
      if (row.size() != psi) fail(Errc::dimension_mismatch, "map row length must be psi");
      for (u64 c : row)
        if (c >= K.order()) fail(Errc::bad_argument, "map entry is not a field element");
      rows.push_back(row);
    }
    if (rref_in_place(K, rows).size() != t)
      fail(Errc::map_not_injective, "map matrix has rank below the piece dimension");
  }

  // member count: W, M1, and (q^psi - 1) graphs per nonzero piece
  unsigned nonzero_pieces = 0;
  for (const auto& piece : spec.pieces)
    if (piece.dim() > 0) ++nonzero_pieces;
  const auto alphas = checked_pow_u64(K.order(), psi, limit);
  if (!alphas || (*alphas - 1) * u128(nonzero_pieces) + 2 > limit)
    fail(Errc::size_limit, "member count exceeds the enumeration limit");

  PartitionResult res;
  res.members.push_back(spec.w);
  res.members.push_back(spec.m1);
  const std::vector<Tower::Elem> m1_rows(spec.m1.basis().begin(), spec.m1.basis().end());
  for (std::size_t i = 0; i < spec.pieces.size(); ++i) {
    const auto& piece = spec.pieces[i];
    const unsigned t = piece.dim();
    if (t == 0) continue;  // degenerate piece, contributes nothing
    std::vector<Tower::Elem> images(t);
    for (unsigned b = 0; b < t; ++b) images[b] = combine(K, m1_rows, spec.maps[i][b], n);
    VectorOdometer<GaloisField> odo(K, psi);
    while (auto coeffs = odo.next()) {
      bool zero = true;
      for (u64 c : *coeffs)
        if (c) { zero = false; break; }
      if (zero) continue;
      const Tower::Elem alpha = combine(K, m1_rows, *coeffs, n);
      std::vector<FVec<GaloisField>> rows;
      rows.reserve(t);
      for (unsigned b = 0; b < t; ++b)
        rows.push_back(tower.add(piece.basis()[b], tower.mul(alpha, images[b])));
      auto member = Subspace<GaloisField>::span(K, n, std::move(rows));
      if (member.dim() != t)
        fail(Errc::internal_error, "graph subspace collapsed; W meets M1 nontrivially");
      res.members.push_back(std::move(member));
    }
  }

  const PartitionResult checked = verify_partition(tower, res.members, limit);
  res.exhaustive = checked.exhaustive;
  res.ok = checked.ok;
  res.counting_identity = checked.counting_identity;
  res.vectors_checked = checked.vectors_checked;
  if (!res.ok) fail(Errc::internal_error, "constructed members fail to partition GF(q^n)*");
  return res;
}

PartitionResult verify_partition(const Tower& tower,
                                 const std::vector<Subspace<GaloisField>>& members,
                                 u64 limit) {
  const unsigned n = tower.n();
  const GaloisField& K = tower.fq();
  for (const auto& s : members) {
    if (!s.field().same_field(K))
      fail(Errc::field_mismatch, "member lives over a different field");
    if (s.ambient_dim() != n)
      fail(Errc::dimension_mismatch, "member has the wrong ambient dimension");
  }
  PartitionResult res;
  res.members = members;
  res.counting_identity = counting_identity_holds(K.order(), n, members);
  const auto ord = tower.order_u64();
  if (ord && *ord <= limit) {
    res.exhaustive = true;
    res.ok = true;
    VectorOdometer<GaloisField> odo(K, n);
    while (auto v = odo.next()) {
      bool zero = true;
      for (u64 c : *v)
        if (c) { zero = false; break; }
      if (zero) continue;
      ++res.vectors_checked;
      unsigned hits = 0;
      for (const auto& s : members) {
        if (s.contains(*v)) ++hits;
        if (hits > 1) break;
      }
      if (hits != 1) { res.ok = false; break; }
    }
  } else {
    res.exhaustive = false;
    bool pairwise = true;
    for (std::size_t i = 0; i < members.size() && pairwise; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (intersect(members[i], members[j]).dim() != 0) { pairwise = false; break; }
    res.ok = pairwise && res.counting_identity;
  }
  return res;
}

std::vector<Subspace<GaloisField>> make_pieces(const Tower& tower,
                                               const Subspace<GaloisField>& w,
                                               std::vector<unsigned> dims) {
  const GaloisField& K = tower.fq();
  const unsigned wd = w.dim();
  for (unsigned t : dims) {
    if (t < 1 || t > wd)
      fail(Errc::bad_argument, "piece dimension must lie between 1 and dim W");
  }
  if (dims.empty()) fail(Errc::bad_argument, "at least one piece dimension is required");
  {
    mpz_class total = 0;
    for (unsigned t : dims) total += qpow(K.order(), t) - 1;
    if (total != qpow(K.order(), wd) - 1)
      fail(Errc::not_a_partition, "piece dimensions do not tile W");
  }
  std::sort(dims.rbegin(), dims.rend());
  const std::vector<Tower::Elem> w_rows(w.basis().begin(), w.basis().end());

  if (dims.size() == 1) return {w};

  if (dims[0] >= 2 && dims.size() >= 2 && dims[1] >= 2)
    fail(Errc::bad_argument,
         "unsupported piece pattern: at most one piece of dimension 2 or more");

  std::vector<Subspace<GaloisField>> pieces;
  Subspace<GaloisField> big(K, w.ambient_dim());
  if (dims[0] >= 2) {
    std::vector<FVec<GaloisField>> rows(w_rows.begin(), w_rows.begin() + dims[0]);
    big = Subspace<GaloisField>::span(K, w.ambient_dim(), std::move(rows));
    pieces.push_back(big);
  }
  // lines of W outside the big piece: one canonical representative per
  // projective point (first nonzero coefficient = 1)
  const auto points = checked_pow_u64(K.order(), wd, tower.enum_limit());
  if (!points) fail(Errc::size_limit, "q^dim(W) exceeds the enumeration limit");
  VectorOdometer<GaloisField> odo(K, wd);
  while (auto coeffs = odo.next()) {
    u64 first = 0;
    for (u64 c : *coeffs) {
      if (c) { first = c; break; }
    }
    if (first != 1) continue;
    Tower::Elem v(w.ambient_dim(), 0);
    for (unsigned i = 0; i < wd; ++i) {
      if ((*coeffs)[i] == 0) continue;
      for (unsigned j = 0; j < w.ambient_dim(); ++j)
        v[j] = K.add(v[j], K.mul((*coeffs)[i], w_rows[i][j]));
    }
    if (big.dim() > 0 && big.contains(v)) continue;
    pieces.push_back(Subspace<GaloisField>::span(K, w.ambient_dim(), {v}));
  }
  if (pieces.size() != dims.size())
    fail(Errc::internal_error, "piece construction produced the wrong count");
  return pieces;
}

}  // namespace primfield
