#pragma once

#include <string>
#include <vector>

#include "extension.hpp"
#include "fieldcore.hpp"
#include "linspace.hpp"

namespace primfield {

// Input for the graph-subspace partition of GF(q^n)*: a primitive W of
// dimension n - psi, a direct-sum decomposition of W into pieces, the
// intermediate field M1 of dimension psi, and one injective GF(q)-linear map
// per piece into M1 (rows are M1-coordinate images of the piece basis).
struct PartitionSpec {
  Subspace<GaloisField> w;
  std::vector<Subspace<GaloisField>> pieces;
  Subspace<GaloisField> m1;
  std::vector<std::vector<std::vector<u64>>> maps;  // maps[i] is t_i x psi over GF(q)
};

// Maps sending the b-th basis vector of a piece to the b-th basis vector of
// M1; valid because every t_i <= psi.
std::vector<std::vector<std::vector<u64>>> default_maps(const std::vector<unsigned>& piece_dims,
                                                        unsigned psi);

struct PartitionResult {
  std::vector<Subspace<GaloisField>> members;  // W, M1, then the graph subspaces
  bool exhaustive = false;
  bool ok = false;
  bool counting_identity = false;
  u64 vectors_checked = 0;
};

// Members: W itself, M1, and for every piece W_i and every nonzero alpha in
// M1 the graph {w + alpha * T_i(w)}, the product taken in GF(q^n). Every
// nonzero element of GF(q^n) lands in exactly one member.
PartitionResult build_partition(const Tower& tower, const ExtensionProfile& prof,
                                const PartitionSpec& spec, u64 limit = kDefaultEnumLimit);

// Exhaustive when q^n fits the limit (every nonzero vector in exactly one
// member), otherwise certificate mode: pairwise trivial meets plus the exact
// counting identity sum(q^dim - 1) = q^n - 1.
PartitionResult verify_partition(const Tower& tower,
                                 const std::vector<Subspace<GaloisField>>& members,
                                 u64 limit = kDefaultEnumLimit);

// Direct-sum decompositions of W this tool can build: {W} itself, all lines,
// or one piece of dimension t plus the lines outside it.
std::vector<Subspace<GaloisField>> make_pieces(const Tower& tower,
                                               const Subspace<GaloisField>& w,
                                               std::vector<unsigned> dims);

}  // namespace primfield
