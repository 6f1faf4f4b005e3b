#pragma once

#include <string>
#include <vector>

#include "fieldcore.hpp"
#include "linspace.hpp"

namespace primfield {

// Covering a space of dimension >= 2 by proper subspaces takes exactly q + 1
// of them. NoCoveringExists below dimension 2.
u64 linear_covering_number(const GaloisField& field, unsigned dim);

struct Covering {
  std::vector<Subspace<GaloisField>> members;
  bool verified = false;
  std::string verify_mode;  // "exhaustive" or "counting"
};

// The canonical witness: the q + 1 hyperplanes through the codimension-2
// core spanned by e_2, ..., e_{n-1}, one per direction in the (e_0, e_1)
// plane. Verified exhaustively when q^n fits the limit, otherwise by the
// exact counting identity (q+1)(q^{n-1} - q^{n-2}) + q^{n-2} = q^n.
Covering construct_covering(const GaloisField& field, unsigned n,
                            u64 limit = kDefaultEnumLimit);

// True iff every vector lies in some member and every member is proper.
// SizeLimit when q^n exceeds the limit.
bool verify_covering(const GaloisField& field, unsigned n,
                     const std::vector<Subspace<GaloisField>>& members,
                     u64 limit = kDefaultEnumLimit);

struct MinCoveringResult {
  unsigned k = 0;
  u64 families_checked = 0;
};

// Smallest k such that some k hyperplanes cover F_q^n, by exhausting
// hyperplane families of size 2, 3, ... Any member of a covering can be
// enlarged to a hyperplane and the family still covers, so restricting the
// search to hyperplanes preserves the minimum.
MinCoveringResult min_covering_exhaustive(const GaloisField& field, unsigned n,
                                          u64 limit = kDefaultEnumLimit);

}  // namespace primfield
