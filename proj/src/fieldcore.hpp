#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intmath.hpp"
#include "linspace.hpp"
#include "rng.hpp"

namespace primfield {

// GF(p^r). An element with coordinates (c_0, ..., c_{r-1}) over GF(p) is
// stored as the integer code sum c_i * p^i; code order doubles as the
// canonical element order, 0 and 1 are the additive and multiplicative
// identities. Fields of order up to 2^16 carry discrete log tables.
class GaloisField {
 public:
  using Elem = u64;
  static constexpr bool is_finite = true;

  static GaloisField prime_field(u64 p);
  // modulus: r+1 coefficients over GF(p), low degree first, monic irreducible
  static GaloisField extension_field(u64 p, std::vector<u64> modulus);

  u64 characteristic() const;
  unsigned degree() const;
  u64 order() const;
  const std::vector<u64>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, u64 e) const;
  Elem from_int(long long v) const;
  Elem nth(u64 i) const { return i; }  // canonical i-th element, i < order()
  std::vector<u64> coords(Elem a) const;
  Elem from_coords(const std::vector<u64>& c) const;
  bool same_field(const GaloisField& o) const;
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  struct Impl;
  explicit GaloisField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Dense univariate polynomial over a GaloisField, low degree first, no
// trailing zero coefficients. Zero polynomial is the empty vector.
using Poly = std::vector<GaloisField::Elem>;

inline int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }
Poly poly_trim(Poly f);
bool poly_is_monic(const GaloisField& K, const Poly& f);
Poly poly_add(const GaloisField& K, const Poly& a, const Poly& b);
Poly poly_sub(const GaloisField& K, const Poly& a, const Poly& b);
Poly poly_mul(const GaloisField& K, const Poly& a, const Poly& b);
// divisor must be nonzero; returns (quotient, remainder)
std::pair<Poly, Poly> poly_divmod(const GaloisField& K, Poly a, const Poly& b);
Poly poly_rem(const GaloisField& K, Poly a, const Poly& b);
Poly poly_gcd(const GaloisField& K, Poly a, Poly b);  // monic unless both zero
Poly poly_powmod(const GaloisField& K, Poly base, u64 e, const Poly& m);

// Rabin: f of degree k is irreducible iff x^(q^k) = x mod f and
// gcd(x^(q^(k/l)) - x, f) = 1 for every prime l | k.
bool is_irreducible(const GaloisField& K, const Poly& f);

Poly random_monic_poly(const GaloisField& K, unsigned deg, CounterRng& rng);
Poly random_irreducible(const GaloisField& K, unsigned deg, CounterRng& rng);

// Two-step extension tower GF(p) < GF(q) = GF(p)[y]/(h) < GF(q^n) =
// GF(q)[x]/(g). Elements of the top field are coordinate vectors of length n
// over GF(q), so GF(q)-linear algebra acts on them directly.
class Tower {
 public:
  using Elem = std::vector<GaloisField::Elem>;
  static constexpr u64 default_enum_limit = kDefaultEnumLimit;
  static constexpr unsigned max_step_degree = 32;

  // h (if r > 1) and g are drawn from seeded streams 1 and 2 by rejection
  // until irreducible; r = 1 fixes h = y.
  static Tower build(u64 p, unsigned r, unsigned n, u64 seed,
                     u64 enum_limit = default_enum_limit);
  static Tower from_parts(u64 p, std::vector<u64> h, unsigned n, Poly g, u64 seed,
                          u64 enum_limit = default_enum_limit);

  const GaloisField& fp() const;
  const GaloisField& fq() const;
  u64 p() const;
  unsigned r() const;
  unsigned n() const;
  u64 q() const;
  u64 seed() const;
  const std::vector<u64>& h() const;
  const Poly& g() const;
  u64 enum_limit() const;
  std::optional<u64> order_u64() const;  // q^n when it fits below 2^63
  bool exhaustive_feasible() const;      // q^n <= enum_limit

  Elem zero() const;
  Elem one() const;
  Elem from_coords(std::vector<u64> coords) const;  // validates length and ranges
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, u128 e) const;

  Elem frobenius(const Elem& a) const;  // a -> a^q, the GF(q)-linear generator of Gal
  Elem frobenius_iter(Elem a, unsigned times) const;
  // least d | n with a^(q^d) = a, the degree of GF(q)(a) over GF(q)
  unsigned element_degree(const Elem& a) const;

 private:
  struct Impl;
  explicit Tower(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Fixed space of frobenius^d: the intermediate field GF(q^d) as a
// GF(q)-subspace of GF(q^n). Requires d | n; dimension is d.
Subspace<GaloisField> subfield_basis(const Tower& tower, unsigned d);

// GF(q) for a prime power q, the step modulus drawn from the seeded stream.
// NotPrime when q is not a prime power.
GaloisField field_of_order(u64 q, u64 seed = 0);

// First generator of the cyclic group GF(q^n)* in canonical element order.
// Needs the factorization of q^n - 1, so q^n is capped at 2^40.
Tower::Elem multiplicative_generator(const Tower& tower);

}  // namespace primfield
