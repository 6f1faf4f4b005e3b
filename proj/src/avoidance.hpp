#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "intmath.hpp"
#include "linspace.hpp"
#include "rng.hpp"

namespace primfield {

enum class ScanOrder {
  canonical,           // lexicographic vector order, lazy
  seeded_permutation,  // full index space shuffled by a seeded counter rng
};

struct ScanOptions {
  ScanOrder order = ScanOrder::canonical;
  u64 seed = 0;
  u64 limit = kDefaultEnumLimit;
};

template <class F>
struct AvoidStep {
  FVec<F> vector;
  u64 candidates_tried = 0;
};

template <class F>
void validate_family(const F& K, unsigned ambient, const std::vector<Subspace<F>>& family) {
  if (family.empty()) fail(Errc::empty_family, "the subspace family is empty");
  for (const auto& S : family) {
    if (!S.field().same_field(K))
      fail(Errc::field_mismatch, "family member lives over a different field");
    if (S.ambient_dim() != ambient)
      fail(Errc::dimension_mismatch, "family member has ambient dimension " +
                                         std::to_string(S.ambient_dim()) + ", expected " +
                                         std::to_string(ambient));
    if (S.is_full()) fail(Errc::bad_argument, "family member is not a proper subspace");
  }
}

// First vector outside every member of a family of proper subspaces.
//
// Over the rationals the scan walks the moment curve (1, t, ..., t^{n-1}) for
// t = 0, 1, ...: any n points on the curve are independent (Vandermonde), so
// a member of dimension < n absorbs at most n-1 curve points and some
// t <= m(n-1) must succeed. Over a finite field the scan is exhaustive in
// the configured order; NoAvoidingVector is raised only after every vector
// was seen, SizeLimit once the budget is spent with vectors left unseen.
template <class F>
AvoidStep<F> find_avoiding_vector(const F& K, unsigned ambient,
                                  const std::vector<Subspace<F>>& family,
                                  const ScanOptions& opts = {}) {
  validate_family(K, ambient, family);
  const auto outside_all = [&](const FVec<F>& v) {
    for (const auto& S : family) {
      if (S.contains(v)) return false;
    }
    return true;
  };

  if constexpr (!F::is_finite) {
    const u64 m = family.size();
    const u64 bound = m * (ambient - 1);  // ambient >= 1 since a proper subspace exists
    u64 tried = 0;
    for (u64 t = 0; t <= bound; ++t) {
      FVec<F> v(ambient);
      v[0] = K.one();
      const auto step = K.from_int(static_cast<long>(t));
      for (unsigned i = 1; i < ambient; ++i) v[i] = K.mul(v[i - 1], step);
      ++tried;
      if (outside_all(v)) return {std::move(v), tried};
    }
    fail(Errc::internal_error, "moment curve scan exhausted past its guaranteed bound");
  } else {
    if (opts.order == ScanOrder::canonical) {
      VectorOdometer<F> odo(K, ambient);
      u64 tried = 0;
      while (auto v = odo.next()) {
        if (tried >= opts.limit)
          fail(Errc::size_limit, "scan budget exhausted before a decision was reached");
        ++tried;
        if (outside_all(*v)) return {std::move(*v), tried};
      }
      fail(Errc::no_avoiding_vector, "the family covers the whole space");
    }
    const auto total = checked_pow_u64(K.order(), ambient, opts.limit);
    if (!total) fail(Errc::size_limit, "q^n exceeds the scan limit; permutation order needs the full index space");
    std::vector<u64> idx(*total);
    for (u64 i = 0; i < *total; ++i) idx[i] = i;
    CounterRng rng(opts.seed, 5);
    for (u64 i = *total; i-- > 1;) std::swap(idx[i], idx[rng.below(i + 1)]);
    const u64 q = K.order();
    u64 tried = 0;
    for (u64 rank : idx) {
      FVec<F> v(ambient);
      u64 rest = rank;
      for (unsigned i = ambient; i-- > 0;) {  // last coordinate varies fastest
        v[i] = K.nth(rest % q);
        rest /= q;
      }
      ++tried;
      if (outside_all(v)) return {std::move(v), tried};
    }
    fail(Errc::no_avoiding_vector, "the family covers the whole space");
  }
}

template <class F>
struct ComplementResult {
  Subspace<F> complement;
  unsigned family_max_dim = 0;
  std::vector<FVec<F>> steps;
  std::vector<u64> candidates_per_step;
};

// Greedy subspace of maximal dimension n - s meeting every family member
// trivially, s the largest member dimension. Each stage avoids the shifted
// family {S + T}; the incoming vector keeps every intersection zero, and
// dimension count shows n - s is also an upper bound for members of dim s.
template <class F>
ComplementResult<F> max_zero_intersection(const F& K, unsigned ambient,
                                          const std::vector<Subspace<F>>& family,
                                          const ScanOptions& opts = {}) {
  validate_family(K, ambient, family);
  unsigned s = 0;
  for (const auto& S : family) s = std::max(s, S.dim());
  if constexpr (F::is_finite) {
    // m proper subspaces can only cover the space when m >= q + 1
    if (family.size() > K.order())
      fail(Errc::no_avoiding_vector,
           "family size exceeds the field order; a greedy stage could run out of vectors");
  }
  ComplementResult<F> out{Subspace<F>(K, ambient), s, {}, {}};
  while (out.complement.dim() < ambient - s) {
    std::vector<Subspace<F>> shifted;
    shifted.reserve(family.size());
    for (const auto& S : family) shifted.push_back(sum(S, out.complement));
    auto step = find_avoiding_vector(K, ambient, shifted, opts);
    out.complement =
        sum(out.complement, Subspace<F>::span(K, ambient, {step.vector}));
    out.steps.push_back(std::move(step.vector));
    out.candidates_per_step.push_back(step.candidates_tried);
  }
  if (out.complement.dim() != ambient - s)
    fail(Errc::internal_error, "greedy complement has the wrong dimension");
  for (const auto& S : family) {
    if (intersect(S, out.complement).dim() != 0)
      fail(Errc::internal_error, "greedy complement meets a family member");
    if (S.dim() == s && sum(S, out.complement).dim() != ambient)
      fail(Errc::internal_error, "complement plus a maximal member does not fill the space");
  }
  return out;
}

}  // namespace primfield
