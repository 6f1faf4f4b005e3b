#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "intmath.hpp"

namespace primfield {

// Scalars from Q, kept exact. mpq_class arithmetic results are canonical;
// anything built from raw numerator/denominator must be canonicalized before
// use, which parse_rational takes care of.
struct RationalField {
  using Elem = mpq_class;
  static constexpr bool is_finite = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) fail(Errc::bad_argument, "inverse of zero");
    return 1 / a;
  }
  Elem from_int(long v) const { return Elem(v); }
  bool same_field(const RationalField&) const { return true; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

// Accepts [+-]digits or [+-]digits/digits, nothing else.
mpq_class parse_rational(const std::string& token);

template <class F>
using FVec = std::vector<typename F::Elem>;

template <class F>
std::vector<unsigned> rref_in_place(const F& K, std::vector<FVec<F>>& rows) {
  std::vector<unsigned> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && K.is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const auto pivinv = K.inv(rows[rank][col]);
    for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = K.mul(rows[rank][j], pivinv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || K.is_zero(rows[i][col])) continue;
      const auto f = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = K.sub(rows[i][j], K.mul(f, rows[rank][j]));
    }
    pivots.push_back(static_cast<unsigned>(col));
    ++rank;
  }
  rows.resize(rank, FVec<F>{});  // rows past the rank are fully eliminated
  return pivots;
}

// Row space in reduced row echelon form; the unique canonical basis of a
// subspace, so equal spaces compare equal member-wise.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  Subspace(F field, unsigned ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace span(const F& field, unsigned ambient, std::vector<Vec> vectors) {
    for (const auto& v : vectors) {
      if (v.size() != ambient)
        fail(Errc::dimension_mismatch, "span: vector length " + std::to_string(v.size()) +
                                           " in ambient dimension " + std::to_string(ambient));
    }
    Subspace s(field, ambient);
    s.rows_ = std::move(vectors);
    s.pivots_ = rref_in_place(field, s.rows_);
    return s;
  }

  static Subspace full(const F& field, unsigned ambient) {
    std::vector<Vec> rows(ambient, Vec(ambient, field.zero()));
    for (unsigned i = 0; i < ambient; ++i) rows[i][i] = field.one();
    return span(field, ambient, std::move(rows));
  }

  // Caller promises `rows` is already in reduced row echelon form.
  static Subspace from_rref(F field, unsigned ambient, std::vector<Vec> rows,
                            std::vector<unsigned> pivots) {
    Subspace s(std::move(field), ambient);
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }

  unsigned ambient_dim() const { return ambient_; }
  unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<unsigned>& pivot_columns() const { return pivots_; }
  const F& field() const { return field_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return dim() == ambient_; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_)
      fail(Errc::dimension_mismatch, "contains: vector length does not match ambient dimension");
    Vec w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto f = w[pivots_[i]];
      if (field_.is_zero(f)) continue;
      for (unsigned j = pivots_[i]; j < ambient_; ++j)
        w[j] = field_.sub(w[j], field_.mul(f, rows_[i][j]));
    }
    for (const auto& c : w)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (unsigned j = 0; j < ambient_; ++j)
        if (!field_.eq(rows_[i][j], o.rows_[i][j])) return false;
    return true;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  F field_;
  unsigned ambient_;
  std::vector<Vec> rows_;
  std::vector<unsigned> pivots_;
};

template <class F>
void check_compatible(const Subspace<F>& a, const Subspace<F>& b, const char* what) {
  if (!a.field().same_field(b.field()))
    fail(Errc::field_mismatch, std::string(what) + ": operands live over different fields");
  if (a.ambient_dim() != b.ambient_dim())
    fail(Errc::dimension_mismatch, std::string(what) + ": ambient dimensions " +
                                       std::to_string(a.ambient_dim()) + " and " +
                                       std::to_string(b.ambient_dim()) + " differ");
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  check_compatible(a, b, "sum");
  std::vector<FVec<F>> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace<F>::span(a.field(), a.ambient_dim(), std::move(rows));
}

// Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
// intersection in their right half.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  check_compatible(a, b, "intersect");
  const F& K = a.field();
  const unsigned n = a.ambient_dim();
  std::vector<FVec<F>> rows;
  rows.reserve(a.dim() + b.dim());
  for (const auto& v : a.basis()) {
    FVec<F> row(2 * n, K.zero());
    for (unsigned j = 0; j < n; ++j) { row[j] = v[j]; row[n + j] = v[j]; }
    rows.push_back(std::move(row));
  }
  for (const auto& v : b.basis()) {
    FVec<F> row(2 * n, K.zero());
    for (unsigned j = 0; j < n; ++j) row[j] = v[j];
    rows.push_back(std::move(row));
  }
  rref_in_place(K, rows);
  std::vector<FVec<F>> inter;
  for (const auto& row : rows) {
    bool left_zero = true;
    for (unsigned j = 0; j < n; ++j)
      if (!K.is_zero(row[j])) { left_zero = false; break; }
    if (left_zero) inter.emplace_back(row.begin() + n, row.end());
  }
  return Subspace<F>::span(K, n, std::move(inter));
}

// Solution space of the homogeneous system with the given equation rows.
template <class F>
Subspace<F> nullspace(const F& K, unsigned ncols, std::vector<FVec<F>> equations) {
  for (const auto& row : equations) {
    if (row.size() != ncols)
      fail(Errc::dimension_mismatch, "nullspace: equation length does not match column count");
  }
  const auto pivots = rref_in_place(K, equations);
  std::vector<bool> is_pivot(ncols, false);
  for (unsigned p : pivots) is_pivot[p] = true;
  std::vector<FVec<F>> basis;
  for (unsigned fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    FVec<F> v(ncols, K.zero());
    v[fc] = K.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = K.neg(equations[i][fc]);
    basis.push_back(std::move(v));
  }
  return Subspace<F>::span(K, ncols, std::move(basis));
}

// Number of k-dimensional subspaces of F_q^n; SizeLimit past 2^63-1.
u64 gaussian_binomial(unsigned n, unsigned k, u64 q);

// Lexicographic walk over all vectors of F^n in code order, last coordinate
// fastest. Finite fields only.
template <class F>
class VectorOdometer {
 public:
  VectorOdometer(F field, unsigned n)
      : field_(std::move(field)), current_(n, 0), fresh_(true) {}

  // nullopt once every q^n vector has been produced, starting from zero.
  std::optional<std::vector<u64>> next() {
    static_assert(F::is_finite);
    if (fresh_) { fresh_ = false; return current_; }
    const u64 q = field_.order();
    for (std::size_t i = current_.size(); i-- > 0;) {
      if (current_[i] + 1 < q) {
        ++current_[i];
        for (std::size_t j = i + 1; j < current_.size(); ++j) current_[j] = 0;
        return current_;
      }
    }
    return std::nullopt;
  }

 private:
  F field_;
  std::vector<u64> current_;
  bool fresh_;
};

// Streams every k-dimensional subspace of F_q^n exactly once, ordered by
// pivot-column set, then by free entries (row-major, last cell fastest).
// Emitted bases are already reduced.
template <class F>
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(F field, unsigned n, unsigned k, u64 limit = kDefaultEnumLimit)
      : field_(std::move(field)), n_(n), k_(k) {
    static_assert(F::is_finite);
    if (k_ > n_) fail(Errc::bad_argument, "subspace dimension exceeds ambient dimension");
    const u64 q = field_.order();
    if (!checked_pow_u64(q, n_, limit))
      fail(Errc::size_limit, "q^n exceeds the enumeration limit");
    total_ = gaussian_binomial(n_, k_, q);
    if (total_ > limit) fail(Errc::size_limit, "subspace count exceeds the enumeration limit");
    pivots_.resize(k_);
    for (unsigned i = 0; i < k_; ++i) pivots_[i] = i;
    reset_cells();
  }

  u64 total() const { return total_; }

  std::optional<Subspace<F>> next() {
    if (done_) return std::nullopt;
    Subspace<F> out = materialize();
    advance();
    return out;
  }

 private:
  struct Cell { unsigned row, col; };

  void reset_cells() {
    cells_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (unsigned p : pivots_) is_pivot[p] = true;
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned c = pivots_[i] + 1; c < n_; ++c)
        if (!is_pivot[c]) cells_.push_back({i, c});
    values_.assign(cells_.size(), 0);
    if (k_ == 0 && emitted_zero_) done_ = true;
  }

  Subspace<F> materialize() {
    std::vector<FVec<F>> rows(k_, FVec<F>(n_, field_.zero()));
    for (unsigned i = 0; i < k_; ++i) rows[i][pivots_[i]] = field_.one();
    for (std::size_t c = 0; c < cells_.size(); ++c)
      rows[cells_[c].row][cells_[c].col] = field_.nth(values_[c]);
    if (k_ == 0) emitted_zero_ = true;
    return Subspace<F>::from_rref(field_, n_, std::move(rows), pivots_);
  }

  void advance() {
    const u64 q = field_.order();
    for (std::size_t i = values_.size(); i-- > 0;) {
      if (values_[i] + 1 < q) {
        ++values_[i];
        for (std::size_t j = i + 1; j < values_.size(); ++j) values_[j] = 0;
        return;
      }
    }
    // free entries exhausted: next pivot-column combination
    if (k_ == 0) { done_ = true; return; }
    int i = static_cast<int>(k_) - 1;
    while (i >= 0 && pivots_[i] == n_ - k_ + i) --i;
    if (i < 0) { done_ = true; return; }
    ++pivots_[i];
    for (unsigned j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    reset_cells();
  }

  F field_;
  unsigned n_, k_;
  u64 total_ = 0;
  std::vector<unsigned> pivots_;
  std::vector<Cell> cells_;
  std::vector<u64> values_;
  bool done_ = false;
  bool emitted_zero_ = false;
};

}  // namespace primfield
