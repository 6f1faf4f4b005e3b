#include "fieldcore.hpp"

#include <algorithm>

namespace primfield {

namespace {

constexpr u64 kTableCap = u64(1) << 16;
constexpr u64 kFieldOrderCap = u64(1) << 62;

void decode_digits(u64 code, u64 p, unsigned r, u64* out) {
  for (unsigned i = 0; i < r; ++i) {
    out[i] = code % p;
    code /= p;
  }
}

u64 encode_digits(const u64* c, u64 p, unsigned r) {
  u64 code = 0;
  for (unsigned i = r; i-- > 0;) code = code * p + c[i];
  return code;
}

u64 addmod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;  // a, b < p <= 2^62, no overflow
  return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

}  // namespace

struct GaloisField::Impl {
  u64 p = 0;
  unsigned r = 1;
  u64 q = 0;
  std::vector<u64> h;  // step modulus over GF(p), monic, r+1 coefficients
  std::vector<u64> exp_table;
  std::vector<u64> log_table;
  bool tables = false;

  u64 raw_add(u64 a, u64 b) const {
    if (r == 1) return addmod(a, b, p);
    if (p == 2) return a ^ b;  // base-2 digits are bits, addition is xor
    u64 ca[max_deg], cb[max_deg];
    decode_digits(a, p, r, ca);
    decode_digits(b, p, r, cb);
    for (unsigned i = 0; i < r; ++i) ca[i] = addmod(ca[i], cb[i], p);
    return encode_digits(ca, p, r);
  }

  u64 raw_sub(u64 a, u64 b) const {
    if (r == 1) return submod(a, b, p);
    if (p == 2) return a ^ b;
    u64 ca[max_deg], cb[max_deg];
    decode_digits(a, p, r, ca);
    decode_digits(b, p, r, cb);
    for (unsigned i = 0; i < r; ++i) ca[i] = submod(ca[i], cb[i], p);
    return encode_digits(ca, p, r);
  }

  u64 raw_neg(u64 a) const {
    if (r == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    u64 ca[max_deg];
    decode_digits(a, p, r, ca);
    for (unsigned i = 0; i < r; ++i) ca[i] = ca[i] == 0 ? 0 : p - ca[i];
    return encode_digits(ca, p, r);
  }

  u64 raw_mul(u64 a, u64 b) const {
    if (r == 1) return mulmod_u64(a, b, p);
    u64 ca[max_deg], cb[max_deg], t[2 * max_deg - 1] = {0};
    decode_digits(a, p, r, ca);
    decode_digits(b, p, r, cb);
    for (unsigned i = 0; i < r; ++i) {
      if (!ca[i]) continue;
      for (unsigned j = 0; j < r; ++j)
        t[i + j] = addmod(t[i + j], mulmod_u64(ca[i], cb[j], p), p);
    }
    for (int i = 2 * static_cast<int>(r) - 2; i >= static_cast<int>(r); --i) {
      const u64 c = t[i];
      if (!c) continue;
      t[i] = 0;
      for (unsigned j = 0; j < r; ++j) {
        if (h[j]) t[i - r + j] = submod(t[i - r + j], mulmod_u64(c, h[j], p), p);
      }
    }
    return encode_digits(t, p, r);
  }

  u64 raw_pow(u64 a, u64 e) const {
    u64 acc = 1;
    while (e) {
      if (e & 1) acc = raw_mul(acc, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  void build_tables() {
    if (q > kTableCap) return;
    const u64 ord = q - 1;
    const auto factors = distinct_prime_factors(ord);
    u64 gen = 1;
    for (u64 cand = 1; cand < q; ++cand) {
      bool ok = true;
      for (u64 f : factors) {
        if (raw_pow(cand, ord / f) == 1) { ok = false; break; }
      }
      if (ok) { gen = cand; break; }
    }
    exp_table.resize(ord);
    log_table.assign(q, 0);
    u64 cur = 1;
    for (u64 i = 0; i < ord; ++i) {
      exp_table[i] = cur;
      log_table[cur] = i;
      cur = raw_mul(cur, gen);
    }
    if (cur != 1) fail(Errc::internal_error, "generator order mismatch while building tables");
    tables = true;
  }

  static constexpr unsigned max_deg = Tower::max_step_degree;
};

GaloisField GaloisField::prime_field(u64 p) {
  if (!is_prime_u64(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (p > kFieldOrderCap) fail(Errc::size_limit, "characteristic exceeds 2^62");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->r = 1;
  impl->q = p;
  impl->h = {0, 1};
  impl->build_tables();
  return GaloisField(std::move(impl));
}

GaloisField GaloisField::extension_field(u64 p, std::vector<u64> modulus) {
  GaloisField base = prime_field(p);
  if (modulus.size() < 2)
    fail(Errc::invalid_polynomial, "step modulus must have degree at least 1");
  if (modulus.size() > Impl::max_deg + 1)
    fail(Errc::size_limit, "step modulus degree exceeds " + std::to_string(Impl::max_deg));
  for (u64 c : modulus) {
    if (c >= p) fail(Errc::invalid_polynomial, "step modulus coefficient out of range");
  }
  if (modulus.back() != 1) fail(Errc::invalid_polynomial, "step modulus must be monic");
  const unsigned r = static_cast<unsigned>(modulus.size()) - 1;
  const auto q = checked_pow_u64(p, r, kFieldOrderCap);
  if (!q) fail(Errc::size_limit, "field order p^r exceeds 2^62");
  if (!is_irreducible(base, modulus))
    fail(Errc::invalid_polynomial, "step modulus is reducible over GF(p)");
  if (r == 1) return base;
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->r = r;
  impl->q = *q;
  impl->h = std::move(modulus);
  impl->build_tables();
  return GaloisField(std::move(impl));
}

u64 GaloisField::characteristic() const { return impl_->p; }
unsigned GaloisField::degree() const { return impl_->r; }
u64 GaloisField::order() const { return impl_->q; }
const std::vector<u64>& GaloisField::modulus() const { return impl_->h; }

GaloisField::Elem GaloisField::add(Elem a, Elem b) const { return impl_->raw_add(a, b); }
GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return impl_->raw_sub(a, b); }
GaloisField::Elem GaloisField::neg(Elem a) const { return impl_->raw_neg(a); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  const Impl& im = *impl_;
  if (im.tables) {
    if (a == 0 || b == 0) return 0;
    const u64 ord = im.q - 1;
    u64 s = im.log_table[a] + im.log_table[b];
    if (s >= ord) s -= ord;
    return im.exp_table[s];
  }
  return im.raw_mul(a, b);
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) fail(Errc::bad_argument, "inverse of zero");
  const Impl& im = *impl_;
  if (im.tables) {
    const u64 ord = im.q - 1;
    const u64 l = im.log_table[a];
    return im.exp_table[l == 0 ? 0 : ord - l];
  }
  if (im.r == 1) return powmod_u64(a, im.p - 2, im.p);
  return im.raw_pow(a, im.q - 2);
}

GaloisField::Elem GaloisField::pow(Elem a, u64 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const Impl& im = *impl_;
  if (im.tables) {
    const u64 ord = im.q - 1;
    const u64 l = im.log_table[a];
    return im.exp_table[static_cast<u64>(u128(l) * (e % ord) % ord)];
  }
  return im.raw_pow(a, e);
}

GaloisField::Elem GaloisField::from_int(long long v) const {
  const long long p = static_cast<long long>(impl_->p);
  return static_cast<u64>(((v % p) + p) % p);
}

std::vector<u64> GaloisField::coords(Elem a) const {
  std::vector<u64> c(impl_->r);
  decode_digits(a, impl_->p, impl_->r, c.data());
  return c;
}

GaloisField::Elem GaloisField::from_coords(const std::vector<u64>& c) const {
  if (c.size() != impl_->r)
    fail(Errc::dimension_mismatch, "coordinate count does not match field degree");
  for (u64 d : c) {
    if (d >= impl_->p) fail(Errc::bad_argument, "coordinate out of range");
  }
  return encode_digits(c.data(), impl_->p, impl_->r);
}

bool GaloisField::same_field(const GaloisField& o) const {
  return impl_->p == o.impl_->p && impl_->h == o.impl_->h;
}

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

bool poly_is_monic(const GaloisField&, const Poly& f) {
  return !f.empty() && f.back() == 1;
}

Poly poly_add(const GaloisField& K, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0;
    const u64 y = i < b.size() ? b[i] : 0;
    out[i] = K.add(x, y);
  }
  return poly_trim(std::move(out));
}

Poly poly_sub(const GaloisField& K, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0;
    const u64 y = i < b.size() ? b[i] : 0;
    out[i] = K.sub(x, y);
  }
  return poly_trim(std::move(out));
}

Poly poly_mul(const GaloisField& K, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = K.add(out[i + j], K.mul(a[i], b[j]));
  }
  return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const GaloisField& K, Poly a, const Poly& b) {
  const Poly bt = poly_trim(b);
  if (bt.empty()) fail(Errc::bad_argument, "polynomial division by zero");
  a = poly_trim(std::move(a));
  const int db = poly_deg(bt);
  const int da = poly_deg(a);
  if (da < db) return {Poly{}, std::move(a)};
  const u64 leadinv = K.inv(bt.back());
  Poly quot(da - db + 1, 0);
  for (int i = da; i >= db; --i) {
    const u64 c = K.mul(a[i], leadinv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = K.sub(a[i - db + j], K.mul(c, bt[j]));
  }
  a.resize(db);
  return {poly_trim(std::move(quot)), poly_trim(std::move(a))};
}

Poly poly_rem(const GaloisField& K, Poly a, const Poly& b) {
  return poly_divmod(K, std::move(a), b).second;
}

Poly poly_gcd(const GaloisField& K, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_rem(K, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const u64 li = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, li);
  }
  return a;
}

Poly poly_powmod(const GaloisField& K, Poly base, u64 e, const Poly& m) {
  Poly acc{1};
  acc = poly_rem(K, std::move(acc), m);
  base = poly_rem(K, std::move(base), m);
  while (e) {
    if (e & 1) acc = poly_rem(K, poly_mul(K, acc, base), m);
    base = poly_rem(K, poly_mul(K, base, base), m);
    e >>= 1;
  }
  return acc;
}

bool is_irreducible(const GaloisField& K, const Poly& f) {
  const Poly ft = poly_trim(f);
  if (poly_deg(ft) < 1) fail(Errc::invalid_polynomial, "degree must be at least 1");
  if (ft.back() != 1) fail(Errc::invalid_polynomial, "polynomial must be monic");
  for (u64 c : ft) {
    if (c >= K.order()) fail(Errc::invalid_polynomial, "coefficient is not a field element");
  }
  const unsigned k = static_cast<unsigned>(poly_deg(ft));
  const u64 Q = K.order();
  const Poly x_mod = poly_rem(K, Poly{0, 1}, ft);
  Poly b = x_mod;
  for (unsigned i = 0; i < k; ++i) b = poly_powmod(K, std::move(b), Q, ft);
  if (b != x_mod) return false;
  for (u64 l : distinct_prime_factors(k)) {
    Poly c = x_mod;
    for (u64 i = 0; i < k / l; ++i) c = poly_powmod(K, std::move(c), Q, ft);
    const Poly g = poly_gcd(K, poly_sub(K, c, x_mod), ft);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

Poly random_monic_poly(const GaloisField& K, unsigned deg, CounterRng& rng) {
  if (deg == 0) fail(Errc::bad_argument, "random monic polynomial needs degree >= 1");
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) f[i] = rng.below(K.order());
  f[deg] = 1;
  return f;
}

Poly random_irreducible(const GaloisField& K, unsigned deg, CounterRng& rng) {
  // ~1/deg of monic polynomials are irreducible; this cap is unreachable in
  // practice and guards against a broken stream
  const u64 cap = 4096ull * deg;
  for (u64 attempt = 0; attempt < cap; ++attempt) {
    Poly f = random_monic_poly(K, deg, rng);
    if (is_irreducible(K, f)) return f;
  }
  fail(Errc::internal_error, "failed to sample an irreducible polynomial");
}

struct Tower::Impl {
  GaloisField fp;
  GaloisField fq;
  unsigned n;
  std::vector<u64> h;
  Poly g;
  u64 seed;
  u64 enum_limit;
  std::optional<u64> order_small;
};

Tower Tower::build(u64 p, unsigned r, unsigned n, u64 seed, u64 enum_limit) {
  if (r < 1 || n < 1) fail(Errc::bad_argument, "extension degrees must be at least 1");
  if (r > max_step_degree || n > max_step_degree)
    fail(Errc::size_limit, "extension degree exceeds " + std::to_string(max_step_degree));
  GaloisField fp = GaloisField::prime_field(p);
  if (!checked_pow_u64(p, r, kFieldOrderCap)) fail(Errc::size_limit, "q = p^r exceeds 2^62");
  std::vector<u64> h;
  if (r == 1) {
    h = {0, 1};
  } else {
    CounterRng rng_h(seed, 1);
    h = random_irreducible(fp, r, rng_h);
  }
  const GaloisField fq = r == 1 ? fp : GaloisField::extension_field(p, h);
  CounterRng rng_g(seed, 2);
  Poly g = random_irreducible(fq, n, rng_g);
  auto impl = std::make_shared<Impl>(Impl{fp, fq, n, std::move(h), std::move(g), seed,
                                          enum_limit,
                                          checked_pow_u64(fq.order(), n, (u64(1) << 63) - 1)});
  return Tower(std::move(impl));
}

Tower Tower::from_parts(u64 p, std::vector<u64> h, unsigned n, Poly g, u64 seed,
                        u64 enum_limit) {
  if (n < 1) fail(Errc::bad_argument, "extension degrees must be at least 1");
  if (n > max_step_degree)
    fail(Errc::size_limit, "extension degree exceeds " + std::to_string(max_step_degree));
  GaloisField fp = GaloisField::prime_field(p);
  if (h.size() < 2) fail(Errc::invalid_polynomial, "step modulus must have degree at least 1");
  const GaloisField fq = GaloisField::extension_field(p, h);
  g = poly_trim(std::move(g));
  if (static_cast<unsigned>(poly_deg(g)) != n || poly_deg(g) < 1)
    fail(Errc::invalid_polynomial, "top modulus degree does not match n");
  if (!is_irreducible(fq, g)) fail(Errc::invalid_polynomial, "top modulus is reducible");
  auto impl = std::make_shared<Impl>(Impl{fp, fq, n, std::move(h), std::move(g), seed,
                                          enum_limit,
                                          checked_pow_u64(fq.order(), n, (u64(1) << 63) - 1)});
  return Tower(std::move(impl));
}

const GaloisField& Tower::fp() const { return impl_->fp; }
const GaloisField& Tower::fq() const { return impl_->fq; }
u64 Tower::p() const { return impl_->fp.order(); }
unsigned Tower::r() const { return impl_->fq.degree(); }
unsigned Tower::n() const { return impl_->n; }
u64 Tower::q() const { return impl_->fq.order(); }
u64 Tower::seed() const { return impl_->seed; }
const std::vector<u64>& Tower::h() const { return impl_->h; }
const Poly& Tower::g() const { return impl_->g; }
u64 Tower::enum_limit() const { return impl_->enum_limit; }
std::optional<u64> Tower::order_u64() const { return impl_->order_small; }

bool Tower::exhaustive_feasible() const {
  return impl_->order_small && *impl_->order_small <= impl_->enum_limit;
}

Tower::Elem Tower::zero() const { return Elem(impl_->n, 0); }

Tower::Elem Tower::one() const {
  Elem e(impl_->n, 0);
  e[0] = 1;
  return e;
}

Tower::Elem Tower::from_coords(std::vector<u64> coords) const {
  if (coords.size() != impl_->n)
    fail(Errc::dimension_mismatch, "coordinate count does not match n");
  for (u64 c : coords) {
    if (c >= impl_->fq.order()) fail(Errc::bad_argument, "coordinate code out of range");
  }
  return coords;
}

bool Tower::is_zero(const Elem& a) const {
  for (u64 c : a)
    if (c) return false;
  return true;
}

Tower::Elem Tower::add(const Elem& a, const Elem& b) const {
  Elem out(impl_->n);
  for (unsigned i = 0; i < impl_->n; ++i) out[i] = impl_->fq.add(a[i], b[i]);
  return out;
}

Tower::Elem Tower::sub(const Elem& a, const Elem& b) const {
  Elem out(impl_->n);
  for (unsigned i = 0; i < impl_->n; ++i) out[i] = impl_->fq.sub(a[i], b[i]);
  return out;
}

Tower::Elem Tower::neg(const Elem& a) const {
  Elem out(impl_->n);
  for (unsigned i = 0; i < impl_->n; ++i) out[i] = impl_->fq.neg(a[i]);
  return out;
}

Tower::Elem Tower::mul(const Elem& a, const Elem& b) const {
  const GaloisField& K = impl_->fq;
  const unsigned n = impl_->n;
  std::vector<u64> t(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < n; ++j) t[i + j] = K.add(t[i + j], K.mul(a[i], b[j]));
  }
  const Poly& g = impl_->g;
  for (int i = 2 * static_cast<int>(n) - 2; i >= static_cast<int>(n); --i) {
    const u64 c = t[i];
    if (!c) continue;
    t[i] = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (g[j]) t[i - n + j] = K.sub(t[i - n + j], K.mul(c, g[j]));
    }
  }
  t.resize(n);
  return t;
}

Tower::Elem Tower::inv(const Elem& a) const {
  if (is_zero(a)) fail(Errc::bad_argument, "inverse of zero");
  const GaloisField& K = impl_->fq;
  // extended Euclid in GF(q)[x]: maintain s*a = r mod g
  Poly r0 = impl_->g, r1 = poly_trim(a);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(K, std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(K, s0, poly_mul(K, quot, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (poly_deg(r0) != 0) fail(Errc::internal_error, "top modulus is not irreducible");
  const u64 c = K.inv(r0[0]);
  Elem out(impl_->n, 0);
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = K.mul(s0[i], c);
  return out;
}

Tower::Elem Tower::pow(Elem a, u128 e) const {
  Elem acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Tower::Elem Tower::frobenius(const Elem& a) const { return pow(a, impl_->fq.order()); }

Tower::Elem Tower::frobenius_iter(Elem a, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) a = frobenius(a);
  return a;
}

unsigned Tower::element_degree(const Elem& a) const {
  const unsigned n = impl_->n;
  Elem b = a;
  for (unsigned d = 1; d <= n; ++d) {
    b = frobenius(b);
    if (n % d == 0 && b == a) return d;
  }
  fail(Errc::internal_error, "frobenius orbit did not close");
}

Subspace<GaloisField> subfield_basis(const Tower& tower, unsigned d) {
  const unsigned n = tower.n();
  if (d == 0 || n % d != 0)
    fail(Errc::not_a_divisor,
         "d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  const GaloisField& K = tower.fq();
  // kernel of frobenius^d - id, assembled column by column
  std::vector<Tower::Elem> images(n);
  for (unsigned j = 0; j < n; ++j) {
    Tower::Elem e(n, 0);
    e[j] = 1;
    images[j] = tower.frobenius_iter(std::move(e), d);
  }
  std::vector<FVec<GaloisField>> equations(n, FVec<GaloisField>(n, 0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      equations[i][j] = K.sub(images[j][i], i == j ? 1 : 0);
  auto s = nullspace(K, n, std::move(equations));
  if (s.dim() != d) fail(Errc::internal_error, "intermediate field has wrong dimension");
  return s;
}

GaloisField field_of_order(u64 q, u64 seed) {
  const auto pr = prime_power_decompose(q);
  if (!pr) fail(Errc::not_prime, "q = " + std::to_string(q) + " is not a prime power");
  if (pr->second == 1) return GaloisField::prime_field(pr->first);
  if (pr->second > Tower::max_step_degree)
    fail(Errc::size_limit, "field degree exceeds " + std::to_string(Tower::max_step_degree));
  const GaloisField fp = GaloisField::prime_field(pr->first);
  CounterRng rng(seed, 1);
  return GaloisField::extension_field(pr->first, random_irreducible(fp, pr->second, rng));
}

Tower::Elem multiplicative_generator(const Tower& tower) {
  const auto ord = tower.order_u64();
  if (!ord || *ord > (u64(1) << 40))
    fail(Errc::size_limit, "group order too large to factor");
  const u64 N = *ord - 1;
  const auto factors = distinct_prime_factors(N);
  VectorOdometer<GaloisField> odo(tower.fq(), tower.n());
  while (auto v = odo.next()) {
    if (tower.is_zero(*v)) continue;
    bool ok = true;
    for (u64 f : factors) {
      if (tower.eq(tower.pow(*v, N / f), tower.one())) { ok = false; break; }
    }
    if (ok) return *v;
  }
  fail(Errc::internal_error, "cyclic group has no generator");
}

}  // namespace primfield
