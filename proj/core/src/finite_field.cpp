#include "wordmap/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "wordmap/number_theory.hpp"

namespace wordmap {

namespace detail {

constexpr std::uint64_t kTableLimit = 1u << 18;

struct FieldImpl {
  std::uint64_t p = 0;
  int e = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;

  bool tables = false;
  std::vector<std::uint32_t> log_, exp_;

  mutable std::once_flag unit_once;
  mutable std::vector<std::pair<std::uint64_t, int>> unit_fact;
  mutable std::uint64_t primitive = 0;

  void decode(std::uint64_t a, std::uint64_t* d) const {
    for (int i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
  }
  std::uint64_t encode(const std::uint64_t* d) const {
    std::uint64_t r = 0;
    for (int i = e - 1; i >= 0; --i) r = r * p + d[i];
    return r;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (e == 1) return a >= p - b ? a - (p - b) : a + b;
    if (p == 2) return a ^ b;
    std::uint64_t r = 0, m = 1;
    for (int i = 0; i < e; ++i) {
      std::uint64_t s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * m;
      m *= p;
      a /= p;
      b /= p;
    }
    return r;
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (e == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint64_t r = 0, m = 1;
    for (int i = 0; i < e; ++i) {
      std::uint64_t d = a % p;
      r += (d == 0 ? 0 : p - d) * m;
      m *= p;
      a /= p;
    }
    return r;
  }

  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
    if (e == 1) return mul_mod(a, b, p);
    std::uint64_t da[64], db[64], prod[128] = {};
    decode(a, da);
    decode(b, db);
    for (int i = 0; i < e; ++i) {
      if (!da[i]) continue;
      for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (int k = 2 * e - 2; k >= e; --k) {
      std::uint64_t c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (int j = 0; j < e; ++j) {
        std::uint64_t m = modulus[j] == 0 ? 0 : p - modulus[j];
        prod[k - e + j] = (prod[k - e + j] + m * c) % p;
      }
    }
    return encode(prod);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    if (tables) return exp_[static_cast<std::uint64_t>(log_[a]) * (k % (q - 1)) % (q - 1)];
    std::uint64_t r = 1;
    while (k) {
      if (k & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      k >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("finite field: inverse of zero");
    if (tables) return exp_[(q - 1 - log_[a]) % (q - 1)];
    return pow(a, q - 2);
  }

  void ensure_units() const {
    std::call_once(unit_once, [this] {
      unit_fact = factorize(q - 1);
      if (q == 2) {
        primitive = 1;
        return;
      }
      for (std::uint64_t c = 2; c < q; ++c) {
        bool ok = true;
        for (auto [r, k] : unit_fact) {
          (void)k;
          if (pow(c, (q - 1) / r) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          primitive = c;
          return;
        }
      }
      throw std::logic_error("finite field: no primitive element found");
    });
  }

  void build_tables() {
    ensure_units();
    exp_.assign(2 * (q - 1), 0);
    log_.assign(q, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      exp_[i + q - 1] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, primitive);
    }
    tables = true;
  }
};

}  // namespace detail

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::pair<std::uint64_t, int>, std::unique_ptr<detail::FieldImpl>>& registry() {
  static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<detail::FieldImpl>> r;
  return r;
}

const detail::FieldImpl* lookup(std::uint64_t p, int e) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find({p, e});
  return it == registry().end() ? nullptr : it->second.get();
}

bool irreducible_over_prime(const Field& fp, const std::vector<std::uint64_t>& mod) {
  std::vector<FqElem> c;
  for (auto v : mod) c.push_back(fp.element(v));
  FqPoly f(fp, c);
  int e = f.degree();
  FqPoly x = FqPoly::X(fp);
  FqPoly h = x;
  for (int i = 1; i <= e / 2; ++i) {
    h = powmod(h, fp.p(), f);
    if (gcd(f, h - x).degree() > 0) return false;
  }
  return true;
}

}  // namespace

Field make_field(std::uint64_t p, int e) {
  if (e < 1) throw std::invalid_argument("make_field: degree must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  std::uint64_t q = checked_pow(p, e);
  if (auto f = lookup(p, e)) return Field(f);

  auto impl = std::make_unique<detail::FieldImpl>();
  impl->p = p;
  impl->e = e;
  impl->q = q;
  if (e == 1) {
    impl->modulus = {0, 1};
  } else {
    Field fp = make_field(p, 1);
    std::vector<std::uint64_t> mod(e + 1, 0);
    mod[e] = 1;
    bool found = false;
    for (std::uint64_t t = 1; t < q && !found; ++t) {
      if (t % p == 0) continue;
      std::uint64_t v = t;
      for (int i = 0; i < e; ++i) {
        mod[i] = v % p;
        v /= p;
      }
      found = irreducible_over_prime(fp, mod);
    }
    if (!found) throw std::logic_error("make_field: no irreducible polynomial found");
    impl->modulus = mod;
  }
  if (q <= detail::kTableLimit) impl->build_tables();

  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[{p, e}];
  if (!slot) slot = std::move(impl);
  return Field(slot.get());
}

Field make_field_of_order(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("make_field_of_order: " + std::to_string(q) + " is not a prime power");
  return make_field(pp->first, pp->second);
}

std::uint64_t Field::p() const { return impl_->p; }
int Field::e() const { return impl_->e; }
std::uint64_t Field::q() const { return impl_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return impl_->modulus; }
FqElem Field::zero() const { return FqElem(impl_, 0); }
FqElem Field::one() const { return FqElem(impl_, 1); }

FqElem Field::element(std::uint64_t index) const {
  if (index >= impl_->q) throw std::out_of_range("Field::element: index out of range");
  return FqElem(impl_, index);
}

FqElem Field::from_int(std::int64_t v) const {
  std::int64_t p = static_cast<std::int64_t>(impl_->p > static_cast<std::uint64_t>(INT64_MAX) ? 0 : impl_->p);
  if (p == 0) return FqElem(impl_, v >= 0 ? static_cast<std::uint64_t>(v) % impl_->p
                                          : impl_->neg(static_cast<std::uint64_t>(-(v + 1)) % impl_->p + 1));
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return FqElem(impl_, static_cast<std::uint64_t>(r));
}

FqElem Field::from_coeffs(const std::vector<std::uint64_t>& c) const {
  if (c.size() > static_cast<std::size_t>(impl_->e)) throw std::invalid_argument("from_coeffs: too many coefficients");
  std::uint64_t d[64] = {};
  for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[i] % impl_->p;
  return FqElem(impl_, impl_->encode(d));
}

FqElem Field::gen() const {
  if (impl_->e == 1) return zero();
  return FqElem(impl_, impl_->p);
}

FqElem Field::primitive_element() const {
  impl_->ensure_units();
  return FqElem(impl_, impl_->primitive);
}

const std::vector<std::pair<std::uint64_t, int>>& Field::unit_group_factorization() const {
  impl_->ensure_units();
  return impl_->unit_fact;
}

std::string Field::str() const { return "F_" + std::to_string(impl_->q); }

namespace {
inline void same_field(const detail::FieldImpl* a, const detail::FieldImpl* b) {
  if (a != b) throw std::invalid_argument("finite field: operands from different fields");
}
}  // namespace

std::vector<std::uint64_t> FqElem::coeffs() const {
  std::vector<std::uint64_t> d(f_->e);
  f_->decode(code_, d.data());
  return d;
}

FqElem FqElem::operator+(const FqElem& o) const {
  same_field(f_, o.f_);
  return FqElem(f_, f_->add(code_, o.code_));
}
FqElem FqElem::operator-(const FqElem& o) const {
  same_field(f_, o.f_);
  return FqElem(f_, f_->add(code_, f_->neg(o.code_)));
}
FqElem FqElem::operator-() const { return FqElem(f_, f_->neg(code_)); }
FqElem FqElem::operator*(const FqElem& o) const {
  same_field(f_, o.f_);
  return FqElem(f_, f_->mul(code_, o.code_));
}
FqElem FqElem::operator/(const FqElem& o) const {
  same_field(f_, o.f_);
  return FqElem(f_, f_->mul(code_, f_->inv(o.code_)));
}
FqElem FqElem::inverse() const { return FqElem(f_, f_->inv(code_)); }
FqElem FqElem::pow(std::uint64_t e) const { return FqElem(f_, f_->pow(code_, e)); }
FqElem FqElem::pow_signed(std::int64_t e) const {
  if (e >= 0) return pow(static_cast<std::uint64_t>(e));
  return inverse().pow(static_cast<std::uint64_t>(-(e + 1)) + 1);
}
FqElem FqElem::frobenius() const { return pow(f_->p); }

std::uint64_t FqElem::order() const {
  if (code_ == 0) throw std::domain_error("order of zero");
  f_->ensure_units();
  std::uint64_t o = f_->q - 1;
  for (auto [r, k] : f_->unit_fact) {
    for (int j = 0; j < k; ++j) {
      if (f_->pow(code_, o / r) == 1) o /= r;
      else break;
    }
  }
  return o;
}

std::string FqElem::str() const {
  if (f_->e == 1) return std::to_string(code_);
  auto c = coeffs();
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

FqElem element_of_order(const Field& f, std::uint64_t k) {
  if (k == 0 || (f.q() - 1) % k != 0)
    throw std::invalid_argument("element_of_order: " + std::to_string(k) + " does not divide " + std::to_string(f.q() - 1));
  return f.primitive_element().pow((f.q() - 1) / k);
}

// ---- polynomials ----

FqPoly::FqPoly(Field f, std::vector<FqElem> c) : f_(f), c_(std::move(c)) {
  for (const auto& x : c_) same_field(x.field().impl(), f_.impl());
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::constant(const FqElem& c) { return FqPoly(c.field(), {c}); }
FqPoly FqPoly::X(Field f) { return FqPoly(f, {f.zero(), f.one()}); }
FqPoly FqPoly::monomial(const FqElem& c, std::size_t deg) {
  std::vector<FqElem> v(deg + 1, c.field().zero());
  v[deg] = c;
  return FqPoly(c.field(), v);
}
FqPoly FqPoly::from_ints(Field f, const std::vector<std::int64_t>& c) {
  std::vector<FqElem> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return FqPoly(f, v);
}

FqElem FqPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
FqElem FqPoly::lead() const {
  if (c_.empty()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  same_field(f_.impl(), o.f_.impl());
  std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), f_.zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return FqPoly(f_, r);
}
FqPoly FqPoly::operator-() const {
  std::vector<FqElem> r;
  for (const auto& x : c_) r.push_back(-x);
  return FqPoly(f_, r);
}
FqPoly FqPoly::operator-(const FqPoly& o) const { return *this + (-o); }

FqPoly FqPoly::operator*(const FqPoly& o) const {
  same_field(f_.impl(), o.f_.impl());
  if (c_.empty() || o.c_.empty()) return FqPoly(f_);
  std::vector<FqElem> r(c_.size() + o.c_.size() - 1, f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return FqPoly(f_, r);
}

FqPoly FqPoly::operator*(const FqElem& s) const {
  std::vector<FqElem> r;
  for (const auto& x : c_) r.push_back(x * s);
  return FqPoly(f_, r);
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& o) const {
  same_field(f_.impl(), o.f_.impl());
  if (o.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < o.degree()) return {FqPoly(f_), *this};
  std::vector<FqElem> rem = c_;
  std::vector<FqElem> quo(c_.size() - o.c_.size() + 1, f_.zero());
  FqElem inv = o.lead().inverse();
  int dn = o.degree();
  for (int k = degree(); k >= dn; --k) {
    FqElem c = rem[k] * inv;
    if (c.is_zero()) continue;
    quo[k - dn] = c;
    for (int j = 0; j <= dn; ++j) rem[k - dn + j] -= c * o.c_[j];
  }
  return {FqPoly(f_, quo), FqPoly(f_, rem)};
}

FqPoly FqPoly::operator/(const FqPoly& o) const { return divmod(o).first; }
FqPoly FqPoly::operator%(const FqPoly& o) const { return divmod(o).second; }

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * lead().inverse();
}

FqElem FqPoly::eval(const FqElem& x) const {
  FqElem r = f_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

FqPoly FqPoly::compose_power(std::size_t c) const {
  if (c == 0) throw std::invalid_argument("compose_power: c must be positive");
  if (c_.empty()) return *this;
  std::vector<FqElem> r((c_.size() - 1) * c + 1, f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * c] = c_[i];
  return FqPoly(f_, r);
}

FqPoly FqPoly::derivative() const {
  std::vector<FqElem> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * f_.from_int(static_cast<std::int64_t>(i % f_.p())));
  return FqPoly(f_, r);
}

std::string FqPoly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[i].is_one();
    if (!unit || i == 0) os << c_[i].str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

FqPoly gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& mod) {
  FqPoly r = FqPoly::constant(mod.field().one()) % mod;
  FqPoly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

// ---- roots ----

namespace {

void split_roots(const FqPoly& g, std::vector<FqElem>& out) {
  int d = g.degree();
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  Field f = g.field();
  std::uint64_t q = f.q();
  FqPoly x = FqPoly::X(f);
  for (std::uint64_t idx = (f.p() == 2 ? 1 : 0); idx < q; ++idx) {
    FqElem delta = f.element(idx);
    FqPoly s(f);
    if (f.p() == 2) {
      // absolute trace of delta*X modulo g
      FqPoly t = (x * delta) % g;
      s = t;
      int bits = f.e();
      for (int i = 1; i < bits; ++i) {
        t = (t * t) % g;
        s = s + t;
      }
    } else {
      s = powmod(x + FqPoly::constant(delta), (q - 1) / 2, g) - FqPoly::constant(f.one());
    }
    FqPoly h = gcd(g, s);
    if (h.degree() > 0 && h.degree() < d) {
      split_roots(h, out);
      split_roots(g / h, out);
      return;
    }
  }
  throw std::logic_error("root splitting failed");
}

}  // namespace

std::vector<FqElem> roots(const FqPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots: zero polynomial");
  std::vector<FqElem> out;
  if (f.degree() < 1) return out;
  Field fld = f.field();
  std::uint64_t q = fld.q();
  if (q <= 4096) {
    for (std::uint64_t i = 0; i < q; ++i) {
      if (f.eval(fld.element(i)).is_zero()) out.push_back(fld.element(i));
    }
    return out;
  }
  FqPoly fm = f.monic();
  FqPoly x = FqPoly::X(fld);
  FqPoly g = gcd(fm, powmod(x, q, fm) - x);
  split_roots(g, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- embeddings ----

namespace {
std::mutex& embed_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::pair<const detail::FieldImpl*, const detail::FieldImpl*>, std::vector<FqElem>>& embed_cache() {
  static std::map<std::pair<const detail::FieldImpl*, const detail::FieldImpl*>, std::vector<FqElem>> c;
  return c;
}
}  // namespace

Embedding::Embedding(Field small, Field big) : small_(small), big_(big) {
  if (small.p() != big.p() || big.e() % small.e() != 0)
    throw std::invalid_argument("Embedding: " + small.str() + " is not a subfield of " + big.str());
  {
    std::lock_guard<std::mutex> lock(embed_mutex());
    auto it = embed_cache().find({small.impl(), big.impl()});
    if (it != embed_cache().end()) {
      basis_ = it->second;
      return;
    }
  }
  std::vector<FqElem> basis;
  if (small == big) {
    for (int i = 0; i < small.e(); ++i) basis.push_back(small.gen().pow(static_cast<std::uint64_t>(i)));
  } else if (small.e() == 1) {
    basis.push_back(big.one());
  } else {
    std::vector<FqElem> mc;
    for (auto c : small.modulus()) mc.push_back(big.from_int(static_cast<std::int64_t>(c)));
    auto rts = roots(FqPoly(big, mc));
    if (rts.empty()) throw std::logic_error("Embedding: modulus has no root in the big field");
    FqElem beta = rts.front();
    FqElem acc = big.one();
    for (int i = 0; i < small.e(); ++i) {
      basis.push_back(acc);
      acc = acc * beta;
    }
  }
  std::lock_guard<std::mutex> lock(embed_mutex());
  embed_cache().emplace(std::make_pair(small.impl(), big.impl()), basis);
  basis_ = std::move(basis);
}

FqElem Embedding::operator()(const FqElem& a) const {
  if (!(a.field() == small_)) throw std::invalid_argument("Embedding: element from wrong field");
  if (small_ == big_) return a;
  auto c = a.coeffs();
  FqElem r = big_.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) r += basis_[i] * big_.from_int(static_cast<std::int64_t>(c[i]));
  }
  return r;
}

FqPoly Embedding::operator()(const FqPoly& f) const {
  std::vector<FqElem> c;
  for (const auto& x : f.coeffs()) c.push_back((*this)(x));
  return FqPoly(big_, c);
}

Embedding embedding(const Field& small, const Field& big) { return Embedding(small, big); }

std::optional<ExtensionRoot> min_extension_root(const FqPoly& f, int l) {
  if (f.degree() < 1) throw std::invalid_argument("min_extension_root: constant polynomial");
  Field F = f.field();
  FqPoly fm = f.monic();
  FqPoly x = FqPoly::X(F);
  FqPoly h = x % fm;
  for (int m = 1; m <= l; ++m) {
    h = powmod(h, F.q(), fm);
    FqPoly g = gcd(fm, h - x);
    if (g.degree() < 1) continue;
    Field big = make_field(F.p(), F.e() * m);
    Embedding emb(F, big);
    auto rts = roots(emb(g));
    if (rts.empty()) throw std::logic_error("min_extension_root: gcd has no roots");
    return ExtensionRoot{m, big, rts.front()};
  }
  return std::nullopt;
}

}  // namespace wordmap
