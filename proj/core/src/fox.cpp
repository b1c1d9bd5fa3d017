#include "wordmap/fox.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wordmap {

GroupRingElem GroupRingElem::of(const Word& w, BigInt c) {
  GroupRingElem e;
  e.add(w, c);
  return e;
}

void GroupRingElem::add(const Word& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BigInt GroupRingElem::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? BigInt(0) : it->second;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
  GroupRingElem r = *this;
  return r += o;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const { return *this + (-o); }

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
  GroupRingElem r;
  for (const auto& [u, a] : t_)
    for (const auto& [v, b] : o.t_) r.add(u * v, a * b);
  return r;
}

GroupRingElem GroupRingElem::operator*(const BigInt& s) const {
  GroupRingElem r;
  if (s == 0) return r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, c * s);
  return r;
}

std::string GroupRingElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (a != 1) os << a << "*";
    os << (w.is_trivial() ? "1" : "(" + w.str() + ")");
  }
  return os.str();
}

GroupRingElem fox_derivative(const Word& w, Gen var) {
  GroupRingElem d;
  Word prefix;
  for (const auto& s : w.syllables()) {
    if (s.gen == var) {
      if (s.exp > 0) {
        for (std::int64_t j = 0; j < s.exp; ++j) d += GroupRingElem::of(prefix * Word::generator(var, j));
      } else {
        for (std::int64_t j = 1; j <= -s.exp; ++j) d += GroupRingElem::of(prefix * Word::generator(var, -j), -1);
      }
    }
    prefix = prefix * Word::generator(s.gen, s.exp);
  }
  return d;
}

LaurentPoly2 LaurentPoly2::monomial(std::int64_t i, std::int64_t j, BigInt c) {
  LaurentPoly2 p;
  p.add(i, j, c);
  return p;
}

void LaurentPoly2::add(std::int64_t i, std::int64_t j, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BigInt LaurentPoly2::coeff(std::int64_t i, std::int64_t j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? BigInt(0) : it->second;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, -c);
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [k, a] : t_)
    for (const auto& [l, b] : o.t_) r.add(k.first + l.first, k.second + l.second, a * b);
  return r;
}

LaurentPoly2 LaurentPoly2::star() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : t_) r.add(-k.first, -k.second, c);
  return r;
}

namespace {

std::string monomial_str(const char* var, std::int64_t e) {
  if (e == 0) return "";
  std::string s = var;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& mono) {
  if (!first) os << (c < 0 ? " - " : " + ");
  else if (c < 0) os << "-";
  BigInt a = c < 0 ? BigInt(-c) : c;
  if (mono.empty()) os << a;
  else if (a == 1) os << mono;
  else os << a << "*" << mono;
}

}  // namespace

std::string LaurentPoly2::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    std::string m = monomial_str("X", k.first);
    std::string my = monomial_str("Y", k.second);
    if (!m.empty() && !my.empty()) m += "*";
    append_term(os, first, c, m + my);
    first = false;
  }
  return os.str();
}

LaurentPoly1 LaurentPoly1::monomial(std::int64_t i, BigInt c) {
  LaurentPoly1 p;
  p.add(i, c);
  return p;
}

LaurentPoly1 LaurentPoly1::from_coeffs(std::int64_t low, const std::vector<std::int64_t>& c) {
  LaurentPoly1 p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add(low + static_cast<std::int64_t>(i), c[i]);
  return p;
}

void LaurentPoly1::add(std::int64_t i, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BigInt LaurentPoly1::coeff(std::int64_t i) const {
  auto it = t_.find(i);
  return it == t_.end() ? BigInt(0) : it->second;
}

std::int64_t LaurentPoly1::min_exp() const {
  if (t_.empty()) throw std::invalid_argument("zero Laurent polynomial");
  return t_.begin()->first;
}

std::int64_t LaurentPoly1::max_exp() const {
  if (t_.empty()) throw std::invalid_argument("zero Laurent polynomial");
  return t_.rbegin()->first;
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1& o) const {
  LaurentPoly1 r = *this;
  for (const auto& [k, c] : o.t_) r.add(k, c);
  return r;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1& o) const {
  LaurentPoly1 r = *this;
  for (const auto& [k, c] : o.t_) r.add(k, -c);
  return r;
}

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
  LaurentPoly1 r;
  for (const auto& [k, a] : t_)
    for (const auto& [l, b] : o.t_) r.add(k + l, a * b);
  return r;
}

LaurentPoly1 LaurentPoly1::star() const {
  LaurentPoly1 r;
  for (const auto& [k, c] : t_) r.add(-k, c);
  return r;
}

LaurentPoly1 LaurentPoly1::normalized() const {
  if (t_.empty()) return {};
  std::int64_t lo = min_exp();
  int sign = t_.rbegin()->second < 0 ? -1 : 1;
  LaurentPoly1 r;
  for (const auto& [k, c] : t_) r.add(k - lo, c * sign);
  return r;
}

std::string LaurentPoly1::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    append_term(os, first, c, monomial_str("X", k));
    first = false;
  }
  return os.str();
}

LaurentPoly2 abelianize(const GroupRingElem& e) {
  LaurentPoly2 r;
  for (const auto& [w, c] : e.terms()) {
    auto [i, j] = abelianization(w);
    r.add(i, j, c);
  }
  return r;
}

std::pair<LaurentPoly2, LaurentPoly2> abelianized_derivatives(const Word& w) {
  return {abelianize(fox_derivative(w, Gen::x)).star(), abelianize(fox_derivative(w, Gen::y)).star()};
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::not_in_F2prime: return "not_in_F2prime";
    case Membership::in_F2prime_not_F2second: return "in_F2prime_not_F2second";
    case Membership::in_F2second: return "in_F2second";
  }
  return "?";
}

Membership derived_membership(const Word& w) {
  if (w.is_trivial()) throw std::invalid_argument("derived_membership of the trivial word");
  auto ab = abelianization(w);
  if (ab.first != 0 || ab.second != 0) return Membership::not_in_F2prime;
  auto [dx, dy] = abelianized_derivatives(w);
  if (dx.is_zero() && dy.is_zero()) return Membership::in_F2second;
  return Membership::in_F2prime_not_F2second;
}

std::vector<Direction> spiral_directions(std::size_t count) {
  std::vector<Direction> out;
  for (std::int64_t r = 1; out.size() < count; ++r) {
    std::vector<Direction> ring;
    for (std::int64_t a = 0; a <= r; ++a)
      for (std::int64_t b = -r; b <= r; ++b) {
        if (std::max(a, std::abs(b)) != r) continue;
        if (a == 0 && b <= 0) continue;
        if (std::gcd(a, b) != 1) continue;
        ring.push_back({a, b});
      }
    std::sort(ring.begin(), ring.end(), [](const Direction& u, const Direction& v) {
      auto key = [](const Direction& d) {
        return std::make_tuple(d.beta < 0, d.alpha + std::abs(d.beta), -d.alpha);
      };
      return key(u) < key(v);
    });
    for (const auto& d : ring)
      if (out.size() < count) out.push_back(d);
  }
  return out;
}

Specialization specialize_pw(const Word& w) {
  if (w.is_trivial() || derived_membership(w) != Membership::in_F2prime_not_F2second)
    throw std::invalid_argument("specialize_pw needs w in F2' \\ F2''");
  auto [dx, dy] = abelianized_derivatives(w);
  Specialization s;
  s.component = dy.is_zero() ? Gen::x : Gen::y;
  // z is stored with the involution applied; p_w specializes the plain image.
  LaurentPoly2 z = (s.component == Gen::y ? dy : dx).star();
  for (const auto& d : spiral_directions(4096)) {
    LaurentPoly1 p;
    std::vector<std::int64_t> images;
    for (const auto& [k, c] : z.terms()) {
      std::int64_t e = d.alpha * k.first + d.beta * k.second;
      p.add(e, c);
      images.push_back(e);
    }
    if (p.is_zero()) continue;
    std::sort(images.begin(), images.end());
    s.injective = std::adjacent_find(images.begin(), images.end()) == images.end();
    s.p = p;
    s.dir = d;
    return s;
  }
  throw std::logic_error("no specializing direction found");
}

namespace {

using QPoly = std::vector<BigRational>;  // low to high

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigRational f = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

std::uint64_t count_Wn(const LaurentPoly1& p, std::uint64_t n) {
  if (p.is_zero()) throw std::invalid_argument("count_Wn of the zero polynomial");
  if (n == 0) throw std::invalid_argument("count_Wn needs n >= 1");
  std::int64_t lo = p.min_exp();
  QPoly a(static_cast<std::size_t>(p.max_exp() - lo + 1), BigRational(0));
  for (const auto& [k, c] : p.terms()) a[static_cast<std::size_t>(k - lo)] = BigRational(c);
  QPoly b(n + 1, BigRational(0));
  b[0] = -1;
  b[n] = 1;
  // X^n - 1 is squarefree, so deg gcd counts distinct roots.
  while (!a.empty()) {
    QPoly r = qmod(b, a);
    b = std::move(a);
    a = std::move(r);
  }
  return b.size() - 1;
}

std::string to_string(SUVerdict v) {
  switch (v) {
    case SUVerdict::surjective: return "surjective";
    case SUVerdict::surjective_trivially: return "surjective_trivially";
    case SUVerdict::unknown: return "unknown";
  }
  return "?";
}

SUCertificate su_certificate(const Word& w, std::uint64_t n) {
  if (w.is_trivial()) throw std::invalid_argument("su_certificate of the trivial word");
  SUCertificate c;
  c.word = w;
  c.n = n;
  c.membership = derived_membership(w);
  if (c.membership == Membership::not_in_F2prime) {
    c.verdict = SUVerdict::surjective_trivially;
  } else if (c.membership == Membership::in_F2prime_not_F2second) {
    c.pw = specialize_pw(w);
    c.Wn = count_Wn(c.pw->p, n);
    c.verdict = *c.Wn == 1 ? SUVerdict::surjective : SUVerdict::unknown;
  }
  return c;
}

}  // namespace wordmap
