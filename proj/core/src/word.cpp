#include "wordmap/word.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "wordmap/number_theory.hpp"

namespace wordmap {

void Word::push(Gen g, std::int64_t e) {
  if (e == 0) return;
  if (!syl_.empty() && syl_.back().gen == g) {
    syl_.back().exp += e;
    if (syl_.back().exp == 0) syl_.pop_back();
  } else {
    syl_.push_back({g, e});
  }
}

Word Word::from_syllables(const std::vector<Syllable>& s) {
  Word w;
  for (const auto& x : s) w.push(x.gen, x.exp);
  return w;
}

Word Word::generator(Gen g, std::int64_t exp) {
  Word w;
  w.push(g, exp);
  return w;
}

std::size_t Word::letter_length() const {
  std::size_t n = 0;
  for (const auto& s : syl_) n += static_cast<std::size_t>(std::llabs(s.exp));
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.push(it->gen, -it->exp);
  return w;
}

Word Word::power(std::int64_t k) const {
  if (syl_.size() == 1) return generator(syl_[0].gen, syl_[0].exp * k);
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

Word Word::swap_generators() const {
  Word w;
  for (const auto& s : syl_) w.push(other(s.gen), s.exp);
  return w;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  for (const auto& s : o.syl_) w.push(s.gen, s.exp);
  return w;
}

std::vector<std::pair<Gen, int>> Word::letters() const {
  std::vector<std::pair<Gen, int>> out;
  for (const auto& s : syl_) {
    int sign = s.exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) out.emplace_back(s.gen, sign);
  }
  return out;
}

std::string Word::str() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (i) os << ' ';
    os << (syl_[i].gen == Gen::x ? 'x' : 'y') << '^' << syl_[i].exp;
  }
  return os.str();
}

Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Word parse() {
    Word w = expr();
    skip();
    if (i_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return w;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  bool at_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == 'x' || c == 'y' || c == 'X' || c == 'Y' || c == '1' || c == '(' || c == '[';
  }

  Word expr() {
    Word w;
    while (true) {
      if (peek('*') || peek('.')) {
        ++i_;
        if (!at_atom()) throw ParseError("expected factor after operator", i_);
      }
      if (!at_atom()) break;
      w = w * term();
    }
    return w;
  }

  Word term() {
    Word a = atom();
    while (peek('^')) {
      ++i_;
      a = a.power(integer());
    }
    return a;
  }

  std::int64_t integer() {
    skip();
    char close = 0;
    if (peek('(')) close = ')';
    else if (peek('{')) close = '}';
    if (close) ++i_;
    skip();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
      neg = s_[i_] == '-';
      ++i_;
      skip();
    }
    std::size_t start = i_;
    std::int64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (v > (INT64_MAX - 9) / 10) throw ParseError("exponent too large", start);
      v = v * 10 + (s_[i_] - '0');
      ++i_;
    }
    if (i_ == start) throw ParseError("expected integer exponent", i_);
    if (close) expect(close);
    return neg ? -v : v;
  }

  Word atom() {
    skip();
    char c = s_[i_];
    switch (c) {
      case 'x': ++i_; return Word::x();
      case 'y': ++i_; return Word::y();
      case 'X': ++i_; return Word::x(-1);
      case 'Y': ++i_; return Word::y(-1);
      case '1': ++i_; return Word{};
      case '(': {
        ++i_;
        Word w = expr();
        expect(')');
        return w;
      }
      case '[': {
        ++i_;
        Word acc = expr();
        expect(',');
        acc = commutator(acc, expr());
        while (peek(',')) {
          ++i_;
          acc = commutator(acc, expr());
        }
        expect(']');
        return acc;
      }
      default:
        throw ParseError(std::string("unexpected '") + c + "'", i_);
    }
  }
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

CyclicReduction cyclic_reduction(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  std::vector<Syllable> prefix;
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    // x^a ... x^b  ->  x^a (... x^(b+a)) x^-a
    std::int64_t a = s[lo].exp;
    prefix.push_back(s[lo]);
    s[hi - 1].exp += a;
    ++lo;
    if (s[hi - 1].exp == 0) --hi;
  }
  std::vector<Syllable> mid(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi));
  // A cancelled tail can expose a new mergeable pair; iterate.
  Word core = Word::from_syllables(mid);
  Word conj = Word::from_syllables(prefix);
  if (core.syllables().size() >= 2 && core.syllables().front().gen == core.syllables().back().gen) {
    auto inner = cyclic_reduction(core);
    return {inner.core, conj * inner.conjugator};
  }
  return {core, conj};
}

Word cyclic_reduce(const Word& w) { return cyclic_reduction(w).core; }

Word SyllableForm::form_word() const {
  switch (kind) {
    case Kind::trivial: return Word{};
    case Kind::power: return Word::x(exponent);
    case Kind::alternating: {
      std::vector<Syllable> s;
      for (auto [a, b] : pairs) {
        s.push_back({Gen::x, a});
        s.push_back({Gen::y, b});
      }
      return Word::from_syllables(s);
    }
  }
  return Word{};
}

Word SyllableForm::realized() const {
  Word f = form_word();
  return swapped ? f.swap_generators() : f;
}

SyllableForm classify(const Word& w) {
  auto [core, conj] = cyclic_reduction(w);
  SyllableForm f;
  f.conjugator = conj;
  const auto& s = core.syllables();
  if (s.empty()) return f;
  if (s.size() == 1) {
    f.kind = SyllableForm::Kind::power;
    f.exponent = s[0].exp;
    f.swapped = s[0].gen == Gen::y;
    return f;
  }
  // Cyclically reduced with >= 2 syllables: even count, alternating generators.
  f.kind = SyllableForm::Kind::alternating;
  std::size_t start = s[0].gen == Gen::x ? 0 : 1;
  if (start == 1) f.conjugator = conj * Word::from_syllables({s[0]});
  for (std::size_t i = 0; i < s.size(); i += 2) {
    const auto& a = s[(start + i) % s.size()];
    const auto& b = s[(start + i + 1) % s.size()];
    f.pairs.emplace_back(a.exp, b.exp);
  }
  return f;
}

std::pair<std::int64_t, std::int64_t> abelianization(const Word& w) {
  std::int64_t ex = 0, ey = 0;
  for (const auto& s : w.syllables()) (s.gen == Gen::x ? ex : ey) += s.exp;
  return {ex, ey};
}

namespace {

// Noncommutative monomial in X, Y: length and bit pattern (bit i set = Y at position i).
struct Mono {
  int len;
  std::uint64_t bits;
  auto operator<=>(const Mono&) const = default;
};
using Series = std::map<Mono, BigInt>;

Series series_mul(const Series& a, const Series& b, int deg) {
  Series out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma.len + mb.len > deg) continue;
      Mono m{ma.len + mb.len, ma.bits | (mb.bits << ma.len)};
      BigInt& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

// (1 + Z)^e truncated at degree deg, Z = X or Y.
Series binomial_series(Gen g, std::int64_t e, int deg) {
  Series s;
  BigInt c = 1;
  for (int k = 0; k <= deg; ++k) {
    if (c == 0) break;
    Mono m{k, g == Gen::y ? ((k == 64 ? ~0ull : ((1ull << k) - 1))) : 0ull};
    s[m] = c;
    // c <- c * (e - k) / (k + 1)
    c = c * (BigInt(e) - k) / (k + 1);
  }
  return s;
}

}  // namespace

int lcs_degree(const Word& w) {
  if (w.is_trivial()) throw std::invalid_argument("lcs_degree: trivial word");
  std::size_t pairs = (w.syllables().size() + 1) / 2;
  int max_deg = static_cast<int>(2 * pairs + 1);
  if (max_deg > 62) throw std::invalid_argument("lcs_degree: word too long for the Magnus expansion");
  for (int deg = 2; deg <= max_deg; ++deg) {
    Series m{{Mono{0, 0}, BigInt(1)}};
    for (const auto& s : w.syllables()) m = series_mul(m, binomial_series(s.gen, s.exp, deg), deg);
    int lowest = -1;
    for (const auto& [mono, c] : m) {
      if (mono.len >= 1 && c != 0 && (lowest < 0 || mono.len < lowest)) lowest = mono.len;
    }
    if (lowest >= 1) return lowest - 1;
  }
  throw std::logic_error("lcs_degree: no nonzero Magnus term below the Fox bound");
}

}  // namespace wordmap
