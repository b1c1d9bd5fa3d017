#include "wordmap/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wordmap {

CycleType CycleType::from_lengths(const std::vector<std::uint64_t>& lengths) {
  CycleType t;
  for (auto l : lengths) {
    if (l == 0) throw std::invalid_argument("CycleType: zero cycle length");
    ++t.counts[l];
  }
  return t;
}

std::uint64_t CycleType::degree() const {
  std::uint64_t n = 0;
  for (auto [k, c] : counts) n += k * c;
  return n;
}

std::uint64_t CycleType::num_cycles() const {
  std::uint64_t n = 0;
  for (auto [k, c] : counts) n += c;
  return n;
}

std::string CycleType::str() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto [k, c] : counts) {
    os << (first ? "" : ", ") << k << '^' << c;
    first = false;
  }
  os << ')';
  return os.str();
}

Permutation::Permutation(std::size_t n) : img_(n) {
  for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<std::uint32_t>(i);
}

Permutation::Permutation(std::vector<std::uint32_t> image) : img_(std::move(image)) {
  std::vector<char> seen(img_.size(), 0);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("Permutation: image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] >= n || used[c[j]]) throw std::invalid_argument("Permutation::from_cycles: bad or repeated point");
      used[c[j]] = 1;
      img[c[j]] = c[(j + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::long_cycle(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.size() != size()) throw std::invalid_argument("Permutation: degree mismatch");
  Permutation r;
  r.img_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation r;
  r.img_.resize(size());
  for (const auto& c : cycles()) {
    std::int64_t len = static_cast<std::int64_t>(c.size());
    std::int64_t s = ((k % len) + len) % len;
    for (std::int64_t j = 0; j < len; ++j) r.img_[c[j]] = c[(j + s) % len];
  }
  return r;
}

Permutation Permutation::relabel(const Permutation& pi) const {
  if (pi.size() != size()) throw std::invalid_argument("Permutation: degree mismatch");
  Permutation r;
  r.img_.resize(size());
  for (std::size_t j = 0; j < size(); ++j) r.img_[pi.img_[j]] = pi.img_[img_[j]];
  return r;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> c;
    std::uint32_t j = static_cast<std::uint32_t>(i);
    while (!seen[j]) {
      seen[j] = 1;
      c.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  CycleType t;
  for (const auto& c : cycles()) ++t.counts[c.size()];
  return t;
}

std::size_t Permutation::num_cycles() const {
  std::size_t n = 0;
  std::vector<char> seen(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++n;
    for (std::uint32_t j = static_cast<std::uint32_t>(i); !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return n;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j];
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation parse_permutation(const std::string& text, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_permutation: expected '(' at " + std::to_string(i));
    ++i;
    std::vector<std::uint32_t> c;
    while (true) {
      skip();
      if (i >= text.size()) throw std::invalid_argument("parse_permutation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (i == start) throw std::invalid_argument("parse_permutation: expected point at " + std::to_string(i));
      c.push_back(static_cast<std::uint32_t>(v));
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    skip();
  }
  return Permutation::from_cycles(n, cycles);
}

Permutation direct_sum(const std::vector<Permutation>& blocks) {
  std::vector<std::uint32_t> img;
  std::uint32_t off = 0;
  for (const auto& b : blocks) {
    for (auto v : b.images()) img.push_back(v + off);
    off += static_cast<std::uint32_t>(b.size());
  }
  return Permutation(std::move(img));
}

std::size_t hamming_count(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: degree mismatch");
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += a[i] != b[i];
  return c;
}

Fraction hamming_distance(const Permutation& a, const Permutation& b) {
  std::size_t c = hamming_count(a, b);
  if (a.size() == 0) return Fraction(0);
  return Fraction(static_cast<std::int64_t>(c), static_cast<std::int64_t>(a.size()));
}

Permutation permutation_of_type(const CycleType& t) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t next = 0;
  for (auto it = t.counts.rbegin(); it != t.counts.rend(); ++it) {
    for (std::uint64_t c = 0; c < it->second; ++c) {
      std::vector<std::uint32_t> cyc;
      for (std::uint64_t j = 0; j < it->first; ++j) cyc.push_back(next++);
      cycles.push_back(std::move(cyc));
    }
  }
  return Permutation::from_cycles(next, cycles);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[uniform_below(rng, i)]);
  return Permutation(std::move(img));
}

}  // namespace wordmap
