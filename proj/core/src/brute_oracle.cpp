#include "wordmap/brute_oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wordmap/parallel.hpp"

namespace wordmap {

namespace {

void partitions(std::size_t n, std::uint64_t max_part, std::vector<std::uint64_t>& cur,
                std::vector<CycleType>& out) {
  if (n == 0) {
    out.push_back(CycleType::from_lengths(cur));
    return;
  }
  for (std::uint64_t p = std::min<std::uint64_t>(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    f(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace

std::vector<CycleType> cycle_types_of(std::size_t n) {
  std::vector<CycleType> out;
  std::vector<std::uint64_t> cur;
  if (n == 0) return {CycleType{}};
  partitions(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

ImageReport word_image_sym(const Word& w, std::size_t n) {
  if (n == 0 || n > 8) throw std::invalid_argument("word_image_sym needs 1 <= n <= 8");
  ImageReport r;
  r.group = "S_" + std::to_string(n);
  auto reps = cycle_types_of(n);
  std::vector<std::set<CycleType>> found(reps.size());
  std::vector<std::uint64_t> evals(reps.size(), 0);
  Permutation id = Permutation::identity(n);
  // w(g^p, h^p) = w(g,h)^p, so g may range over class representatives.
  parallel_for(reps.size(), [&](std::size_t i) {
    Permutation g = permutation_of_type(reps[i]);
    for_each_permutation(n, [&](const Permutation& h) {
      found[i].insert(evaluate(w, g, h, id).cycle_type());
      ++evals[i];
    });
  });
  for (std::size_t i = 0; i < reps.size(); ++i) {
    r.cycle_types.insert(found[i].begin(), found[i].end());
    r.evaluations += evals[i];
  }
  for (const auto& t : r.cycle_types) r.labels.insert(t.str());
  return r;
}

Fraction exact_distance_sym(const ImageReport& image, const Permutation& sigma) {
  std::size_t n = sigma.size();
  if (n == 0 || n > 7) throw std::invalid_argument("exact_distance_sym needs 1 <= n <= 7");
  if (image.cycle_types.empty() || image.cycle_types.begin()->degree() != n)
    throw std::invalid_argument("image report is for a different degree");
  std::size_t best = n;
  for_each_permutation(n, [&](const Permutation& tau) {
    if (best == 0) return;
    std::size_t d = hamming_count(sigma, tau);
    if (d < best && image.cycle_types.count(tau.cycle_type())) best = d;
  });
  return Fraction(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n));
}

Fraction exact_distance_sym(const Word& w, const Permutation& sigma) {
  if (sigma.size() == 0 || sigma.size() > 7) throw std::invalid_argument("exact_distance_sym needs 1 <= n <= 7");
  return exact_distance_sym(word_image_sym(w, sigma.size()), sigma);
}

std::uint64_t MatrixGroup::order() const {
  std::uint64_t q = field.q();
  std::uint64_t qd = checked_pow(q, static_cast<int>(d));
  std::uint64_t o = 1, qi = 1;
  for (std::size_t i = 0; i < d; ++i) {
    o *= qd - qi;
    qi *= q;
  }
  return kind == Kind::SL ? o / (q - 1) : o;
}

std::string MatrixGroup::str() const {
  return std::string(kind == Kind::GL ? "GL_" : "SL_") + std::to_string(d) + "(" + std::to_string(field.q()) + ")";
}

bool MatrixGroup::contains(const MatrixFq& m) const {
  if (m.rows() != d || m.cols() != d || !(m.field() == field)) return false;
  FqElem det = m.det();
  return kind == Kind::GL ? !det.is_zero() : det.is_one();
}

std::vector<MatrixFq> enumerate_group(const MatrixGroup& g) {
  if (!g.field.valid() || g.d == 0) throw std::invalid_argument("invalid matrix group");
  if (g.order() > 1000000) throw std::invalid_argument("matrix group too large for enumeration");
  std::uint64_t q = g.field.q();
  std::size_t cells = g.d * g.d;
  std::uint64_t total = checked_pow(q, static_cast<int>(cells));
  if (total > 50000000) throw std::invalid_argument("matrix group too large for enumeration");
  std::vector<MatrixFq> out;
  out.reserve(g.order());
  std::vector<std::uint64_t> digits(cells, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    MatrixFq m(g.field, g.d, g.d);
    for (std::size_t c = 0; c < cells; ++c) m.at(c / g.d, c % g.d) = g.field.element(digits[c]);
    if (g.contains(m)) out.push_back(std::move(m));
    for (std::size_t c = cells; c-- > 0;) {
      if (++digits[c] < q) break;
      digits[c] = 0;
    }
  }
  return out;
}

namespace {

class LabelCache {
 public:
  std::string operator()(const MatrixFq& m) {
    std::vector<std::uint64_t> key;
    key.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) key.push_back(m.at(i, j).index());
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    std::string label = invariant_factor_label(rational_canonical_form(m));
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(std::move(key), label);
    return label;
  }

 private:
  std::mutex mu_;
  std::map<std::vector<std::uint64_t>, std::string> cache_;
};

}  // namespace

ImageReport word_image_matrix(const Word& w, const MatrixGroup& g, std::uint64_t budget, std::uint64_t seed) {
  auto elems = enumerate_group(g);
  ImageReport r;
  r.group = g.str();
  LabelCache label;
  MatrixFq id = MatrixFq::identity(g.field, g.d);
  auto n = static_cast<std::uint64_t>(elems.size());
  if (n * n <= 100000000ULL) {
    // one g per class (invariant factors over GL classify; SL is normal in GL)
    std::map<std::string, std::size_t> reps;
    for (std::size_t i = 0; i < elems.size(); ++i) reps.try_emplace(label(elems[i]), i);
    std::vector<std::size_t> rep_idx;
    for (const auto& [l, i] : reps) rep_idx.push_back(i);
    std::vector<std::set<std::string>> found(rep_idx.size());
    parallel_for(rep_idx.size(), [&](std::size_t t) {
      const MatrixFq& a = elems[rep_idx[t]];
      for (const auto& b : elems) found[t].insert(label(evaluate(w, a, b, id)));
    });
    for (const auto& f : found) r.labels.insert(f.begin(), f.end());
    r.exhaustive = true;
    r.evaluations = rep_idx.size() * n;
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < budget; ++s) {
      const MatrixFq& a = elems[uniform_below(rng, n)];
      const MatrixFq& b = elems[uniform_below(rng, n)];
      r.labels.insert(label(evaluate(w, a, b, id)));
    }
    r.exhaustive = false;
    r.seed = seed;
    r.evaluations = budget;
  }
  return r;
}

Fraction exact_distance_matrix(const ImageReport& image, const MatrixGroup& g, const MatrixFq& a) {
  if (!g.contains(a)) throw std::invalid_argument("target is not in the group");
  LabelCache label;
  std::size_t best = g.d;
  for (const auto& b : enumerate_group(g)) {
    std::size_t r = (a - b).rank();
    if (r < best && image.labels.count(label(b))) best = r;
    if (best == 0) break;
  }
  return Fraction(static_cast<std::int64_t>(best), static_cast<std::int64_t>(g.d));
}

}  // namespace wordmap
