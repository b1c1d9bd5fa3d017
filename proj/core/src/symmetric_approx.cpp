#include "wordmap/symmetric_approx.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "wordmap/finite_field.hpp"
#include "wordmap/parallel.hpp"
#include "wordmap/sl2.hpp"

namespace wordmap {

std::uint64_t GreedyDecomposition::sum_blocks() const {
  std::uint64_t s = 0;
  for (std::size_t i = 1; i < coeffs.size(); ++i) s += coeffs[i];
  return s;
}

bool GreedyDecomposition::satisfies_invariants() const {
  if (coeffs.empty()) return n == 0;
  std::uint64_t total = coeffs[0];
  if (coeffs[0] > q) return false;
  std::uint64_t qi = 1;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    qi *= q;
    if (coeffs[i] > q - 1) return false;
    total += coeffs[i] * (qi + 1);
    // partial sums up to j = i - 1 are bounded by q^i
    std::uint64_t partial = coeffs[0];
    std::uint64_t qj = 1;
    for (std::size_t j = 1; j < i; ++j) {
      qj *= q;
      partial += coeffs[j] * (qj + 1);
    }
    if (partial > qi) return false;
  }
  return total == n;
}

std::string GreedyDecomposition::str() const {
  std::ostringstream os;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    os << "n" << i << "=" << coeffs[i] << (i ? " " : "");
  }
  return os.str();
}

GreedyDecomposition greedy_decomposition(std::uint64_t n, std::uint64_t q) {
  if (n < 1 || q < 2) throw std::invalid_argument("greedy_decomposition: need n >= 1 and q >= 2");
  GreedyDecomposition d;
  d.n = n;
  d.q = q;
  std::vector<std::uint64_t> powers{1};
  while (powers.back() <= (n - 1) / q && powers.back() * q + 1 <= n) powers.push_back(powers.back() * q);
  std::size_t s = powers.size() - 1;
  d.coeffs.assign(s + 1, 0);
  std::uint64_t rem = n;
  for (std::size_t i = s; i >= 1; --i) {
    d.coeffs[i] = rem / (powers[i] + 1);
    rem -= d.coeffs[i] * (powers[i] + 1);
  }
  d.coeffs[0] = rem;
  return d;
}

Fraction hamming_distance_checked(const Permutation& a, const Permutation& b) { return hamming_distance(a, b); }

void Witness::verify() const {
  Permutation v = evaluate(word, g, h, Permutation::identity(g.size()));
  if (!(v == value)) throw std::logic_error("Witness: stored value differs from w(g,h)");
  if (hamming_distance(target, value) != achieved) throw std::logic_error("Witness: achieved distance is not exact");
  if (achieved > bound) throw std::logic_error("Witness: achieved distance exceeds bound");
}

// ---- alignment ----

Permutation align_to_target(const Permutation& value, const Permutation& target) {
  std::size_t n = value.size();
  if (target.size() != n) throw std::invalid_argument("align_to_target: degree mismatch");
  auto cv = value.cycles();
  auto ct = target.cycles();
  std::map<std::size_t, std::vector<std::size_t>> byV, byT;
  for (std::size_t i = 0; i < cv.size(); ++i) byV[cv[i].size()].push_back(i);
  for (std::size_t i = 0; i < ct.size(); ++i) byT[ct[i].size()].push_back(i);

  std::vector<std::uint32_t> pi(n, 0);
  std::vector<std::size_t> leftV, leftT;
  for (auto& [len, vs] : byV) {
    auto& ts = byT[len];
    std::size_t m = std::min(vs.size(), ts.size());
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < len; ++r) pi[cv[vs[j]][r]] = ct[ts[j]][r];
    }
    leftV.insert(leftV.end(), vs.begin() + static_cast<std::ptrdiff_t>(m), vs.end());
  }
  for (auto& [len, ts] : byT) {
    auto itV = byV.find(len);
    std::size_t used = itV == byV.end() ? 0 : std::min(itV->second.size(), ts.size());
    leftT.insert(leftT.end(), ts.begin() + static_cast<std::ptrdiff_t>(used), ts.end());
  }
  if (leftV.empty()) return Permutation(std::move(pi));

  // Linear layout of the leftovers; a few orderings, keep the cheapest.
  auto layout = [&](bool descV, bool descT, std::vector<std::uint32_t>& out) {
    auto lv = leftV, lt = leftT;
    auto by_len_v = [&](std::size_t a, std::size_t b) {
      return descV ? cv[a].size() > cv[b].size() : cv[a].size() < cv[b].size();
    };
    auto by_len_t = [&](std::size_t a, std::size_t b) {
      return descT ? ct[a].size() > ct[b].size() : ct[a].size() < ct[b].size();
    };
    std::stable_sort(lv.begin(), lv.end(), by_len_v);
    std::stable_sort(lt.begin(), lt.end(), by_len_t);
    std::vector<std::uint32_t> pv, pt;
    for (auto i : lv) pv.insert(pv.end(), cv[i].begin(), cv[i].end());
    for (auto i : lt) pt.insert(pt.end(), ct[i].begin(), ct[i].end());
    for (std::size_t i = 0; i < pv.size(); ++i) out[pv[i]] = pt[i];
    std::size_t cost = 0;
    for (std::size_t i = 0; i < pv.size(); ++i) cost += out[value[pv[i]]] != target[pt[i]];
    return cost;
  };
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> best_pi;
  for (int mode = 0; mode < 4; ++mode) {
    std::vector<std::uint32_t> cand = pi;
    std::size_t c = layout(mode & 1, mode & 2, cand);
    if (c < best) {
      best = c;
      best_pi = std::move(cand);
    }
  }
  return Permutation(std::move(best_pi));
}

namespace {

struct BlockBuild {
  Permutation g, h;  // in form coordinates, aligned to the canonical target
  BlockTrace trace;
};

struct Plan {
  std::string path;
  std::uint64_t p = 0;
  int m = 0;
  std::uint64_t q = 0;
  GreedyDecomposition dec;
  Fraction bound{1};
};

bool divides_exponent(std::uint64_t p, const SyllableForm& form) {
  std::int64_t pp = static_cast<std::int64_t>(p);
  for (auto [a, b] : form.pairs)
    if (a % pp == 0 || b % pp == 0) return true;
  return false;
}

constexpr int kPlanCandidates = 6;

std::vector<Plan> plan_small_k(const Word& F, const SyllableForm& form, std::uint64_t k, std::uint64_t nk) {
  std::vector<Plan> out;
  std::uint64_t step = k % 2 == 0 ? 2 * k : k;
  for (std::uint64_t p = step + 1; p + 1 <= nk && static_cast<int>(out.size()) < kPlanCandidates; p += step) {
    if (!is_prime(p) || divides_exponent(p, form)) continue;
    Plan pl;
    pl.path = "small-k";
    pl.p = p;
    pl.m = isotypic_extension_degree(F, k, make_field(p, 1));
    try {
      pl.q = checked_pow(p, pl.m);
    } catch (const std::overflow_error&) {
      continue;
    }
    if (pl.q + 1 > nk) continue;
    pl.dec = greedy_decomposition(nk, pl.q);
    pl.bound = Fraction(static_cast<std::int64_t>(pl.dec.n0() + 2 * pl.dec.sum_blocks()), static_cast<std::int64_t>(nk));
    out.push_back(pl);
  }
  return out;
}

std::vector<Plan> plan_large_k(const SyllableForm& form, std::uint64_t k, std::uint64_t nk) {
  std::vector<Plan> out;
  std::uint64_t l = form.l();
  for (std::uint64_t p = next_prime(4 * l + 1); p + 1 <= nk && static_cast<int>(out.size()) < kPlanCandidates;
       p = next_prime(p + 1)) {
    if (divides_exponent(p, form)) continue;
    Plan pl;
    pl.path = "large-k";
    pl.p = p;
    pl.m = 1;
    pl.q = p;
    pl.dec = greedy_decomposition(nk, p);
    std::uint64_t cyc = nk / k + pl.dec.n0();
    std::uint64_t qi = 1;
    for (std::size_t i = 1; i < pl.dec.coeffs.size(); ++i) {
      qi *= p;
      cyc += pl.dec.coeffs[i] * std::max<std::uint64_t>(1, near_cycle_defect_cap(qi, l));
    }
    pl.bound = Fraction(static_cast<std::int64_t>(std::min(cyc, nk)), static_cast<std::int64_t>(nk));
    out.push_back(pl);
  }
  return out;
}

BlockBuild realize_plan(const Word& F, std::uint64_t k, std::uint64_t nk, const Plan& pl) {
  std::vector<Permutation> gs, hs, vs;
  Field base = make_field(pl.p, 1);
  for (std::size_t i = pl.dec.coeffs.size(); i-- > 1;) {
    for (std::uint64_t c = 0; c < pl.dec.coeffs[i]; ++c) {
      if (pl.path == "small-k") {
        IsotypicValue iv = isotypic_word_value(F, k, base, static_cast<int>(i));
        gs.push_back(iv.pg);
        hs.push_back(iv.ph);
        vs.push_back(iv.sigma);
      } else {
        NearCycleValue nv = near_cycle_word_value(F, make_field(pl.p, static_cast<int>(i)));
        gs.push_back(nv.pg);
        hs.push_back(nv.ph);
        vs.push_back(nv.sigma);
      }
    }
  }
  if (pl.dec.n0()) {
    Permutation id(pl.dec.n0());
    gs.push_back(id);
    hs.push_back(id);
    vs.push_back(id);
  }
  Permutation g = direct_sum(gs), h = direct_sum(hs), v = direct_sum(vs);
  CycleType tt;
  tt.counts[k] = nk / k;
  Permutation target = permutation_of_type(tt);
  Permutation pi = align_to_target(v, target);
  BlockBuild b;
  b.g = g.relabel(pi);
  b.h = h.relabel(pi);
  b.trace.k = k;
  b.trace.points = nk;
  b.trace.path = pl.path;
  b.trace.p = pl.p;
  b.trace.m = pl.m;
  b.trace.q = pl.q;
  b.trace.decomposition = pl.dec.coeffs;
  b.trace.bound = pl.bound;
  b.trace.mismatches = hamming_count(v.relabel(pi), target);
  return b;
}

BlockBuild identity_block(std::uint64_t k, std::uint64_t nk) {
  BlockBuild b;
  b.g = b.h = Permutation(nk);
  b.trace.k = k;
  b.trace.points = nk;
  b.trace.path = k == 1 ? "exact" : "identity";
  b.trace.bound = Fraction(k == 1 ? 0 : 1);
  b.trace.mismatches = k == 1 ? 0 : nk;
  return b;
}

BlockBuild build_isotypic_block(const Word& F, const SyllableForm& form, std::uint64_t k, std::uint64_t nk) {
  if (k == 1) return identity_block(k, nk);
  std::vector<Plan> plans = plan_small_k(F, form, k, nk);
  auto large = plan_large_k(form, k, nk);
  plans.insert(plans.end(), large.begin(), large.end());
  std::stable_sort(plans.begin(), plans.end(), [](const Plan& a, const Plan& b) { return a.bound < b.bound; });
  for (const auto& pl : plans) {
    if (pl.bound >= Fraction(1)) break;
    try {
      BlockBuild b = realize_plan(F, k, nk, pl);
      if (Fraction(static_cast<std::int64_t>(b.trace.mismatches), static_cast<std::int64_t>(nk)) > pl.bound)
        throw std::logic_error("isotypic block exceeded its a-priori bound");
      return b;
    } catch (const std::invalid_argument&) {
      continue;  // field or divisibility failure: fall back to the next plan
    }
  }
  return identity_block(k, nk);
}

// Moves a form-coordinate pair (g,h) to the classified word's coordinates.
void realize_form(const SyllableForm& form, Permutation& g, Permutation& h) {
  if (form.swapped) std::swap(g, h);
  if (!form.conjugator.is_trivial()) {
    Permutation rho = evaluate(form.conjugator, g, h, Permutation::identity(g.size()));
    g = g.relabel(rho);
    h = h.relabel(rho);
  }
}

Witness finish(const Word& w, Permutation g, Permutation h, const Permutation& sigma, Fraction bound,
               std::vector<BlockTrace> trace) {
  Witness wt;
  wt.word = w;
  wt.g = std::move(g);
  wt.h = std::move(h);
  wt.value = evaluate(w, wt.g, wt.h, Permutation::identity(sigma.size()));
  wt.target = sigma;
  wt.achieved = hamming_distance(sigma, wt.value);
  wt.bound = std::min(bound, Fraction(1));
  wt.trace = std::move(trace);
  std::uint64_t blocks = 0;
  for (const auto& t : wt.trace) blocks += t.mismatches;
  if (sigma.size() && wt.achieved != Fraction(static_cast<std::int64_t>(blocks), static_cast<std::int64_t>(sigma.size())))
    throw std::logic_error("Witness: global distance differs from the sum of block distances");
  wt.verify();
  return wt;
}

// ---- power words ----

struct PowerBuild {
  Permutation tau;
  std::uint64_t bound_count = 0;
  std::vector<BlockTrace> trace;
};

std::uint64_t coprime_part_split(std::uint64_t a, std::uint64_t k) {
  // largest divisor of a whose primes all divide k
  std::uint64_t d = 1, x = a;
  while (true) {
    std::uint64_t g = std::gcd(x, k);
    if (g == 1) break;
    while (x % g == 0) {
      x /= g;
      d *= g;
    }
  }
  return d;
}

PowerBuild build_power(std::uint64_t A, const Permutation& sigma) {
  std::size_t n = sigma.size();
  std::vector<std::uint32_t> tau(n);
  for (std::size_t i = 0; i < n; ++i) tau[i] = static_cast<std::uint32_t>(i);
  std::map<std::uint64_t, std::vector<std::vector<std::uint32_t>>> byk;
  for (auto& c : sigma.cycles()) byk[c.size()].push_back(std::move(c));

  PowerBuild pb;
  // Leftover line: points in target-cycle order, with class boundaries.
  std::vector<std::uint32_t> line;
  std::vector<std::pair<std::uint64_t, std::size_t>> class_ranges;  // (k, start)
  for (auto& [k, cycles] : byk) {
    std::uint64_t d0 = coprime_part_split(A, k);
    std::uint64_t ap = A / d0;
    std::uint64_t L = k * d0;
    std::uint64_t u = L == 1 ? 0 : static_cast<std::uint64_t>(mod_inverse(static_cast<std::int64_t>(ap % L), static_cast<std::int64_t>(L)));
    std::size_t groups = cycles.size() / d0;
    for (std::size_t gi = 0; gi < groups; ++gi) {
      // Interleave d0 target cycles into one L-cycle tau0 with tau0^d0 = target.
      std::vector<std::uint32_t> t(L);
      for (std::uint64_t j = 0; j < d0; ++j)
        for (std::uint64_t r = 0; r < k; ++r) t[j + d0 * r] = cycles[gi * d0 + j][r];
      for (std::uint64_t i = 0; i < L; ++i) tau[t[i]] = t[(i + u) % L];
    }
    std::size_t start = line.size();
    for (std::size_t c = groups * d0; c < cycles.size(); ++c) line.insert(line.end(), cycles[c].begin(), cycles[c].end());
    BlockTrace bt;
    bt.k = k;
    bt.points = k * cycles.size();
    bt.path = "power";
    bt.m = static_cast<int>(d0);
    pb.trace.push_back(bt);
    class_ranges.emplace_back(k, start);
  }

  std::size_t Lline = line.size();
  if (Lline) {
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t i = 0; i < Lline; ++i) pos[line[i]] = i;
    std::vector<std::size_t> tn(Lline);
    for (std::size_t i = 0; i < Lline; ++i) tn[i] = pos[sigma[line[i]]];
    std::vector<std::int64_t> prefix(Lline + 1, 0);
    for (std::size_t i = 0; i < Lline; ++i) prefix[i + 1] = prefix[i] + (tn[i] != i + 1 ? 1 : 0);
    auto seg_cost = [&](std::size_t s, std::size_t e) {
      return prefix[e] - prefix[s] + (tn[e] != s ? 1 : 0);
    };
    auto coprime = [&](std::uint64_t len) { return std::gcd(len, A) == 1; };

    // Explicit layout per class: one long coprime segment plus fixed points.
    std::vector<std::size_t> class_end;
    for (std::size_t c = 0; c < class_ranges.size(); ++c)
      class_end.push_back(c + 1 < class_ranges.size() ? class_ranges[c + 1].second : Lline);
    for (std::size_t c = 0; c < class_ranges.size(); ++c) {
      std::size_t s = class_ranges[c].second, e = class_end[c];
      if (s == e) continue;
      std::int64_t len = static_cast<std::int64_t>(e - s);
      while (len > 1 && !coprime(static_cast<std::uint64_t>(len))) --len;
      std::int64_t cost = seg_cost(s, s + static_cast<std::size_t>(len) - 1);
      for (std::size_t x = s + static_cast<std::size_t>(len); x < e; ++x) cost += seg_cost(x, x);
      std::uint64_t simple = std::min<std::uint64_t>(static_cast<std::uint64_t>(cost), e - s);
      pb.bound_count += simple;
      for (auto& bt : pb.trace)
        if (bt.k == class_ranges[c].first) bt.bound = Fraction(static_cast<std::int64_t>(simple), static_cast<std::int64_t>(bt.points));
    }

    // Optimal segmentation of the pooled line into coprime-length cycles.
    const std::int64_t INF = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> dp(Lline + 1, INF);
    std::vector<std::size_t> from(Lline + 1, 0);
    std::vector<std::int64_t> best_val(A, INF);
    std::vector<std::size_t> best_s(A, 0);
    dp[0] = 0;
    best_val[0] = 0;
    best_s[0] = 0;
    for (std::size_t e = 0; e < Lline; ++e) {
      std::int64_t cand = INF;
      std::size_t cs = 0;
      for (std::uint64_t r = 0; r < A; ++r) {
        if (best_val[r] >= INF) continue;
        std::uint64_t len_mod = ((e + 1) % A + A - r) % A;
        if (std::gcd(len_mod, A) != 1 && !(A == 1)) continue;
        if (best_val[r] + 1 < cand) {
          cand = best_val[r] + 1;
          cs = best_s[r];
        }
      }
      std::size_t sstar = tn[e];
      if (sstar <= e && dp[sstar] < INF && coprime(e - sstar + 1)) {
        std::int64_t v = dp[sstar] - prefix[sstar];
        if (v < cand) {
          cand = v;
          cs = sstar;
        }
      }
      dp[e + 1] = prefix[e] + cand;
      from[e + 1] = cs;
      std::uint64_t r = (e + 1) % A;
      std::int64_t key = dp[e + 1] - prefix[e + 1];
      if (key < best_val[r]) {
        best_val[r] = key;
        best_s[r] = e + 1;
      }
    }
    // Note: best_val tracks the argmin start, but cost(s,e) uses the exact tn test,
    // so recompute the realized cost below rather than trusting dp.
    std::size_t e = Lline;
    while (e > 0) {
      std::size_t s = from[e];
      std::size_t len = e - s;
      std::uint64_t v = len == 1 ? 0 : static_cast<std::uint64_t>(mod_inverse(static_cast<std::int64_t>(A % len), static_cast<std::int64_t>(len)));
      for (std::size_t i = 0; i < len; ++i) tau[line[s + i]] = line[s + (i + v) % len];
      e = s;
    }
  }
  pb.tau = Permutation(std::move(tau));
  return pb;
}

Witness power_witness(const Word& w, const SyllableForm& form, const Permutation& sigma) {
  std::int64_t a = form.exponent;
  std::uint64_t A = static_cast<std::uint64_t>(a < 0 ? -a : a);
  PowerBuild pb = build_power(A, sigma);
  Permutation tau = a < 0 ? pb.tau.inverse() : pb.tau;
  Permutation g = tau, h = Permutation(sigma.size());
  realize_form(form, g, h);
  // Per-class mismatches, for the trace.
  Permutation val = pb.tau.pow(static_cast<std::int64_t>(A));
  std::map<std::uint64_t, std::uint64_t> miss;
  for (const auto& c : sigma.cycles())
    for (auto x : c) miss[c.size()] += val[x] != sigma[x];
  for (auto& bt : pb.trace) bt.mismatches = miss[bt.k];
  Fraction bound(static_cast<std::int64_t>(pb.bound_count), static_cast<std::int64_t>(std::max<std::size_t>(1, sigma.size())));
  return finish(w, std::move(g), std::move(h), sigma, bound, std::move(pb.trace));
}

}  // namespace

Witness approx_power_word(std::int64_t a, const Permutation& sigma) {
  if (a == 0) throw std::invalid_argument("approx_power_word: exponent must be nonzero");
  Word w = Word::x(a);
  return power_witness(w, classify(w), sigma);
}

Witness approx(const Word& w, const Permutation& sigma) {
  if (w.is_trivial()) throw std::invalid_argument("approx: trivial word");
  SyllableForm form = classify(w);
  if (form.kind == SyllableForm::Kind::trivial) throw std::invalid_argument("approx: word is conjugate to the identity");
  if (form.kind == SyllableForm::Kind::power) return power_witness(w, form, sigma);

  Word F = form.form_word();
  std::size_t n = sigma.size();
  std::map<std::uint64_t, std::vector<std::vector<std::uint32_t>>> byk;
  for (auto& c : sigma.cycles()) byk[c.size()].push_back(std::move(c));
  std::vector<std::uint64_t> ks;
  for (const auto& [k, cs] : byk) ks.push_back(k);

  std::vector<BlockBuild> blocks(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) {
    std::uint64_t k = ks[i];
    blocks[i] = build_isotypic_block(F, form, k, k * byk[k].size());
  });

  std::vector<std::uint32_t> gi(n), hi(n);
  Fraction bound(0);
  std::vector<BlockTrace> trace;
  for (std::size_t b = 0; b < ks.size(); ++b) {
    const auto& cycles = byk[ks[b]];
    std::uint64_t k = ks[b];
    // canonical point j*k + r  <->  cycles[j][r]
    auto iota = [&](std::uint32_t x) { return cycles[x / k][x % k]; };
    for (std::uint32_t x = 0; x < blocks[b].g.size(); ++x) {
      gi[iota(x)] = iota(blocks[b].g[x]);
      hi[iota(x)] = iota(blocks[b].h[x]);
    }
    bound += blocks[b].trace.bound * Fraction(static_cast<std::int64_t>(blocks[b].trace.points), static_cast<std::int64_t>(n));
    trace.push_back(blocks[b].trace);
  }
  Permutation g(std::move(gi)), h(std::move(hi));
  realize_form(form, g, h);
  return finish(w, std::move(g), std::move(h), sigma, bound, std::move(trace));
}

Witness approx_isotypic(const Word& w, std::uint64_t k, std::uint64_t c_k) {
  if (k < 1) throw std::invalid_argument("approx_isotypic: k must be >= 1");
  SyllableForm form = classify(w);
  if (form.kind != SyllableForm::Kind::alternating)
    throw std::invalid_argument("approx_isotypic: word is not alternating");
  CycleType t;
  t.counts[k] = c_k;
  return approx(w, permutation_of_type(t));
}

}  // namespace wordmap
