#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "records.hpp"
#include "wordmap/brute_oracle.hpp"
#include "wordmap/parallel.hpp"

using namespace wordmap;
using namespace wordmap::cli;

namespace {

constexpr int kOk = 0;
constexpr int kOverBound = 1;
constexpr int kUsage = 2;
constexpr int kConstruction = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word read_word(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) throw UsageError("empty word");
  Word w = parse_word(text);
  if (w.is_trivial()) throw UsageError("word reduces to the identity");
  return w;
}

// "random", cycle notation "(0 1)(2 3)", "type:3^2,1^4", or "@file" holding either.
Permutation read_target(const std::string& arg, std::size_t n, std::uint64_t seed) {
  if (arg == "random") {
    std::mt19937_64 rng(seed);
    return random_permutation(n, rng);
  }
  if (arg.rfind("type:", 0) == 0) {
    std::vector<std::uint64_t> lengths;
    std::stringstream ss(arg.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto caret = tok.find('^');
      std::uint64_t len = std::stoull(tok.substr(0, caret));
      std::uint64_t count = caret == std::string::npos ? 1 : std::stoull(tok.substr(caret + 1));
      if (len == 0) throw UsageError("zero cycle length");
      lengths.insert(lengths.end(), count, len);
    }
    auto t = CycleType::from_lengths(lengths);
    if (t.degree() != n) throw UsageError("cycle type has degree " + std::to_string(t.degree()) + ", expected " + std::to_string(n));
    return permutation_of_type(t);
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw UsageError("cannot read " + arg.substr(1));
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    if (text.find('(') != std::string::npos) return parse_permutation(text, n);
    std::vector<std::uint32_t> img;
    std::istringstream is(text);
    for (std::uint64_t v; is >> v;) img.push_back(static_cast<std::uint32_t>(v));
    if (img.size() != n) throw UsageError("target file has " + std::to_string(img.size()) + " points");
    return Permutation(img);
  }
  try {
    return parse_permutation(arg, n);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad target: ") + e.what());
  }
}

std::vector<std::uint64_t> read_grid(const std::string& text) {
  std::vector<std::uint64_t> ns;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" ") == std::string::npos) continue;
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (v < 1) throw UsageError("grid sizes must be positive");
    ns.push_back(static_cast<std::uint64_t>(v));
  }
  if (ns.empty()) throw UsageError("empty n-grid");
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

void emit(const RunConfig& c, const std::string& data) {
  if (c.out.empty()) {
    std::cout << data;
    std::cout.flush();
  } else {
    write_atomic(c.out, data);
  }
}

int cmd_approx_sym(const RunConfig& c) {
  Word w = read_word(c.word);
  if (c.n < 1) throw UsageError("--n must be at least 1");
  Permutation target = read_target(c.target, c.n, c.seed);
  Witness wit = approx(w, target);
  wit.verify();
  emit(c, c.format == "csv" ? witness_csv(wit, c) : witness_record(wit, c).dump(2) + "\n");
  return wit.achieved <= wit.bound ? kOk : kOverBound;
}

int cmd_su_cert(const RunConfig& c) {
  Word w = read_word(c.word);
  if (c.n < 2) throw UsageError("--n must be at least 2");
  auto cert = su_certificate(w, c.n);
  emit(c, su_record(cert, c).dump(2) + "\n");
  return kOk;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

int cmd_density_scan(const RunConfig& c) {
  Word w = read_word(c.word);
  bool exhaustive = c.samples == "all";
  std::uint64_t samples = 0;
  if (!exhaustive) {
    try {
      samples = std::stoull(c.samples);
    } catch (const std::exception&) {
      throw UsageError("--samples must be a count or 'all'");
    }
    if (samples == 0) throw UsageError("--samples must be positive");
  }
  if (exhaustive && c.ns.back() > 8) throw UsageError("--samples all needs n <= 8");

  struct Cell {
    std::size_t row;
    Permutation target;
    Fraction achieved{0}, bound{0};
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < c.ns.size(); ++r) {
    std::size_t n = c.ns[r];
    if (exhaustive) {
      for (auto& p : all_permutations(n)) cells.push_back({r, std::move(p)});
    } else {
      std::mt19937_64 rng(c.seed * 1000003ULL + n);
      for (std::uint64_t s = 0; s < samples; ++s) cells.push_back({r, random_permutation(n, rng)});
    }
  }
  parallel_for(cells.size(), [&](std::size_t i) {
    Witness wit = approx(w, cells[i].target);
    wit.verify();
    cells[i].achieved = wit.achieved;
    cells[i].bound = wit.bound;
  });

  std::vector<ScanRow> rows(c.ns.size());
  std::vector<Fraction> sums(c.ns.size(), Fraction(0));
  bool within = true;
  for (const auto& cell : cells) {
    ScanRow& row = rows[cell.row];
    ++row.samples;
    sums[cell.row] += cell.achieved;
    row.max = std::max(row.max, cell.achieved);
    row.bound = std::max(row.bound, cell.bound);
    within = within && cell.achieved <= cell.bound;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r].n = c.ns[r];
    rows[r].mean = to_double(sums[r] / static_cast<std::int64_t>(rows[r].samples));
    if (exhaustive && c.ns[r] <= 7) {
      auto image = word_image_sym(w, c.ns[r]);
      Fraction sup{0};
      for (const auto& p : all_permutations(c.ns[r])) sup = std::max(sup, exact_distance_sym(image, p));
      rows[r].oracle_max = sup;
    }
  }
  emit(c, c.format == "json" ? scan_json(rows, c).dump(2) + "\n" : scan_csv(rows, c));
  return within ? kOk : kOverBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word map witnesses, SU certificates and density scans"};
  app.require_subcommand(1);
  RunConfig c;
  std::string grid;

  auto format_check = CLI::IsMember({"json", "csv"});
  auto* sym = app.add_subcommand("approx-sym", "Approximate a target permutation by a word value");
  sym->add_option("--word", c.word, "Word in x, y, e.g. \"[x,y]\"")->required();
  sym->add_option("--n", c.n, "Degree of the symmetric group")->required();
  sym->add_option("--target", c.target, "random | cycle notation | type:k^c,... | @file")->capture_default_str();
  sym->add_option("--seed", c.seed, "Seed for random targets")->capture_default_str();
  sym->add_option("--out", c.out, "Output path (default stdout)");
  sym->add_option("--format", c.format, "json | csv")->check(format_check)->capture_default_str();

  auto* su = app.add_subcommand("su-cert", "Cohomological surjectivity certificate on SU_n");
  su->add_option("--word", c.word, "Word in x, y")->required();
  su->add_option("--n", c.n, "Matrix size")->required();
  su->add_option("--out", c.out, "Output path (default stdout)");

  auto* scan = app.add_subcommand("density-scan", "Achieved distance over a grid of n");
  scan->add_option("--word", c.word, "Word in x, y")->required();
  scan->add_option("--ns", grid, "Comma separated sizes")->required();
  scan->add_option("--samples", c.samples, "Targets per n, or 'all'")->capture_default_str();
  scan->add_option("--seed", c.seed, "Seed")->capture_default_str();
  scan->add_option("--out", c.out, "Output path (default stdout)");
  std::string scan_format = "csv";
  scan->add_option("--format", scan_format, "csv | json")->check(format_check)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (sym->parsed()) {
      c.command = "approx-sym";
      return cmd_approx_sym(c);
    }
    if (su->parsed()) {
      c.command = "su-cert";
      c.target.clear();
      c.samples.clear();
      c.format = "json";
      return cmd_su_cert(c);
    }
    c.command = "density-scan";
    c.target.clear();
    c.format = scan_format;
    c.ns = read_grid(grid);
    return cmd_density_scan(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return kConstruction;
  }
}
