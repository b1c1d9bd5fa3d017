#include "records.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wordmap::cli {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fraction_str(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

Fraction parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Fraction(std::stoll(s));
  return Fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["word"] = c.word;
  j["target"] = c.target;
  j["n"] = c.n;
  j["ns"] = c.ns;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["out"] = c.out;
  j["format"] = c.format;
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.word = j.at("word").get<std::string>();
  c.target = j.at("target").get<std::string>();
  c.n = j.at("n").get<std::uint64_t>();
  c.ns = j.at("ns").get<std::vector<std::uint64_t>>();
  c.samples = j.at("samples").get<std::string>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.out = j.at("out").get<std::string>();
  c.format = j.at("format").get<std::string>();
  return c;
}

namespace {

ordered_json trace_json(const BlockTrace& b) {
  ordered_json j;
  j["k"] = b.k;
  j["points"] = b.points;
  j["path"] = b.path;
  j["p"] = b.p;
  j["m"] = b.m;
  j["q"] = b.q;
  j["decomposition"] = b.decomposition;
  j["bound"] = fraction_str(b.bound);
  j["mismatches"] = b.mismatches;
  return j;
}

BlockTrace trace_from_json(const json& j) {
  BlockTrace b;
  b.k = j.at("k").get<std::uint64_t>();
  b.points = j.at("points").get<std::uint64_t>();
  b.path = j.at("path").get<std::string>();
  b.p = j.at("p").get<std::uint64_t>();
  b.m = j.at("m").get<int>();
  b.q = j.at("q").get<std::uint64_t>();
  b.decomposition = j.at("decomposition").get<std::vector<std::uint64_t>>();
  b.bound = parse_fraction(j.at("bound").get<std::string>());
  b.mismatches = j.at("mismatches").get<std::uint64_t>();
  return b;
}

}  // namespace

ordered_json witness_record(const Witness& w, const RunConfig& c) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["record"] = "witness";
  j["config"] = config_json(c);
  j["word"] = w.word.str();
  j["n"] = w.target.size();
  j["achieved"] = fraction_str(w.achieved);
  j["bound"] = fraction_str(w.bound);
  j["within_bound"] = w.achieved <= w.bound;
  j["target"] = w.target.images();
  j["g"] = w.g.images();
  j["h"] = w.h.images();
  j["value"] = w.value.images();
  ordered_json tr = ordered_json::array();
  for (const auto& b : w.trace) tr.push_back(trace_json(b));
  j["trace"] = tr;
  return j;
}

Witness witness_from_record(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) throw std::runtime_error("unsupported schema version");
  Witness w;
  w.word = parse_word(j.at("word").get<std::string>());
  w.achieved = parse_fraction(j.at("achieved").get<std::string>());
  w.bound = parse_fraction(j.at("bound").get<std::string>());
  w.target = Permutation(j.at("target").get<std::vector<std::uint32_t>>());
  w.g = Permutation(j.at("g").get<std::vector<std::uint32_t>>());
  w.h = Permutation(j.at("h").get<std::vector<std::uint32_t>>());
  w.value = Permutation(j.at("value").get<std::vector<std::uint32_t>>());
  for (const auto& b : j.at("trace")) w.trace.push_back(trace_from_json(b));
  return w;
}

std::string witness_csv(const Witness& w, const RunConfig& c) {
  std::ostringstream os;
  os << "# schema=" << kSchemaVersion << ' ' << config_json(c).dump() << '\n';
  os << "word,n,achieved,bound,within_bound,paths\n";
  std::string paths;
  for (const auto& b : w.trace) paths += (paths.empty() ? "" : ";") + b.path;
  os << '"' << w.word.str() << "\"," << w.target.size() << ',' << fraction_str(w.achieved) << ','
     << fraction_str(w.bound) << ',' << (w.achieved <= w.bound ? 1 : 0) << ',' << paths << '\n';
  return os.str();
}

ordered_json su_record(const SUCertificate& s, const RunConfig& c) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["record"] = "su_certificate";
  j["config"] = config_json(c);
  j["word"] = s.word.str();
  j["n"] = s.n;
  j["membership"] = to_string(s.membership);
  j["verdict"] = to_string(s.verdict);
  if (s.pw) {
    j["p_w"] = s.pw->p.str();
    j["direction"] = {s.pw->dir.alpha, s.pw->dir.beta};
    j["component"] = s.pw->component == Gen::x ? "x" : "y";
    j["injective"] = s.pw->injective;
  } else {
    j["p_w"] = nullptr;
  }
  if (s.Wn) j["W_n"] = *s.Wn;
  else j["W_n"] = nullptr;
  return j;
}

namespace {

char kHeader[] = "n,samples,mean_achieved,max_achieved,bound,oracle_max";

}  // namespace

std::string scan_csv(const std::vector<ScanRow>& rows, const RunConfig& c) {
  std::ostringstream os;
  os << "# schema=" << kSchemaVersion << ' ' << config_json(c).dump() << '\n' << kHeader << '\n';
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g", r.mean);
    os << r.n << ',' << r.samples << ',' << buf << ',' << fraction_str(r.max) << ',' << fraction_str(r.bound) << ','
       << (r.oracle_max ? fraction_str(*r.oracle_max) : "") << '\n';
  }
  return os.str();
}

std::vector<ScanRow> scan_from_csv(const std::string& text, RunConfig* config) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("# schema=", 0) != 0) throw std::runtime_error("missing schema line");
  auto space = line.find(' ', 2);
  if (std::stoi(line.substr(9, space - 9)) != kSchemaVersion) throw std::runtime_error("unsupported schema version");
  if (config) *config = config_from_json(json::parse(line.substr(space + 1)));
  if (!std::getline(is, line) || line != kHeader) throw std::runtime_error("unexpected header");
  std::vector<ScanRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() == 5) f.emplace_back();
    if (f.size() != 6) throw std::runtime_error("bad row: " + line);
    ScanRow r;
    r.n = std::stoull(f[0]);
    r.samples = std::stoull(f[1]);
    r.mean = std::strtod(f[2].c_str(), nullptr);
    r.max = parse_fraction(f[3]);
    r.bound = parse_fraction(f[4]);
    if (!f[5].empty()) r.oracle_max = parse_fraction(f[5]);
    rows.push_back(r);
  }
  return rows;
}

ordered_json scan_json(const std::vector<ScanRow>& rows, const RunConfig& c) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["record"] = "density_scan";
  j["config"] = config_json(c);
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json x;
    x["n"] = r.n;
    x["samples"] = r.samples;
    x["mean_achieved"] = r.mean;
    x["max_achieved"] = fraction_str(r.max);
    x["bound"] = fraction_str(r.bound);
    x["oracle_max"] = r.oracle_max ? ordered_json(fraction_str(*r.oracle_max)) : ordered_json(nullptr);
    arr.push_back(x);
  }
  j["rows"] = arr;
  return j;
}

void write_atomic(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << data;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace wordmap::cli
