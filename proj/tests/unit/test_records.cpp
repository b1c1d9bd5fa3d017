#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "records.hpp"

using namespace wordmap;
using namespace wordmap::cli;

TEST_CASE("fraction strings") {
  CHECK(fraction_str(Fraction(1)) == "1");
  CHECK(fraction_str(Fraction(2, 6)) == "1/3");
  CHECK(parse_fraction("7/21") == Fraction(1, 3));
  CHECK(parse_fraction("0") == Fraction(0));
}

TEST_CASE("witness record round trip") {
  RunConfig c;
  c.command = "approx-sym";
  c.word = "[x,y]";
  c.n = 300;
  c.seed = 5;
  std::mt19937_64 rng(5);
  Witness w = approx(parse_word(c.word), random_permutation(c.n, rng));
  auto j = witness_record(w, c);
  std::string text = j.dump(2);
  auto back = nlohmann::json::parse(text);
  Witness r = witness_from_record(back);
  CHECK(r.word == w.word);
  CHECK(r.g == w.g);
  CHECK(r.h == w.h);
  CHECK(r.value == w.value);
  CHECK(r.target == w.target);
  CHECK(r.achieved == w.achieved);
  CHECK(r.bound == w.bound);
  REQUIRE(r.trace.size() == w.trace.size());
  CHECK_NOTHROW(r.verify());
  CHECK(config_from_json(back.at("config")) == c);
  CHECK(witness_record(r, c).dump(2) == text);
}

TEST_CASE("scan csv round trip") {
  RunConfig c;
  c.command = "density-scan";
  c.word = "x^2";
  c.ns = {4, 6};
  c.samples = "all";
  c.format = "csv";
  std::vector<ScanRow> rows{{4, 24, 0.3125, Fraction(3, 4), Fraction(1), Fraction(3, 4)},
                            {6, 720, 1.0 / 3.0, Fraction(5, 6), Fraction(1), std::nullopt}};
  std::string text = scan_csv(rows, c);
  CHECK(text.rfind("# schema=1 ", 0) == 0);
  RunConfig back;
  CHECK(scan_from_csv(text, &back) == rows);
  CHECK(back == c);
  CHECK(scan_csv(scan_from_csv(text), c) == text);
}

TEST_CASE("atomic write replaces the file") {
  auto path = std::filesystem::temp_directory_path() / "wordmap_records_test.txt";
  write_atomic(path.string(), "first");
  write_atomic(path.string(), "second");
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == "second");
  CHECK(!std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}
