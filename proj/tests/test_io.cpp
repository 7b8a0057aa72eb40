#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "balance/extensions.hpp"
#include "balance/io.hpp"
#include "balance/lattices.hpp"
#include "balance/poset.hpp"
#include "balance/rational.hpp"
#include "balance/repro.hpp"
#include "balance/search.hpp"
#include "balance/structure.hpp"

using namespace balance;

TEST_CASE("poset JSON round trip") {
  const Poset& p = reference_poset("fig1");
  std::string text = poset_to_json(p);
  // Default labels are omitted from the serialisation.
  CHECK(text.find("labels") == std::string::npos);
  Poset back = poset_from_json(text);
  CHECK(back == p);
  CHECK(back.covers == p.covers);

  Poset labelled = from_covers(2, {{1, 2}}, {"low", "top"});
  std::string ltext = poset_to_json(labelled);
  CHECK(ltext.find("labels") != std::string::npos);
  Poset lback = poset_from_json(ltext);
  CHECK(lback.labels == labelled.labels);
  CHECK(lback == labelled);

  // Lattice labels survive a round trip too.
  Poset b2 = boolean_lattice(2);
  CHECK(poset_from_json(poset_to_json(b2)).label(4) == "{1,2}");
}

TEST_CASE("malformed poset JSON is rejected") {
  CHECK_THROWS_AS(poset_from_json("{oops"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"covers\":[]}"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":3}"), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":\"3\",\"covers\":[]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":3,\"covers\":7}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":3,\"covers\":[[1]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":3,\"covers\":[[1,\"2\"]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":2,\"covers\":[],\"labels\":\"x\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":2,\"covers\":[],\"labels\":[\"a\"]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":2,\"covers\":[],\"labels\":[1,2]}"),
                  std::invalid_argument);
  // Structural errors surface through the same exception type.
  CHECK_THROWS_AS(poset_from_json("{\"n\":2,\"covers\":[[1,2],[2,1]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json("{\"n\":2,\"covers\":[[1,3]]}"),
                  std::invalid_argument);
}

TEST_CASE("poset files") {
  std::string path = "io_test_poset.json";
  {
    std::ofstream out(path);
    out << poset_to_json(reference_poset("fig4-Q"));
  }
  Poset p = load_poset(path);
  CHECK(p == reference_poset("fig4-Q"));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_poset("definitely_missing_file.json"),
                  std::invalid_argument);
}

TEST_CASE("DOT rendering") {
  std::string dot = to_dot(reference_poset("fig6-base"));
  CHECK(dot.find("digraph poset {") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("v2 -> v3;") != std::string::npos);
  CHECK(dot.find("v3 -> v4;") != std::string::npos);
  // Elements 1 and 2 are both minimal, hence on the same rank.
  CHECK(dot.find("{ rank=same; v1; v2; }") != std::string::npos);

  Poset quoted = from_covers(2, {{1, 2}}, {"say \"hi\"", "back\\slash"});
  std::string qdot = to_dot(quoted);
  CHECK(qdot.find("label=\"say \\\"hi\\\"\"") != std::string::npos);
  CHECK(qdot.find("label=\"back\\\\slash\"") != std::string::npos);
}

TEST_CASE("matrix CSV") {
  CHECK(matrix_csv(pair_matrix(antichain(2))) == "0,1\n1,0\n");
  CHECK(matrix_csv(pair_matrix(chain(2))) == "0,1\n0,0\n");
  std::string csv = matrix_csv(pair_matrix(reference_poset("fig1")));
  int newlines = 0;
  for (char c : csv) newlines += (c == '\n');
  CHECK(newlines == 6);
  CHECK(csv.substr(0, 16) == "0,9,15,15,15,15\n");
}

TEST_CASE("certificate JSON is stable") {
  CertificateReport c;
  c.kind = CertificateKind::twin;
  c.pair = {1, 2};
  c.bound = Ratio(1, 2);
  CHECK(certificate_json(c) == "{\"bound\":\"1/2\",\"kind\":\"twin\",\"pair\":[1,2]}");

  c.kind = CertificateKind::almost_twin;
  c.pair = {1, 3};
  c.bound = Ratio(1, 3);
  CHECK(certificate_json(c) ==
        "{\"bound\":\"1/3\",\"kind\":\"almost_twin\",\"pair\":[1,3]}");
}

TEST_CASE("scan records serialise to parseable JSON") {
  ScanClass sample;
  ScanHooks hooks;
  hooks.on_class = [&](const ScanClass& c) {
    if (!c.chain) sample = c;
  };
  ScanReport r = conjecture_scan(3, hooks);

  nlohmann::json cls = nlohmann::json::parse(scan_class_json(sample));
  CHECK(cls["n"] == 3);
  CHECK(cls["chain"] == false);
  CHECK(cls["key"] == canonical_key_hex(sample.poset));
  CHECK(parse_ratio(cls["delta"].get<std::string>()) == sample.delta);
  CHECK(cls["width"] == sample.width);
  CHECK(cls["covers"].is_array());

  nlohmann::json rep = nlohmann::json::parse(scan_report_json(r));
  CHECK(rep["n"] == 3);
  CHECK(rep["classes"] == 5);
  CHECK(rep["chains"] == 1);
  CHECK(rep["skipped"] == 0);
  CHECK(rep["min_nonchain_delta"] == "1/3");
  CHECK(rep["below_third_count"] == 0);
  CHECK(rep["one_third_count"] == 1);
  CHECK(rep["one_third_irregular_count"] == 0);
  CHECK(rep["histogram"].is_array());
  long long histogram_total = 0;
  for (const auto& entry : rep["histogram"])
    histogram_total += entry["count"].get<long long>();
  CHECK(histogram_total == 5);  // all five classes, the chain at delta 0/1
}

TEST_CASE("rational formatting") {
  CHECK(format_ratio(Ratio(7, 15)) == "7/15");
  CHECK(format_ratio(Ratio(0)) == "0/1");
  CHECK(format_ratio(Ratio(711, 1431)) == "79/159");  // stored reduced
  CHECK(parse_ratio("7/15") == Ratio(7, 15));
  CHECK(parse_ratio("3") == Ratio(3));
  CHECK(parse_ratio("-2/4") == Ratio(-1, 2));
  CHECK(parse_ratio("16/45") == Ratio(16, 45));
  CHECK_THROWS_AS(parse_ratio("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratio("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratio(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratio("1/2/3"), std::invalid_argument);
}
