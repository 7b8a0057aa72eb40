#include "balance/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "balance/rational.hpp"

namespace balance {

// ---- rational helpers (declared in rational.hpp) ----

std::string format_ratio(const Ratio& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r) << "/"
      << boost::multiprecision::denominator(r);
  return out.str();
}

Ratio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  try {
    // cpp_int's string constructor quietly maps "" to 0, so reject empty
    // pieces before handing them over.
    if (slash == std::string::npos) {
      if (text.empty()) throw std::invalid_argument("empty");
      return Ratio(BigInt(text));
    }
    std::string num_text = text.substr(0, slash);
    std::string den_text = text.substr(slash + 1);
    if (num_text.empty() || den_text.empty())
      throw std::invalid_argument("empty numerator or denominator");
    BigInt num(num_text);
    BigInt den(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Ratio(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: \"" + text +
                                "\" (expected p/q or an integer)");
  }
}

// ---- JSON ----

Poset poset_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("covers"))
    throw std::invalid_argument(
        "poset JSON must be an object with \"n\" and \"covers\"");
  if (!doc["n"].is_number_integer())
    throw std::invalid_argument("\"n\" must be an integer");
  int n = doc["n"].get<int>();
  if (!doc["covers"].is_array())
    throw std::invalid_argument("\"covers\" must be an array of pairs");
  std::vector<std::pair<int, int>> covers;
  for (const auto& item : doc["covers"]) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_integer() || !item[1].is_number_integer())
      throw std::invalid_argument(
          "each cover must be a two-element integer array");
    covers.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw std::invalid_argument("\"labels\" must be an array of strings");
    for (const auto& item : doc["labels"]) {
      if (!item.is_string())
        throw std::invalid_argument("\"labels\" must be an array of strings");
      labels.push_back(item.get<std::string>());
    }
    if ((int)labels.size() != n)
      throw std::invalid_argument("\"labels\" must have exactly n entries");
  }
  return from_covers(n, covers, std::move(labels));
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return poset_from_json(buf.str());
}

std::string poset_to_json(const Poset& p) {
  nlohmann::json doc;
  doc["n"] = p.n;
  auto covers = nlohmann::json::array();
  for (auto [x, y] : p.covers) covers.push_back({x, y});
  doc["covers"] = covers;
  bool default_labels = true;
  for (int i = 0; i < p.n; ++i)
    if (p.labels[i] != std::to_string(i + 1)) {
      default_labels = false;
      break;
    }
  if (!default_labels) doc["labels"] = p.labels;
  return doc.dump();
}

// ---- DOT ----

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=11];\n";
  for (int i = 1; i <= p.n; ++i)
    out << "  v" << i << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
  for (auto [x, y] : p.covers) out << "  v" << x << " -> v" << y << ";\n";
  std::vector<int> h = heights(p);
  int max_h = 0;
  for (int x = 0; x < p.n; ++x) max_h = std::max(max_h, h[x]);
  for (int level = 0; level <= max_h; ++level) {
    std::vector<int> rank;
    for (int x = 0; x < p.n; ++x)
      if (h[x] == level) rank.push_back(x + 1);
    if (rank.size() > 1) {
      out << "  { rank=same;";
      for (int v : rank) out << " v" << v << ";";
      out << " }\n";
    }
  }
  out << "}\n";
  return out.str();
}

// ---- CSV ----

std::string matrix_csv(const ExtensionStats& stats) {
  std::ostringstream out;
  int n = (int)stats.pair_counts.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ",";
      out << stats.pair_counts[i][j];
    }
    out << "\n";
  }
  return out.str();
}

// ---- certificates and scan records ----

const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::twin:
      return "twin";
    case CertificateKind::almost_twin:
      return "almost_twin";
    case CertificateKind::auto_2cycle:
      return "auto_2cycle";
    case CertificateKind::anti_auto_fixed_pair:
      return "anti_auto_fixed_pair";
    case CertificateKind::inversion_pattern_pair:
      return "inversion_pattern_pair";
  }
  return "unknown";
}

std::string certificate_json(const CertificateReport& c) {
  nlohmann::json doc;
  doc["kind"] = certificate_kind_name(c.kind);
  doc["pair"] = {c.pair.first, c.pair.second};
  doc["bound"] = format_ratio(c.bound);
  return doc.dump();
}

namespace {
std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}
}  // namespace

std::string scan_class_json(const ScanClass& c) {
  nlohmann::json doc;
  doc["n"] = c.poset.n;
  doc["key"] = c.key.empty() ? canonical_key_hex(c.poset) : hex_encode(c.key);
  auto covers = nlohmann::json::array();
  for (auto [x, y] : c.poset.covers) covers.push_back({x, y});
  doc["covers"] = covers;
  doc["delta"] = format_ratio(c.delta);
  doc["width"] = c.width;
  doc["chain"] = c.chain;
  return doc.dump();
}

std::string scan_report_json(const ScanReport& r) {
  nlohmann::json doc;
  doc["n"] = r.n;
  doc["classes"] = r.classes;
  doc["chains"] = r.chains;
  doc["skipped"] = r.skipped;
  if (r.min_nonchain_delta) {
    doc["min_nonchain_delta"] = format_ratio(*r.min_nonchain_delta);
    auto covers = nlohmann::json::array();
    for (auto [x, y] : r.min_witness->covers) covers.push_back({x, y});
    doc["min_witness_covers"] = covers;
  }
  doc["below_third_count"] = (long long)r.below_third.size();
  doc["one_third_count"] = (long long)r.one_third.size();
  doc["one_third_irregular_count"] = (long long)r.one_third_irregular.size();
  auto hist = nlohmann::json::array();
  for (const auto& [delta, count] : r.histogram)
    hist.push_back({{"delta", format_ratio(delta)}, {"count", count}});
  doc["histogram"] = hist;
  return doc.dump();
}

}  // namespace balance
