#pragma once

#include <string>

#include "balance/extensions.hpp"
#include "balance/poset.hpp"
#include "balance/search.hpp"
#include "balance/structure.hpp"

namespace balance {

// Parses a poset from JSON: {"n": 6, "covers": [[1,4],[2,4],...]}, with an
// optional "labels" array of n strings. Throws std::invalid_argument with a
// descriptive message on malformed input.
Poset poset_from_json(const std::string& text);

// Reads and parses a poset JSON file.
Poset load_poset(const std::string& path);

// Serialises a poset to JSON. Labels are included only when they differ from
// the default "1".."n".
std::string poset_to_json(const Poset& p);

// Graphviz DOT rendering of the cover relation (edges point upward from the
// smaller element), with elements of equal height placed on the same rank.
std::string to_dot(const Poset& p);

// CSV of the pairwise extension counts, row-major, exact integers.
std::string matrix_csv(const ExtensionStats& stats);

// One-line JSON certificate, e.g.
// {"bound":"1/2","kind":"twin","pair":[1,2]}.
std::string certificate_json(const CertificateReport& c);

// One-line JSON record of a scanned isomorphism class (canonical covers,
// exact delta, width, chain flag, canonical key in hex).
std::string scan_class_json(const ScanClass& c);

// JSON summary of a finished scan.
std::string scan_report_json(const ScanReport& r);

}  // namespace balance
