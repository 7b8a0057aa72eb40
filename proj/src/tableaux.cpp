#include "balance/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "balance/extensions.hpp"
#include "balance/structure.hpp"

namespace balance {

bool operator==(const Cell& a, const Cell& b) {
  return a.row == b.row && a.col == b.col;
}
bool operator<(const Cell& a, const Cell& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

int Shape::inner_part(int r) const {
  return r >= 1 && r <= (int)inner.size() ? inner[r - 1] : 0;
}

int Shape::row_begin(int r) const {
  return shifted ? r + inner_part(r) : inner_part(r) + 1;
}

int Shape::row_end(int r) const {
  return shifted ? r - 1 + outer[r - 1] : outer[r - 1];
}

int Shape::cell_count() const {
  int total = 0;
  for (int r = 1; r <= rows(); ++r)
    total += std::max(0, row_end(r) - row_begin(r) + 1);
  return total;
}

Shape make_shape(std::vector<int> outer, std::vector<int> inner,
                 bool shifted) {
  while (!outer.empty() && outer.back() == 0) outer.pop_back();
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  if (outer.empty()) throw std::invalid_argument("shape has no cells");
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (outer[i] <= 0)
      throw std::invalid_argument("outer parts must be positive");
    if (i + 1 < outer.size()) {
      if (shifted ? outer[i] <= outer[i + 1] : outer[i] < outer[i + 1])
        throw std::invalid_argument(
            shifted ? "outer parts must be strictly decreasing"
                    : "outer parts must be weakly decreasing");
    }
  }
  if (inner.size() > outer.size())
    throw std::invalid_argument("inner shape has more rows than outer");
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] < 0) throw std::invalid_argument("inner parts must be >= 0");
    if (inner[i] > outer[i])
      throw std::invalid_argument("inner shape does not fit inside outer");
    if (i + 1 < inner.size()) {
      if (shifted ? inner[i] <= inner[i + 1] : inner[i] < inner[i + 1])
        throw std::invalid_argument(
            shifted ? "inner parts must be strictly decreasing"
                    : "inner parts must be weakly decreasing");
    }
  }
  Shape s;
  s.outer = std::move(outer);
  s.inner = std::move(inner);
  s.shifted = shifted;
  if (s.cell_count() == 0) throw std::invalid_argument("shape has no cells");
  if (s.cell_count() > kMaxElements)
    throw std::invalid_argument("shape has more than " +
                                std::to_string(kMaxElements) + " cells");
  return s;
}

namespace {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty())
      throw std::invalid_argument("empty part in shape: \"" + text + "\"");
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed shape part: \"" + tok + "\"");
    }
    if (used != tok.size())
      throw std::invalid_argument("malformed shape part: \"" + tok + "\"");
    parts.push_back(value);
  }
  if (parts.empty())
    throw std::invalid_argument("shape must list at least one part");
  return parts;
}

}  // namespace

Shape parse_shape(const std::string& text, bool shifted) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return make_shape(parse_parts(text), {}, shifted);
  return make_shape(parse_parts(text.substr(0, slash)),
                    parse_parts(text.substr(slash + 1)), shifted);
}

std::string shape_to_string(const Shape& s) {
  std::string out;
  for (std::size_t i = 0; i < s.outer.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.outer[i]);
  }
  if (!s.inner.empty()) {
    out += "/";
    for (std::size_t i = 0; i < s.inner.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s.inner[i]);
    }
  }
  return out;
}

std::string ascii_diagram(const Shape& s) {
  std::string out;
  for (int r = 1; r <= s.rows(); ++r) {
    for (int c = 1; c < s.row_begin(r); ++c) out += "  ";
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c) out += "[]";
    out += "\n";
  }
  return out;
}

std::vector<Cell> shape_cells(const Shape& s) {
  std::vector<Cell> cells;
  for (int r = 1; r <= s.rows(); ++r)
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c)
      cells.push_back({r, c});
  return cells;
}

Poset shape_to_poset(const Shape& s) {
  std::vector<Cell> cells = shape_cells(s);
  int n = (int)cells.size();
  std::vector<Mask> up(n, 0);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "(" + std::to_string(cells[i].row) + "," +
                std::to_string(cells[i].col) + ")";
    for (int j = 0; j < n; ++j)
      if (i != j && cells[i].row <= cells[j].row &&
          cells[i].col <= cells[j].col)
        up[i] |= Mask(1) << j;
  }
  return from_relation(n, up, std::move(labels));
}

std::vector<std::vector<int>> hook_lengths(const std::vector<int>& lambda) {
  Shape s = make_shape(lambda);
  if (!s.inner.empty() || s.shifted)
    throw std::invalid_argument("hook lengths require a straight shape");
  int k = s.rows();
  std::vector<int> conj(s.outer[0], 0);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < s.outer[r]; ++c) ++conj[c];
  std::vector<std::vector<int>> grid(k);
  for (int r = 1; r <= k; ++r) {
    grid[r - 1].resize(s.outer[r - 1]);
    for (int c = 1; c <= s.outer[r - 1]; ++c)
      grid[r - 1][c - 1] = (s.outer[r - 1] - c) + (conj[c - 1] - r) + 1;
  }
  return grid;
}

BigInt syt_count(const std::vector<int>& lambda) {
  std::vector<std::vector<int>> grid = hook_lengths(lambda);
  BigInt numer = 1, hooks = 1;
  int n = 0;
  for (const auto& row : grid)
    for (int h : row) {
      ++n;
      hooks *= h;
    }
  for (int i = 2; i <= n; ++i) numer *= i;
  BigInt q = numer / hooks, r = numer % hooks;
  if (r != 0)
    throw std::logic_error("hook product does not divide the factorial");
  return q;
}

Ratio lemma_ratio(int m, int n) {
  if (m < 1 || n < 3)
    throw std::invalid_argument("lemma_ratio requires m >= 1 and n >= 3");
  return Ratio(BigInt(n - 1) * (m + 1), BigInt(2) * (BigInt(m) * n - 1));
}

RectanglePair rectangle_balance_pair(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument(
        "rectangle_balance_pair requires m >= 2 and n >= 2");
  Poset p = chain_product(m, n);
  int a = 2;      // cell (1,2), row-major numbering
  int b = n + 1;  // cell (2,1)
  return {{1, 2}, {2, 1}, prob_before(p, a, b)};
}

const char* twin_rule_name(TwinRule r) {
  switch (r) {
    case TwinRule::straight:
      return "straight";
    case TwinRule::shifted_straight:
      return "shifted_straight";
    case TwinRule::chain_components:
      return "chain_components";
    case TwinRule::case_i:
      return "case_i";
    case TwinRule::case_ii:
      return "case_ii";
    case TwinRule::case_iii:
      return "case_iii";
    case TwinRule::case_iv:
      return "case_iv";
    case TwinRule::case_v:
      return "case_v";
    case TwinRule::shifted_small_inner:
      return "shifted_small_inner";
    case TwinRule::shifted_tail:
      return "shifted_tail";
    case TwinRule::fallback_search:
      return "fallback_search";
  }
  return "unknown";
}

namespace {

struct SubShape {
  Shape shape;
  int row_shift = 0;  // sub row r' is original row r' + row_shift
  int col_shift = 0;  // sub column c' is original column c' + col_shift
};

// Splits a diagram into edge-connected components. Comparable cells are
// always edge-connected here, so the components are exactly the maximal runs
// of consecutive non-empty rows whose column intervals overlap, and every
// component is itself a valid diagram of the same kind after translation.
std::vector<SubShape> connected_components(const Shape& s) {
  int k = s.rows();
  std::vector<std::pair<int, int>> runs;
  int run_start = -1;
  for (int r = 1; r <= k; ++r) {
    bool empty = s.row_begin(r) > s.row_end(r);
    if (empty) {
      if (run_start > 0) runs.emplace_back(run_start, r - 1);
      run_start = -1;
      continue;
    }
    if (run_start < 0) {
      run_start = r;
    } else if (std::max(s.row_begin(r), s.row_begin(r - 1)) >
               std::min(s.row_end(r), s.row_end(r - 1))) {
      // The two rows share no column: new component.
      runs.emplace_back(run_start, r - 1);
      run_start = r;
    }
  }
  if (run_start > 0) runs.emplace_back(run_start, k);

  std::vector<SubShape> out;
  for (auto [r0, r1] : runs) {
    SubShape sub;
    sub.row_shift = r0 - 1;
    if (!s.shifted) {
      int shift_c = s.inner_part(r1);  // smallest inner part in the run
      std::vector<int> outer, inner;
      for (int r = r0; r <= r1; ++r) {
        outer.push_back(s.outer[r - 1] - shift_c);
        inner.push_back(s.inner_part(r) - shift_c);
      }
      sub.col_shift = shift_c;
      sub.shape = make_shape(std::move(outer), std::move(inner), false);
    } else {
      // Keep the staircase alignment: choose the column shift so the sub
      // shape's row r' starts at r' + inner'(r').
      int l = (int)s.inner.size();
      int shift_c = r1 <= l ? (r0 - 1) + s.inner[r1 - 1] : r0 - 1;
      std::vector<int> outer, inner;
      for (int r = r0; r <= r1; ++r) {
        outer.push_back(s.outer[r - 1] + (r0 - 1) - shift_c);
        inner.push_back(s.inner_part(r) + (r0 - 1) - shift_c);
      }
      sub.col_shift = shift_c;
      sub.shape = make_shape(std::move(outer), std::move(inner), true);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

struct CaseResult {
  bool found = false;
  Cell x, y;
  TwinRule rule = TwinRule::fallback_search;
};

// Ordered candidate pairs for a connected, non-chain, left-justified skew
// diagram given by outer/inner part lists (inner may be empty or carry a
// zero tail). Columns in the results are absolute for that diagram. Every
// candidate is verified against the cell poset by the caller, which takes
// the first one that passes.
std::vector<CaseResult> left_justified_candidates(std::vector<int> lam,
                                                  std::vector<int> mu) {
  std::vector<CaseResult> out;
  int strip = 0;
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  int k = (int)lam.size();
  if ((int)mu.size() == k) {
    // Empty leading columns: every row is indented, so the first mu_k
    // columns are blank and can be stripped off.
    strip = mu.back();
    for (auto& v : lam) v -= strip;
    for (auto& v : mu) v -= strip;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
  }
  int l = (int)mu.size();
  auto MU = [&](int i) {
    if (i == 0) return lam[0];
    return i <= l ? mu[i - 1] : 0;
  };
  if (l == 0) {
    // Straight shape (after stripping): k >= 2 and lam[0] >= 2 since the
    // diagram is not a chain.
    out.push_back({true, {1, 2 + strip}, {2, 1 + strip}, TwinRule::straight});
    return out;
  }
  // Case (i): a step of depth exactly one at row i.
  for (int i = 1; i <= l; ++i)
    if (MU(i - 1) - 1 >= MU(i) && MU(i) == MU(i + 1) + 1)
      out.push_back({true,
                     {i, MU(i) + 1 + strip},
                     {i + 1, MU(i + 1) + 1 + strip},
                     TwinRule::case_i});
  // Case (ii): a plateau behind a step of depth at least two.
  for (int i = 1; i <= l - 1; ++i)
    if (MU(i - 1) - 2 >= MU(i) && MU(i) == MU(i + 1))
      out.push_back({true,
                     {i, MU(i) + 2 + strip},
                     {i + 1, MU(i + 1) + 1 + strip},
                     TwinRule::case_ii});
  // Case (iii): exactly one full row below the inner shape.
  if (k == l + 1 && MU(l - 1) - 1 >= MU(l))
    out.push_back({true,
                   {l, MU(l) + 1 + strip},
                   {l + 1, 1 + strip},
                   TwinRule::case_iii});
  // Case (iv): at least two full rows below, inner part >= 2.
  if (k >= l + 2 && MU(l) >= 2)
    out.push_back(
        {true, {l + 1, 2 + strip}, {l + 2, 1 + strip}, TwinRule::case_iv});
  // Case (v): the inner shape is a staircase with every part repeated at
  // least twice and the first outer part exceeding it by exactly one.
  if (lam[0] == mu[0] + 1) {
    bool stair = true;
    for (int i = 1; i < l && stair; ++i) {
      int d = mu[i - 1] - mu[i];
      if (d != 0 && d != 1) stair = false;
    }
    if (stair) {
      int i = 0;
      while (i < l && stair) {
        int j = i;
        while (j < l && mu[j] == mu[i]) ++j;
        if (j - i < 2) stair = false;
        i = j;
      }
    }
    if (stair) {
      int m1 = 1;
      while (m1 < l && mu[m1] == mu[0]) ++m1;
      out.push_back({true,
                     {1, mu[0] + 1 + strip},
                     {m1 + 1, MU(m1 + 1) + 1 + strip},
                     TwinRule::case_v});
    }
  }
  return out;
}

// Ordered candidate pairs for a connected, non-chain shifted skew diagram
// with a non-empty inner shape. Works in "view" coordinates: row i spans
// columns mu~_i + 1 .. lam~_i with mu~_i = mu_i + i - 1 (and lam~ likewise),
// which equal the absolute columns of the shifted diagram.
std::vector<CaseResult> shifted_skew_candidates(const Shape& s) {
  int k = s.rows();
  int l = (int)s.inner.size();
  if (k <= l + 1) {
    // At most one unindented row: the view margins stay weakly decreasing
    // through the last row, so the whole diagram is a left-justified skew
    // diagram occupying the same absolute cells. Use its full analysis.
    std::vector<int> lam, mu;
    for (int i = 1; i <= k; ++i) {
      lam.push_back(s.outer[i - 1] + i - 1);
      mu.push_back(s.inner_part(i) + i - 1);
    }
    return left_justified_candidates(std::move(lam), std::move(mu));
  }
  std::vector<CaseResult> out;
  int mul = s.inner[l - 1];  // last inner part, >= 1
  auto MUV = [&](int i) {
    if (i == 0) return s.outer[0];  // lam~_1 = lam_1 + 0
    if (i <= l) return s.inner[i - 1] + i - 1;
    return l;  // view indentation of the first unindented row
  };
  // View cases (i) and (ii) on rows 1..l (the partner row i+1 <= l+1
  // exists because l < k).
  for (int i = 1; i <= l; ++i)
    if (MUV(i - 1) - 1 >= MUV(i) && MUV(i) == MUV(i + 1) + 1)
      out.push_back({true,
                     {i, MUV(i) + 1},
                     {i + 1, MUV(i + 1) + 1},
                     TwinRule::case_i});
  for (int i = 1; i <= l; ++i)
    if (MUV(i - 1) - 2 >= MUV(i) && MUV(i) == MUV(i + 1))
      out.push_back({true,
                     {i, MUV(i) + 2},
                     {i + 1, MUV(i + 1) + 1},
                     TwinRule::case_ii});
  // View case (v) on rows 1..l+1: the first unindented row continues the
  // margin staircase at value l. Margins must form a staircase of values
  // each repeated at least twice, with the first row exactly one column
  // longer than its indentation.
  if (s.outer[0] == MUV(1) + 1) {
    bool stair = true;
    for (int i = 2; i <= l + 1 && stair; ++i) {
      int d = MUV(i - 1) - MUV(i);
      if (d != 0 && d != 1) stair = false;
    }
    if (stair) {
      int i = 1;
      while (i <= l + 1 && stair) {
        int j = i;
        while (j <= l + 1 && MUV(j) == MUV(i)) ++j;
        if (j - i < 2) stair = false;
        i = j;
      }
    }
    if (stair) {
      int m1 = 1;
      while (m1 < l + 1 && MUV(m1 + 1) == MUV(1)) ++m1;
      if (m1 <= l)
        out.push_back({true,
                       {1, MUV(1) + 1},
                       {m1 + 1, MUV(m1 + 1) + 1},
                       TwinRule::case_v});
    }
  }
  // Small last inner part: pair the first cell of row l with the first cell
  // of the first unindented row. When the view margin is flat at the bottom
  // (equal values up from row l), the down-sets differ there; the top row of
  // that flat run is the right partner instead, so walk up to it.
  if (mul == 2 || mul == 3) {
    int r0 = l;
    while (r0 > 1 && MUV(r0 - 1) == MUV(l)) --r0;
    out.push_back({true,
                   {r0, MUV(l) + 1},
                   {l + 1, l + 1},
                   TwinRule::shifted_small_inner});
  }
  // Large last inner part: the unindented tail (two or more rows, since
  // k >= l + 2 here) is a shifted straight diagram far enough from row l;
  // use its canonical pair, written in absolute columns.
  if (mul > 3)
    out.push_back(
        {true, {l + 1, l + 3}, {l + 2, l + 2}, TwinRule::shifted_tail});
  // Last resort: adjacent margin-run tops. Group rows 1..l+1 into runs of
  // equal view margin (the first unindented row counts with margin l) and
  // pair the first cells of consecutive run-top rows. This covers margin
  // staircases whose final run is too short for the patterns above.
  {
    std::vector<int> tops;
    for (int i = 1; i <= l + 1; ++i)
      if (i == 1 || MUV(i - 1) > MUV(i)) tops.push_back(i);
    for (size_t j = 0; j + 1 < tops.size(); ++j)
      out.push_back({true,
                     {tops[j], MUV(tops[j]) + 1},
                     {tops[j + 1], MUV(tops[j + 1]) + 1},
                     TwinRule::case_v});
  }
  return out;
}

}  // namespace

AlmostTwinCells find_almost_twin_in_shape(const Shape& s) {
  Poset p = shape_to_poset(s);
  if (is_chain(p))
    throw std::invalid_argument(
        "the cell poset is a chain; no almost-twin pair exists");
  std::vector<Cell> cells = shape_cells(s);
  std::map<std::pair<int, int>, int> index;  // cell -> 1-based element
  for (int i = 0; i < (int)cells.size(); ++i)
    index[{cells[i].row, cells[i].col}] = i + 1;

  auto verified = [&](const CaseResult& cand) {
    if (!cand.found) return false;
    auto ix = index.find({cand.x.row, cand.x.col});
    auto iy = index.find({cand.y.row, cand.y.col});
    if (ix == index.end() || iy == index.end()) return false;
    return is_almost_twin_pair(p, ix->second, iy->second);
  };

  std::vector<CaseResult> cands;
  std::vector<SubShape> comps = connected_components(s);
  if (comps.size() > 1) {
    // Disconnected: solve the first non-chain component, translated back.
    bool solved = false;
    for (const SubShape& comp : comps) {
      Poset sub = shape_to_poset(comp.shape);
      if (is_chain(sub)) continue;
      AlmostTwinCells inner = find_almost_twin_in_shape(comp.shape);
      CaseResult cand;
      cand.found = true;
      cand.rule = inner.rule;
      cand.x = {inner.x.row + comp.row_shift, inner.x.col + comp.col_shift};
      cand.y = {inner.y.row + comp.row_shift, inner.y.col + comp.col_shift};
      cands.push_back(cand);
      solved = true;
      break;
    }
    if (!solved) {
      // Every component is a chain: the top cells of the first two
      // components are almost twins (their up-sets are empty and their
      // down-set difference is the rest of each chain).
      Cell top0 = {comps[0].shape.rows() + comps[0].row_shift,
                   comps[0].shape.row_end(comps[0].shape.rows()) +
                       comps[0].col_shift};
      Cell top1 = {comps[1].shape.rows() + comps[1].row_shift,
                   comps[1].shape.row_end(comps[1].shape.rows()) +
                       comps[1].col_shift};
      cands.push_back({true, top0, top1, TwinRule::chain_components});
    }
  } else if (s.inner.empty()) {
    if (!s.shifted) {
      cands.push_back({true, {1, 2}, {2, 1}, TwinRule::straight});
    } else {
      // Shifted straight, not a chain: at least two rows and a first row of
      // length >= 3, so cells (1,3) and (2,2) exist.
      cands.push_back({true, {1, 3}, {2, 2}, TwinRule::shifted_straight});
    }
  } else if (!s.shifted) {
    cands = left_justified_candidates(s.outer, s.inner);
  } else {
    cands = shifted_skew_candidates(s);
  }

  for (CaseResult& cand : cands)
    if (verified(cand)) {
      if (cand.y < cand.x) std::swap(cand.x, cand.y);
      return {cand.x, cand.y, cand.rule};
    }
  // No structural rule applied (or its candidate failed verification):
  // exhaustive search, row-major order.
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      if (is_almost_twin_pair(p, i, j))
        return {cells[i - 1], cells[j - 1], TwinRule::fallback_search};
  throw std::logic_error(
      "no almost-twin pair found in a non-chain diagram");
}

namespace {

// Enumerates skew descriptions row by row: weakly (strictly, if shifted)
// decreasing outer parts with a nested inner shape, bounded by a cell budget
// and a column box. Canonical position: every row has at least one cell (a
// description with an empty row always splits into two order-disjoint
// pieces, both of which the corpus already carries), the last row is
// unindented, and inner parts stop (reach zero) at most once. Straight kinds
// (empty inner) are generated separately.
void gen_skew(int max_cells, int max_rows, int max_width, bool shifted,
              std::vector<int>& outer, std::vector<int>& inner, int used,
              std::vector<Shape>& out) {
  int depth = (int)outer.size();
  if (depth > 0 && inner.back() == 0) {
    std::vector<int> in = inner;
    while (!in.empty() && in.back() == 0) in.pop_back();
    if (!in.empty()) out.push_back(make_shape(outer, in, shifted));
  }
  if (depth == max_rows) return;
  int lam_hi = depth == 0 ? max_width
                          : (shifted ? outer.back() - 1 : outer.back());
  for (int lam = lam_hi; lam >= 1; --lam) {
    int mu_hi;
    if (depth == 0 || inner.back() >= lam) {
      mu_hi = lam - 1;  // keep every row non-empty
    } else if (inner.back() == 0) {
      mu_hi = 0;  // inner parts may not resume once they stop
    } else {
      mu_hi = shifted ? inner.back() - 1 : inner.back();
    }
    for (int mu = mu_hi; mu >= 0; --mu) {
      int cells = lam - mu;
      if (used + cells > max_cells) continue;
      outer.push_back(lam);
      inner.push_back(mu);
      gen_skew(max_cells, max_rows, max_width, shifted, outer, inner,
               used + cells, out);
      outer.pop_back();
      inner.pop_back();
    }
  }
}

void gen_straight(int max_cells, bool shifted, std::vector<int>& parts,
                  int used, std::vector<Shape>& out) {
  if (!parts.empty()) out.push_back(make_shape(parts, {}, shifted));
  int hi = parts.empty() ? max_cells
                         : (shifted ? parts.back() - 1 : parts.back());
  for (int lam = hi; lam >= 1; --lam) {
    if (used + lam > max_cells) continue;
    parts.push_back(lam);
    gen_straight(max_cells, shifted, parts, used + lam, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Shape> all_shapes(int max_cells) {
  if (max_cells < 1 || max_cells > kMaxElements)
    throw std::invalid_argument("cell budget out of range");
  std::vector<Shape> out;
  std::vector<int> parts;
  gen_straight(max_cells, false, parts, 0, out);
  gen_straight(max_cells, true, parts, 0, out);
  std::vector<int> outer, inner;
  gen_skew(max_cells, max_cells, max_cells, false, outer, inner, 0, out);
  gen_skew(max_cells, max_cells, 2 * max_cells - 1, true, outer, inner, 0,
           out);
  return out;
}

}  // namespace balance
