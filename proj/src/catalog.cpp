#include "latproj/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace latproj {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Weight-8 supports of the Leech basis rows carrying entry 2 (plus column 1
// where marked).  Together with 8e₁, the 4e₁+4eᵢ rows, and the final
// (−3,1,…,1) row these are the rows of the standard triangular Leech basis.
struct TwoRow {
  int row;
  bool col1;
  std::array<int, 8> support;  // columns (1-based) past column 1; 0 = unused
};

constexpr TwoRow kLeechTwoRows[] = {
    {8, true, {2, 3, 4, 5, 6, 7, 8, 0}},
    {12, true, {2, 3, 4, 9, 10, 11, 12, 0}},
    {14, true, {2, 5, 6, 9, 10, 13, 14, 0}},
    {15, true, {3, 5, 7, 9, 11, 13, 15, 0}},
    {16, true, {4, 5, 8, 9, 12, 13, 16, 0}},
    {18, true, {3, 5, 8, 9, 10, 17, 18, 0}},
    {19, true, {4, 5, 6, 9, 11, 17, 19, 0}},
    {20, true, {2, 5, 7, 9, 12, 17, 20, 0}},
    {21, false, {2, 3, 4, 5, 9, 13, 17, 21}},
    {22, false, {9, 10, 13, 14, 17, 18, 21, 22}},
    {23, false, {9, 11, 13, 15, 17, 19, 21, 23}},
};

}  // namespace

Mat e8_generator() {
  Mat g(8, 8);
  g(0, 0) = 2;
  for (size_t i = 1; i < 7; ++i) {
    g(i, i - 1) = -1;
    g(i, i) = 1;
  }
  for (size_t j = 0; j < 8; ++j) g(7, j) = Rat(1, 2);
  return g;
}

Mat leech_generator() {
  Mat t(24, 24);
  t(0, 0) = 8;
  for (int i : {2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 17}) {
    t(i - 1, 0) = 4;
    t(i - 1, i - 1) = 4;
  }
  for (const TwoRow& r : kLeechTwoRows) {
    if (r.col1) t(r.row - 1, 0) = 2;
    for (int c : r.support)
      if (c) t(r.row - 1, c - 1) = 2;
  }
  t(23, 0) = -3;
  for (size_t j = 1; j < 24; ++j) t(23, j) = 1;
  return t;
}

Mat dm_star_generator(size_t m) {
  if (m < 3) throw ShapeError("D_m* generator needs m >= 3");
  Mat g(m, m);
  for (size_t i = 0; i + 1 < m; ++i) g(i, i) = 1;
  for (size_t j = 0; j < m; ++j) g(m - 1, j) = Rat(1, 2);
  return g;
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  out.push_back({"2Z+Z", Mat{{4, 0}, {0, 1}}, "rectangular plane lattice 2Z x Z"});
  out.push_back({"A2", Mat{{2, 1}, {1, 2}}, "hexagonal lattice"});
  out.push_back({"5_1", Mat{{3, 1}, {1, 2}}, "determinant-5 plane lattice"});
  {
    Mat d3 = from_int_rows({{-1, -1, 0}, {1, -1, 0}, {0, 1, -1}});
    out.push_back({"D3", gram_of(d3), "face-centered cubic (checkerboard basis)"});
  }
  out.push_back({"D3*", gram_of(dm_star_generator(3)), "body-centered cubic, glue basis"});
  {
    Mat d4 = from_int_rows({{-1, -1, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}});
    out.push_back({"D4", gram_of(d4), "checkerboard lattice in dimension 4"});
  }
  out.push_back({"E8", gram_of(e8_generator()),
                 "even unimodular lattice in dimension 8; basis per Conway & Sloane"});
  out.push_back({"Leech", gram_of(leech_generator()),
                 "24-dimensional Leech lattice, integer basis scaled by sqrt(8); "
                 "Gram/8 is even unimodular (basis per Conway & Sloane)"});
  return out;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
  const std::string key = lower(name);
  if (key.size() >= 2 && key[0] == 'z') {
    // Cubic lattice of any dimension: "Z<d>".
    size_t d = 0;
    for (size_t i = 1; i < key.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(key[i]))) { d = 0; break; }
      d = d * 10 + (key[i] - '0');
      if (d > 64) throw ShapeError("cubic lattice dimension too large");
    }
    if (d >= 1)
      return CatalogEntry{"Z" + std::to_string(d), Mat::identity(d), "cubic lattice"};
  }
  for (auto& e : catalog_entries())
    if (lower(e.name) == key) return e;
  return std::nullopt;
}

}  // namespace latproj
