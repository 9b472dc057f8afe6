#pragma once

// Shared reference designs used across the suites.
//
// The 16-run fixture is the covering star of PG(3,2) with three rank-3 rays
// and nucleus <AB, CD>; its derived 8-level array and the expected entries
// are frozen reference values. The 9-run fixture is the classic 3-level
// strength-2 orthogonal array in four factors, together with one known
// valid rank expansion of it.

#include <vector>

#include "starlhd/design_array.hpp"
#include "starlhd/flat.hpp"
#include "starlhd/noa.hpp"
#include "starlhd/star.hpp"
#include "starlhd/types.hpp"

namespace fixtures {

inline starlhd::Star star16() {
  return starlhd::star_from_rays({starlhd::span_labels(4, {"A", "B", "ACD"}),
                                  starlhd::span_labels(4, {"C", "D", "ABC"}),
                                  starlhd::span_labels(4, {"AC", "BC", "AD"})});
}

/// Ray generators of star16 in its construction order.
inline starlhd::GeneratorAssignment gens16() {
  return starlhd::GeneratorAssignment::from_labels(
      4, {{"A", "B", "ACD"}, {"C", "D", "ABC"}, {"AC", "BC", "AD"}});
}

/// Expected 16 x 3 array derived from star16 with gens16 (columns frozen).
inline starlhd::IntMatrix noa16_expected() {
  const std::vector<int> col1 = {0, 1, 1, 0, 2, 3, 3, 2, 5, 4, 4, 5, 7, 6, 6, 7};
  const std::vector<int> col2 = {0, 2, 5, 7, 1, 3, 4, 6, 1, 3, 4, 6, 0, 2, 5, 7};
  const std::vector<int> col3 = {0, 1, 6, 7, 2, 3, 4, 5, 5, 4, 3, 2, 7, 6, 1, 0};
  starlhd::IntMatrix values(16, std::vector<int>(3, 0));
  for (int i = 0; i < 16; ++i) {
    values[i] = {col1[i], col2[i], col3[i]};
  }
  return values;
}

/// One known valid rank expansion of the 16-run array (each column a
/// permutation of 1..16 consistent with the array's cells).
inline starlhd::IntMatrix levels16_reference() {
  const std::vector<int> col1 = {1, 4, 3, 2, 5, 8, 7, 6, 11, 10, 9, 12, 16, 14, 13, 15};
  const std::vector<int> col2 = {2, 6, 11, 15, 3, 8, 9, 14, 4, 7, 10, 13, 1, 5, 12, 16};
  const std::vector<int> col3 = {1, 4, 14, 15, 6, 8, 10, 12, 11, 9, 7, 5, 16, 13, 3, 2};
  starlhd::IntMatrix values(16, std::vector<int>(3, 0));
  for (int i = 0; i < 16; ++i) {
    values[i] = {col1[i], col2[i], col3[i]};
  }
  return values;
}

/// Reference generator assignments on star16 with known guideline status.
inline starlhd::GeneratorAssignment gens16_g1_violating() {
  return starlhd::GeneratorAssignment::from_labels(
      4, {{"AB", "B", "ACD"}, {"D", "C", "ABC"}, {"AC", "BC", "CD"}});
}
inline starlhd::GeneratorAssignment gens16_g2_violating() {
  return starlhd::GeneratorAssignment::from_labels(
      4, {{"A", "B", "ABCD"}, {"C", "D", "ABCD"}, {"AC", "BD", "BC"}});
}
inline starlhd::GeneratorAssignment gens16_g3_violating() {
  return starlhd::GeneratorAssignment::from_labels(
      4, {{"A", "B", "ACD"}, {"C", "ABD", "ABC"}, {"AC", "AD", "BC"}});
}
inline starlhd::GeneratorAssignment gens16_compliant() {
  return starlhd::GeneratorAssignment::from_labels(
      4, {{"B", "ACD", "AB"}, {"D", "C", "ABC"}, {"AC", "BC", "CD"}});
}

/// The 9-run, 4-factor, 3-level strength-2 orthogonal array.
inline starlhd::DesignArray oa9() {
  const starlhd::IntMatrix values = {
      {0, 0, 0, 0}, {0, 1, 1, 2}, {0, 2, 2, 1},
      {1, 0, 1, 1}, {1, 1, 2, 0}, {1, 2, 0, 2},
      {2, 0, 2, 2}, {2, 1, 0, 1}, {2, 2, 1, 0},
  };
  return starlhd::DesignArray(values, {3, 3, 3, 3}, 2, starlhd::ArrayKind::exact_oa);
}

/// One known valid rank expansion of oa9.
inline starlhd::IntMatrix levels9_reference() {
  return {
      {1, 1, 2, 2}, {3, 6, 4, 7}, {2, 8, 7, 5},
      {6, 3, 5, 6}, {4, 4, 9, 3}, {5, 9, 3, 8},
      {9, 2, 8, 9}, {8, 5, 1, 4}, {7, 7, 6, 1},
  };
}

}  // namespace fixtures
