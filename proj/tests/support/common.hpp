#pragma once

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "freecrit/fixtures.hpp"
#include "freecrit/io.hpp"
#include "freecrit/linalg.hpp"

namespace freecrit::testing {

inline Matrix mat(const Field& f, const std::vector<std::vector<long>>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, f.from_int(rows[i][j]));
  return m;
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_percent = 30) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % 100) >= zero_percent) m.set(i, j, random_scalar(f, rng));
  return m;
}

inline InstanceBundle fixture_bundle(const std::string& name, const Field& field) {
  Loader loader(field);
  return loader.bundle(find_fixture(name)->document);
}

/// Test suites parameterised over the two supported kinds of field.
class BothFields : public ::testing::TestWithParam<std::string> {
 protected:
  Field field() const { return Field::parse(GetParam()); }
};

inline std::string field_label(const ::testing::TestParamInfo<std::string>& info) {
  return info.param == "rational" ? "Q" : "GF101";
}

}  // namespace freecrit::testing

#define FREECRIT_BOTH_FIELDS(suite) \
  INSTANTIATE_TEST_SUITE_P(Fields, suite, ::testing::Values("gfp:101", "rational"), freecrit::testing::field_label)
