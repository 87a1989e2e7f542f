#pragma once

#include <string>
#include <vector>

#include "freecrit/field.hpp"
#include "freecrit/report.hpp"

namespace freecrit {

/// A worked example stored as a bundle document whose "expected" member
/// lists key/value/source triples; source is one of "paper", "derived",
/// "trivial".
struct Fixture {
  std::string name;
  std::string description;
  std::string document;
};

struct FixtureCheck {
  std::string key;
  std::string expected;
  std::string actual;
  std::string source;
  bool passed = false;
};

struct FixtureOutcome {
  std::string name;
  std::string field;
  std::vector<FixtureCheck> checks;
  std::vector<CheckReport> reports;
  std::string error;  // set when the fixture could not be evaluated

  bool passed() const;
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

const std::vector<Fixture>& paper_fixtures();
const Fixture* find_fixture(const std::string& name);

FixtureOutcome run_fixture(const Fixture& fx, const Field& field);

/// Machine-readable summary of several outcomes.
std::string outcomes_json(const std::vector<FixtureOutcome>& outcomes, int indent = 2);

}  // namespace freecrit
