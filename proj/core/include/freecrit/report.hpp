#pragma once

#include <string>
#include <vector>

namespace freecrit {

enum class Verdict { pass, fail, not_applicable };

const char* to_string(Verdict v);
/// fail beats not_applicable beats pass.
Verdict conjunction(const std::vector<Verdict>& vs);
inline Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

struct Check {
  std::string name;
  std::string value;
  std::string threshold;
  Verdict verdict = Verdict::not_applicable;
  std::string note;
};

/// Named hypothesis and conclusion checks; the verdict is their conjunction.
struct CheckReport {
  std::string title;
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  std::vector<std::string> caveats;
  std::vector<std::string> flags;

  Check& hypothesis(std::string name, std::string value, std::string threshold, Verdict v, std::string note = {});
  Check& conclusion(std::string name, std::string value, std::string threshold, Verdict v, std::string note = {});
  const Check* find(const std::string& name) const;

  Verdict hypotheses_verdict() const;
  Verdict conclusions_verdict() const;
  Verdict verdict() const;
  /// Hypotheses hold but a conclusion fails.
  bool refutes() const;

  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

}  // namespace freecrit
