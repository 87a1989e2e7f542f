#include "freecrit/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace freecrit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "n/a";
  }
  return "?";
}

Verdict conjunction(const std::vector<Verdict>& vs) {
  Verdict out = Verdict::pass;
  for (auto v : vs) {
    if (v == Verdict::fail) return Verdict::fail;
    if (v == Verdict::not_applicable) out = v;
  }
  return out;
}

Check& CheckReport::hypothesis(std::string name, std::string value, std::string threshold, Verdict v, std::string note) {
  hypotheses.push_back({std::move(name), std::move(value), std::move(threshold), v, std::move(note)});
  return hypotheses.back();
}

Check& CheckReport::conclusion(std::string name, std::string value, std::string threshold, Verdict v, std::string note) {
  conclusions.push_back({std::move(name), std::move(value), std::move(threshold), v, std::move(note)});
  return conclusions.back();
}

const Check* CheckReport::find(const std::string& name) const {
  for (const auto& c : hypotheses)
    if (c.name == name) return &c;
  for (const auto& c : conclusions)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Verdict all_of(const std::vector<Check>& cs) {
  std::vector<Verdict> vs;
  for (const auto& c : cs) vs.push_back(c.verdict);
  return conjunction(vs);
}

}  // namespace

Verdict CheckReport::hypotheses_verdict() const { return all_of(hypotheses); }
Verdict CheckReport::conclusions_verdict() const { return all_of(conclusions); }
Verdict CheckReport::verdict() const { return conjunction({hypotheses_verdict(), conclusions_verdict()}); }

bool CheckReport::refutes() const {
  return hypotheses_verdict() == Verdict::pass && conclusions_verdict() == Verdict::fail;
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << title << ": " << to_string(verdict()) << "\n";
  auto section = [&](const char* head, const std::vector<Check>& cs) {
    if (cs.empty()) return;
    out << "  " << head << ":\n";
    for (const auto& c : cs) {
      out << "    [" << to_string(c.verdict) << "] " << c.name << " = " << c.value;
      if (!c.threshold.empty()) out << " (want " << c.threshold << ")";
      if (!c.note.empty()) out << "; " << c.note;
      out << "\n";
    }
  };
  section("hypotheses", hypotheses);
  section("conclusions", conclusions);
  for (const auto& f : flags) out << "  flag: " << f << "\n";
  for (const auto& c : caveats) out << "  caveat: " << c << "\n";
  return out.str();
}

std::string CheckReport::to_json(int indent) const {
  using json = nlohmann::ordered_json;
  auto checks = [](const std::vector<Check>& cs) {
    json arr = json::array();
    for (const auto& c : cs)
      arr.push_back({{"name", c.name},
                     {"value", c.value},
                     {"threshold", c.threshold},
                     {"verdict", to_string(c.verdict)},
                     {"note", c.note}});
    return arr;
  };
  json j;
  j["title"] = title;
  j["verdict"] = to_string(verdict());
  j["hypotheses"] = checks(hypotheses);
  j["conclusions"] = checks(conclusions);
  j["flags"] = flags;
  j["caveats"] = caveats;
  return j.dump(indent);
}

}  // namespace freecrit
