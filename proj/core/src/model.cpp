#include "lhv/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lhv {

using nlohmann::json;

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const Issue& is) { return is.code == code; });
}

namespace {

void add(ValidationReport* r, Severity sev, std::string code, std::string msg) {
  if (sev == Severity::Error) r->ok = false;
  r->issues.push_back({sev, std::move(code), std::move(msg)});
}

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

ValidationReport validate_spec(const ModelSpec& spec) {
  ValidationReport report;
  const int n = spec.n_primary;

  if (n < 1) {
    add(&report, Severity::Error, "BAD_N",
        "n_primary must be >= 1, got " + std::to_string(n));
  }
  if (static_cast<int>(spec.periods.size()) != n) {
    add(&report, Severity::Error, "BAD_PERIOD",
        "expected " + std::to_string(n) + " periods, got " +
            std::to_string(spec.periods.size()));
  }
  for (size_t i = 0; i < spec.periods.size(); ++i) {
    if (spec.periods[i] < 2) {
      add(&report, Severity::Error, "BAD_PERIOD",
          "L_" + std::to_string(i) + " = " + std::to_string(spec.periods[i]) +
              " must be >= 2");
    }
  }
  if (!(spec.delta_t > 0)) {
    add(&report, Severity::Error, "BAD_DELTA_T", "delta_t must be positive");
  }
  if (spec.cbit_doubled && n % 2 != 0) {
    add(&report, Severity::Error, "BAD_CBIT",
        "cbit_doubled requires an even number of primary states");
  }

  const bool periods_usable =
      static_cast<int>(spec.periods.size()) == n &&
      std::all_of(spec.periods.begin(), spec.periods.end(),
                  [](long long l) { return l >= 2; });

  if (periods_usable) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        long long g = std::gcd(spec.periods[i], spec.periods[j]);
        if (g != 1) {
          add(&report, Severity::Error, "NOT_COPRIME",
              "gcd(L_" + std::to_string(i) + ", L_" + std::to_string(j) +
                  ") = " + std::to_string(g));
        }
      }
    }
  }

  std::map<std::pair<int, int>, std::set<std::pair<long long, long long>>> sites;
  std::vector<const CrossingPoint*> usable;
  for (const CrossingPoint& c : spec.crossings) {
    if (!(0 <= c.i && c.i < c.j && c.j < n)) {
      add(&report, Severity::Error, "BAD_PAIR",
          "crossing pair " + pair_str(c.i, c.j) + " must satisfy 0 <= i < j < N");
      continue;
    }
    if (c.sign != 1 && c.sign != -1) {
      add(&report, Severity::Error, "BAD_SIGN",
          "crossing on pair " + pair_str(c.i, c.j) + " has sign " +
              std::to_string(c.sign));
    }
    if (!periods_usable) continue;
    if (c.a < 0 || c.a >= spec.periods[c.i] || c.b < 0 ||
        c.b >= spec.periods[c.j]) {
      add(&report, Severity::Error, "SITE_OUT_OF_RANGE",
          "crossing site (" + std::to_string(c.a) + "," + std::to_string(c.b) +
              ") out of range for pair " + pair_str(c.i, c.j) + " with L = (" +
              std::to_string(spec.periods[c.i]) + "," +
              std::to_string(spec.periods[c.j]) + ")");
      continue;
    }
    if (!sites[{c.i, c.j}].insert({c.a, c.b}).second) {
      add(&report, Severity::Error, "DUPLICATE_SITE",
          "pair " + pair_str(c.i, c.j) + " has two crossings at site (" +
              std::to_string(c.a) + "," + std::to_string(c.b) + ")");
      continue;
    }
    usable.push_back(&c);
  }

  if (periods_usable) {
    for (const auto& [pair, s] : sites) {
      auto [i, j] = pair;
      const long long sub = spec.periods[i] * spec.periods[j];
      const auto count = static_cast<long long>(s.size());
      if (count > sub) {
        add(&report, Severity::Error, "TOO_MANY_CROSSINGS",
            "pair " + pair_str(i, j) + " has " + std::to_string(count) +
                " crossings on a sublattice of " + std::to_string(sub));
      } else if (static_cast<double>(count) / static_cast<double>(sub) > 0.1) {
        add(&report, Severity::Warning, "PERTURBATIVITY",
            "pair " + pair_str(i, j) + " has n/(L_i L_j) = " +
                std::to_string(static_cast<double>(count) /
                               static_cast<double>(sub)) +
                " > 0.1; first-order effective dynamics may be inaccurate");
      }
    }

    // Crossings of pairs sharing a state fire on the same step whenever
    // their coordinates on the shared axis coincide; the swap order is
    // then the canonical tie-break.
    bool overlap_warned = false;
    for (size_t x = 0; x < usable.size() && !overlap_warned; ++x) {
      for (size_t y = x + 1; y < usable.size() && !overlap_warned; ++y) {
        const CrossingPoint& c1 = *usable[x];
        const CrossingPoint& c2 = *usable[y];
        if (c1.i == c2.i && c1.j == c2.j) continue;
        for (int s : {c1.i, c1.j}) {
          if (s != c2.i && s != c2.j) continue;
          long long k1 = (s == c1.i) ? c1.a : c1.b;
          long long k2 = (s == c2.i) ? c2.a : c2.b;
          if (k1 == k2) {
            add(&report, Severity::Warning, "SIMULTANEOUS_OVERLAP",
                "crossings on pairs " + pair_str(c1.i, c1.j) + " and " +
                    pair_str(c2.i, c2.j) +
                    " can fire on the same step (shared state " +
                    std::to_string(s) + "); canonical swap order applies");
            overlap_warned = true;
          }
        }
      }
    }
  }

  return report;
}

namespace {

const std::set<std::string> kTopFields = {"n_primary", "periods", "delta_t",
                                          "cbit_doubled", "crossings"};
const std::set<std::string> kCrossingFields = {"pair", "site", "sign"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw SpecError("unknown field \"" + key + "\" in " + where);
    }
  }
}

}  // namespace

ModelSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("spec document must be a JSON object");
  reject_unknown(doc, kTopFields, "spec");

  ModelSpec spec;
  if (!doc.contains("n_primary") || !doc["n_primary"].is_number_integer()) {
    throw SpecError("missing or non-integer field \"n_primary\"");
  }
  spec.n_primary = doc["n_primary"].get<int>();

  if (!doc.contains("periods") || !doc["periods"].is_array()) {
    throw SpecError("missing or non-array field \"periods\"");
  }
  for (const auto& v : doc["periods"]) {
    if (!v.is_number_integer()) {
      throw SpecError("field \"periods\" must contain integers");
    }
    spec.periods.push_back(v.get<long long>());
  }

  if (doc.contains("delta_t")) {
    if (!doc["delta_t"].is_number()) {
      throw SpecError("field \"delta_t\" must be a number");
    }
    spec.delta_t = doc["delta_t"].get<double>();
  }
  if (doc.contains("cbit_doubled")) {
    if (!doc["cbit_doubled"].is_boolean()) {
      throw SpecError("field \"cbit_doubled\" must be a boolean");
    }
    spec.cbit_doubled = doc["cbit_doubled"].get<bool>();
  }

  if (doc.contains("crossings")) {
    if (!doc["crossings"].is_array()) {
      throw SpecError("field \"crossings\" must be an array");
    }
    for (const auto& c : doc["crossings"]) {
      if (!c.is_object()) throw SpecError("each crossing must be an object");
      reject_unknown(c, kCrossingFields, "crossing");
      if (!c.contains("pair") || !c["pair"].is_array() || c["pair"].size() != 2 ||
          !c["pair"][0].is_number_integer() || !c["pair"][1].is_number_integer()) {
        throw SpecError("crossing field \"pair\" must be [i, j]");
      }
      if (!c.contains("site") || !c["site"].is_array() || c["site"].size() != 2 ||
          !c["site"][0].is_number_integer() || !c["site"][1].is_number_integer()) {
        throw SpecError("crossing field \"site\" must be [a, b]");
      }
      if (!c.contains("sign") || !c["sign"].is_number_integer()) {
        throw SpecError("crossing field \"sign\" must be an integer +1 or -1");
      }
      CrossingPoint cp;
      cp.i = c["pair"][0].get<int>();
      cp.j = c["pair"][1].get<int>();
      cp.a = c["site"][0].get<long long>();
      cp.b = c["site"][1].get<long long>();
      cp.sign = c["sign"].get<int>();
      spec.crossings.push_back(cp);
    }
  }
  return spec;
}

std::string serialize_spec(const ModelSpec& spec) {
  json doc;
  doc["n_primary"] = spec.n_primary;
  doc["periods"] = spec.periods;
  doc["delta_t"] = spec.delta_t;
  doc["cbit_doubled"] = spec.cbit_doubled;
  doc["crossings"] = json::array();
  for (const CrossingPoint& c : spec.crossings) {
    doc["crossings"].push_back(
        {{"pair", {c.i, c.j}}, {"site", {c.a, c.b}}, {"sign", c.sign}});
  }
  return doc.dump(2) + "\n";
}

ModelSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

void save_spec_file(const ModelSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError("cannot write spec file: " + path);
  out << serialize_spec(spec);
}

}  // namespace lhv
