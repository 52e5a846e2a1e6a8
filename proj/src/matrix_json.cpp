#include "qtwo/matrix_json.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace qtwo {

using nlohmann::json;

namespace {

json entry_to_json(const SymMatrix& m, int i, int j) {
  if (m.mode() == EntryMode::Float) return json{{"f", m.f(i, j)}};
  const QuadElem& x = m.x(i, j);
  if (x.is_rational()) {
    Rational r = x.rational_part();
    return json{{"rat", {r.num(), r.den()}}};
  }
  json terms = json::object();
  for (const auto& [prod, coeff] : x.coords()) {
    terms[std::to_string(prod)] = {coeff.num(), coeff.den()};
  }
  return json{{"quad", terms}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::runtime_error("rational entry must be a [num, den] pair");
  }
  return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

QuadElem exact_entry_from_json(const json& j) {
  if (j.contains("rat")) return QuadElem(rational_from_json(j.at("rat")));
  if (!j.contains("quad")) {
    throw std::runtime_error("exact entry must have a 'rat' or 'quad' key");
  }
  QuadElem x;
  for (const auto& [key, coeff] : j.at("quad").items()) {
    std::int64_t prod = std::stoll(key);
    x += QuadElem::term(rational_from_json(coeff), prod);
  }
  return x;
}

}  // namespace

json matrix_to_json(const SymMatrix& m) {
  json j;
  j["order"] = m.order();
  j["mode"] = m.mode() == EntryMode::Exact ? "exact" : "float";
  if (!m.scale().is_one()) {
    j["scale"] = {{"num", m.scale().c.num()},
                  {"den", m.scale().c.den()},
                  {"rad", m.scale().r}};
  }
  std::set<std::int64_t> field;
  json entries = json::array();
  for (int i = 0; i < m.order(); ++i) {
    for (int k = i; k < m.order(); ++k) {
      entries.push_back(entry_to_json(m, i, k));
      if (m.mode() == EntryMode::Exact) {
        for (std::int64_t p : m.x(i, k).generators()) field.insert(p);
      }
    }
  }
  if (!field.empty()) j["field"] = field;
  j["entries"] = std::move(entries);
  return j;
}

SymMatrix matrix_from_json(const json& j) {
  int n = j.at("order").get<int>();
  if (n < 1) throw std::runtime_error("matrix order must be positive");
  std::string mode_str = j.at("mode").get<std::string>();
  EntryMode mode;
  if (mode_str == "exact") {
    mode = EntryMode::Exact;
  } else if (mode_str == "float") {
    mode = EntryMode::Float;
  } else {
    throw std::runtime_error("unknown matrix mode '" + mode_str + "'");
  }
  SymMatrix m(n, mode);
  if (j.contains("scale")) {
    const json& s = j.at("scale");
    m.set_scale(Scale{Rational(s.at("num").get<std::int64_t>(),
                               s.at("den").get<std::int64_t>()),
                      s.at("rad").get<std::int64_t>()});
  }
  const json& entries = j.at("entries");
  std::size_t want = static_cast<std::size_t>(n) * (n + 1) / 2;
  if (!entries.is_array() || entries.size() != want) {
    throw std::runtime_error("matrix of order " + std::to_string(n) +
                             " needs " + std::to_string(want) + " entries, got " +
                             std::to_string(entries.size()));
  }
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k, ++pos) {
      const json& e = entries[pos];
      if (mode == EntryMode::Float) {
        m.set_f(i, k, e.at("f").get<double>());
      } else {
        m.set_x(i, k, exact_entry_from_json(e));
      }
    }
  }
  return m;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace qtwo
