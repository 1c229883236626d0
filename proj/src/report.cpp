#include "hankelff/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hankelff {

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["e"] = f.e();
  j["modulus"] = f.modulus();
  return j;
}

Json elem_to_json(const Field& f, uint32_t code) {
  if (f.e() == 1) return Json(code);
  return Json(f.repr(code));
}

Json poly_to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (uint32_t c : p.c) coeffs.push_back(elem_to_json(p.field, c));
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json seq_to_json(const SymbolSeq& s) {
  Json arr = Json::array();
  for (uint32_t c : s.a) arr.push_back(elem_to_json(s.field, c));
  return arr;
}

Json profile_to_json(const RhoPiProfile& p) {
  Json j;
  j["rank"] = p.rank;
  j["rho"] = p.rho;
  j["pi"] = p.pi;
  j["c1"] = p.c1;
  j["c2"] = p.c2;
  return j;
}

Json charpair_to_json(const CharPair& cp) {
  Json j;
  j["a1"] = poly_to_json(cp.a1);
  j["a2"] = poly_to_json(cp.a2);
  return j;
}

Json cyc_to_json(const CycInt& z) {
  Json j;
  j["p"] = z.p;
  j["coords"] = z.c;
  return j;
}

std::string rat_str(const BigRat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string int_str(const BigInt& v) { return v.str(); }

namespace {

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::map<std::string, std::string>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out[prefix] = scalar_str(v);
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string envelope_to_csv(const Json& envelope) {
  struct Line {
    std::string section;
    std::map<std::string, std::string> fields;
  };
  std::vector<Line> lines;
  auto add_section = [&](const char* name) {
    if (!envelope.contains(name)) return;
    for (const Json& row : envelope[name]) {
      Line ln;
      ln.section = name;
      flatten(row, "", ln.fields);
      lines.push_back(std::move(ln));
    }
  };
  add_section("rows");
  add_section("informational");
  add_section("failures");

  std::set<std::string> keys;
  for (const Line& ln : lines)
    for (const auto& [k, _] : ln.fields) keys.insert(k);

  std::ostringstream os;
  os << "section";
  for (const std::string& k : keys) os << "," << csv_escape(k);
  os << "\n";
  for (const Line& ln : lines) {
    os << ln.section;
    for (const std::string& k : keys) {
      os << ",";
      auto it = ln.fields.find(k);
      if (it != ln.fields.end()) os << csv_escape(it->second);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hankelff
