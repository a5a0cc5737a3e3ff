#include "ellbasis/io.hpp"

#include <charconv>
#include <sstream>

namespace ellbasis::io {

namespace {

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trimmed(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(Errc::FormatError, std::string("missing field ") + key);
  return j.at(key);
}

std::string str_of(const json& j) {
  if (!j.is_string()) raise(Errc::FormatError, "expected a decimal string");
  return j.get<std::string>();
}

}  // namespace

uint64_t parse_u64(const std::string& s0) {
  std::string s = trimmed(s0);
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) raise(Errc::FormatError, "not an integer: '" + s + "'");
  return v;
}

int64_t parse_i64(const std::string& s0) {
  std::string s = trimmed(s0);
  int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) raise(Errc::FormatError, "not an integer: '" + s + "'");
  return v;
}

json field_to_json(const BaseField& K) {
  json g = json::array();
  for (auto c : K.modulus()) g.push_back(std::to_string(c));
  return {{"p", std::to_string(K.p())}, {"m", K.m()}, {"g", g}};
}

BaseFieldPtr field_from_json(const json& j) {
  uint64_t p = parse_u64(str_of(member(j, "p")));
  const json& mj = member(j, "m");
  if (!mj.is_number_integer()) raise(Errc::FormatError, "field m must be an integer");
  int m = mj.get<int>();
  std::vector<uint64_t> g;
  const json& gj = member(j, "g");
  if (!gj.is_array()) raise(Errc::FormatError, "field g must be an array");
  for (const auto& c : gj) g.push_back(parse_u64(str_of(c)));
  if (static_cast<int>(g.size()) != m + 1) raise(Errc::FormatError, "field modulus degree differs from m");
  return BaseField::create(p, g);
}

json fq_to_json(const BaseField& K, Fq a) {
  json r = json::array();
  for (auto dgt : K.digits(a)) r.push_back(std::to_string(dgt));
  return r;
}

Fq fq_from_json(const BaseField& K, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != K.m()) raise(Errc::FormatError, "element must have m digits");
  std::vector<uint64_t> c;
  for (const auto& x : j) c.push_back(parse_u64(str_of(x)));
  return K.from_digits(c);
}

json vec_to_json(const BaseField& K, const FqVec& v) {
  json r = json::array();
  for (auto x : v) r.push_back(fq_to_json(K, x));
  return r;
}

FqVec vec_from_json(const BaseField& K, const json& j) {
  if (!j.is_array()) raise(Errc::FormatError, "expected an array of elements");
  FqVec v;
  for (const auto& x : j) v.push_back(fq_from_json(K, x));
  return v;
}

json poly_to_json(const BaseField& K, const FqPoly& f) { return vec_to_json(K, f.c); }

FqPoly poly_from_json(const BaseField& K, const json& j) {
  FqPoly f{vec_from_json(K, j)};
  if (!f.c.empty() && K.is_zero(f.c.back())) raise(Errc::FormatError, "polynomial has a zero leading coefficient");
  return f;
}

json ext_to_json(const ExtField& L, const ExtElement& a) { return vec_to_json(L.base(), a.c); }

ExtElement ext_from_json(const ExtField& L, const json& j) {
  FqVec c = vec_from_json(L.base(), j);
  if (static_cast<int>(c.size()) != L.degree()) raise(Errc::FormatError, "element of L must have d coefficients");
  return L.from_coords(c);
}

json point_to_json(const BaseField& K, const FqPoint& P) {
  if (P.inf) return "O";
  return json::array({fq_to_json(K, P.x), fq_to_json(K, P.y)});
}

FqPoint point_from_json(const BaseField& K, const json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return FqPoint::infinity();
  if (!j.is_array() || j.size() != 2) raise(Errc::FormatError, "point must be [x, y] or \"O\"");
  return FqPoint::affine(fq_from_json(K, j[0]), fq_from_json(K, j[1]));
}

json curve_to_json(const FqCurve& E) {
  const BaseField& K = E.field();
  return {{"field", field_to_json(K)}, {"a1", fq_to_json(K, E.a1())}, {"a2", fq_to_json(K, E.a2())},
          {"a3", fq_to_json(K, E.a3())}, {"a4", fq_to_json(K, E.a4())}, {"a6", fq_to_json(K, E.a6())}};
}

FqCurve curve_from_json(const BaseFieldPtr& K, const json& j) {
  if (member(j, "field") != field_to_json(*K)) raise(Errc::FormatError, "curve field differs from the bundle field");
  return FqCurve(K, fq_from_json(*K, member(j, "a1")), fq_from_json(*K, member(j, "a2")),
                 fq_from_json(*K, member(j, "a3")), fq_from_json(*K, member(j, "a4")),
                 fq_from_json(*K, member(j, "a6")));
}

json isogeny_to_json(const Isogeny& I) {
  const BaseField& K = I.domain.field();
  return {{"degree", I.degree},
          {"x_num", poly_to_json(K, I.x_num)},
          {"x_den", poly_to_json(K, I.x_den)},
          {"y_num1", poly_to_json(K, I.y_num1)},
          {"y_num0", poly_to_json(K, I.y_num0)},
          {"y_den", poly_to_json(K, I.y_den)}};
}

json counts_to_json(const OpCounts& c) {
  return {{"adds", c.adds},         {"mults", c.mults},       {"invs", c.invs},
          {"a1_adds", c.a1_adds}, {"a1_mults", c.a1_mults}, {"a3_adds", c.a3_adds}};
}

std::string vec_to_csv(const BaseField& K, const FqVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += K.to_string(v[i]);
  }
  return s;
}

FqVec vec_from_csv(const BaseField& K, const std::string& s) {
  if (trimmed(s).empty()) raise(Errc::FormatError, "empty vector");
  FqVec v;
  for (const auto& part : split(s, ',')) {
    auto dg = split(part, '/');
    if (static_cast<int>(dg.size()) != K.m()) raise(Errc::FormatError, "coordinate '" + part + "' must have m digits");
    std::vector<uint64_t> c;
    for (const auto& x : dg) {
      uint64_t y = parse_u64(x);
      if (y >= K.p()) raise(Errc::FormatError, "digit out of range: " + x);
      c.push_back(y);
    }
    v.push_back(K.from_digits(c));
  }
  return v;
}

std::vector<int64_t> ints_from_csv(const std::string& s) {
  std::vector<int64_t> r;
  if (trimmed(s).empty()) raise(Errc::FormatError, "empty list");
  for (const auto& part : split(s, ',')) r.push_back(parse_i64(part));
  return r;
}

}  // namespace ellbasis::io
