#include "laumon/json_io.hpp"

namespace laumon::io {

json to_json(const FinitePattern& p) {
  json j;
  j["kind"] = "finite";
  j["n"] = p.n;
  j["d"] = p.rows;
  return j;
}

json to_json(const AffinePattern& p) {
  json j;
  j["kind"] = "affine";
  j["n"] = p.n;
  json ls = json::array();
  for (const auto& l : p.lambdas) ls.push_back(l.parts);
  j["lambdas"] = std::move(ls);
  return j;
}

json to_json(const CharPoly& c) {
  json arr = json::array();
  for (const auto& [k, v] : c.terms()) {
    json t;
    json te = json::array();
    for (int i = 0; i < kMaxXVars; ++i) te.push_back(k.t[i]);
    t["t_exp"] = std::move(te);
    t["q_exp_doubled"] = k.q2;
    t["qp_exp"] = k.qp;
    t["coeff"] = std::stoll(v.get_str());
    arr.push_back(std::move(t));
  }
  return arr;
}

json to_json(const RelationReport& r, bool only_failures) {
  json arr = json::array();
  for (const auto& res : r.results) {
    if (only_failures && res.pass) continue;
    json t;
    t["relation"] = res.relation;
    t["indices"] = res.indices;
    t["basis_pattern"] = res.basis;
    t["status"] = res.pass ? "pass" : "fail";
    if (!res.pass) t["lhs_minus_rhs"] = res.diff;
    arr.push_back(std::move(t));
  }
  return arr;
}

FinitePattern finite_from_json(const json& j) {
  FinitePattern p;
  p.n = j.at("n").get<int>();
  p.rows = j.at("d").get<std::vector<std::vector<int>>>();
  if (!p.is_valid()) throw std::invalid_argument("invalid finite pattern");
  return p;
}

AffinePattern affine_from_json(const json& j) {
  AffinePattern p;
  p.n = j.at("n").get<int>();
  for (const auto& l : j.at("lambdas"))
    p.lambdas.push_back(Partition(l.get<std::vector<int>>()));
  if (!p.is_valid()) throw std::invalid_argument("invalid affine pattern");
  return p;
}

}  // namespace laumon::io
