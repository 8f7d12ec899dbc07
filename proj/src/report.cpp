#include "graphent/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace graphent {

std::string format_number(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

namespace {

nlohmann::json gkdim_json(const ExtendedNat &n) {
  if (n.is_infinite())
    return "inf";
  return n.value().get_ui();
}

ExtendedNat gkdim_from_json(const nlohmann::json &j) {
  if (j.is_string())
    return ExtendedNat::from_string(j.get<std::string>());
  return ExtendedNat(j.get<unsigned long>());
}

} // namespace

nlohmann::json to_json(const GrowthTriple &t) {
  nlohmann::json j{{"algebra", to_string(t.algebra)},
                   {"dimension", t.dimension.to_string()},
                   {"gkdim", gkdim_json(t.gkdim)},
                   {"entropy", t.entropy},
                   {"method", to_string(t.method)},
                   {"class", t.growth_class}};
  if (t.bounds)
    j["bounds"] = {t.bounds->first, t.bounds->second};
  if (t.k_max)
    j["k_max"] = *t.k_max;
  return j;
}

GrowthTriple growth_triple_from_json(const nlohmann::json &j) {
  GrowthTriple t;
  t.algebra = algebra_kind_from_string(j.at("algebra").get<std::string>());
  t.dimension = ExtendedNat::from_string(j.at("dimension").get<std::string>());
  t.gkdim = gkdim_from_json(j.at("gkdim"));
  t.entropy = j.at("entropy").get<double>();
  t.method = entropy_method_from_string(j.at("method").get<std::string>());
  t.growth_class = j.at("class").get<int>();
  if (j.contains("bounds"))
    t.bounds = std::make_pair(j["bounds"].at(0).get<double>(), j["bounds"].at(1).get<double>());
  if (j.contains("k_max"))
    t.k_max = j["k_max"].get<std::size_t>();
  return t;
}

nlohmann::json classification_json(const std::string &graph_name, const Graph &g,
                                   const Classification &c) {
  return {{"graph", graph_name},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"path", to_json(c.path)},
          {"leavitt", to_json(c.leavitt)}};
}

Classification classification_from_json(const nlohmann::json &j) {
  Classification c;
  c.path = growth_triple_from_json(j.at("path"));
  c.leavitt = growth_triple_from_json(j.at("leavitt"));
  return c;
}

nlohmann::json leavitt_report_json(const std::string &graph_name, const EntropyEstimate &est,
                                   double eps) {
  return {{"graph", graph_name},
          {"k_max", est.k_max},
          {"h_last", est.last_h},
          {"h_ratio", est.ratio_h},
          {"entropy_path", est.entropy_path},
          {"entropy_extended", est.entropy_extended},
          {"sandwich_ok", est.sandwich_ok(eps)}};
}

nlohmann::json cycles_json(const Graph &g, const std::vector<Cycle> &cycles) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &c : cycles) {
    nlohmann::json vs = nlohmann::json::array();
    for (VertexId v : c.vertices(g))
      vs.push_back(g.vertex_name(v));
    arr.push_back({{"edges", c.edge_names(g)}, {"vertices", vs}, {"length", c.length()}});
  }
  return arr;
}

} // namespace graphent
