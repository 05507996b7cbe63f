#include "gsq/json_out.hpp"

#include "json.hpp"

namespace gsq {

namespace {

using json = nlohmann::ordered_json;

json edge_array(const std::vector<Edge>& es) {
  json a = json::array();
  for (Edge e : es) a.push_back({e.first, e.second});
  return a;
}

}  // namespace

std::string to_json(const Hole& h) {
  json j;
  j["type"] = "hole";
  j["length"] = h.length();
  j["vertices"] = h.vertices;
  return j.dump();
}

std::string to_json(const ChordalityCertificate& c) {
  json j;
  if (c.chordal) {
    j["type"] = "peo";
    j["chordal"] = true;
    j["order"] = c.peo;
  } else {
    j["type"] = "hole";
    j["chordal"] = false;
    j["length"] = c.hole.length();
    j["vertices"] = c.hole.vertices;
  }
  return j.dump();
}

std::string to_json(const ClawWitness& w) {
  json j;
  j["type"] = "claw";
  j["center"] = w.center;
  j["leaves"] = w.leaves;
  return j.dump();
}

std::string to_json(const P5aWitness& w) {
  json j;
  j["type"] = "p5a";
  j["path"] = w.path;
  j["chord"] = {w.path[1], w.path[3]};
  return j.dump();
}

std::string to_json(const F4Witness& w) {
  json j;
  j["type"] = "f4";
  j["u"] = w.u;
  j["w"] = w.w;
  j["suspended"] = w.suspended_by.has_value();
  if (w.suspended_by)
    j["suspended_by"] = *w.suspended_by;
  else
    j["suspended_by"] = nullptr;
  return j.dump();
}

std::string to_json(const SunflowerWitness& w) {
  json j;
  j["type"] = "sunflower";
  j["size"] = int(w.u.size());
  j["u"] = w.u;
  j["w"] = w.w;
  j["suspended"] = w.suspended_by.has_value();
  if (w.suspended_by)
    j["suspended_by"] = *w.suspended_by;
  else
    j["suspended_by"] = nullptr;
  return j.dump();
}

std::string to_json(const FlowerWitness& w) {
  json j;
  j["type"] = "flower";
  j["size"] = int(w.u.size());
  j["u"] = w.u;
  j["w"] = w.w;
  j["cycle"] = w.cycle;
  j["pending"] = w.pending;
  j["withered"] = w.withered_by.has_value();
  if (w.withered_by)
    j["withered_by"] = *w.withered_by;
  else
    j["withered_by"] = nullptr;
  return j.dump();
}

std::string to_json(const SproutWitness& w) {
  json j;
  j["type"] = "sprout";
  j["size"] = int(w.u_edges.size());
  j["u_edges"] = edge_array(w.u_edges);
  j["w_edges"] = edge_array(w.w_edges);
  j["cycle_edges"] = edge_array(w.cycle);
  j["pending_edges"] = edge_array(w.pending);
  j["fertile"] = w.fertile();
  if (w.infertile_by)
    j["infertile_by"] = {w.infertile_by->first, w.infertile_by->second};
  else
    j["infertile_by"] = nullptr;
  return j.dump();
}

}  // namespace gsq
