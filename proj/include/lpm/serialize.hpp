#pragma once

// JSON views of the library's values. Schemas:
//   LPM        {"text", "n", "rank", "U": [..], "L": [..]}
//   poset      {"n", "nodes": [{"id", "U", "L", "rank"}], "covers": [[parent, child]]}
//   flag       {"chain": [[..], ..], "gale": "3412", "bruhat": "2143"}
//   pairing    [[l, u], ..]
//   diagram    {"dimension", "points": [[..]], "edges": [[[..], [..]]]}

#include <json.hpp>

#include <string>
#include <vector>

#include "lpm/arrows.hpp"
#include "lpm/flag.hpp"
#include "lpm/flag_diagram.hpp"
#include "lpm/lattice_path_matroid.hpp"
#include "lpm/lattice_point.hpp"
#include "lpm/poset.hpp"
#include "lpm/quotient.hpp"

namespace lpm {

using Json = nlohmann::json;

inline Json subset_json(const GroundSubset& s) { return Json(std::vector<int>(s.begin(), s.end())); }

inline Json lpm_json(const Lpm& m) {
  return {{"text", m.to_string()}, {"n", m.n()}, {"rank", m.rank()}, {"U", subset_json(m.upper())},
          {"L", subset_json(m.lower())}};
}

inline Json pairing_json(const Pairing& p) {
  Json out = Json::array();
  for (const auto& e : p.pairs()) out.push_back({e.ell, e.u});
  return out;
}

inline Json verdict_json(const Lpm& sub, const Lpm& m, const QuotientVerdict& v) {
  Json out{{"quotient", v.quotient}, {"sub", lpm_json(sub)}, {"matroid", lpm_json(m)}, {"reason", v.reason}};
  out["pairing"] = v.pairing ? pairing_json(*v.pairing) : Json(nullptr);
  out["failing_pair"] = v.failing_pair ? Json{v.failing_pair->ell, v.failing_pair->u} : Json(nullptr);
  return out;
}

inline Json poset_json(const QuotientPoset& p) {
  Json nodes = Json::array(), covers = Json::array();
  for (QuotientPoset::NodeId id = 0; id < p.size(); ++id) {
    const Lpm& m = p.node(id);
    nodes.push_back({{"id", id}, {"U", subset_json(m.upper())}, {"L", subset_json(m.lower())}, {"rank", m.rank()}});
  }
  for (const auto& [parent, child] : p.covers()) covers.push_back({parent, child});
  return {{"n", p.n()}, {"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

inline Json flag_json(const FlagOfBases& f) {
  Json chain = Json::array();
  for (const auto& b : f.chain()) chain.push_back(subset_json(b));
  return {{"chain", std::move(chain)}, {"gale", f.gale_permutation().to_comma_string()},
          {"bruhat", bruhat_perm(f).to_comma_string()}};
}

inline Json point_json(const LatticePoint& p) { return Json(p.coords); }

inline Json points_json(const std::vector<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

inline Json flag_diagram_json(const FlagDiagram& d) {
  Json edges = Json::array();
  for (const auto& [a, b] : d.edges) edges.push_back({point_json(a), point_json(b)});
  return {{"dimension", d.dimension}, {"points", points_json(d.points)}, {"edges", std::move(edges)}};
}

inline Json interval_json(const CyclicInterval& c) {
  return {{"start", c.start()}, {"end", c.end()}, {"kind", c.kind() == IntervalKind::row ? "row" : "column"},
          {"members", c.members()}};
}

inline Json decorated_permutation_json(const DecoratedPermutation& d) {
  Json decorations = Json::object();
  for (int i = 1; i <= d.n(); ++i) {
    if (d.decoration(i) == Decoration::loop) decorations[std::to_string(i)] = "loop";
    if (d.decoration(i) == Decoration::coloop) decorations[std::to_string(i)] = "coloop";
  }
  return {{"text", d.to_string()}, {"image", std::vector<int>(d.image().image().begin(), d.image().image().end())},
          {"decorations", std::move(decorations)}};
}

}  // namespace lpm
