#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "semirandom/hypergraph.hpp"

namespace semirandom {

struct TightPath {
  int m, s, ell;
};
// Consecutive windows of a cyclic order on (s-ell)m vertices.
struct TightCycle {
  int m, s, ell;
};
struct Clique {
  int k, s;
};
// Every s-set through the center [c] inside [k], plus `cap` edges avoiding the center.
struct FullStarplus {
  int k, s, c;
  std::vector<VertexSet> cap;
};
// Center is [c]; every ray contains it, no cap edge does.
struct Starplus {
  int c;
  std::vector<VertexSet> rays;
  std::vector<VertexSet> cap;
};
// Center [c]; flower is the tight cycle on c+1..k of uniformity s-c, cap the tight
// s-uniform cycle on the same vertices in the same cyclic order.
struct Wheel {
  int k, s, c;
};
struct Custom {
  int s;
  std::vector<VertexSet> edges;
  Vertex n = 0;  // 0: largest vertex used
};

using TargetSpec = std::variant<TightPath, TightCycle, Clique, FullStarplus, Starplus, Wheel, Custom>;

namespace detail {

inline VertexSet window(int start, int width, int cycle_length) {
  VertexSet e;
  for (int j = 0; j < width; ++j) e.push_back(static_cast<Vertex>((start + j) % cycle_length + 1));
  return sorted_set(e);
}

inline void check_path_params(int m, int s, int ell, const char* what) {
  if (s < 2) throw ParameterError(std::string(what) + ": s must be at least 2");
  if (ell < 1 || ell >= s) throw ParameterError(std::string(what) + ": ell must satisfy 1 <= ell < s");
  if (m < 1) throw ParameterError(std::string(what) + ": m must be at least 1");
}

inline VertexSet normalize_edge(VertexSet e, int s, const char* what) {
  e = sorted_set(std::move(e));
  if (static_cast<int>(e.size()) != s || !is_strictly_increasing(e) || e.front() < 1)
    throw ParameterError(std::string(what) + ": every edge needs " + std::to_string(s) + " distinct positive vertices");
  return e;
}

inline Vertex max_vertex(const std::vector<VertexSet>& edges) {
  Vertex n = 0;
  for (const auto& e : edges) n = std::max(n, e.back());
  return n;
}

inline void add_simple(MultiHypergraph& h, const VertexSet& e, const char* what) {
  if (h.has_edge(e)) throw ParameterError(std::string(what) + ": duplicate edge " + set_to_string(e, ','));
  h.add_edge(e);
}

}  // namespace detail

inline MultiHypergraph build_tight_cycle_on(int m, int s, int ell) {
  detail::check_path_params(m, s, ell, "tight_cycle");
  if (m < (s + 1) / (s - ell)) throw ParameterError("tight_cycle: m must be at least floor((s+1)/(s-ell))");
  int k = (s - ell) * m;
  if (k < s + 1) throw ParameterError("tight_cycle: (s-ell)m must exceed s, otherwise edges coincide");
  MultiHypergraph h(s, static_cast<Vertex>(k));
  for (int i = 0; i < m; ++i) detail::add_simple(h, detail::window(i * (s - ell), s, k), "tight_cycle");
  return h;
}

inline MultiHypergraph build_target(const TargetSpec& spec) {
  struct Builder {
    MultiHypergraph operator()(const TightPath& p) const {
      detail::check_path_params(p.m, p.s, p.ell, "tight_path");
      int v = (p.s - p.ell) * p.m + p.ell;
      MultiHypergraph h(p.s, static_cast<Vertex>(v));
      for (int i = 0; i < p.m; ++i) h.add_edge(detail::window(i * (p.s - p.ell), p.s, v));
      return h;
    }
    MultiHypergraph operator()(const TightCycle& c) const { return build_tight_cycle_on(c.m, c.s, c.ell); }
    MultiHypergraph operator()(const Clique& c) const {
      if (c.s < 1 || c.k < c.s) throw ParameterError("clique: need 1 <= s <= k");
      MultiHypergraph h(c.s, static_cast<Vertex>(c.k));
      for_each_subset(vertex_range(1, c.k), c.s, [&](const VertexSet& e) {
        h.add_edge(e);
        return true;
      });
      return h;
    }
    MultiHypergraph operator()(const FullStarplus& f) const {
      if (f.c < 1 || f.c >= f.s || f.k < f.s)
        throw ParameterError("full_starplus: need 1 <= c < s <= k");
      MultiHypergraph h(f.s, static_cast<Vertex>(f.k));
      VertexSet center = vertex_range(1, f.c);
      for_each_subset(vertex_range(f.c + 1, f.k), f.s - f.c, [&](const VertexSet& rest) {
        h.add_edge(set_union(center, rest));
        return true;
      });
      for (const auto& raw : f.cap) {
        VertexSet e = detail::normalize_edge(raw, f.s, "full_starplus cap");
        if (e.back() > static_cast<Vertex>(f.k)) throw ParameterError("full_starplus: cap edge outside [k]");
        if (is_subset(center, e)) throw ParameterError("full_starplus: cap edge contains the center");
        detail::add_simple(h, e, "full_starplus cap");
      }
      return h;
    }
    MultiHypergraph operator()(const Starplus& sp) const {
      if (sp.rays.empty()) throw ParameterError("starplus: at least one ray required");
      int s = static_cast<int>(sp.rays.front().size());
      if (sp.c < 1 || sp.c >= s) throw ParameterError("starplus: need 1 <= c < s");
      std::vector<VertexSet> rays, cap;
      for (const auto& e : sp.rays) rays.push_back(detail::normalize_edge(e, s, "starplus ray"));
      for (const auto& e : sp.cap) cap.push_back(detail::normalize_edge(e, s, "starplus cap"));
      Vertex n = std::max(detail::max_vertex(rays), detail::max_vertex(cap));
      VertexSet center = vertex_range(1, sp.c);
      MultiHypergraph h(s, n);
      for (const auto& e : rays) {
        if (!is_subset(center, e)) throw ParameterError("starplus: ray does not contain the center");
        detail::add_simple(h, e, "starplus");
      }
      for (const auto& e : cap) {
        if (is_subset(center, e)) throw ParameterError("starplus: cap edge contains the center");
        detail::add_simple(h, e, "starplus");
      }
      return h;
    }
    MultiHypergraph operator()(const Wheel& w) const {
      if (w.c < 1 || w.c >= w.s) throw ParameterError("wheel: need 1 <= c < s");
      int rim = w.k - w.c;
      if (rim < w.s + 1) throw ParameterError("wheel: need k - c >= s + 1");
      MultiHypergraph h(w.s, static_cast<Vertex>(w.k));
      auto shifted = [&](const VertexSet& e) {
        VertexSet out;
        for (Vertex v : e) out.push_back(v + static_cast<Vertex>(w.c));
        return out;
      };
      VertexSet center = vertex_range(1, w.c);
      int petal = w.s - w.c;
      for (int i = 0; i < rim; ++i) h.add_edge(set_union(center, shifted(detail::window(i, petal, rim))));
      for (int i = 0; i < rim; ++i) h.add_edge(shifted(detail::window(i, w.s, rim)));
      return h;
    }
    MultiHypergraph operator()(const Custom& c) const {
      std::vector<VertexSet> edges;
      for (const auto& e : c.edges) edges.push_back(detail::normalize_edge(e, c.s, "custom"));
      Vertex n = std::max(c.n, detail::max_vertex(edges));
      if (n == 0) throw ParameterError("custom: empty hypergraph needs an explicit n");
      MultiHypergraph h(c.s, n);
      for (const auto& e : edges) detail::add_simple(h, e, "custom");
      return h;
    }
  };
  return std::visit(Builder{}, spec);
}

// --- JSON --------------------------------------------------------------------

namespace detail {

inline void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParameterError(where + ": unknown field '" + it.key() + "'");
  }
}

inline int int_field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParameterError(where + ": missing field '" + key + "'");
  if (!j.at(key).is_number_integer()) throw ParameterError(where + ": field '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

inline std::vector<VertexSet> edges_field(const nlohmann::json& j, const char* key, const std::string& where,
                                          bool required = true) {
  std::vector<VertexSet> out;
  if (!j.contains(key)) {
    if (required) throw ParameterError(where + ": missing field '" + key + "'");
    return out;
  }
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw ParameterError(where + ": field '" + key + "' must be an array of edges");
  for (const auto& e : arr) {
    if (!e.is_array()) throw ParameterError(where + ": field '" + key + "' must be an array of edges");
    VertexSet set;
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long long>() < 1)
        throw ParameterError(where + ": field '" + key + "' has a non-positive vertex");
      set.push_back(v.get<Vertex>());
    }
    out.push_back(std::move(set));
  }
  return out;
}

inline nlohmann::json edges_to_json(const std::vector<VertexSet>& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : edges) arr.push_back(e);
  return arr;
}

}  // namespace detail

inline TargetSpec target_from_json(const nlohmann::json& j) {
  const std::string where = "target";
  if (!j.is_object()) throw ParameterError("target must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string()) throw ParameterError("target: missing field 'family'");
  std::string family = j.at("family").get<std::string>();
  using detail::int_field;
  if (family == "tight_path" || family == "tight_cycle") {
    detail::reject_unknown(j, {"family", "m", "s", "ell"}, where);
    int m = int_field(j, "m", where), s = int_field(j, "s", where);
    int ell = j.contains("ell") ? int_field(j, "ell", where) : s - 1;
    if (family == "tight_path") return TightPath{m, s, ell};
    return TightCycle{m, s, ell};
  }
  if (family == "clique") {
    detail::reject_unknown(j, {"family", "k", "s"}, where);
    return Clique{int_field(j, "k", where), int_field(j, "s", where)};
  }
  if (family == "full_starplus") {
    detail::reject_unknown(j, {"family", "k", "s", "c", "cap"}, where);
    return FullStarplus{int_field(j, "k", where), int_field(j, "s", where), int_field(j, "c", where),
                        detail::edges_field(j, "cap", where, false)};
  }
  if (family == "starplus") {
    detail::reject_unknown(j, {"family", "c", "rays", "cap"}, where);
    return Starplus{int_field(j, "c", where), detail::edges_field(j, "rays", where),
                    detail::edges_field(j, "cap", where, false)};
  }
  if (family == "wheel") {
    detail::reject_unknown(j, {"family", "k", "s", "c"}, where);
    return Wheel{int_field(j, "k", where), int_field(j, "s", where), int_field(j, "c", where)};
  }
  if (family == "custom") {
    detail::reject_unknown(j, {"family", "s", "edges", "n"}, where);
    Custom c{int_field(j, "s", where), detail::edges_field(j, "edges", where), 0};
    if (j.contains("n")) c.n = static_cast<Vertex>(int_field(j, "n", where));
    return c;
  }
  throw ParameterError("target: unknown family '" + family + "'");
}

inline nlohmann::json target_to_json(const TargetSpec& spec) {
  struct Writer {
    nlohmann::json operator()(const TightPath& p) const {
      return {{"family", "tight_path"}, {"m", p.m}, {"s", p.s}, {"ell", p.ell}};
    }
    nlohmann::json operator()(const TightCycle& c) const {
      return {{"family", "tight_cycle"}, {"m", c.m}, {"s", c.s}, {"ell", c.ell}};
    }
    nlohmann::json operator()(const Clique& c) const { return {{"family", "clique"}, {"k", c.k}, {"s", c.s}}; }
    nlohmann::json operator()(const FullStarplus& f) const {
      return {{"family", "full_starplus"}, {"k", f.k}, {"s", f.s}, {"c", f.c}, {"cap", detail::edges_to_json(f.cap)}};
    }
    nlohmann::json operator()(const Starplus& sp) const {
      return {{"family", "starplus"},
              {"c", sp.c},
              {"rays", detail::edges_to_json(sp.rays)},
              {"cap", detail::edges_to_json(sp.cap)}};
    }
    nlohmann::json operator()(const Wheel& w) const {
      return {{"family", "wheel"}, {"k", w.k}, {"s", w.s}, {"c", w.c}};
    }
    nlohmann::json operator()(const Custom& c) const {
      nlohmann::json j = {{"family", "custom"}, {"s", c.s}, {"edges", detail::edges_to_json(c.edges)}};
      if (c.n) j["n"] = c.n;
      return j;
    }
  };
  return std::visit(Writer{}, spec);
}

}  // namespace semirandom
