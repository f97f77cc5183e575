#include "coxhecke/report.hpp"

#include <sstream>

namespace coxhecke {

namespace {
constexpr const char* kSchemaPrefix = "coxhecke/";

Json schema(const char* kind) {
  return std::string(kSchemaPrefix) + kind + "/1";
}

Json system_json(const CoxeterSystem& sys) {
  Json j;
  j["generators"] = sys.names;
  j["matrix"] = sys.matrix;
  j["weights"] = sys.weights;
  return j;
}

}  // namespace

InstanceDesc parse_instance(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::BadInput, "instance must be an object");
  for (const char* key : {"generators", "matrix", "weights"})
    if (!j.contains(key))
      fail(ErrorCode::BadInput, std::string("instance needs '") + key + "'");
  InstanceDesc desc;
  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) {
    if (g.is_string())
      names.push_back(g.get<std::string>());
    else
      names.push_back(std::to_string(g.get<int>()));
  }
  desc.system = CoxeterSystem::validate(
      names, j.at("matrix").get<std::vector<std::vector<int>>>(),
      j.at("weights").get<std::vector<int>>());
  if (j.contains("radius")) {
    const auto& r = j.at("radius");
    if (r.is_string() && r.get<std::string>() == "full")
      desc.radius = GroupTable::Radius::Full();
    else if (r.is_number_integer() && r.get<int>() >= 0)
      desc.radius = GroupTable::Radius::Ball(r.get<int>());
    else
      fail(ErrorCode::BadInput, "radius must be \"full\" or an integer >= 0");
  }
  return desc;
}

std::string word_string(const GroupTable& t, EltIndex x) {
  const Word& w = t.word(x);
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += t.system().names[w[i]];
  }
  return s;
}

Json group_json(const GroupTable& t) {
  Json j;
  j["schema"] = schema("group");
  j["system"] = system_json(t.system());
  j["finite"] = t.finite();
  j["radius"] = t.radius();
  j["size"] = t.size();
  Json elems = Json::array();
  for (EltIndex x = 0; x < t.size(); ++x) {
    Json e;
    e["index"] = x;
    e["word"] = word_string(t, x);
    e["length"] = t.length(x);
    e["L"] = t.weight(x);
    Json ld = Json::array(), rd = Json::array();
    for (Gen s = 0; s < t.rank(); ++s) {
      if (t.is_left_descent(s, x)) ld.push_back(t.system().names[s]);
      if (t.is_right_descent(x, s)) rd.push_back(t.system().names[s]);
    }
    e["left_descents"] = ld;
    e["right_descents"] = rd;
    elems.push_back(e);
  }
  j["elements"] = elems;
  return j;
}

Json kl_json(const KLContext& kl) {
  const GroupTable& t = kl.table();
  Json j;
  j["schema"] = schema("kl");
  j["system"] = system_json(t.system());
  Json rows = Json::array();
  for (EltIndex w = 0; w < t.size(); ++w) {
    for (const auto& [y, p] : kl.kl_row(w)) {
      Json e;
      e["y"] = word_string(t, y);
      e["w"] = word_string(t, w);
      e["p"] = p.str();
      rows.push_back(e);
    }
  }
  j["p"] = rows;
  return j;
}

Json mu_json(const KLContext& kl) {
  const GroupTable& t = kl.table();
  Json j;
  j["schema"] = schema("mu");
  j["system"] = system_json(t.system());
  Json rows = Json::array();
  for (Gen s = 0; s < t.rank(); ++s)
    for (EltIndex w = 0; w < t.size(); ++w) {
      if (t.is_left_descent(s, w)) continue;
      for (EltIndex y = 0; y < t.size(); ++y) {
        if (!t.is_left_descent(s, y) || y == w || !t.bruhat_leq(y, w))
          continue;
        const LaurentPoly& m = kl.mu(s, y, w);
        if (m.is_zero()) continue;
        Json e;
        e["s"] = t.system().names[s];
        e["y"] = word_string(t, y);
        e["w"] = word_string(t, w);
        e["mu"] = m.str();
        rows.push_back(e);
      }
    }
  j["mu"] = rows;
  return j;
}

namespace {

Json cell_list(const GroupTable& t, const CellPartition& part) {
  Json cells = Json::array();
  for (std::size_t c = 0; c < part.cells().size(); ++c) {
    Json e;
    Json members = Json::array();
    for (EltIndex x : part.cells()[c]) members.push_back(word_string(t, x));
    e["members"] = members;
    e["closed"] = static_cast<bool>(part.cell_closed()[c]);
    cells.push_back(e);
  }
  return cells;
}

}  // namespace

Json cells_json(const CellData& cells) {
  const GroupTable& t = cells.kl().table();
  Json j;
  j["schema"] = schema("cells");
  j["system"] = system_json(t.system());
  j["left"] = cell_list(t, cells.left());
  j["right"] = cell_list(t, cells.right());
  j["two_sided"] = cell_list(t, cells.two_sided());
  return j;
}

std::string cells_dot(const CellData& cells, CellKind kind) {
  const GroupTable& t = cells.kl().table();
  const CellPartition& part = kind == CellKind::Left    ? cells.left()
                              : kind == CellKind::Right ? cells.right()
                                                        : cells.two_sided();
  std::ostringstream os;
  os << "digraph cells {\n";
  for (std::size_t c = 0; c < part.cells().size(); ++c) {
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=\"cell " << c
       << (part.cell_closed()[c] ? "" : " (open)") << "\";\n";
    for (EltIndex x : part.cells()[c])
      os << "    n" << x << " [label=\"" << word_string(t, x) << "\"];\n";
    os << "  }\n";
  }
  for (EltIndex x = 0; x < t.size(); ++x)
    for (EltIndex y : part.arrows()[x])
      os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

Json afun_json(const AFun& af) {
  const GroupTable& t = af.table();
  Json j;
  j["schema"] = schema("afun");
  j["system"] = system_json(t.system());
  j["bound"] = af.bound();
  Json rows = Json::array();
  for (EltIndex z = 0; z < t.size(); ++z) {
    Json e;
    e["z"] = word_string(t, z);
    e["a"] = af.a(z);
    e["a_attained_in_scope"] = af.a_attained(z);
    e["delta"] = af.delta(z);
    e["n"] = af.n_leading(z).str();
    e["duflo"] = af.in_duflo(z);
    rows.push_back(e);
  }
  j["elements"] = rows;
  Json duflo = Json::array();
  for (EltIndex d : af.duflo()) duflo.push_back(word_string(t, d));
  j["duflo"] = duflo;
  Json viol = Json::array();
  for (EltIndex z : af.delta_range_violations())
    viol.push_back(word_string(t, z));
  j["delta_range_violations"] = viol;
  return j;
}

Json jring_json(const JRing& jr) {
  const GroupTable& t = jr.table();
  const AFun& af = jr.afun();
  Json j;
  j["schema"] = schema("jring");
  j["system"] = system_json(t.system());
  Json unit = Json::array();
  for (const auto& [d, c] : jr.unit().coords()) {
    Json e;
    e["t"] = word_string(t, d);
    e["coeff"] = c.str();
    unit.push_back(e);
  }
  j["unit"] = unit;
  Json gammas = Json::array();
  for (EltIndex x = 0; x < t.size(); ++x)
    for (EltIndex y = 0; y < t.size(); ++y) {
      if (!af.pair_in_scope(x, y)) continue;
      for (const auto& e : af.h_row(x, y)) {
        const LaurentPoly& h = af.pool_poly(e.poly);
        if (h.max_exp() != af.a(e.z)) continue;
        Json g;
        g["x"] = word_string(t, x);
        g["y"] = word_string(t, y);
        g["z"] = word_string(t, t.inverse(e.z));
        g["gamma"] = h.coeff(af.a(e.z)).str();
        gammas.push_back(g);
      }
    }
  j["gamma"] = gammas;
  Json blocks = Json::array();
  auto rep = jr.blocks();
  for (std::size_t c = 0; c < rep.blocks.size(); ++c) {
    Json b;
    Json members = Json::array();
    for (EltIndex x : rep.blocks[c]) members.push_back(word_string(t, x));
    b["members"] = members;
    blocks.push_back(b);
  }
  j["blocks"] = blocks;
  j["blocks_pass"] = rep.pass;
  return j;
}

Json conjectures_json(const std::vector<ConjectureResult>& results) {
  Json j;
  j["schema"] = schema("conjectures");
  Json list = Json::array();
  for (const auto& r : results) {
    Json e;
    e["conjecture"] = r.name;
    e["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) e["counterexample"] = r.counterexample;
    e["checked"] = r.checked;
    e["total"] = r.total;
    if (r.capped) e["capped"] = true;
    list.push_back(e);
  }
  j["results"] = list;
  j["all_pass"] = AFun::all_pass(results);
  return j;
}

}  // namespace coxhecke
