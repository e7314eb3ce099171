#include "qracah/serialize.hpp"

#include <set>
#include <sstream>

namespace qracah {

using nlohmann::json;

json scalar_json(const Scalar& x) {
  switch (x.backend()) {
    case Backend::rational: return to_string(x.rat());
    case Backend::quadext: {
      const auto& v = x.quad();
      if (sgn(v.b()) == 0) return to_string(v.a());
      return json{{"a", to_string(v.a())}, {"b", to_string(v.b())}, {"radicand", to_string(v.r())}};
    }
    case Backend::bigfloat: return x.str();
  }
  return nullptr;
}

json poly_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(scalar_json(c));
  return out;
}

json params_json(const EnsembleParams& p) {
  return json{{"q", to_string(p.q)},         {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)},
              {"delta", to_string(p.delta)}, {"M", p.M},                    {"N", p.N},
              {"gamma", to_string(p.gamma())}, {"u2", to_string(p.u2())}};
}

json connection_json(const ConnectionMatrix& a) {
  json zs = json::array();
  for (const auto& z : a.zs) zs.push_back(scalar_json(z));
  return json{{"s", a.s},
              {"zs", zs},
              {"u2", scalar_json(a.u2)},
              {"P", poly_json(a.P)},
              {"Q", poly_json(a.Q)},
              {"B", {{"b11", poly_json(a.B.a11)},
                     {"b12", poly_json(a.B.a12)},
                     {"b21", poly_json(a.B.a21)},
                     {"b22", poly_json(a.B.a22)}}}};
}

json orbit_json(const EnsembleParams& p, const Calibration& cal, const std::vector<OrbitEntry>& orbit,
                const std::vector<StepCheck>& steps) {
  json pts = json::array();
  for (const auto& e : orbit) {
    json nu = json::array();
    for (const auto& v : e.point.params.nu) nu.push_back(scalar_json(v));
    pts.push_back({{"s", e.s},
                   {"x", scalar_json(e.xy.x)},
                   {"y", scalar_json(e.xy.y)},
                   {"f", scalar_json(e.point.f)},
                   {"g", scalar_json(e.point.g)},
                   {"nu", nu},
                   {"kappa1", scalar_json(e.point.params.kappa1)},
                   {"kappa2", scalar_json(e.point.params.kappa2)}});
  }
  json st = json::array();
  for (const auto& c : steps)
    st.push_back({{"s", c.s},
                  {"match", c.match},
                  {"f_step", scalar_json(c.f_step)},
                  {"g_step", scalar_json(c.g_step)},
                  {"f_next", scalar_json(c.f_next)},
                  {"g_next", scalar_json(c.g_next)}});
  return json{{"params", params_json(p)},
              {"calibration", {{"direction", cal.direction}, {"swap_d", cal.swap_d}, {"detail", cal.detail}}},
              {"orbit", pts},
              {"steps", st}};
}

namespace {

std::string csv_scalar(const Scalar& x) {
  if (x.backend() == Backend::quadext && sgn(x.quad().b()) != 0)
    return to_string(x.quad().a()) + "+" + to_string(x.quad().b()) + "*sqrt(" + to_string(x.quad().r()) + ")";
  if (x.backend() == Backend::quadext) return to_string(x.quad().a());
  return x.str();
}

std::string positions_str(const std::vector<int>& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " " : "") + std::to_string(x[i]);
  return s;
}

}  // namespace

std::string gap_tables_csv(const std::vector<GapTable>& tables) {
  std::ostringstream os;
  os << "s,D_s,method\n";
  for (const auto& t : tables)
    for (const auto& [s, d] : t.D) os << s << ',' << csv_scalar(d) << ',' << t.method << '\n';
  return os.str();
}

std::string tilings_csv(const std::vector<BoxedPlanePartition>& tilings, const std::vector<Rational>& probs) {
  std::ostringstream os;
  os << "index,volume,probability,entries\n";
  for (std::size_t i = 0; i < tilings.size(); ++i)
    os << i << ',' << tilings[i].volume() << ',' << to_string(probs.at(i)) << ',' << positions_str(tilings[i].h)
       << '\n';
  return os.str();
}

std::string slice_table_csv(const std::vector<SliceRows>& slices) {
  std::ostringstream os;
  os << "t,positions,tiling_probability,ensemble_probability\n";
  for (const auto& sl : slices) {
    std::set<std::vector<int>> keys;
    for (const auto& kv : sl.enumerated) keys.insert(kv.first);
    for (const auto& kv : sl.ensemble) keys.insert(kv.first);
    for (const auto& k : keys) {
      auto a = sl.enumerated.find(k), b = sl.ensemble.find(k);
      os << sl.t << ',' << positions_str(k) << ',' << (a == sl.enumerated.end() ? "0" : to_string(a->second)) << ','
         << (b == sl.ensemble.end() ? "0" : to_string(b->second)) << '\n';
    }
  }
  return os.str();
}

std::string lattice_report(const std::vector<LatticeCheck>& checks) {
  std::ostringstream os;
  int bad = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
    bad += !c.pass;
  }
  if (bad == 0)
    os << "all identities hold (" << checks.size() << ")\n";
  else
    os << bad << " of " << checks.size() << " identities fail\n";
  return os.str();
}

}  // namespace qracah
