#include "hcyc/scenario/scenario.hpp"

#include <sstream>

namespace hcyc::scenario {

using json = nlohmann::ordered_json;

namespace {

json num_den(const Scalar& v) { return json::array({v.get_num().get_si(), v.get_den().get_si()}); }

json smatrix(const Matrix& m) {
  json es = json::array();
  for (int c = 0; c < m.cols(); ++c)
    for (auto& [r, v] : m.col(c)) {
      json e = json::array({r, c});
      for (auto& x : num_den(v)) e.push_back(x);
      es.push_back(e);
    }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", es}};
}

json smatrices(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (auto& m : ms) out.push_back(smatrix(m));
  return out;
}

json svec(const Vec& v) {
  json out = json::array();
  for (auto& [i, c] : v) {
    json e = json::array({i});
    for (auto& x : num_den(c)) e.push_back(x);
    out.push_back(e);
  }
  return out;
}

json salgebra(const AlgebraData& a) {
  json mul = json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (auto& [k, v] : a.basis_product(i, j)) {
        json e = json::array({i, j, k});
        for (auto& x : num_den(v)) e.push_back(x);
        mul.push_back(e);
      }
  return {{"dim", a.dim}, {"mul", mul}, {"unit", svec(a.unit)}};
}

json scoalgebra(const CoalgebraData& c) {
  json comul = json::array();
  for (int k = 0; k < c.dim; ++k)
    for (auto& [r, v] : c.comul.col(k)) {
      json e = json::array({r / c.dim, r % c.dim, k});
      for (auto& x : num_den(v)) e.push_back(x);
      comul.push_back(e);
    }
  Accumulator cu(c.dim);
  for (int k = 0; k < c.dim; ++k) cu.add(k, c.counit.at(0, k), c.field);
  return {{"dim", c.dim}, {"comul", comul}, {"counit", svec(cu.take())}};
}

json sd_mat(const std::vector<Matrix>& ms) { return smatrices(ms); }

}  // namespace

json matrix_to_json(const Matrix& m) {
  json es = json::array();
  for (int c = 0; c < m.cols(); ++c)
    for (auto& [r, v] : m.col(c)) es.push_back(json::array({r, c, scalar_to_string(v)}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", es}};
}

json emit_scenario(const ScenarioDocument& doc) {
  json out;
  out["version"] = kSchemaVersion;
  if (!doc.name.empty()) out["name"] = doc.name;
  out["field"] = doc.field.name();
  json obj = json::object();
  for (auto& [n, a] : doc.algebras) obj["algebras"][n] = salgebra(a);
  for (auto& [n, c] : doc.coalgebras) obj["coalgebras"][n] = scoalgebra(c);
  for (auto& [n, h] : doc.hopf_algebroids) {
    json j = {{"U", salgebra(h->U)}, {"A", salgebra(h->A)}, {"s", smatrix(h->s)}, {"t", smatrix(h->t)},
              {"delta", smatrix(h->delta_lift)}, {"eps", smatrix(h->eps)}};
    if (h->has_antipode)
      j["S"] = smatrix(h->S);
    else
      j["antipode"] = false;
    obj["hopf_algebroids"][n] = j;
  }
  for (auto& [n, hp] : doc.sayd_modules)
    obj["sayd_modules"][n] = {{"over", hp.first}, {"dim", hp.second.dim}, {"action", smatrix(hp.second.action)},
                              {"coaction", smatrix(hp.second.coaction_lift)}};
  for (auto& [n, hz] : doc.yd_algebras)
    obj["yd_algebras"][n] = {{"over", hz.first}, {"algebra", salgebra(hz.second.Z)},
                             {"action", smatrix(hz.second.action)}, {"coaction", smatrix(hz.second.coaction_lift)}};
  for (auto& [n, m] : doc.measurings)
    obj["measurings"][n] = {{"C", scoalgebra(m.C)}, {"src", m.src->name}, {"dst", m.dst->name},
                            {"Psi", sd_mat(m.Psi)}, {"psi", sd_mat(m.psi)}};
  for (auto& [n, cm] : doc.comodule_measurings)
    obj["comodule_measurings"][n] = {
        {"measuring", cm.base.name},
        {"D",
         {{"side", cm.D.side == Side::Left ? "left" : "right"}, {"dim", cm.D.dim}, {"coaction", smatrix(cm.D.coaction)}}},
        {"P", cm.P.name},
        {"P2", cm.P2.name},
        {"Omega", sd_mat(cm.Omega)}};
  for (auto& [n, ym] : doc.yd_measurings)
    obj["yd_measurings"][n] = {{"C", scoalgebra(ym.C)}, {"over", ym.h->name}, {"Z", ym.Z.name}, {"Z2", ym.Z2.name},
                               {"psi", sd_mat(ym.psi)}};
  for (auto& [n, d] : doc.lie_rinehart)
    obj["lie_rinehart"][n] = {{"R", salgebra(d->R)},         {"m", d->m},
                              {"bracket", smatrix(d->bracket)}, {"anchor", smatrix(d->anchor)},
                              {"nabla", smatrix(d->nabla)},     {"act", smatrix(d->act)}};
  for (auto& [n, m] : doc.lr_measurings)
    obj["lr_measurings"][n] = {{"C", scoalgebra(m.C)}, {"src", m.src->name}, {"dst", m.dst->name},
                               {"Psi", sd_mat(m.Psi)}, {"psi", sd_mat(m.psi)}};
  for (auto& [n, o] : doc.operads) {
    json comp = json::array();
    for (auto& [k, mtx] : o->comp) comp.push_back({{"p", k[0]}, {"q", k[1]}, {"i", k[2]}, {"map", smatrix(mtx)}});
    json j = {{"top", o->top}, {"dims", o->dims}, {"comp", comp}};
    if (o->top >= 2) j["one"] = svec(o->one), j["m"] = svec(o->m), j["e"] = svec(o->e);
    obj["operads"][n] = j;
  }
  for (auto& [n, ce] : doc.comp_modules) {
    const CompModuleData& l = *ce.module;
    json bullet = json::array();
    for (auto& [k, mtx] : l.bullet) bullet.push_back({{"p", k[0]}, {"n", k[1]}, {"i", k[2]}, {"map", smatrix(mtx)}});
    obj["comp_modules"][n] = {{"operad", ce.operad_name}, {"top", l.top},          {"dims", l.dims},
                              {"bullet", bullet},          {"t", smatrices(l.t)}};
  }
  out["objects"] = obj;
  json tasks = json::array();
  for (auto& t : doc.tasks) tasks.push_back(t.params);
  out["tasks"] = tasks;
  return out;
}

int ReportDocument::passed() const {
  int k = 0;
  for (auto& t : tasks) k += t.status == "pass";
  return k;
}

int ReportDocument::failed() const { return int(tasks.size()) - passed(); }

std::string emit(const ReportDocument& r, Format fmt, bool pretty) {
  if (fmt == Format::Json) {
    json out;
    out["version"] = kSchemaVersion;
    json tasks = json::array();
    for (auto& t : r.tasks) {
      json j;
      j["index"] = t.index;
      j["kind"] = t.kind;
      j["status"] = t.status;
      for (auto& [k, v] : t.body.items()) j[k] = v;
      tasks.push_back(j);
    }
    out["tasks"] = tasks;
    if (r.timing) {
      json tm = json::array();
      for (auto& t : r.tasks) tm.push_back({{"index", t.index}, {"seconds", t.seconds}});
      out["timing"] = tm;
    }
    return out.dump(pretty ? 2 : -1) + (pretty ? "\n" : "");
  }
  std::ostringstream os;
  int checks = 0, failed_checks = 0;
  for (auto& t : r.tasks) {
    os << "task " << t.index << " " << t.kind;
    for (const char* key : {"object", "measuring"})
      if (t.body.contains(key)) os << " " << t.body[key].get<std::string>();
    os << ": " << t.status;
    if (t.body.contains("error")) os << " (" << t.body["error"]["type"].get<std::string>() << ": "
                                     << t.body["error"]["message"].get<std::string>() << ")";
    os << "\n";
    if (t.body.contains("checks"))
      for (auto& c : t.body["checks"])
        for (auto& e : c["entries"]) {
          if (e["status"] == "unchecked") continue;
          ++checks;
          if (e["status"] == "fail") {
            ++failed_checks;
            os << "  FAIL " << c["subject"].get<std::string>() << ": " << e["axiom"].get<std::string>() << "\n";
          }
        }
    if (t.body.contains("homology"))
      for (auto& h : t.body["homology"]) {
        if (h.contains("error")) {
          os << "  " << h["theory"].get<std::string>() << " " << h["error"]["type"].get<std::string>() << "\n";
          continue;
        }
        os << "  " << h["theory"].get<std::string>() << " dims";
        for (auto& d : h["dims"]) os << " " << d.get<int>();
        os << "\n";
      }
    if (r.timing) os << "  " << t.seconds << " s\n";
  }
  os << r.tasks.size() << " tasks: " << r.passed() << " passed, " << r.failed() << " failed; " << checks
     << " checks: " << (checks - failed_checks) << " passed, " << failed_checks << " failed\n";
  return os.str();
}

std::vector<std::string> kinds_for_verb(const std::string& verb) {
  if (verb == "validate") return {"validate"};
  if (verb == "homology") return {"homology"};
  if (verb == "measure") return {"measure", "shuffle"};
  if (verb == "induced") return {"induced"};
  if (verb == "report") return {};
  throw std::invalid_argument("unknown verb: " + verb);
}

}  // namespace hcyc::scenario
