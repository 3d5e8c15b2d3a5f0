#include "hcyc/cyclichom/shuffle.hpp"
#include "hcyc/scenario/scenario.hpp"

#include <chrono>

namespace hcyc::scenario {

using json = nlohmann::ordered_json;

namespace {

json report_to_json(const Report& r) {
  json entries = json::array();
  for (auto& e : r.entries()) {
    json j = {{"axiom", e.axiom}, {"status", !e.checked ? "unchecked" : e.passed ? "pass" : "fail"}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    if (!e.detail.empty()) j["detail"] = e.detail;
    entries.push_back(j);
  }
  return {{"subject", r.subject()}, {"passed", r.passed()}, {"entries", entries}};
}

json error_record(std::exception_ptr ep) {
  std::string type = "Error", msg;
  try {
    std::rethrow_exception(ep);
  } catch (const CharNotZero& e) {
    type = "CharNotZero", msg = e.what();
  } catch (const NotCocommutative& e) {
    type = "NotCocommutative", msg = e.what();
  } catch (const NotCommutative& e) {
    type = "NotCommutative", msg = e.what();
  } catch (const StabilityFailure& e) {
    type = "StabilityFailure", msg = e.what();
  } catch (const InputRejected& e) {
    type = "InputRejected", msg = e.what();
  } catch (const UnsupportedBase& e) {
    type = "UnsupportedBase", msg = e.what();
  } catch (const CertificateFailure& e) {
    type = "CertificateFailure", msg = e.what();
  } catch (const CutoffExceeded& e) {
    type = "CutoffExceeded", msg = e.what();
  } catch (const DescentFailure& e) {
    type = "DescentFailure", msg = e.what();
  } catch (const ParseError& e) {
    type = "ParseError", msg = e.what();
  } catch (const std::exception& e) {
    msg = e.what();
  }
  return {{"type", type}, {"message", msg}};
}

struct TaskRun {
  const ScenarioDocument& doc;
  const json& p;
  const RunOptions& opt;
  json body;
  bool failed = false, errored = false;

  void add(const Report& r) {
    if (!r.passed()) failed = true;
    body["checks"].push_back(report_to_json(r));
  }
  int top() const {
    int d = opt.max_degree ? *opt.max_degree : p.value("max_degree", 3);
    if (d < 0) throw ParseError("max_degree must be non-negative");
    return d + 1;
  }
  std::vector<std::string> theories(const char* fallback) const {
    if (!p.contains("theory")) return {fallback};
    if (p["theory"].is_string()) return {p["theory"].get<std::string>()};
    return p["theory"].get<std::vector<std::string>>();
  }
  Vec element(int dim) const {
    if (!p.contains("element")) throw ParseError("task needs an 'element'");
    return vec_from_json(p["element"], doc.field, dim, "element");
  }
  bool cocyclic() const { return p.value("complex", std::string("cyclic")) == "cocyclic"; }

  // per theory: the complex on a (co)cyclic module
  static Complex complex_for(const CyclicModuleData& m, const std::string& th) {
    if (th == "HH") return hochschild_complex(m);
    if (th == "HH_normalized") return normalized_complex(m);
    if (th == "HC") return connes_complex(m);
    throw ParseError("unknown theory '" + th + "'");
  }
  static Theory theory_of(const std::string& th, bool co) {
    bool cyc = th == "HC";
    return co ? (cyc ? Theory::HCco : Theory::HHco) : (cyc ? Theory::HC : Theory::HH);
  }

  void homology_of(const CyclicModuleData& m) {
    for (auto& th : theories("HH")) {
      json h = {{"theory", th}};
      try {
        HomologyReport r = homology(complex_for(m, th), theory_of(th, m.direction == Direction::Cocyclic), m.name);
        h["dims"] = r.dims;
      } catch (...) {
        h["error"] = error_record(std::current_exception());
        errored = true;
      }
      body["homology"].push_back(h);
    }
  }

  void maps_on_homology(const CyclicModuleData& m, const CyclicModuleData& m2, const std::vector<Matrix>& f) {
    for (auto& th : theories("HH")) {
      json h = {{"theory", th}};
      try {
        Complex c = complex_for(m, th), c2 = complex_for(m2, th);
        Theory t = theory_of(th, m.direction == Direction::Cocyclic);
        HomologyReport r = homology(c, t, m.name), r2 = homology(c2, t, m2.name);
        h["dims"] = r.dims;
        h["dims_target"] = r2.dims;
        json maps = json::array();
        for (int n = 0; n < int(r.dims.size()); ++n) maps.push_back(matrix_to_json(induced_on_homology(r, c, r2, c2, n, f[n])));
        h["maps"] = maps;
      } catch (...) {
        h["error"] = error_record(std::current_exception());
        errored = true;
      }
      body["homology"].push_back(h);
    }
  }

  void certificate(const InducedMap& im) {
    add(im.certificate);
    json maps = json::array();
    for (auto& f : im.maps) maps.push_back(f.is_zero() ? json("zero") : json("nonzero"));
    body["chain_maps"] = maps;
  }

  const HopfAlgebroid& algebroid_of(const std::string& module_owner) const { return *doc.hopf_algebroids.at(module_owner); }

  void validate(const std::string& name) {
    std::string k = doc.kind_of(name);
    if (k == "algebras") return add(check_algebra(doc.algebras.at(name)));
    if (k == "coalgebras") return add(check_coalgebra(doc.coalgebras.at(name)));
    if (k == "hopf_algebroids") {
      const HopfAlgebroid& h = *doc.hopf_algebroids.at(name);
      add(check_left_bialgebroid(h));
      if (h.has_antipode) {
        add(check_hopf_algebroid(h));
        add(check_hopf_galois(h));
      }
      return;
    }
    if (k == "sayd_modules") {
      auto& [hn, pm] = doc.sayd_modules.at(name);
      return add(check_sayd(pm, algebroid_of(hn)));
    }
    if (k == "yd_algebras") {
      auto [hn, z] = doc.yd_algebras.at(name);
      return add(check_yd_algebra(z, algebroid_of(hn)));
    }
    if (k == "lie_rinehart") {
      const LieRinehartData& d = *doc.lie_rinehart.at(name);
      add(check_lie_rinehart(d));
      return add(check_lr_balanced(d, d.m));
    }
    if (k == "operads") return add(check_operad(*doc.operads.at(name)));
    if (k == "comp_modules") {
      auto& ce = doc.comp_modules.at(name);
      add(check_comp_module(*ce.operad, *ce.module));
      return add(check_cyclic_module(comp_cyclic_module(*ce.operad, *ce.module, ce.module->top)));
    }
    measure(name);
  }

  void measure(const std::string& name) {
    std::string k = doc.kind_of(name);
    if (k == "measurings") return add(check_hopf_algebroid_measuring(doc.measurings.at(name)));
    if (k == "comodule_measurings") return add(check_sayd_comodule_measuring(doc.comodule_measurings.at(name)));
    if (k == "yd_measurings") return add(check_yd_measuring(doc.yd_measurings.at(name)));
    if (k == "lr_measurings") return add(check_lr_measuring(doc.lr_measurings.at(name)));
    throw ParseError("'" + name + "' is not a measuring");
  }

  void homology_task(const std::string& name) {
    std::string k = doc.kind_of(name);
    int n = top();
    if (k == "hopf_algebroids") {
      const HopfAlgebroid& h = *doc.hopf_algebroids.at(name);
      CyclicModuleData m;
      if (p.contains("coefficients")) {
        auto& [hn, pm] = doc.sayd_modules.at(p["coefficients"].get<std::string>());
        if (hn != name) throw ParseError("coefficients live over '" + hn + "', not '" + name + "'");
        m = cocyclic() ? build_cocyclic_with_coeffs(h, pm, n) : build_cyclic_with_coeffs(h, pm, n);
      } else {
        m = cocyclic() ? build_cocyclic_CU(h, n) : build_cyclic_CU(h, n);
      }
      add(check_cyclic_module(m));
      return homology_of(m);
    }
    if (k == "comp_modules") {
      auto& ce = doc.comp_modules.at(name);
      if (n > ce.module->top) throw ParseError("max_degree exceeds the comp module's top - 1");
      CyclicModuleData m = comp_cyclic_module(*ce.operad, *ce.module, n);
      add(check_cyclic_module(m));
      return homology_of(m);
    }
    if (k == "lie_rinehart") {
      const LieRinehartData& d = *doc.lie_rinehart.at(name);
      HomologyReport r = homology(lr_complex(d, n), Theory::HH, d.name);
      body["homology"].push_back({{"theory", "LR"}, {"dims", r.dims}});
      return;
    }
    throw ParseError("no homology for '" + name + "'");
  }

  void induced(const std::string& name) {
    std::string k = doc.kind_of(name);
    int n = top();
    if (k == "measurings") {
      const MeasuringData& m = doc.measurings.at(name);
      Vec x = element(m.C.dim);
      auto build = [&](const HopfAlgebroid& h) { return cocyclic() ? build_cocyclic_CU(h, n) : build_cyclic_CU(h, n); };
      CyclicModuleData src = build(*m.src), dst = build(*m.dst);
      InducedMap im = induced_map(m, x, src, dst, false);
      certificate(im);
      if (p.value("hopf_galois", false)) add(hopf_galois_square(m, x, n));
      if (im.certificate.passed()) maps_on_homology(src, dst, im.maps);
      return;
    }
    if (k == "comodule_measurings") {
      const ComoduleMeasuringData& cm = doc.comodule_measurings.at(name);
      Vec y = element(cm.D.dim);
      auto build = [&](const HopfAlgebroid& h, const SaydModule& pm) {
        return cocyclic() ? build_cocyclic_with_coeffs(h, pm, n) : build_cyclic_with_coeffs(h, pm, n);
      };
      CyclicModuleData src = build(*cm.base.src, cm.P), dst = build(*cm.base.dst, cm.P2);
      InducedMap im = induced_map(cm, y, src, dst, false);
      certificate(im);
      if (p.value("hopf_galois", false)) add(hopf_galois_square(cm, y, n));
      if (im.certificate.passed()) maps_on_homology(src, dst, im.maps);
      return;
    }
    if (k == "lr_measurings") {
      const LrMeasuringData& m = doc.lr_measurings.at(name);
      InducedMap im = induced_lr_chain_map(m, element(m.C.dim), n, false);
      certificate(im);
      if (!im.certificate.passed()) return;
      Complex c = lr_complex(*m.src, n), c2 = lr_complex(*m.dst, n);
      HomologyReport r = homology(c, Theory::HH, m.src->name), r2 = homology(c2, Theory::HH, m.dst->name);
      json maps = json::array();
      for (int d = 0; d < int(r.dims.size()); ++d) maps.push_back(matrix_to_json(induced_on_homology(r, c, r2, c2, d, im.maps[d])));
      body["homology"].push_back({{"theory", "LR"}, {"dims", r.dims}, {"dims_target", r2.dims}, {"maps", maps}});
      return;
    }
    if (k == "yd_measurings") {
      const YdMeasuringData& ym = doc.yd_measurings.at(name);
      for (const char* key : {"L", "L2"})
        if (!p.contains(key)) throw ParseError(std::string("task needs '") + key + "'");
      auto& l = doc.sayd_modules.at(p["L"].get<std::string>()).second;
      auto& l2 = doc.sayd_modules.at(p["L2"].get<std::string>()).second;
      Matrix hm = p.contains("hmorph") ? matrix_from_json(p["hmorph"], doc.field, l2.dim, l.dim, "hmorph")
                                       : Matrix::identity(doc.field, l.dim);
      YdInduced yi = induce_from_yd(ym, l, l2, hm, n);
      add(yi.preconditions);
      add(check_operad_measuring(yi.operads));
      add(check_comp_comodule_measuring(yi.comp));
      CompInducedMap cim = induced_comp_map(yi.comp, element(ym.C.dim), n, false);
      certificate(cim.chain);
      if (!cim.chain.certificate.passed()) return;
      auto maps_json = [](const std::vector<Matrix>& ms) {
        json out = json::array();
        for (auto& m : ms) out.push_back(matrix_to_json(m));
        return out;
      };
      body["homology"].push_back({{"theory", "HH"}, {"dims", cim.hh.dims}, {"dims_target", cim.hh2.dims}, {"maps", maps_json(cim.on_hh)}});
      if (doc.field.characteristic() == 0)
        body["homology"].push_back(
            {{"theory", "HC"}, {"dims", cim.hc.dims}, {"dims_target", cim.hc2.dims}, {"maps", maps_json(cim.on_hc)}});
      else {
        body["homology"].push_back({{"theory", "HC"}, {"error", {{"type", "CharNotZero"}, {"message", "cyclic homology needs characteristic 0"}}}});
        errored = true;
      }
      return;
    }
    throw ParseError("'" + name + "' is not a measuring");
  }

  void shuffle(const std::string& name) {
    if (doc.kind_of(name) != "measurings") throw ParseError("'" + name + "' is not a measuring");
    const MeasuringData& m = doc.measurings.at(name);
    int n = top();
    add(check_shuffle_chain_map(*m.src, build_cyclic_CU(*m.src, n)));
    add(check_shuffle_measuring(m, element(m.C.dim), n));
  }

  void go(const std::string& kind) {
    std::string name = p.value("object", p.value("measuring", std::string()));
    body["object"] = name;
    body["checks"] = json::array();
    try {
      if (kind == "validate") validate(name);
      else if (kind == "measure") measure(name);
      else if (kind == "homology") homology_task(name);
      else if (kind == "induced") induced(name);
      else shuffle(name);
    } catch (...) {
      body["error"] = error_record(std::current_exception());
      errored = true;
    }
  }
};

}  // namespace

ReportDocument run(const ScenarioDocument& doc, const RunOptions& opt) {
  std::vector<int> selected;
  for (int i = 0; i < int(doc.tasks.size()); ++i)
    if (opt.kinds.empty() ||
        std::find(opt.kinds.begin(), opt.kinds.end(), doc.tasks[i].kind) != opt.kinds.end())
      selected.push_back(i);
  ReportDocument out;
  out.timing = opt.timing;
  out.tasks.resize(selected.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (int s = 0; s < int(selected.size()); ++s) {
    const Task& t = doc.tasks[selected[s]];
    auto start = std::chrono::steady_clock::now();
    TaskRun tr{doc, t.params, opt, json::object()};
    tr.go(t.kind);
    TaskResult& r = out.tasks[s];
    r.index = selected[s];
    r.kind = t.kind;
    r.status = tr.errored ? "error" : tr.failed ? "fail" : "pass";
    r.body = std::move(tr.body);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

}  // namespace hcyc::scenario
