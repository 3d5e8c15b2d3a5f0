#include "hcyc/hopfalgebroid/gallery.hpp"
#include "hcyc/scenario/scenario.hpp"

#include <fstream>
#include <set>

namespace hcyc::scenario {

using json = nlohmann::ordered_json;

namespace {

const char* const kKinds[] = {"algebras",   "coalgebras",          "hopf_algebroids", "sayd_modules",
                              "yd_algebras", "measurings",         "comodule_measurings", "yd_measurings",
                              "lie_rinehart", "lr_measurings",     "operads",         "comp_modules"};

const std::set<std::string> kTaskKinds = {"validate", "homology", "measure", "shuffle", "induced"};

struct Parser {
  FieldSpec f;
  ScenarioDocument& doc;
  std::set<std::string> names;

  [[noreturn]] void bad(const std::string& where, const std::string& msg) const { throw ParseError(where + ": " + msg); }

  const json& need(const json& j, const char* key, const std::string& where) const {
    if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing field '") + key + "'");
    return j.at(key);
  }
  int integer(const json& j, const char* key, const std::string& where) const {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
    return v.get<int>();
  }
  std::string str(const json& j, const char* key, const std::string& where) const {
    const json& v = need(j, key, where);
    if (!v.is_string()) bad(where + "." + key, "expected a string");
    return v.get<std::string>();
  }

  Scalar scalar(const json& num, const json& den, const std::string& where) const {
    if (!num.is_number_integer() || !den.is_number_integer()) bad(where, "numerator and denominator must be integers");
    long n = num.get<long>(), d = den.get<long>();
    if (d == 0) bad(where, "zero denominator");
    if (f.characteristic() && d % f.characteristic() == 0) bad(where, "denominator vanishes in " + f.name());
    return f.from_fraction(n, d);
  }

  void index_in(int i, int bound, const std::string& where) const {
    if (i < 0 || i >= bound)
      throw DimensionMismatch(where + ": index " + std::to_string(i) + " outside 0.." + std::to_string(bound - 1));
  }

  Matrix matrix(const json& j, int rows, int cols, const std::string& where) const {
    int r = integer(j, "rows", where), c = integer(j, "cols", where);
    if (r != rows || c != cols)
      throw DimensionMismatch(where + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                              std::to_string(r) + "x" + std::to_string(c));
    Matrix m(f, r, c);
    const json& es = need(j, "entries", where);
    if (!es.is_array()) bad(where + ".entries", "expected an array");
    for (const json& e : es) {
      if (!e.is_array() || e.size() != 4) bad(where + ".entries", "entries are [row, col, num, den]");
      int i = e[0].get<int>(), k = e[1].get<int>();
      index_in(i, r, where), index_in(k, c, where);
      m.set(i, k, f.add(m.at(i, k), scalar(e[2], e[3], where)));
    }
    return m;
  }

  std::vector<Matrix> matrices(const json& j, int count, int rows, int cols, const std::string& where) const {
    if (!j.is_array() || int(j.size()) != count)
      throw DimensionMismatch(where + ": expected " + std::to_string(count) + " matrices");
    std::vector<Matrix> out;
    for (int x = 0; x < count; ++x) out.push_back(matrix(j[x], rows, cols, where + "[" + std::to_string(x) + "]"));
    return out;
  }

  Vec vec(const json& j, int dim, const std::string& where) const {
    if (!j.is_array()) bad(where, "expected [[index, num, den], ...]");
    Accumulator acc(dim);
    for (const json& e : j) {
      if (!e.is_array() || e.size() != 3) bad(where, "entries are [index, num, den]");
      int i = e[0].get<int>();
      index_in(i, dim, where);
      acc.add(i, scalar(e[1], e[2], where), f);
    }
    return acc.take();
  }

  // structure constants [i, j, k, num, den]
  std::vector<std::tuple<int, int, int, Scalar>> table(const json& j, int dim, const std::string& where) const {
    if (!j.is_array()) bad(where, "expected [[i, j, k, num, den], ...]");
    std::vector<std::tuple<int, int, int, Scalar>> out;
    for (const json& e : j) {
      if (!e.is_array() || e.size() != 5) bad(where, "entries are [i, j, k, num, den]");
      int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
      index_in(a, dim, where), index_in(b, dim, where), index_in(c, dim, where);
      out.emplace_back(a, b, c, scalar(e[3], e[4], where));
    }
    return out;
  }

  template <class Map>
  auto& lookup(Map& m, const json& ref, const std::string& where, const char* what) const {
    if (!ref.is_string()) bad(where, std::string("expected the name of a ") + what);
    auto it = m.find(ref.get<std::string>());
    if (it == m.end())
      throw ReferenceError(where + ": unknown " + std::string(what) + " '" + ref.get<std::string>() + "'");
    return it->second;
  }

  std::pair<int, std::string> gallery_arg(const std::string& g) const {
    auto c = g.find(':');
    if (c == std::string::npos) return {0, g};
    return {std::stoi(g.substr(c + 1)), g.substr(0, c)};
  }

  AlgebraData algebra(const json& j, const std::string& where) {
    if (j.is_string()) return lookup(doc.algebras, j, where, "algebra");
    if (j.contains("gallery")) {
      auto [n, g] = gallery_arg(str(j, "gallery", where));
      if (g == "ground") return AlgebraData::ground(f);
      if (g == "dual_numbers") return gallery::dual_numbers(f);
      if (g == "split_pair") return gallery::split_pair(f);
      if (g == "group_ring" && n > 0) return gallery::group_ring(f, n);
      bad(where, "unknown gallery algebra '" + g + "'");
    }
    int dim = integer(j, "dim", where);
    return AlgebraData::from_table("", f, dim, table(need(j, "mul", where), dim, where + ".mul"),
                                   vec(need(j, "unit", where), dim, where + ".unit"));
  }

  CoalgebraData coalgebra(const json& j, const std::string& where) {
    if (j.is_string()) return lookup(doc.coalgebras, j, where, "coalgebra");
    if (j.contains("gallery")) {
      std::string g = str(j, "gallery", where);
      if (g == "ground") return CoalgebraData::ground(f);
      if (g == "grouplike") return CoalgebraData::grouplike(f);
      if (g == "grouplike_primitive") return CoalgebraData::grouplike_primitive(f);
      bad(where, "unknown gallery coalgebra '" + g + "'");
    }
    CoalgebraData c;
    c.field = f;
    c.dim = integer(j, "dim", where);
    c.comul = Matrix(f, c.dim * c.dim, c.dim);
    for (auto& [a, b, k, v] : table(need(j, "comul", where), c.dim, where + ".comul"))
      c.comul.set(a * c.dim + b, k, f.add(c.comul.at(a * c.dim + b, k), v));
    c.counit = Matrix(f, 1, c.dim);
    for (auto& [k, v] : vec(need(j, "counit", where), c.dim, where + ".counit")) c.counit.set(0, k, v);
    return c;
  }

  HopfPtr hopf(const json& j, const std::string& where) {
    if (j.contains("gallery")) {
      auto [n, g] = gallery_arg(str(j, "gallery", where));
      if (g == "trivial") return gallery::trivial(f);
      if (g == "group_algebra" && n > 0) return gallery::group_algebra(f, n);
      if (g == "pair") return gallery::pair(algebra(need(j, "A", where), where + ".A"));
      bad(where, "unknown gallery algebroid '" + g + "'");
    }
    auto h = std::make_shared<HopfAlgebroid>();
    h->field = f;
    h->U = algebra(need(j, "U", where), where + ".U");
    h->A = algebra(need(j, "A", where), where + ".A");
    int d = h->d(), a = h->a();
    h->s = matrix(need(j, "s", where), d, a, where + ".s");
    h->t = matrix(need(j, "t", where), d, a, where + ".t");
    h->delta_lift = matrix(need(j, "delta", where), d * d, d, where + ".delta");
    h->eps = matrix(need(j, "eps", where), a, d, where + ".eps");
    h->has_antipode = j.value("antipode", true);
    h->S = h->has_antipode ? matrix(need(j, "S", where), d, d, where + ".S") : Matrix(f, d, d);
    return h;
  }

  const HopfAlgebroid& over(const json& j, const std::string& where, std::string& hname) {
    hname = str(j, "over", where);
    return *lookup(doc.hopf_algebroids, need(j, "over", where), where + ".over", "hopf algebroid");
  }

  SaydModule sayd(const json& j, const std::string& where, std::string& hname) {
    const HopfAlgebroid& h = over(j, where, hname);
    if (j.contains("gallery")) {
      std::string g = str(j, "gallery", where);
      if (g == "counit_module") return gallery::counit_module(h);
      if (g == "sign_module") return gallery::sign_module(h);
      if (g == "sign_unstable") return gallery::sign_unstable(h);
      if (g == "swap_module") return gallery::swap_module(h);
      if (g == "base_module") return gallery::base_module(h);
      bad(where, "unknown gallery module '" + g + "'");
    }
    SaydModule p;
    p.dim = integer(j, "dim", where);
    p.action = matrix(need(j, "action", where), p.dim, p.dim * h.d(), where + ".action");
    p.coaction_lift = matrix(need(j, "coaction", where), h.d() * p.dim, p.dim, where + ".coaction");
    return p;
  }

  YdAlgebra yd(const json& j, const std::string& where, std::string& hname) {
    const HopfAlgebroid& h = over(j, where, hname);
    if (j.contains("gallery")) {
      std::string g = str(j, "gallery", where);
      if (g == "trivial_yd") return gallery::trivial_yd(h);
      if (g == "group_yd") return gallery::group_yd(h, false);
      if (g == "group_yd_graded") return gallery::group_yd(h, true);
      if (g == "base_yd") return gallery::base_yd(h);
      bad(where, "unknown gallery YD algebra '" + g + "'");
    }
    YdAlgebra z;
    z.Z = algebra(need(j, "algebra", where), where + ".algebra");
    int dz = z.dim();
    z.action = matrix(need(j, "action", where), dz, h.d() * dz, where + ".action");
    z.coaction_lift = matrix(need(j, "coaction", where), h.d() * dz, dz, where + ".coaction");
    return z;
  }

  const SaydModule& sayd_ref(const json& j, const std::string& where) {
    return lookup(doc.sayd_modules, j, where, "SAYD module").second;
  }
  const YdAlgebra& yd_ref(const json& j, const std::string& where) {
    return lookup(doc.yd_algebras, j, where, "YD algebra").second;
  }

  MeasuringData measuring(const json& j, const std::string& where) {
    MeasuringData m;
    m.C = coalgebra(need(j, "C", where), where + ".C");
    m.src = lookup(doc.hopf_algebroids, need(j, "src", where), where + ".src", "hopf algebroid");
    m.dst = lookup(doc.hopf_algebroids, need(j, "dst", where), where + ".dst", "hopf algebroid");
    m.Psi = matrices(need(j, "Psi", where), m.C.dim, m.dst->d(), m.src->d(), where + ".Psi");
    m.psi = matrices(need(j, "psi", where), m.C.dim, m.dst->a(), m.src->a(), where + ".psi");
    return m;
  }

  ComoduleMeasuringData comodule_measuring(const json& j, const std::string& where) {
    ComoduleMeasuringData cm;
    cm.base = lookup(doc.measurings, need(j, "measuring", where), where + ".measuring", "measuring");
    const json& d = need(j, "D", where);
    std::string side = str(d, "side", where + ".D");
    if (side != "left" && side != "right") bad(where + ".D.side", "expected left or right");
    cm.D.side = side == "left" ? Side::Left : Side::Right;
    cm.D.dim = integer(d, "dim", where + ".D");
    cm.D.coaction = matrix(need(d, "coaction", where + ".D"), cm.D.dim * cm.base.C.dim, cm.D.dim, where + ".D.coaction");
    cm.P = sayd_ref(need(j, "P", where), where + ".P");
    cm.P2 = sayd_ref(need(j, "P2", where), where + ".P2");
    cm.Omega = matrices(need(j, "Omega", where), cm.D.dim, cm.P2.dim, cm.P.dim, where + ".Omega");
    return cm;
  }

  YdMeasuringData yd_measuring(const json& j, const std::string& where) {
    YdMeasuringData ym;
    ym.C = coalgebra(need(j, "C", where), where + ".C");
    ym.h = lookup(doc.hopf_algebroids, need(j, "over", where), where + ".over", "hopf algebroid");
    ym.Z = yd_ref(need(j, "Z", where), where + ".Z");
    ym.Z2 = yd_ref(need(j, "Z2", where), where + ".Z2");
    ym.psi = matrices(need(j, "psi", where), ym.C.dim, ym.Z2.dim(), ym.Z.dim(), where + ".psi");
    return ym;
  }

  std::shared_ptr<const LieRinehartData> lie_rinehart(const json& j, const std::string& where) {
    if (j.contains("gallery")) {
      auto [n, g] = gallery_arg(str(j, "gallery", where));
      if (g == "abelian" && n > 0) return gallery::abelian_lr(f, n);
      if (g == "affine") return gallery::affine_lr(f);
      if (g == "sl2") return gallery::sl2_lr(f);
      if (g == "euler") return gallery::euler_lr(f);
      bad(where, "unknown gallery Lie-Rinehart algebra '" + g + "'");
    }
    auto d = std::make_shared<LieRinehartData>();
    d->R = algebra(need(j, "R", where), where + ".R");
    d->m = integer(j, "m", where);
    int l = d->ldim(), r = d->R.dim;
    d->bracket = matrix(need(j, "bracket", where), l, l * l, where + ".bracket");
    d->anchor = matrix(need(j, "anchor", where), r, l * r, where + ".anchor");
    d->nabla = matrix(need(j, "nabla", where), r, l * r, where + ".nabla");
    d->act = matrix(need(j, "act", where), l, r * l, where + ".act");
    return d;
  }

  LrMeasuringData lr_measuring(const json& j, const std::string& where) {
    LrMeasuringData m;
    m.C = coalgebra(need(j, "C", where), where + ".C");
    m.src = lookup(doc.lie_rinehart, need(j, "src", where), where + ".src", "Lie-Rinehart algebra");
    m.dst = lookup(doc.lie_rinehart, need(j, "dst", where), where + ".dst", "Lie-Rinehart algebra");
    m.Psi = matrices(need(j, "Psi", where), m.C.dim, m.dst->ldim(), m.src->ldim(), where + ".Psi");
    m.psi = matrices(need(j, "psi", where), m.C.dim, m.dst->R.dim, m.src->R.dim, where + ".psi");
    return m;
  }

  std::vector<int> dims(const json& j, int top, const std::string& where) const {
    const json& d = need(j, "dims", where);
    if (!d.is_array() || int(d.size()) != top + 1) throw DimensionMismatch(where + ".dims: expected top + 1 entries");
    return d.get<std::vector<int>>();
  }

  std::shared_ptr<const OperadData> operad(const json& j, const std::string& where) {
    int top = integer(j, "top", where);
    if (top < 0) bad(where, "negative top");
    if (j.contains("gallery")) {
      if (str(j, "gallery", where) != "one_dimensional") bad(where, "unknown gallery operad");
      return std::make_shared<OperadData>(one_dimensional_operad(f, top));
    }
    if (j.contains("yd")) {
      const json& y = j.at("yd");
      std::string hn;
      const HopfAlgebroid& h = over(y, where + ".yd", hn);
      return std::make_shared<OperadData>(build_yd_operad(h, yd_ref(need(y, "Z", where), where + ".yd.Z"), top));
    }
    auto o = std::make_shared<OperadData>();
    o->field = f;
    o->top = top;
    o->dims = dims(j, top, where);
    for (const json& c : need(j, "comp", where)) {
      int p = integer(c, "p", where), q = integer(c, "q", where), i = integer(c, "i", where);
      if (p < 1 || p > top || q < 0 || q > top || i < 1 || i > p || p + q - 1 > top)
        bad(where + ".comp", "composition index out of range");
      o->comp[{p, q, i}] = matrix(need(c, "map", where), o->dims[p + q - 1], o->dims[p] * o->dims[q], where + ".comp");
    }
    if (top >= 2) {
      o->one = vec(need(j, "one", where), o->dims[1], where + ".one");
      o->m = vec(need(j, "m", where), o->dims[2], where + ".m");
      o->e = vec(need(j, "e", where), o->dims[0], where + ".e");
    }
    return o;
  }

  CompModuleEntry comp_module(const json& j, const std::string& where) {
    CompModuleEntry ce;
    ce.operad_name = str(j, "operad", where);
    ce.operad = lookup(doc.operads, need(j, "operad", where), where + ".operad", "operad");
    const OperadData& o = *ce.operad;
    int top = integer(j, "top", where);
    if (top < 0 || top > o.top) bad(where, "top must not exceed the operad's top");
    if (j.contains("gallery")) {
      if (str(j, "gallery", where) != "point") bad(where, "unknown gallery comp module");
      ce.module = std::make_shared<CompModuleData>(point_comp_module(o, top));
      return ce;
    }
    if (j.contains("yd")) {
      const json& y = j.at("yd");
      std::string hn;
      const HopfAlgebroid& h = over(y, where + ".yd", hn);
      ce.module = std::make_shared<CompModuleData>(build_yd_comp_module(
          h, sayd_ref(need(y, "L", where), where + ".yd.L"), yd_ref(need(y, "Z", where), where + ".yd.Z"), top));
      return ce;
    }
    auto l = std::make_shared<CompModuleData>();
    l->top = top;
    l->dims = dims(j, top, where);
    for (const json& b : need(j, "bullet", where)) {
      int p = integer(b, "p", where), n = integer(b, "n", where), i = integer(b, "i", where);
      if (p < 0 || p > o.top || n < 0 || n > top || p > n + 1 || i < 0 || i > n + 1 - p || n - p + 1 > top)
        bad(where + ".bullet", "action index out of range");
      l->bullet[{p, n, i}] =
          matrix(need(b, "map", where), l->dims[n - p + 1], o.dim(p) * l->dims[n], where + ".bullet");
    }
    const json& t = need(j, "t", where);
    if (!t.is_array() || int(t.size()) != top + 1) throw DimensionMismatch(where + ".t: expected top + 1 matrices");
    for (int n = 0; n <= top; ++n) l->t.push_back(matrix(t[n], l->dims[n], l->dims[n], where + ".t"));
    ce.module = l;
    return ce;
  }

  void declare(const std::string& name, const std::string& where) {
    if (name.empty()) bad(where, "empty object name");
    if (!names.insert(name).second) bad(where, "duplicate object name '" + name + "'");
  }

  void check_task_refs(const json& t, const std::string& where) {
    for (const char* key : {"object", "measuring", "coefficients", "L", "L2"})
      if (t.contains(key)) {
        if (!t[key].is_string()) bad(where + "." + key, "expected an object name");
        if (!doc.kind_of(t[key].get<std::string>()).size())
          throw ReferenceError(where + "." + key + ": unknown object '" + t[key].get<std::string>() + "'");
      }
  }
};

}  // namespace

std::string ScenarioDocument::kind_of(const std::string& n) const {
  if (algebras.count(n)) return "algebras";
  if (coalgebras.count(n)) return "coalgebras";
  if (hopf_algebroids.count(n)) return "hopf_algebroids";
  if (sayd_modules.count(n)) return "sayd_modules";
  if (yd_algebras.count(n)) return "yd_algebras";
  if (measurings.count(n)) return "measurings";
  if (comodule_measurings.count(n)) return "comodule_measurings";
  if (yd_measurings.count(n)) return "yd_measurings";
  if (lie_rinehart.count(n)) return "lie_rinehart";
  if (lr_measurings.count(n)) return "lr_measurings";
  if (operads.count(n)) return "operads";
  if (comp_modules.count(n)) return "comp_modules";
  return {};
}

ScenarioDocument parse_scenario(const json& j, const ParseOptions& opt) {
  ScenarioDocument doc;
  if (!j.is_object()) throw ParseError("scenario: expected a JSON object");
  if (j.value("version", kSchemaVersion) != kSchemaVersion)
    throw ParseError("scenario.version: unsupported schema version");
  doc.name = j.value("name", std::string());
  try {
    doc.field = opt.field ? *opt.field : FieldSpec::parse(j.value("field", std::string("Q")));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("scenario.field: ") + e.what());
  }
  Parser ps{doc.field, doc, {}};
  const json objects = j.value("objects", json::object());
  for (auto& [kind, _] : objects.items())
    if (std::find(std::begin(kKinds), std::end(kKinds), kind) == std::end(kKinds))
      throw ParseError("objects." + kind + ": unknown object kind");
  for (const char* kind : kKinds) {
    if (!objects.contains(kind)) continue;
    for (auto& [name, body] : objects.at(kind).items()) {
      std::string where = std::string("objects.") + kind + "." + name;
      ps.declare(name, where);
      std::string k = kind, hn;
      try {
      if (k == "algebras") {
        auto a = ps.algebra(body, where);
        a.name = name;
        doc.algebras[name] = a;
      } else if (k == "coalgebras") {
        auto c = ps.coalgebra(body, where);
        c.name = name;
        doc.coalgebras[name] = c;
      } else if (k == "hopf_algebroids") {
        auto h = std::const_pointer_cast<HopfAlgebroid>(ps.hopf(body, where));
        h->name = name;
        doc.hopf_algebroids[name] = h;
      } else if (k == "sayd_modules") {
        auto p = ps.sayd(body, where, hn);
        p.name = name;
        doc.sayd_modules[name] = {hn, p};
      } else if (k == "yd_algebras") {
        auto z = ps.yd(body, where, hn);
        z.name = name;
        doc.yd_algebras[name] = {hn, z};
      } else if (k == "measurings") {
        auto m = ps.measuring(body, where);
        m.name = name;
        doc.measurings[name] = m;
      } else if (k == "comodule_measurings") {
        auto m = ps.comodule_measuring(body, where);
        m.name = name;
        doc.comodule_measurings[name] = m;
      } else if (k == "yd_measurings") {
        auto m = ps.yd_measuring(body, where);
        m.name = name;
        doc.yd_measurings[name] = m;
      } else if (k == "lie_rinehart") {
        auto d = std::const_pointer_cast<LieRinehartData>(ps.lie_rinehart(body, where));
        d->name = name;
        doc.lie_rinehart[name] = d;
      } else if (k == "lr_measurings") {
        auto m = ps.lr_measuring(body, where);
        m.name = name;
        doc.lr_measurings[name] = m;
      } else if (k == "operads") {
        auto o = std::const_pointer_cast<OperadData>(ps.operad(body, where));
        o->name = name;
        doc.operads[name] = o;
      } else {
        auto ce = ps.comp_module(body, where);
        std::const_pointer_cast<CompModuleData>(ce.module)->name = name;
        doc.comp_modules[name] = ce;
      }
      } catch (const ParseError&) {
        throw;
      } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
      } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  const json tasks = j.value("tasks", json::array());
  if (!tasks.is_array()) throw ParseError("scenario.tasks: expected an array");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::string where = "tasks[" + std::to_string(i) + "]";
    std::string kind = ps.str(tasks[i], "kind", where);
    if (!kTaskKinds.count(kind)) throw ParseError(where + ".kind: unknown task kind '" + kind + "'");
    ps.check_task_refs(tasks[i], where);
    doc.tasks.push_back({kind, tasks[i]});
  }
  return doc;
}

Matrix matrix_from_json(const json& j, FieldSpec f, int rows, int cols, const std::string& where) {
  ScenarioDocument scratch;
  try {
    return Parser{f, scratch, {}}.matrix(j, rows, cols, where);
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Vec vec_from_json(const json& j, FieldSpec f, int dim, const std::string& where) {
  ScenarioDocument scratch;
  try {
    return Parser{f, scratch, {}}.vec(j, dim, where);
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

ScenarioDocument parse_scenario_file(const std::string& path, const ParseOptions& opt) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_scenario(j, opt);
}

}  // namespace hcyc::scenario
