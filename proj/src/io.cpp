#include "qcat/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "qcat/error.hpp"
#include "qcat/fixtures.hpp"

namespace qcat {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kQuantaleTag = "qcat.quantale/1";
constexpr const char* kQuantaloidTag = "qcat.quantaloid/1";
constexpr const char* kCategoryTag = "qcat.category/1";
constexpr const char* kDistributorTag = "qcat.distributor/1";
constexpr const char* kContextTag = "qcat.context/1";
constexpr const char* kInfomorphismTag = "qcat.infomorphism/1";

std::optional<std::pair<long long, long long>> rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long k = std::stoll(s, &used);
      if (used != s.size()) return std::nullopt;
      return std::pair{k, 1LL};
    }
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    const long long k = std::stoll(a, &used);
    if (used != a.size()) return std::nullopt;
    const long long n = std::stoll(b, &used);
    if (used != b.size() || n <= 0) return std::nullopt;
    return std::pair{k, n};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SchemaError, path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
    throw Error(Errc::SchemaError, source + ": line " + std::to_string(line) + ": malformed document");
  }
}

/// Parses one document tree, sharing quantaloids and categories defined by identical text or path.
class Reader {
 public:
  Reader(std::string source, fs::path dir) : source_(std::move(source)), dir_(std::move(dir)) {}

  [[noreturn]] void fail(const std::string& at, const std::string& msg) const {
    throw Error(Errc::SchemaError, source_ + ": field " + (at.empty() ? "/" : at) + ": " + msg);
  }

  void check_tag(const Json& j, const char* tag, bool required) const {
    if (!j.is_object()) fail("", "expected an object");
    if (!j.contains("schema")) {
      if (required) fail("/schema", std::string("missing schema tag, expected ") + tag);
      return;
    }
    if (!j["schema"].is_string() || j["schema"].get<std::string>() != tag)
      fail("/schema", std::string("expected ") + tag);
  }

  const Json& need(const Json& j, const std::string& at, const char* key) const {
    if (!j.is_object()) fail(at, "expected an object");
    if (!j.contains(key)) fail(at + "/" + key, "missing");
    return j[key];
  }

  const Json& array(const Json& j, const std::string& at) const {
    if (!j.is_array()) fail(at, "expected an array");
    return j;
  }

  std::string text(const Json& j, const std::string& at) const {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number_float()) fail(at, "decimal values are not allowed; write k/n or a label");
    fail(at, "expected a string");
  }

  int integer(const Json& j, const std::string& at) const {
    if (!j.is_number_integer()) fail(at, "expected an integer");
    return j.get<int>();
  }

  int degree(const std::vector<std::string>& labels, const Json& j, const std::string& at) const {
    const std::string s = text(j, at);
    const int d = resolve_degree(labels, s);
    if (d < 0) fail(at, "unknown degree '" + s + "'");
    return d;
  }

  /// Follows a string reference to another file relative to this document.
  std::pair<Json, Reader> deref(const Json& j, const std::string& at) const {
    if (!j.is_string()) return {j, *this};
    const fs::path p = dir_ / j.get<std::string>();
    if (!fs::exists(p)) fail(at, "referenced file '" + p.string() + "' not found");
    Reader sub(p.string(), p.parent_path());
    sub.quantaloids_ = quantaloids_;
    sub.categories_ = categories_;
    return {parse_json(read_file(p.string()), p.string()), sub};
  }

  std::string cache_key(const Json& j) const {
    if (j.is_string()) return "file:" + fs::weakly_canonical(dir_ / j.get<std::string>()).string();
    return "inline:" + j.dump();
  }

  QuantaleSpec quantale(const Json& j0, const std::string& at, bool top_level) const {
    auto [j, r] = deref(j0, at);
    r.check_tag(j, kQuantaleTag, top_level || j0.is_string());
    return r.quantale_body(j, j0.is_string() ? "" : at);
  }

  QuantaleSpec quantale_body(const Json& j, const std::string& at) const {
    if (j.contains("builtin")) {
      const std::string name = text(j["builtin"], at + "/builtin");
      try {
        if (name == "boolean") return build_boolean_algebra(1);
        if (name == "boolean-algebra") return build_boolean_algebra(integer(need(j, at, "atoms"), at + "/atoms"));
        const int n = integer(need(j, at, "n"), at + "/n");
        if (name == "lukasiewicz") return build_lukasiewicz_chain(n);
        if (name == "godel") return build_godel_chain(n);
        if (name == "nilpotent-minimum") return build_nilpotent_minimum_chain(n);
      } catch (const Error& e) {
        if (e.code() == Errc::SchemaError) throw;
        fail(at, e.what());
      }
      fail(at + "/builtin", "unknown builtin quantale '" + name + "'");
    }
    QuantaleSpec q;
    const Json& els = array(need(j, at, "elements"), at + "/elements");
    for (std::size_t i = 0; i < els.size(); ++i) {
      const std::string e = text(els[i], at + "/elements/" + std::to_string(i));
      if (std::find(q.elements.begin(), q.elements.end(), e) != q.elements.end())
        fail(at + "/elements/" + std::to_string(i), "duplicate element '" + e + "'");
      q.elements.push_back(e);
    }
    const int n = static_cast<int>(q.elements.size());
    if (n == 0) fail(at + "/elements", "a quantale needs at least one element");
    q.leq = relation(q.elements, need(j, at, "leq"), at + "/leq");
    const Json& t = array(need(j, at, "tensor"), at + "/tensor");
    if (static_cast<int>(t.size()) != n) fail(at + "/tensor", "expected " + std::to_string(n) + " rows");
    q.tensor.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      const std::string row = at + "/tensor/" + std::to_string(a);
      if (!t[a].is_array() || static_cast<int>(t[a].size()) != n)
        fail(row, "expected " + std::to_string(n) + " entries");
      for (int b = 0; b < n; ++b) q.tensor[a][b] = degree(q.elements, t[a][b], row + "/" + std::to_string(b));
    }
    q.unit = degree(q.elements, need(j, at, "unit"), at + "/unit");
    return q;
  }

  /// Reflexive-transitive closure of the listed pairs [a, b] meaning a ≤ b.
  std::vector<std::vector<bool>> relation(const std::vector<std::string>& labels, const Json& pairs,
                                          const std::string& at) const {
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a) le[a][a] = true;
    array(pairs, at);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string p = at + "/" + std::to_string(i);
      if (!pairs[i].is_array() || pairs[i].size() != 2) fail(p, "expected a pair [a, b]");
      le[degree(labels, pairs[i][0], p + "/0")][degree(labels, pairs[i][1], p + "/1")] = true;
    }
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (le[a][k] && le[k][b]) le[a][b] = true;
    return le;
  }

  QuantaloidPtr quantaloid(const Json& j0, const std::string& at) {
    const std::string key = cache_key(j0);
    if (auto it = quantaloids_->find(key); it != quantaloids_->end()) return it->second;
    auto [j, r] = deref(j0, at);
    r.check_tag(j, kQuantaloidTag, j0.is_string());
    auto Q = std::make_shared<const Quantaloid>(r.quantaloid_body(j, j0.is_string() ? "" : at));
    quantaloids_->emplace(key, Q);
    return Q;
  }

  Quantaloid quantaloid_body(const Json& j, const std::string& at) const {
    if (j.contains("builtin")) {
      const std::string name = text(j["builtin"], at + "/builtin");
      if (name != "boolean") fail(at + "/builtin", "unknown builtin quantaloid '" + name + "'");
      return build_boolean();
    }
    if (j.contains("quantale")) return quantaloid_from_divisible_quantale(quantale(j["quantale"], at + "/quantale", false));
    std::vector<std::string> objs;
    const Json& oj = array(need(j, at, "objects"), at + "/objects");
    for (std::size_t i = 0; i < oj.size(); ++i) objs.push_back(text(oj[i], at + "/objects/" + std::to_string(i)));
    const int n = static_cast<int>(objs.size());
    auto object = [&](const Json& v, const std::string& p) {
      const auto it = std::find(objs.begin(), objs.end(), text(v, p));
      if (it == objs.end()) fail(p, "unknown object '" + text(v, p) + "'");
      return static_cast<int>(it - objs.begin());
    };
    std::vector<std::optional<FiniteLattice>> homs(n * n);
    const Json& hj = array(need(j, at, "homs"), at + "/homs");
    for (std::size_t i = 0; i < hj.size(); ++i) {
      const std::string p = at + "/homs/" + std::to_string(i);
      const int X = object(need(hj[i], p, "from"), p + "/from"), Y = object(need(hj[i], p, "to"), p + "/to");
      std::vector<std::string> labels;
      const Json& ej = array(need(hj[i], p, "elements"), p + "/elements");
      for (std::size_t e = 0; e < ej.size(); ++e) labels.push_back(text(ej[e], p + "/elements/" + std::to_string(e)));
      auto le = relation(labels, need(hj[i], p, "leq"), p + "/leq");
      homs[X * n + Y] = FiniteLattice(labels, le);
    }
    std::vector<FiniteLattice> hs;
    for (int X = 0; X < n; ++X)
      for (int Y = 0; Y < n; ++Y) {
        if (!homs[X * n + Y]) fail(at + "/homs", "missing hom(" + objs[X] + "," + objs[Y] + ")");
        hs.push_back(*homs[X * n + Y]);
      }
    const Json& uj = need(j, at, "units");
    if (!uj.is_object()) fail(at + "/units", "expected an object keyed by object name");
    std::vector<int> units(n);
    for (int X = 0; X < n; ++X) {
      const std::string p = at + "/units/" + objs[X];
      if (!uj.contains(objs[X])) fail(p, "missing");
      units[X] = degree(hs[X * n + X].labels(), uj[objs[X]], p);
    }
    std::vector<std::vector<int>> tables(n * n * n);
    std::vector<bool> seen(n * n * n);
    const Json& cj = array(need(j, at, "compose"), at + "/compose");
    for (std::size_t i = 0; i < cj.size(); ++i) {
      const std::string p = at + "/compose/" + std::to_string(i);
      const Json& trip = array(need(cj[i], p, "objects"), p + "/objects");
      if (trip.size() != 3) fail(p + "/objects", "expected [X, Y, Z]");
      const int X = object(trip[0], p + "/objects/0"), Y = object(trip[1], p + "/objects/1"),
                Z = object(trip[2], p + "/objects/2");
      const FiniteLattice &XY = hs[X * n + Y], &YZ = hs[Y * n + Z], &XZ = hs[X * n + Z];
      const Json& tj = array(need(cj[i], p, "table"), p + "/table");
      if (static_cast<int>(tj.size()) != YZ.size()) fail(p + "/table", "expected one row per arrow of hom(Y,Z)");
      auto& tab = tables[(X * n + Y) * n + Z];
      tab.assign(YZ.size() * XY.size(), 0);
      for (int g = 0; g < YZ.size(); ++g) {
        const std::string row = p + "/table/" + std::to_string(g);
        if (!tj[g].is_array() || static_cast<int>(tj[g].size()) != XY.size())
          fail(row, "expected one entry per arrow of hom(X,Y)");
        for (int f = 0; f < XY.size(); ++f)
          tab[g * XY.size() + f] = degree(XZ.labels(), tj[g][f], row + "/" + std::to_string(f));
      }
      seen[(X * n + Y) * n + Z] = true;
    }
    for (int X = 0; X < n; ++X)
      for (int Y = 0; Y < n; ++Y)
        for (int Z = 0; Z < n; ++Z)
          if (!seen[(X * n + Y) * n + Z])
            fail(at + "/compose", "missing table for (" + objs[X] + "," + objs[Y] + "," + objs[Z] + ")");
    return Quantaloid(objs, hs, units, tables);
  }

  CategoryPtr category(const Json& j0, const std::string& at) {
    const std::string key = cache_key(j0);
    if (auto it = categories_->find(key); it != categories_->end()) return it->second;
    auto [j, r] = deref(j0, at);
    r.check_tag(j, kCategoryTag, j0.is_string());
    auto A = r.category_body(j, j0.is_string() ? "" : at);
    categories_->emplace(key, A);
    return A;
  }

  CategoryPtr category_body(const Json& j, const std::string& at) {
    QuantaloidPtr Q = quantaloid(need(j, at, "quantaloid"), at + "/quantaloid");
    std::vector<std::string> names;
    std::vector<int> types;
    const Json& oj = array(need(j, at, "objects"), at + "/objects");
    for (std::size_t i = 0; i < oj.size(); ++i) {
      const std::string p = at + "/objects/" + std::to_string(i);
      if (oj[i].is_string()) {
        if (Q->num_objects() != 1) fail(p, "objects need a type unless the quantaloid has one object");
        names.push_back(oj[i].get<std::string>());
        types.push_back(0);
        continue;
      }
      names.push_back(text(need(oj[i], p, "name"), p + "/name"));
      types.push_back(degree(Q->object_names(), need(oj[i], p, "type"), p + "/type"));
    }
    const int n = static_cast<int>(names.size());
    const Json& hj = array(need(j, at, "hom"), at + "/hom");
    if (static_cast<int>(hj.size()) != n) fail(at + "/hom", "expected " + std::to_string(n) + " rows");
    std::vector<int> hom(n * n);
    for (int x = 0; x < n; ++x) {
      const std::string row = at + "/hom/" + std::to_string(x);
      if (!hj[x].is_array() || static_cast<int>(hj[x].size()) != n)
        fail(row, "expected " + std::to_string(n) + " entries");
      for (int y = 0; y < n; ++y) hom[x * n + y] = arrow(*Q, types[x], types[y], hj[x][y], row + "/" + std::to_string(y));
    }
    return std::make_shared<const QCategory>(Q, names, types, hom);
  }

  int arrow(const Quantaloid& Q, int X, int Y, const Json& v, const std::string& at) const {
    const std::string s = text(v, at);
    const int a = resolve_degree(Q.hom(X, Y).labels(), s);
    if (a < 0)
      throw Error(Errc::DegreeOutOfHom, source_ + ": field " + at + ": '" + s + "' is not an arrow of hom(" +
                                            Q.object_name(X) + "," + Q.object_name(Y) + ")");
    return a;
  }

  QDistributor distributor(const Json& j0, const std::string& at) {
    auto [j, r] = deref(j0, at);
    r.check_tag(j, kDistributorTag, j0.is_string());
    const std::string base = j0.is_string() ? "" : at;
    auto dom = r.category(r.need(j, base, "dom"), base + "/dom");
    auto cod = r.category(r.need(j, base, "cod"), base + "/cod");
    if (dom->quantaloid_ptr() != cod->quantaloid_ptr()) r.fail(base + "/cod", "dom and cod use different quantaloids");
    const Json& mj = r.array(r.need(j, base, "matrix"), base + "/matrix");
    if (static_cast<int>(mj.size()) != dom->size()) r.fail(base + "/matrix", "expected one row per object of dom");
    std::vector<int> m;
    for (int x = 0; x < dom->size(); ++x) {
      const std::string row = base + "/matrix/" + std::to_string(x);
      if (!mj[x].is_array() || static_cast<int>(mj[x].size()) != cod->size())
        r.fail(row, "expected one entry per object of cod");
      for (int y = 0; y < cod->size(); ++y)
        m.push_back(r.arrow(dom->Q(), dom->type(x), cod->type(y), mj[x][y], row + "/" + std::to_string(y)));
    }
    return make_distributor(dom, cod, std::move(m));
  }

  QFunctor functor(const CategoryPtr& dom, const CategoryPtr& cod, const Json& j, const std::string& at) const {
    if (!j.is_object()) fail(at, "expected an object mapping object names");
    QFunctor F{dom, cod, std::vector<int>(dom->size())};
    for (int x = 0; x < dom->size(); ++x) {
      const std::string p = at + "/" + dom->name(x);
      if (!j.contains(dom->name(x))) fail(p, "missing");
      const auto y = cod->find(text(j[dom->name(x)], p));
      if (!y) fail(p, "unknown object '" + text(j[dom->name(x)], p) + "'");
      F.map[x] = *y;
    }
    return F;
  }

  Infomorphism infomorphism(const Json& j) {
    check_tag(j, kInfomorphismTag, true);
    QDistributor s = distributor(need(j, "", "source"), "/source");
    QDistributor t = distributor(need(j, "", "target"), "/target");
    if (s.dom->quantaloid_ptr() != t.dom->quantaloid_ptr()) fail("/target", "source and target use different quantaloids");
    return Infomorphism{s, t, functor(s.dom, t.dom, need(j, "", "F"), "/F"), functor(t.cod, s.cod, need(j, "", "G"), "/G")};
  }

  FuzzyContext context(const Json& j) const {
    check_tag(j, kContextTag, true);
    FuzzyContext c;
    c.quantale = quantale(need(j, "", "quantale"), "/quantale", false);
    const auto& q = c.quantale;
    const int n = static_cast<int>(q.elements.size());
    int top = -1;
    for (int e = 0; e < n && top < 0; ++e) {
      bool all = true;
      for (int x = 0; x < n; ++x) all = all && q.leq[x][e];
      if (all) top = e;
    }
    if (top < 0) fail("/quantale", "the order has no top element");
    auto members = [&](const char* key, std::vector<std::string>& names, std::vector<int>& degs) {
      const std::string at = std::string("/") + key;
      const Json& arr = array(need(j, "", key), at);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = at + "/" + std::to_string(i);
        std::string name;
        int d = top;
        if (arr[i].is_object()) {
          name = text(need(arr[i], p, "name"), p + "/name");
          if (arr[i].contains("degree")) d = degree(q.elements, arr[i]["degree"], p + "/degree");
        } else {
          name = text(arr[i], p);
        }
        if (std::find(names.begin(), names.end(), name) != names.end()) fail(p, "duplicate name '" + name + "'");
        names.push_back(name);
        degs.push_back(d);
      }
    };
    members("objects", c.objects, c.object_degrees);
    members("attributes", c.attributes, c.attribute_degrees);
    const int na = static_cast<int>(c.objects.size()), nb = static_cast<int>(c.attributes.size());
    const Json& ij = array(need(j, "", "incidence"), "/incidence");
    if (static_cast<int>(ij.size()) != na) fail("/incidence", "expected " + std::to_string(na) + " rows");
    c.incidence.assign(na, std::vector<int>(nb));
    for (int x = 0; x < na; ++x) {
      const std::string row = "/incidence/" + std::to_string(x);
      if (!ij[x].is_array() || static_cast<int>(ij[x].size()) != nb)
        fail(row, "expected " + std::to_string(nb) + " entries");
      for (int y = 0; y < nb; ++y) {
        const std::string p = row + "/" + std::to_string(y);
        const int v = degree(q.elements, ij[x][y], p);
        if (!q.leq[v][c.object_degrees[x]] || !q.leq[v][c.attribute_degrees[y]])
          throw Error(Errc::DegreeOutOfHom,
                      source_ + ": field " + p + ": φ(" + c.objects[x] + "," + c.attributes[y] + ")=" + q.elements[v] +
                          " exceeds " + q.elements[c.object_degrees[x]] + "∧" + q.elements[c.attribute_degrees[y]]);
        c.incidence[x][y] = v;
      }
    }
    return c;
  }

 private:
  std::string source_;
  fs::path dir_;
  std::shared_ptr<std::map<std::string, QuantaloidPtr>> quantaloids_ =
      std::make_shared<std::map<std::string, QuantaloidPtr>>();
  std::shared_ptr<std::map<std::string, CategoryPtr>> categories_ = std::make_shared<std::map<std::string, CategoryPtr>>();
};

Reader reader_for(const std::string& path) { return Reader(path, fs::path(path).parent_path()); }

Json quantale_json(const QuantaleSpec& q) {
  Json j;
  j["elements"] = q.elements;
  Json leq = Json::array();
  const int n = static_cast<int>(q.elements.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && q.leq[a][b]) leq.push_back({q.elements[a], q.elements[b]});
  j["leq"] = leq;
  Json t = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(q.elements[q.tensor[a][b]]);
    t.push_back(row);
  }
  j["tensor"] = t;
  j["unit"] = q.elements[q.unit];
  return j;
}

void add_report(ValidationReport& rep, const LawReport& laws, const std::string& prefix = "") {
  for (const auto& v : laws) rep.violations.push_back(prefix + v.law + ": " + v.witness);
}

}  // namespace

int resolve_degree(const std::vector<std::string>& labels, const std::string& text) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == text) return static_cast<int>(i);
  const auto r = rational(text);
  if (!r) return -1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto l = rational(labels[i]);
    if (l && r->first * l->second == l->first * r->second) return static_cast<int>(i);
  }
  return -1;
}

bool FuzzyContext::crisp() const {
  if (quantale.elements.size() != 2) return false;
  const int top = quantale.leq[0][1] ? 1 : 0;
  return std::all_of(object_degrees.begin(), object_degrees.end(), [&](int d) { return d == top; }) &&
         std::all_of(attribute_degrees.begin(), attribute_degrees.end(), [&](int d) { return d == top; });
}

FuzzyContext parse_context_text(const std::string& text, const std::string& source) {
  return Reader(source, fs::current_path()).context(parse_json(text, source));
}

FuzzyContext parse_context(const std::string& path) {
  return reader_for(path).context(parse_json(read_file(path), path));
}

std::string serialize_context(const FuzzyContext& c) {
  Json j;
  j["schema"] = kContextTag;
  j["quantale"] = quantale_json(c.quantale);
  auto members = [&](const std::vector<std::string>& names, const std::vector<int>& degs) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < names.size(); ++i)
      arr.push_back(Json{{"name", names[i]}, {"degree", c.quantale.elements[degs[i]]}});
    return arr;
  };
  j["objects"] = members(c.objects, c.object_degrees);
  j["attributes"] = members(c.attributes, c.attribute_degrees);
  Json inc = Json::array();
  for (const auto& row : c.incidence) {
    Json r = Json::array();
    for (int v : row) r.push_back(c.quantale.elements[v]);
    inc.push_back(r);
  }
  j["incidence"] = inc;
  return j.dump(2) + "\n";
}

QDistributor context_distributor(const FuzzyContext& c) {
  const int na = static_cast<int>(c.objects.size()), nb = static_cast<int>(c.attributes.size());
  std::vector<int> m;
  if (c.crisp()) {
    const int top = c.quantale.leq[0][1] ? 1 : 0;
    auto Q = fixtures::two();
    for (const auto& row : c.incidence)
      for (int v : row) m.push_back(v == top ? Q->top(0, 0) : Q->bot(0, 0));
    auto A = std::make_shared<const QCategory>(discrete_category(Q, {c.objects, std::vector<int>(na, 0)}));
    auto B = std::make_shared<const QCategory>(discrete_category(Q, {c.attributes, std::vector<int>(nb, 0)}));
    return make_distributor(A, B, std::move(m));
  }
  auto Q = std::make_shared<const Quantaloid>(quantaloid_from_divisible_quantale(c.quantale));
  auto A = std::make_shared<const QCategory>(discrete_category(Q, {c.objects, c.object_degrees}));
  auto B = std::make_shared<const QCategory>(discrete_category(Q, {c.attributes, c.attribute_degrees}));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      const auto a = Q->hom(c.object_degrees[x], c.attribute_degrees[y]).find(c.quantale.elements[c.incidence[x][y]]);
      if (!a) throw Error(Errc::DegreeOutOfHom, "incidence (" + c.objects[x] + "," + c.attributes[y] + ") out of hom");
      m.push_back(*a);
    }
  return make_distributor(A, B, std::move(m));
}

QuantaleSpec parse_quantale_text(const std::string& text, const std::string& source) {
  return Reader(source, fs::current_path()).quantale(parse_json(text, source), "", true);
}

QuantaleSpec parse_quantale(const std::string& path) {
  return reader_for(path).quantale(parse_json(read_file(path), path), "", true);
}

CategoryPtr parse_category_text(const std::string& text, const std::string& source) {
  Reader r(source, fs::current_path());
  const Json j = parse_json(text, source);
  r.check_tag(j, kCategoryTag, true);
  return r.category_body(j, "");
}

CategoryPtr parse_category(const std::string& path) {
  Reader r = reader_for(path);
  const Json j = parse_json(read_file(path), path);
  r.check_tag(j, kCategoryTag, true);
  return r.category_body(j, "");
}

QDistributor parse_distributor(const std::string& path) {
  Reader r = reader_for(path);
  const Json j = parse_json(read_file(path), path);
  r.check_tag(j, kDistributorTag, true);
  return r.distributor(j, "");
}

Infomorphism parse_infomorphism(const std::string& path) {
  return reader_for(path).infomorphism(parse_json(read_file(path), path));
}

DocKind parse_doc_kind(const std::string& name) {
  static const std::map<std::string, DocKind> kinds = {
      {"quantale", DocKind::Quantale},       {"quantaloid", DocKind::Quantaloid},
      {"category", DocKind::Category},       {"distributor", DocKind::Distributor},
      {"context", DocKind::Context},         {"infomorphism", DocKind::Infomorphism}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw Error(Errc::SchemaError, "unknown document kind '" + name + "'");
  return it->second;
}

ValidationReport validate_document(const std::string& path, DocKind kind, bool require_divisible) {
  ValidationReport rep;
  auto divisibility = [&](const QuantaleSpec& q) {
    if (!require_divisible) return;
    const auto d = check_divisible(q);
    if (!d.divisible)
      rep.violations.push_back("divisibility failure at (" + q.elements[d.witness->first] + "," +
                               q.elements[d.witness->second] + ")");
  };
  try {
    switch (kind) {
      case DocKind::Quantale: {
        const auto q = parse_quantale(path);
        for (const auto& v : validate_quantale(q)) rep.violations.push_back(v);
        if (rep.ok()) divisibility(q);
        break;
      }
      case DocKind::Quantaloid: {
        Reader r = reader_for(path);
        const Json j = parse_json(read_file(path), path);
        r.check_tag(j, kQuantaloidTag, true);
        add_report(rep, validate_quantaloid(r.quantaloid_body(j, "")));
        break;
      }
      case DocKind::Category:
        add_report(rep, validate_category(*parse_category(path)));
        break;
      case DocKind::Distributor: {
        const auto phi = parse_distributor(path);
        add_report(rep, validate_category(*phi.dom), "dom ");
        add_report(rep, validate_category(*phi.cod), "cod ");
        add_report(rep, validate_distributor(phi));
        break;
      }
      case DocKind::Context: {
        const auto c = parse_context(path);
        for (const auto& v : validate_quantale(c.quantale)) rep.violations.push_back(v);
        if (rep.ok()) divisibility(c.quantale);
        break;
      }
      case DocKind::Infomorphism: {
        const auto i = parse_infomorphism(path);
        add_report(rep, validate_functor(i.F).violations, "F ");
        add_report(rep, validate_functor(i.G).violations, "G ");
        add_report(rep, validate_infomorphism(i));
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaError) throw;
    rep.violations.push_back(e.what());
  }
  return rep;
}

}  // namespace qcat
