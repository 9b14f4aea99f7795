#include "qcat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcat/error.hpp"
#include "qcat/laws.hpp"

namespace qcat::cli {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t presheaf_space(const QCategory& A) {
  std::uint64_t s = 0;
  for (int X = 0; X < A.Q().num_objects(); ++X) s += weight_space_bound(A, Variance::Contra, X);
  return s;
}

Json weight_json(const QCategory& A, Variance v, const Weight& w) {
  Json j = Json::object();
  for (int a = 0; a < A.size(); ++a) {
    const auto& hom = v == Variance::Contra ? A.Q().hom(A.type(a), w.type) : A.Q().hom(w.type, A.type(a));
    j[A.name(a)] = hom.label(w.w[a]);
  }
  return j;
}

Json hom_json(const QCategory& C) {
  Json rows = Json::array();
  for (int i = 0; i < C.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < C.size(); ++k) row.push_back(C.Q().hom(C.type(i), C.type(k)).label(C.hom(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json certificate(const QCategory& C) {
  constexpr std::uint64_t kCertificateLimit = 20000;
  std::uint64_t bound = 0;
  for (int X = 0; X < C.Q().num_objects(); ++X)
    bound += std::max(weight_space_bound(C, Variance::Contra, X), weight_space_bound(C, Variance::Co, X));
  if (bound > kCertificateLimit)
    return "skipped: presheaf space bound " + std::to_string(bound) + " exceeds " + std::to_string(kCertificateLimit);
  const auto r = is_complete(C, kCertificateLimit);
  return Json{{"complete", r.complete}, {"dual_complete", r.dual_complete}, {"formulas_agree", r.formulas_agree}};
}

std::string concept_id(int k) { return "k" + std::to_string(k); }

bool same_concepts(const ConceptLattice& a, const ConceptLattice& b) {
  if (a.size() != b.size()) return false;
  for (int k = 0; k < a.size(); ++k)
    if (a.concepts[k].mu != b.concepts[k].mu || a.concepts[k].lam != b.concepts[k].lam) return false;
  return true;
}

std::string count_summary(const ConceptLattice& L, const char* noun) {
  std::string s = std::to_string(L.size()) + " " + noun;
  if (L.size() == 1) s.pop_back();
  const Quantaloid& Q = L.cat->Q();
  if (Q.num_objects() == 1) return s;
  std::map<int, int> by_type;
  for (const auto& c : L.concepts) ++by_type[c.type()];
  s += "; potential concepts by type degree";
  bool first = true;
  for (int X = 0; X < Q.num_objects(); ++X) {
    s += (first ? " " : ", ") + Q.object_name(X) + ": " + std::to_string(by_type[X]);
    first = false;
  }
  return s;
}

const char* algorithm_name(Algorithm a) { return a == Algorithm::Brute ? "brute" : "generated"; }

}  // namespace

std::uint64_t default_cap() {
  if (const char* env = std::getenv("QCAT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

LatticeOutput cmd_concepts(const FuzzyContext& c, ConceptKind mode, Algorithm algorithm, std::uint64_t cap) {
  const QDistributor phi = context_distributor(c);
  const ConceptLattice L = concept_lattice(phi, mode, algorithm, cap);
  const QCategory& A = *phi.dom;
  const QCategory& B = *phi.cod;
  const Variance lam_v = mode == ConceptKind::Isbell ? Variance::Co : Variance::Contra;

  LatticeOutput out;
  Json doc;
  doc["schema"] = "qcat.lattice/1";
  doc["kind"] = mode == ConceptKind::Isbell ? "isbell" : "kan";
  doc["algorithm"] = algorithm_name(algorithm);
  doc["types"] = A.Q().object_names();
  Json concepts = Json::array();
  for (int k = 0; k < L.size(); ++k) {
    const Concept& cc = L.concepts[k];
    concepts.push_back(Json{{"id", concept_id(k)},
                            {"type", A.Q().object_name(cc.type())},
                            {"mu", weight_json(A, Variance::Contra, cc.mu)},
                            {"lambda", weight_json(B, lam_v, cc.lam)},
                            {"generator", cc.generator}});
  }
  doc["concepts"] = concepts;
  doc["hom"] = hom_json(*L.cat);
  doc["completeness"] = certificate(*L.cat);
  if (algorithm == Algorithm::Brute) {
    doc["cross_check"] = "not applicable to brute enumeration";
  } else if (const auto space = presheaf_space(A); space > kCrossCheckLimit) {
    doc["cross_check"] = "skipped: presheaf space " + std::to_string(space) + " exceeds " +
                         std::to_string(kCrossCheckLimit);
  } else {
    out.cross_check_ok = same_concepts(L, concept_lattice(phi, mode, Algorithm::Brute, cap));
    doc["cross_check"] = out.cross_check_ok ? "brute enumeration agrees" : "brute enumeration disagrees";
  }
  out.summary = count_summary(L, "concepts");
  doc["summary"] = out.summary;
  out.document = doc.dump(2) + "\n";
  return out;
}

LatticeOutput cmd_macneille(const CategoryPtr& A, std::uint64_t cap) {
  const MacNeille M = macneille_completion(A, cap);
  const ConceptLattice& L = M.lattice;
  LatticeOutput out;
  Json doc;
  doc["schema"] = "qcat.lattice/1";
  doc["kind"] = "macneille";
  doc["types"] = A->Q().object_names();
  Json cuts = Json::array();
  for (int k = 0; k < L.size(); ++k)
    cuts.push_back(Json{{"id", concept_id(k)},
                        {"type", A->Q().object_name(L.concepts[k].type())},
                        {"lower", weight_json(*A, Variance::Contra, L.concepts[k].mu)},
                        {"upper", weight_json(*A, Variance::Co, L.concepts[k].lam)}});
  doc["cuts"] = cuts;
  Json emb = Json::object();
  for (int x = 0; x < A->size(); ++x) emb[A->name(x)] = concept_id(M.embedding(x));
  doc["embedding"] = emb;
  doc["hom"] = hom_json(*L.cat);
  doc["completeness"] = certificate(*L.cat);
  out.summary = count_summary(L, "cuts");
  doc["summary"] = out.summary;
  out.document = doc.dump(2) + "\n";
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concept lattices over quantaloids"};
  app.require_subcommand(1);

  std::string vpath, vkind;
  bool require_divisible = false;
  auto* validate = app.add_subcommand("validate", "Validate a document");
  validate->add_option("file", vpath)->required();
  validate->add_option("--kind", vkind, "quantale|quantaloid|category|distributor|context|infomorphism")->required();
  validate->add_flag("--require-divisible", require_divisible);

  std::string cpath, mode = "isbell", algorithm = "generated", out_path;
  std::uint64_t cap = default_cap();
  auto* concepts = app.add_subcommand("concepts", "Concept lattice of a context");
  concepts->add_option("context", cpath)->required();
  concepts->add_option("--mode", mode)->check(CLI::IsMember({"isbell", "kan"}));
  concepts->add_option("--algorithm", algorithm)->check(CLI::IsMember({"brute", "generated"}));
  concepts->add_option("--out", out_path);
  concepts->add_option("--cap", cap)->check(CLI::PositiveNumber);

  std::string mpath;
  auto* macneille = app.add_subcommand("macneille", "MacNeille completion of a category");
  macneille->add_option("category", mpath)->required();
  macneille->add_option("--out", out_path);
  macneille->add_option("--cap", cap)->check(CLI::PositiveNumber);

  LawConfig cfg;
  std::string profile = "small";
  int only = 0;
  auto* laws = app.add_subcommand("laws", "Run the law registry");
  laws->add_option("--seed", cfg.seed);
  laws->add_option("--profile", profile)->check(CLI::IsMember({"small", "medium"}));
  laws->add_option("--only", only)->check(CLI::Range(1, 12));
  laws->add_flag("--mutate", cfg.mutate, "corrupt one composition entry of 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const LatticeOutput& o) {
    if (out_path.empty()) {
      out << o.document;
      err << o.summary << "\n";
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        err << "cannot write " << out_path << "\n";
        return 1;
      }
      f << o.document;
      out << o.summary << "\n";
    }
    if (!o.cross_check_ok) {
      err << "generated lattice disagrees with brute enumeration\n";
      return 1;
    }
    return 0;
  };

  try {
    if (*validate) {
      const auto rep = validate_document(vpath, parse_doc_kind(vkind), require_divisible);
      if (rep.ok()) {
        out << "OK\n";
        return 0;
      }
      out << rep.violations.size() << (rep.violations.size() == 1 ? " violation\n" : " violations\n");
      for (const auto& v : rep.violations) out << "  " << v << "\n";
      return 1;
    }
    if (*concepts) {
      const auto alg = algorithm == "brute" ? Algorithm::Brute : Algorithm::Generated;
      const auto kind = mode == "kan" ? ConceptKind::Kan : ConceptKind::Isbell;
      try {
        return emit(cmd_concepts(parse_context(cpath), kind, alg, cap));
      } catch (const Error& e) {
        if (e.code() != Errc::PresheafSpaceTooLarge) throw;
        err << e.what() << "\n";
        if (alg == Algorithm::Brute) err << "hint: retry with --algorithm generated or a larger --cap\n";
        return 1;
      }
    }
    if (*macneille) return emit(cmd_macneille(parse_category(mpath), cap));
    if (*laws) {
      cfg.profile = profile == "medium" ? Profile::Medium : Profile::Small;
      int failed = 0, total = 0;
      for (const auto& entry : law_registry()) {
        if (only && entry.criterion != only) continue;
        const LawResult r = run_law(entry.criterion, cfg);
        out << format_law_result(r, cfg.seed) << "\n";
        ++total;
        if (!r.pass()) ++failed;
      }
      out << "seed " << cfg.seed << ", profile " << profile << ": " << (total - failed) << "/" << total
          << " laws pass\n";
      return failed ? 1 : 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qcat::cli
