#include "zlab/report.hpp"

#include <sstream>

#include "zlab/alexlab.hpp"

namespace zlab {
namespace {

std::string field_text(const FieldDescriptor& f) {
  return f.is_rational_field() ? "Q" : "Q(sqrt(" + f.radicand().get_str() + "))";
}

Json curve_json(const CurveFile& cf, const Curve& c) {
  return {{"name", cf.name}, {"field", field_text(c.field())}, {"degree", c.degree}, {"polynomial", to_string(c.f)}};
}

Json point_json(const SingularPointRecord& r) {
  Json j{{"point", r.point.to_string()}, {"count", r.count()},      {"multiplicity", r.mult},
         {"mu", r.mu},                   {"type", r.ade.to_string()}, {"rho5", r.rho5}};
  if (r.label != LocusLabel::unlabeled) j["label"] = std::string(to_string(r.label));
  return j;
}

Json points_json(const std::vector<SingularPointRecord>& recs) {
  Json a = Json::array();
  for (const auto& r : recs) a.push_back(point_json(r));
  return a;
}

Json cert_json(const TorusCertificate& cert, bool trace) {
  Json j{{"verdict", std::string(to_string(cert.verdict))}, {"subsets_tried", cert.subsets_tried}};
  if (cert.witness) j["witness"] = to_string(*cert.witness);
  if (cert.decomposition) {
    const auto& d = *cert.decomposition;
    j["decomposition"] = {{"f2", to_string(d.f2)},
                          {"f3", to_string(d.f3)},
                          {"scale", d.scale.to_string()},
                          {"square_scale", d.square_scale.to_string()}};
  }
  if (trace) {
    Json t = Json::array();
    for (const auto& s : cert.trace) {
      Json cands = Json::array();
      for (const auto& cc : s.candidates) {
        Json pts = Json::array();
        for (const auto& pc : cc.points)
          pts.push_back({{"point", pc.point},
                         {"type", pc.type},
                         {"count", pc.count},
                         {"rho", pc.rho},
                         {"intersection", pc.intersection ? Json(*pc.intersection) : Json(nullptr)},
                         {"ok", pc.ok}});
        cands.push_back({{"conic", to_string(cc.conic)}, {"passed", cc.passed}, {"reason", cc.reason},
                         {"total", cc.total}, {"points", pts}});
      }
      t.push_back({{"points", s.points}, {"conditions", s.conditions.rows()}, {"rank", s.rank}, {"candidates", cands}});
    }
    j["trace"] = t;
  }
  return j;
}

Json alexander_json(const AlexanderResult& r) {
  Json j{{"delta", r.delta}, {"trivial", r.trivial}, {"degree_case", r.degree_case}};
  if (r.exponent) j["exponent"] = *r.exponent;
  if (!r.coker.empty()) j["coker"] = r.coker;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::optional<SemiTorusDecomposition> semi_of(const CurveFile& cf) {
  if (cf.decomposition == "semi-torus") return SemiTorusDecomposition{cf.part("f2"), cf.part("g2"), cf.part("h2"), 6};
  if (cf.decomposition == "semi-torus-10")
    return SemiTorusDecomposition{cf.part("f2"), cf.part("g4"), cf.part("h2"), 10};
  return std::nullopt;
}

// Lazily computed pipeline stages for one curve.
class Pipeline {
 public:
  Pipeline(const CurveFile& cf, const ReportOptions& opt) : cf_(cf), opt_(opt), c_(cf.curve()) {}

  const CurveFile& file() const { return cf_; }
  const Curve& curve() const { return c_; }
  const std::vector<SingularPointRecord>& records() {
    if (!recs_) recs_ = analyze_singularities(c_);
    return *recs_;
  }
  const TorusCertificate& certificate() {
    if (!cert_) cert_ = tokunaga_search(c_, records(), opt_.seed);
    return *cert_;
  }
  const AlexanderResult& alexander() {
    if (!alex_) alex_ = alexander_polynomial(c_, records());
    return *alex_;
  }
  const SemiTorusReport& semi() {
    if (!semi_) {
      auto d = semi_of(cf_);
      if (!d) throw Error(ErrorKind::InvalidArgument, cf_.name + " has no semi-torus decomposition");
      semi_ = semi_torus_verify(c_, *d);
    }
    return *semi_;
  }

 private:
  const CurveFile& cf_;
  ReportOptions opt_;
  Curve c_;
  std::optional<std::vector<SingularPointRecord>> recs_;
  std::optional<TorusCertificate> cert_;
  std::optional<AlexanderResult> alex_;
  std::optional<SemiTorusReport> semi_;
};

Json check(const std::string& key, const std::string& expected, const std::string& actual, bool ok) {
  return {{"key", key}, {"expected", expected}, {"actual", actual}, {"ok", ok}};
}

// Every claim of the expected block, plus the decomposition identity when the
// file carries both a polynomial and its parts.
Json expected_checks(Pipeline& p) {
  const CurveFile& cf = p.file();
  Json out = Json::array();
  if (cf.poly && !cf.decomposition.empty()) {
    bool same = *cf.decomposition_polynomial() == parse_polynomial(*cf.poly, cf.field);
    out.push_back(check("identity", "true", same ? "true" : "false", same));
  }
  for (const auto& [key, want] : cf.expected) {
    try {
      if (key == "configuration") {
        Configuration got = configuration(p.records());
        out.push_back(check(key, want, got.to_string(), got == Configuration::parse(want)));
      } else if (key == "points") {
        for (const auto& [ptxt, type] : parse_point_claims(want)) {
          AdeType got = classify_ade(p.curve(), parse_point(ptxt, cf.field)).ade;
          out.push_back(check("points " + ptxt, type, got.to_string(), got == AdeType::parse(type)));
        }
      } else if (key == "inner" || key == "outer") {
        const auto& r = p.semi();
        Configuration got = key == "inner" ? r.inner : r.outer;
        out.push_back(check(key, want, got.to_string(), got == Configuration::parse(want)));
      } else if (key == "verdict") {
        std::string got(to_string(p.certificate().verdict));
        out.push_back(check(key, want, got, got == want));
      } else if (key == "alexander") {
        const std::string& got = p.alexander().delta;
        out.push_back(check(key, want, got, got == want));
      } else if (key == "contact") {
        auto d = semi_of(cf);
        for (const auto& [ptxt, iota] : parse_int_claims(want)) {
          std::optional<int> got;
          if (d) {
            auto parts = intersection_multiplicity(d->f2, 2, d->g2, d->g2.total_degree(), family_of(parse_point(ptxt, cf.field), cf.field));
            got = parts.front().second;
          } else {
            got = maximal_contact(p.curve(), parse_point(ptxt, cf.field), iota).iota;
          }
          out.push_back(check("contact " + ptxt, std::to_string(iota), got ? std::to_string(*got) : "infinite",
                              got && *got == iota));
        }
      } else {
        out.push_back(check(key, want, "unknown claim", false));
      }
    } catch (const Error& e) {
      out.push_back(check(key, want, e.what(), false));
    }
  }
  return out;
}

bool all_ok(const Json& checks) {
  for (const auto& c : checks)
    if (!c.at("ok").get<bool>()) return false;
  return true;
}

void finish(Json& j, const Json& checks) {
  j["expected"] = checks;
  j["status"] = all_ok(checks) ? "pass" : "mismatch";
  for (const auto& c : checks)
    if (!c.at("ok").get<bool>()) {
      j["first_mismatch"] = c;
      break;
    }
}

Json semi_json(const SemiTorusReport& r, const SemiTorusDecomposition& d) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json j = point_json(p.record);
    if (p.inner_iota) j["inner_iota"] = *p.inner_iota;
    if (p.predicted) j["predicted"] = p.predicted->to_string();
    pts.push_back(j);
  }
  Json j{{"identity", r.identity},
         {"degree", d.degree},
         {"parts", {{"f2", to_string(d.f2)}, {d.degree == 10 ? "g4" : "g2", to_string(d.g2)}, {"h2", to_string(d.h2)}}},
         {"points", pts},
         {"nice", r.nice},
         {"configuration", r.configuration.to_string()},
         {"inner", r.inner.to_string()},
         {"outer", r.outer.to_string()},
         {"predicted_inner", r.predicted_inner.to_string()},
         {"warnings", r.warnings}};
  if (r.inner_in_sharp) j["inner_in_sharp"] = *r.inner_in_sharp;
  return j;
}

// Pencil criterion when it applies: sextic, nice, one or two rational outer points.
std::optional<Json> pencil_json(const SemiTorusReport& r, const SemiTorusDecomposition& d) {
  if (d.degree != 6 || !r.nice) return std::nullopt;
  auto outs = outer_points(r, d);
  if (outs.empty() || outs.size() > 2) return std::nullopt;
  Json o = Json::array();
  for (const auto& x : outs) o.push_back({{"point", x.P.to_string()}, {"t", x.t.to_string()}, {"s", x.s.to_string()}});
  auto v = nontorus_check_thm7(r, d, outs);
  Json j{{"outer_points", o}, {"verdict", std::string(to_string(v.kind))}, {"case", std::string(1, v.case_label)},
         {"reason", v.reason}};
  if (v.determinant) j["determinant"] = v.determinant->to_string();
  return j;
}

bool sextic_pipeline_applies(Pipeline& p) {
  return p.curve().degree == 6 && configuration(p.records()).all_simple();
}

}  // namespace

Json classify_report(const CurveFile& cf, const ReportOptions& opt) {
  Pipeline p(cf, opt);
  Json j{{"command", "classify"}, {"curve", curve_json(cf, p.curve())}, {"seed", opt.seed}};
  j["singular_points"] = points_json(p.records());
  Configuration conf = configuration(p.records());
  j["configuration"] = conf.to_string();
  j["all_simple"] = conf.all_simple();
  if (sextic_pipeline_applies(p)) j["torus"] = cert_json(p.certificate(), opt.trace);
  if ((p.curve().degree == 6 || p.curve().degree == 10) && conf.all_simple()) j["alexander"] = alexander_json(p.alexander());
  finish(j, expected_checks(p));
  return j;
}

Json torus_check_report(const CurveFile& cf, const ReportOptions& opt) {
  Pipeline p(cf, opt);
  if (p.curve().degree != 6) throw Error(ErrorKind::UnsupportedDegree, "the torus search is for sextics");
  Json j{{"command", "torus-check"}, {"curve", curve_json(cf, p.curve())}, {"seed", opt.seed}};
  j["singular_points"] = points_json(p.records());
  j["configuration"] = configuration(p.records()).to_string();
  j["torus"] = cert_json(p.certificate(), opt.trace);
  Json checks = Json::array();
  if (cf.expected.count("verdict")) {
    std::string got(to_string(p.certificate().verdict));
    checks.push_back(check("verdict", cf.expected.at("verdict"), got, got == cf.expected.at("verdict")));
  }
  finish(j, checks);
  return j;
}

Json alexander_report(const CurveFile& cf, const ReportOptions& opt) {
  Pipeline p(cf, opt);
  Json j{{"command", "alexander"}, {"curve", curve_json(cf, p.curve())}, {"seed", opt.seed}};
  j["configuration"] = configuration(p.records()).to_string();
  j["alexander"] = alexander_json(p.alexander());
  Json sig = Json::array();
  std::vector<int> ks = p.curve().degree == 6 ? std::vector<int>{5} : std::vector<int>{7, 8, 9};
  for (int k : ks) {
    auto s = sigma_matrix(p.curve(), p.records(), k);
    sig.push_back({{"k", k}, {"rows", s.matrix.rows()}, {"columns", s.matrix.cols()}, {"rank", s.rank}, {"coker", s.coker_dim}});
  }
  j["sigma"] = sig;
  Json checks = Json::array();
  if (cf.expected.count("alexander")) {
    const std::string& want = cf.expected.at("alexander");
    checks.push_back(check("alexander", want, p.alexander().delta, p.alexander().delta == want));
  }
  finish(j, checks);
  return j;
}

Json semi_torus_report(const CurveFile& cf, const ReportOptions& opt) {
  auto d = semi_of(cf);
  if (!d) throw Error(ErrorKind::InvalidArgument, cf.name + " has no semi-torus decomposition");
  Pipeline p(cf, opt);
  Json j{{"command", "semi-torus-verify"}, {"curve", curve_json(cf, p.curve())}, {"seed", opt.seed}};
  const auto& r = p.semi();
  j["semi_torus"] = semi_json(r, *d);
  if (auto pj = pencil_json(r, *d)) j["pencil"] = *pj;
  Json checks = Json::array();
  for (const char* key : {"inner", "outer"})
    if (cf.expected.count(key)) {
      Configuration got = std::string(key) == "inner" ? r.inner : r.outer;
      checks.push_back(check(key, cf.expected.at(key), got.to_string(), got == Configuration::parse(cf.expected.at(key))));
    }
  if (cf.expected.count("configuration")) {
    const std::string& want = cf.expected.at("configuration");
    checks.push_back(check("configuration", want, r.configuration.to_string(), r.configuration == Configuration::parse(want)));
  }
  finish(j, checks);
  return j;
}

Json pair_report(const CurveFile& a, const CurveFile& b, const ReportOptions& opt) {
  Pipeline pa(a, opt), pb(b, opt);
  Json j{{"command", "pair"}, {"seed", opt.seed}};
  Json sides = Json::array();
  for (Pipeline* p : {&pa, &pb}) {
    Json s{{"curve", curve_json(p->file(), p->curve())}, {"configuration", configuration(p->records()).to_string()},
           {"alexander", alexander_json(p->alexander())}};
    if (sextic_pipeline_applies(*p)) s["torus_verdict"] = std::string(to_string(p->certificate().verdict));
    sides.push_back(s);
  }
  j["curves"] = sides;
  bool same_conf = configuration(pa.records()) == configuration(pb.records());
  bool delta_differs = pa.alexander().delta != pb.alexander().delta;
  j["same_configuration"] = same_conf;
  j["alexander_differs"] = delta_differs;
  j["pair"] = same_conf && delta_differs;
  j["verdict"] = same_conf && delta_differs ? "Zariski-pair candidate (Alexander-distinguished)"
                 : !same_conf               ? "not a pair: configurations differ"
                                            : "not a pair: equal Alexander polynomials";
  j["status"] = "pass";
  return j;
}

Json family_6a2_report(const SixA2Params& prm, const ReportOptions& opt) {
  auto fam = build_6a2_family(prm);
  CurveFile cf;
  cf.name = "family-6a2";
  cf.field = fam.curve.field();
  cf.decomposition = "semi-torus";
  cf.parts = {{"f2", to_string(fam.decomposition.f2)}, {"g2", to_string(fam.decomposition.g2)},
              {"h2", to_string(fam.decomposition.h2)}};
  Pipeline q(cf, opt);
  Json j{{"command", "family-6a2"}, {"seed", opt.seed}};
  j["params"] = {{"t1", prm.t1.to_string()},       {"s1", prm.s1.to_string()},       {"t2", prm.t2.to_string()},
                 {"s2", prm.s2.to_string()},       {"f2_xx", prm.f2_xx.to_string()}, {"f2_yy", prm.f2_yy.to_string()},
                 {"g2_x", prm.g2_x.to_string()},   {"g2_xy", prm.g2_xy.to_string()}};
  j["rank"] = fam.rank;
  j["pencil_hypotheses"] = fam.thm7_hypotheses;
  j["curve"] = curve_json(cf, q.curve());
  auto conf = configuration(q.records());
  j["singular_points"] = points_json(q.records());
  j["configuration"] = conf.to_string();
  Json checks = Json::array();
  checks.push_back(check("rank", "10", std::to_string(fam.rank), fam.rank == 10));
  checks.push_back(check("configuration", "6A2", conf.to_string(), conf == Configuration::parse("6A2")));
  if (conf.all_simple()) {
    j["torus"] = cert_json(q.certificate(), opt.trace);
    j["alexander"] = alexander_json(q.alexander());
    const auto& r = q.semi();
    j["semi_torus"] = semi_json(r, fam.decomposition);
    if (auto pj = pencil_json(r, fam.decomposition)) j["pencil"] = *pj;
    std::string v(to_string(q.certificate().verdict));
    checks.push_back(check("verdict", "non-torus", v, v == "non-torus"));
    checks.push_back(check("alexander", "1", q.alexander().delta, q.alexander().delta == "1"));
  }
  finish(j, checks);
  return j;
}

Json corpus_verify_report(const ReportOptions& opt) {
  Json curves = Json::array();
  int passed = 0, failed = 0, errors = 0;
  for (const auto& [file, text] : embedded_corpus()) {
    Json entry{{"file", file}};
    try {
      CurveFile cf = parse_curve_file(text, file);
      entry["name"] = cf.name;
      Pipeline p(cf, opt);
      Json checks = expected_checks(p);
      finish(entry, checks);
    } catch (const std::exception& e) {
      entry["status"] = "error";
      entry["error"] = error_report(e).at("error");
    }
    const std::string st = entry.at("status");
    (st == "pass" ? passed : st == "mismatch" ? failed : errors)++;
    curves.push_back(entry);
  }
  Json j{{"command", "corpus-verify"}, {"seed", opt.seed}, {"curves", curves}};
  j["summary"] = {{"total", passed + failed + errors}, {"passed", passed}, {"mismatched", failed}, {"errors", errors}};
  j["status"] = errors ? "error" : failed ? "mismatch" : "pass";
  for (const auto& c : curves)
    if (c.at("status") != "pass") {
      j["first_mismatch"] = c.contains("first_mismatch") ? Json{{"file", c.at("file")}, {"check", c.at("first_mismatch")}}
                                                         : Json{{"file", c.at("file")}, {"error", c.at("error")}};
      break;
    }
  return j;
}

SixA2Params parse_6a2_params(const std::string& text) {
  std::vector<FieldElem> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.emplace_back(parse_rational(item));
  if (v.size() != 8)
    throw Error(ErrorKind::SyntaxError, "expected 8 comma-separated rationals t1,s1,t2,s2,f2_xx,f2_yy,g2_x,g2_xy");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

Json error_report(const std::exception& e) {
  Json err{{"message", e.what()}};
  if (const auto* z = dynamic_cast<const Error*>(&e)) err["kind"] = std::string(to_string(z->kind()));
  else err["kind"] = "Internal";
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  return {{"status", "error"}, {"error", err}, {"exit_code", exit_code(e)}};
}

int exit_code(const std::exception& e) {
  const auto* z = dynamic_cast<const Error*>(&e);
  if (!z) return 4;
  switch (z->kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::DescriptorMismatch:
      return 3;
    case ErrorKind::IdentityFails:
      return 2;
    default:
      return 4;
  }
}

int exit_code(const Json& report) {
  const std::string st = report.value("status", "error");
  if (st == "pass") return 0;
  if (st == "mismatch") return 2;
  if (report.contains("exit_code")) return report.at("exit_code").get<int>();
  if (report.contains("curves"))
    for (const auto& c : report.at("curves"))
      if (c.value("status", "") == "error") return c.at("error").value("kind", "") == "SyntaxError" ? 3 : 4;
  return 4;
}

std::string human_summary(const Json& r) {
  std::ostringstream o;
  const std::string cmd = r.value("command", "");
  if (r.value("status", "") == "error" && r.contains("error")) {
    o << "error: " << r.at("error").at("message").get<std::string>() << "\n";
    return o.str();
  }
  if (r.contains("curve")) o << r.at("curve").at("name").get<std::string>() << " (degree " << r.at("curve").at("degree") << ")\n";
  if (r.contains("configuration")) o << "  configuration: " << r.at("configuration").get<std::string>() << "\n";
  if (r.contains("torus")) o << "  torus search: " << r.at("torus").at("verdict").get<std::string>() << "\n";
  if (r.contains("alexander")) o << "  Alexander polynomial: " << r.at("alexander").at("delta").get<std::string>() << "\n";
  if (r.contains("semi_torus")) {
    const auto& s = r.at("semi_torus");
    o << "  inner " << s.at("inner").get<std::string>() << ", outer " << s.at("outer").get<std::string>()
      << (s.at("nice").get<bool>() ? ", nice" : ", wild point present") << "\n";
  }
  if (r.contains("pencil")) o << "  pencil criterion: " << r.at("pencil").at("verdict").get<std::string>() << "\n";
  if (cmd == "pair") o << "  " << r.at("verdict").get<std::string>() << "\n";
  if (cmd == "corpus-verify") {
    const auto& s = r.at("summary");
    o << "corpus: " << s.at("passed") << "/" << s.at("total") << " passed\n";
    for (const auto& c : r.at("curves")) o << "  " << c.at("file").get<std::string>() << ": " << c.at("status").get<std::string>() << "\n";
  }
  if (r.contains("first_mismatch")) o << "  first mismatch: " << r.at("first_mismatch").dump() << "\n";
  o << "status: " << r.value("status", "") << "\n";
  return o.str();
}

}  // namespace zlab
