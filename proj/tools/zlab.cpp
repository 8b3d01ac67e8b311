// zlab: JSON reports on stdout, a short summary on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zlab/report.hpp"

namespace {

std::uint64_t env_seed() {
  if (const char* s = std::getenv("ZLAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 0x5eedULL;
}

// A path on disk, or the name of an embedded corpus curve.
zlab::CurveFile open_curve(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe) return zlab::load_curve_file(arg);
  if (auto cf = zlab::corpus_file(arg)) return *cf;
  throw zlab::Error(zlab::ErrorKind::SyntaxError, "no such file or corpus curve: " + arg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular plane curves: configurations, torus type, Alexander polynomials"};
  app.require_subcommand(1);
  zlab::ReportOptions opt;
  opt.seed = env_seed();
  app.add_flag("--trace", opt.trace, "include the conic search trace");

  std::string file, file_b, params;
  auto* classify = app.add_subcommand("classify", "full pipeline on one curve");
  classify->add_option("file", file, "curve file or corpus name")->required();
  auto* torus = app.add_subcommand("torus-check", "exact torus-type search for a sextic");
  torus->add_option("file", file)->required();
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial from the sigma cokernels");
  alex->add_option("file", file)->required();
  auto* semi = app.add_subcommand("semi-torus-verify", "semi-torus decomposition, inner/outer points, pencil criterion");
  semi->add_option("file", file)->required();
  auto* pair = app.add_subcommand("pair", "compare two curves");
  pair->add_option("fileA", file)->required();
  pair->add_option("fileB", file_b)->required();
  auto* family = app.add_subcommand("family-6a2", "member of the two-outer-cusp 6A2 slice");
  family->add_option("--params", params, "t1,s1,t2,s2,f2_xx,f2_yy,g2_x,g2_xy")->required();
  auto* corpus = app.add_subcommand("corpus-verify", "check every bundled curve against its claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  zlab::Json report;
  try {
    if (*classify) report = zlab::classify_report(open_curve(file), opt);
    else if (*torus) report = zlab::torus_check_report(open_curve(file), opt);
    else if (*alex) report = zlab::alexander_report(open_curve(file), opt);
    else if (*semi) report = zlab::semi_torus_report(open_curve(file), opt);
    else if (*pair) report = zlab::pair_report(open_curve(file), open_curve(file_b), opt);
    else if (*family) report = zlab::family_6a2_report(zlab::parse_6a2_params(params), opt);
    else if (*corpus) report = zlab::corpus_verify_report(opt);
  } catch (const std::exception& e) {
    report = zlab::error_report(e);
  }
  std::cout << report.dump(2) << "\n";
  std::cerr << zlab::human_summary(report);
  return zlab::exit_code(report);
}
