#pragma once

// JSON reports shared by the zlab command line tool and the Python module.
// Every report carries "status": "pass", "mismatch" or "error"; keys are
// sorted so identical input gives byte-identical output.

#include <cstdint>
#include <exception>
#include <string>

#include "json.hpp"
#include "zlab/curvefile.hpp"
#include "zlab/toruslab.hpp"

namespace zlab {

using Json = nlohmann::json;

struct ReportOptions {
  std::uint64_t seed = 0x5eedULL;
  bool trace = false;  // include the per-subset search trace
};

/// Full pipeline: singular locus, configuration, torus certificate, Alexander
/// polynomial, and the file's expected claims.
Json classify_report(const CurveFile& cf, const ReportOptions& opt = {});
Json torus_check_report(const CurveFile& cf, const ReportOptions& opt = {});
Json alexander_report(const CurveFile& cf, const ReportOptions& opt = {});
/// Needs a semi-torus decomposition in the file.
Json semi_torus_report(const CurveFile& cf, const ReportOptions& opt = {});
/// Candidate when the configurations agree and the Alexander polynomials differ.
Json pair_report(const CurveFile& a, const CurveFile& b, const ReportOptions& opt = {});
Json family_6a2_report(const SixA2Params& p, const ReportOptions& opt = {});
/// Checks every embedded corpus file against its expected block.
Json corpus_verify_report(const ReportOptions& opt = {});

/// Parses "t1,s1,t2,s2,f2_xx,f2_yy,g2_x,g2_xy" over Q.
SixA2Params parse_6a2_params(const std::string& text);

Json error_report(const std::exception& e);
/// 0 pass, 2 mismatch, 3 parse or field error, 4 internal error.
int exit_code(const Json& report);
int exit_code(const std::exception& e);

/// A few lines for people.
std::string human_summary(const Json& report);

}  // namespace zlab
