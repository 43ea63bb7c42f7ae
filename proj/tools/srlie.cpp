#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srlie/distance.hpp"
#include "srlie/oracle.hpp"
#include "srlie/verify.hpp"

namespace {

using nlohmann::json;
using namespace srlie;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// JSON cannot carry infinities; cut times print as the token "inf".
json finite_or_inf(double x) {
  if (std::isinf(x)) return json("inf");
  return json(x);
}

std::string locus_name(LocusClass c) {
  switch (c) {
    case LocusClass::LocalBranch:
      return "local";
    case LocusClass::GlobalBranch:
      return "global";
    case LocusClass::MetricLine:
      return "metric_line";
  }
  return "?";
}

struct CommonOpts {
  std::string group = "su2r";
  int metric = 2;
  std::string format = "json";
  double tol = 1e-9;

  GroupKind group_kind() const {
    return group == "su2r" ? GroupKind::Su2R : GroupKind::So3R;
  }
  BasisKind metric_kind() const {
    return metric == 1 ? BasisKind::D1 : BasisKind::D2;
  }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--group", c.group, "group: su2r or so3r")
      ->check(CLI::IsMember({"su2r", "so3r"}));
  cmd->add_option("--metric", c.metric, "metric: 1 or 2")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tol", c.tol, "membership tolerance")
      ->check(CLI::PositiveNumber);
}

struct PointOpts {
  std::vector<double> A, B, C;
  double v = 0.0;
};

void add_point(CLI::App* cmd, PointOpts& p) {
  cmd->add_option("--A", p.A, "SU2R: Re,Im of A")->delimiter(',')
      ->expected(2);
  cmd->add_option("--B", p.B, "SU2R: Re,Im of B")->delimiter(',')
      ->expected(2);
  cmd->add_option("--C", p.C, "SO3R: nine row-major entries")->delimiter(',')
      ->expected(9);
  cmd->add_option("--v", p.v, "line coordinate");
}

Su2RPoint parse_su2r(const PointOpts& p) {
  if (p.A.size() != 2 || p.B.size() != 2) {
    throw std::invalid_argument("su2r point needs --A re,im and --B re,im");
  }
  return {{p.A[0], p.A[1]}, {p.B[0], p.B[1]}, p.v};
}

So3RPoint parse_so3r(const PointOpts& p) {
  if (p.C.size() != 9) {
    throw std::invalid_argument("so3r point needs --C with nine entries");
  }
  Mat3 m{};
  for (int i = 0; i < 9; ++i) m.a[i] = p.C[i];
  return {m, p.v};
}

struct ParamOpts {
  std::vector<double> alpha;
  std::optional<double> phi0;
  double alpha2 = 0.0;
  double beta = 0.0;
};

void add_params(CLI::App* cmd, ParamOpts& p) {
  cmd->add_option("--alpha", p.alpha, "a1,a2,a3 (unit norm within 1e-6)")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--phi0", p.phi0,
                  "horizontal phase (alternative to --alpha, with --alpha2)");
  cmd->add_option("--alpha2", p.alpha2, "alpha2 when using --phi0");
  cmd->add_option("--beta", p.beta, "vertical frequency beta");
}

GeodesicParams parse_params(const ParamOpts& p, const CommonOpts& c) {
  if (p.phi0) {
    return GeodesicParams::from_phi0(*p.phi0, p.alpha2, p.beta,
                                     c.metric_kind(), c.group_kind());
  }
  if (p.alpha.size() != 3) {
    throw std::invalid_argument("params need --alpha a1,a2,a3 or --phi0");
  }
  return GeodesicParams::make(p.alpha[0], p.alpha[1], p.alpha[2], p.beta,
                              c.metric_kind(), c.group_kind());
}

void print_dist(const DistanceResult& r, const std::string& format) {
  if (format == "json") {
    json j;
    j["value"] = r.value;
    j["case_label"] = r.case_label;
    if (r.xi) j["xi"] = *r.xi;
    j["residual"] = r.residual;
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("value,case_label,xi,residual\n");
    std::printf("%s,%d,%s,%s\n", fmt17(r.value).c_str(), r.case_label,
                r.xi ? fmt17(*r.xi).c_str() : "",
                fmt17(r.residual).c_str());
  }
}

int cmd_dist(const CommonOpts& c, const PointOpts& p) {
  DistanceResult r;
  if (c.group_kind() == GroupKind::Su2R) {
    const Su2RPoint g = parse_su2r(p);
    r = c.metric == 1 ? dist_su2r_d1(g) : dist_su2r_d2(g);
  } else {
    const So3RPoint g = parse_so3r(p);
    r = c.metric == 1 ? dist_so3r_rho1(g) : dist_so3r_rho2(g);
  }
  print_dist(r, c.format);
  return kExitOk;
}

int cmd_geodesic(const CommonOpts& c, const ParamOpts& po, double t0,
                 double t1, int n) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  const GeodesicParams p = parse_params(po, c);
  std::vector<double> times;
  if (t0 == t1) {
    times.push_back(t0);
  } else {
    for (int i = 0; i <= n; ++i) times.push_back(t0 + (t1 - t0) * i / n);
  }
  const bool su2 = c.group_kind() == GroupKind::Su2R;
  json rows = json::array();
  if (c.format == "csv") {
    std::printf(su2 ? "t,ReA,ImA,ReB,ImB,v\n"
                    : "t,c11,c12,c13,c21,c22,c23,c31,c32,c33,v\n");
  }
  for (double t : times) {
    if (su2) {
      const Su2RPoint g = geodesic_su2r(p, t);
      if (c.format == "json") {
        rows.push_back({{"t", t},
                        {"ReA", g.A.real()},
                        {"ImA", g.A.imag()},
                        {"ReB", g.B.real()},
                        {"ImB", g.B.imag()},
                        {"v", g.v}});
      } else {
        std::printf("%s,%s,%s,%s,%s,%s\n", fmt17(t).c_str(),
                    fmt17(g.A.real()).c_str(), fmt17(g.A.imag()).c_str(),
                    fmt17(g.B.real()).c_str(), fmt17(g.B.imag()).c_str(),
                    fmt17(g.v).c_str());
      }
    } else {
      const So3RPoint g = geodesic_so3r(p, t);
      if (c.format == "json") {
        json row{{"t", t}, {"v", g.v}};
        const char* keys[9] = {"c11", "c12", "c13", "c21", "c22",
                               "c23", "c31", "c32", "c33"};
        for (int i = 0; i < 9; ++i) row[keys[i]] = g.C.a[i];
        rows.push_back(row);
      } else {
        std::printf("%s", fmt17(t).c_str());
        for (int i = 0; i < 9; ++i) std::printf(",%s", fmt17(g.C.a[i]).c_str());
        std::printf(",%s\n", fmt17(g.v).c_str());
      }
    }
  }
  if (c.format == "json") std::printf("%s\n", rows.dump().c_str());
  return kExitOk;
}

int cmd_cut(const CommonOpts& c, const ParamOpts& po) {
  const CutInfo info = cut_time(parse_params(po, c));
  if (c.format == "json") {
    json j;
    j["cut_time"] = finite_or_inf(info.cut_time);
    j["locus_class"] = locus_name(info.locus_class);
    j["first_conjugate_time"] = finite_or_inf(info.first_conjugate_time);
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("cut_time,locus_class,first_conjugate_time\n");
    std::printf(
        "%s,%s,%s\n",
        std::isinf(info.cut_time) ? "inf" : fmt17(info.cut_time).c_str(),
        locus_name(info.locus_class).c_str(),
        std::isinf(info.first_conjugate_time)
            ? "inf"
            : fmt17(info.first_conjugate_time).c_str());
  }
  return kExitOk;
}

int cmd_conjugate(const CommonOpts& c, const ParamOpts& po, int n) {
  const double t = conjugate_time(parse_params(po, c), n);
  if (c.format == "json") {
    json j{{"n", n}, {"time", t}};
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("n,time\n%d,%s\n", n, fmt17(t).c_str());
  }
  return kExitOk;
}

int cmd_locus(const CommonOpts& c, const PointOpts& p) {
  bool in_conj;
  std::optional<LocusClass> cut;
  if (c.group_kind() == GroupKind::Su2R) {
    const Su2RPoint g = parse_su2r(p);
    in_conj = in_first_conjugate_locus(g, c.metric_kind(), c.tol);
    cut = in_cut_locus(g, c.metric_kind(), c.tol);
  } else {
    const So3RPoint g = parse_so3r(p);
    in_conj = in_first_conjugate_locus(g, c.metric_kind(), c.tol);
    cut = in_cut_locus(g, c.metric_kind(), c.tol);
  }
  if (c.format == "json") {
    json j;
    j["in_cut_locus"] = cut.has_value();
    j["locus_class"] = cut ? json(locus_name(*cut)) : json(nullptr);
    j["in_first_conjugate_locus"] = in_conj;
    std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("in_cut_locus,locus_class,in_first_conjugate_locus\n");
    std::printf("%s,%s,%s\n", cut ? "yes" : "no",
                cut ? locus_name(*cut).c_str() : "",
                in_conj ? "yes" : "no");
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& c, const std::string& suite, int count,
               std::uint64_t seed, bool deep) {
  const std::vector<SuiteResult> results =
      run_verification(suite, count, seed, deep);
  bool all_pass = true;
  if (c.format == "json") {
    json arr = json::array();
    for (const SuiteResult& r : results) {
      arr.push_back({{"suite", r.name},
                     {"max_residual", r.max_residual},
                     {"tolerance", r.tolerance},
                     {"samples", r.samples},
                     {"pass", r.pass}});
      all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", arr.dump().c_str());
  } else {
    std::printf("suite,max_residual,tolerance,samples,pass\n");
    for (const SuiteResult& r : results) {
      std::printf("%s,%s,%s,%d,%s\n", r.name.c_str(),
                  fmt17(r.max_residual).c_str(), fmt17(r.tolerance).c_str(),
                  r.samples, r.pass ? "pass" : "fail");
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "srlie: closed-form sub-Riemannian geometry on SU(2)xR and SO(3)xR"};
  app.require_subcommand(1);

  CommonOpts copt[6];
  PointOpts popt_dist, popt_locus;
  ParamOpts gparams, cparams, jparams;
  double t0 = 0.0, t1 = 0.0;
  int nsamples = 1, norder = 1;
  std::string suite = "all";
  int count = 100;
  std::uint64_t seed = 0;
  bool deep = false;

  CLI::App* dist = app.add_subcommand("dist", "distance from the identity");
  add_common(dist, copt[0]);
  add_point(dist, popt_dist);

  CLI::App* geo = app.add_subcommand("geodesic", "sample a geodesic");
  add_common(geo, copt[1]);
  add_params(geo, gparams);
  geo->add_option("--t0", t0, "start time");
  geo->add_option("--t1", t1, "end time");
  geo->add_option("--n", nsamples, "number of intervals (n+1 rows)");

  CLI::App* cut = app.add_subcommand("cut", "cut time of a geodesic");
  add_common(cut, copt[2]);
  add_params(cut, cparams);

  CLI::App* conj = app.add_subcommand("conjugate", "n-th conjugate time");
  add_common(conj, copt[3]);
  add_params(conj, jparams);
  conj->add_option("--n", norder, "conjugate-time index (>= 1)");

  CLI::App* locus = app.add_subcommand("locus", "locus membership of a point");
  add_common(locus, copt[4]);
  add_point(locus, popt_locus);

  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  add_common(verify, copt[5]);
  verify->add_option("--suite", suite,
                     "ode|roundtrip|covering|splitting|monotonicity|"
                     "shooting|all");
  verify->add_option("--count", count, "samples per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_flag("--deep", deep, "include the shooting suite under all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (dist->parsed()) return cmd_dist(copt[0], popt_dist);
    if (geo->parsed()) return cmd_geodesic(copt[1], gparams, t0, t1, nsamples);
    if (cut->parsed()) return cmd_cut(copt[2], cparams);
    if (conj->parsed()) return cmd_conjugate(copt[3], jparams, norder);
    if (locus->parsed()) return cmd_locus(copt[4], popt_locus);
    if (verify->parsed()) return cmd_verify(copt[5], suite, count, seed, deep);
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  }
  return kExitInput;
}
