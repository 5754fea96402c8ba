// Command line front end: instance generation, basis computation with the
// F4 / Buchberger / Lazard engines, trace recording and replay, structural
// property verification, cost tables and constants, and an ops benchmark.

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gb/analysis.hpp"
#include "gb/engine.hpp"
#include "gb/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

gb::Shape parse_shape(const std::string& s) {
  if (s == "homogeneous") return gb::Shape::homogeneous;
  if (s == "affine") return gb::Shape::affine;
  throw CLI::ValidationError("shape must be homogeneous or affine");
}

std::vector<std::pair<uint32_t, size_t>> make_grid(const std::vector<uint32_t>& deltas,
                                                   const std::vector<size_t>& ns) {
  std::vector<std::pair<uint32_t, size_t>> grid;
  for (uint32_t d : deltas)
    for (size_t n : ns) grid.push_back({d, n});
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner basis engine over prime fields"};
  app.require_subcommand(1);

  // ---- gen ----
  size_t gen_n = 2;
  uint32_t gen_delta = 2, gen_p = 65521;
  uint64_t gen_seed = 0;
  std::string gen_shape = "homogeneous", gen_out = "-";
  auto* gen = app.add_subcommand("gen", "generate a dense random square system");
  gen->add_option("-n,--nvars", gen_n, "number of variables")->required();
  gen->add_option("-d,--delta", gen_delta, "common degree of the generators")->required();
  gen->add_option("-p,--prime", gen_p, "field characteristic");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--shape", gen_shape, "homogeneous or affine");
  gen->add_option("-o,--output", gen_out, "output file ('-' for stdout)");

  // ---- gb ----
  std::string gb_in, gb_engine = "f4", gb_out;
  bool gb_reduced = false;
  auto* gbc = app.add_subcommand("gb", "compute a Groebner basis of a system file");
  gbc->add_option("system", gb_in, "input system file")->required();
  gbc->add_option("--engine", gb_engine, "f4, buchberger or lazard");
  gbc->add_flag("--reduced", gb_reduced, "print the reduced basis");
  gbc->add_option("-o,--output", gb_out, "write the basis as a system file");

  // ---- trace ----
  auto* trace = app.add_subcommand("trace", "record or replay an F4 trace");
  trace->require_subcommand(1);
  std::string tb_in, tb_out = "-";
  auto* tb = trace->add_subcommand("build", "run F4 and record the trace");
  tb->add_option("system", tb_in, "input system file")->required();
  tb->add_option("-o,--output", tb_out, "trace output file");
  std::string tr_sys, tr_trc;
  auto* trun = trace->add_subcommand("run", "replay a trace on another system");
  trun->add_option("system", tr_sys, "input system file")->required();
  trun->add_option("trace", tr_trc, "trace file")->required();

  // ---- verify ----
  std::string vf_prop = "all";
  gb::Instance vf_inst;
  std::string vf_shape = "homogeneous";
  auto* vf = app.add_subcommand("verify", "check structural properties on random instances");
  vf->add_option("property", vf_prop, "property name or 'all'");
  vf->add_option("-n,--nvars", vf_inst.n, "number of variables");
  vf->add_option("-d,--delta", vf_inst.delta, "degree of the generators");
  vf->add_option("-p,--prime", vf_inst.p, "field characteristic");
  vf->add_option("--seed", vf_inst.seed, "RNG seed");
  vf->add_option("--shape", vf_shape, "homogeneous or affine");

  // ---- cost ----
  auto* cost = app.add_subcommand("cost", "complexity estimates and constants");
  cost->require_subcommand(1);
  std::vector<uint32_t> ct_deltas{2};
  std::vector<size_t> ct_ns{2, 10, 50};
  std::vector<double> ct_omegas{3.0, 2.81, 2.38, 2.0};
  std::string ct_grid, ct_out = "-";
  int ct_prec = 2;
  auto* ctab = cost->add_subcommand("table", "CSV table of normalized exponents");
  ctab->add_option("--delta", ct_deltas, "generator degrees");
  ctab->add_option("--n", ct_ns, "variable counts");
  ctab->add_option("--omega", ct_omegas, "matrix multiplication exponents");
  ctab->add_option("--grid", ct_grid, "preset: complexity or cardinality");
  ctab->add_option("--precision", ct_prec, "decimal places in the rounded columns");
  ctab->add_option("-o,--output", ct_out, "output file");
  uint32_t cc_delta = 2;
  double cc_omega = 2.81, cc_eps = 1e-9;
  auto* ccon = cost->add_subcommand("constants", "asymptotic constants for one (delta, omega)");
  ccon->add_option("--delta", cc_delta, "generator degree");
  ccon->add_option("--omega", cc_omega, "matrix multiplication exponent");
  ccon->add_option("--epsilon", cc_eps, "epsilon in the exponent constant");

  // ---- bench ----
  size_t bn_n = 3;
  uint32_t bn_delta = 2, bn_p = 65521;
  uint64_t bn_seed = 0;
  auto* bench = app.add_subcommand("bench", "measured replay ops against the cost formula");
  bench->add_option("-n,--nvars", bn_n, "number of variables");
  bench->add_option("-d,--delta", bn_delta, "degree of the generators");
  bench->add_option("-p,--prime", bn_p, "field characteristic");
  bench->add_option("--seed", bn_seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      gb::PrimeField F(gen_p);
      gb::PolySystem sys;
      sys.p = gen_p;
      sys.n = gen_n;
      sys.polys = gb::gen_random_system(gen_n, gen_delta, F, parse_shape(gen_shape), gen_seed);
      spit(gen_out, gb::to_text(sys));
      return 0;
    }

    if (*gbc) {
      gb::PolySystem sys = gb::system_from_text(slurp(gb_in));
      gb::PrimeField F(sys.p);
      gb::GBResult res;
      if (gb_engine == "f4") res = gb::f4(sys.polys, F);
      else if (gb_engine == "buchberger")
        res = gb::oracle_gb(sys.polys, F, gb::OracleMethod::buchberger);
      else if (gb_engine == "lazard")
        res = gb::oracle_gb(sys.polys, F, gb::OracleMethod::lazard);
      else throw CLI::ValidationError("unknown engine " + gb_engine);
      std::vector<gb::Poly> basis =
          gb_reduced ? gb::interreduce(res.basis, F) : res.basis;
      auto st = gb::staircase(gb::leading_monomials(basis), sys.n);
      std::printf("basis size  : %zu\n", basis.size());
      std::printf("field ops   : %" PRIu64 "\n", res.ops);
      if (st) std::printf("quotient dim: %zu\n", st->size());
      else std::printf("quotient dim: infinite\n");
      std::printf("leading monomials:\n");
      for (auto& g : basis) std::printf("  %s\n", gb::to_text(g.lm()).c_str());
      if (!gb_out.empty()) {
        gb::PolySystem out{F.p(), sys.n, basis};
        spit(gb_out, gb::to_text(out));
      }
      return 0;
    }

    if (*tb) {
      gb::PolySystem sys = gb::system_from_text(slurp(tb_in));
      gb::PrimeField F(sys.p);
      auto [res, tr] = gb::f4_build(sys.polys, F);
      std::fprintf(stderr, "basis size %zu, %zu rounds, %" PRIu64 " ops\n",
                   res.basis.size(), res.rounds.size(), res.ops);
      spit(tb_out, gb::trace_to_text(tr));
      return 0;
    }

    if (*trun) {
      gb::PolySystem sys = gb::system_from_text(slurp(tr_sys));
      gb::PrimeField F(sys.p);
      gb::Trace tr = gb::trace_from_text(slurp(tr_trc));
      gb::GBResult res = gb::f4_trace(sys.polys, tr, F);
      size_t zeros = 0;
      for (auto& st : res.rounds) zeros += st.zero_rows;
      if (res.status != gb::Status::ok) {
        std::printf("trace mismatch after %zu rounds\n", res.rounds.size());
        return 1;
      }
      std::printf("replay ok: basis size %zu, %zu rounds, %zu zero reductions, %" PRIu64
                  " ops\n",
                  res.basis.size(), res.rounds.size(), zeros, res.ops);
      return 0;
    }

    if (*vf) {
      vf_inst.shape = parse_shape(vf_shape);
      std::vector<gb::Property> props;
      if (vf_prop == "all") props = gb::all_properties();
      else if (auto p = gb::property_from_name(vf_prop)) props = {*p};
      else throw CLI::ValidationError("unknown property " + vf_prop);
      bool all_ok = true;
      for (gb::Property p : props) {
        gb::Report rep = gb::verify(p, vf_inst);
        std::cout << rep.to_json() << "\n";
        all_ok = all_ok && rep.pass;
      }
      return all_ok ? 0 : 1;
    }

    if (*ctab) {
      std::vector<std::pair<uint32_t, size_t>> grid;
      if (ct_grid == "complexity")
        grid = make_grid({2, 10, 20, 30, 50}, {2, 10, 20, 30, 50});
      else if (ct_grid == "cardinality")
        grid = make_grid({2, 5, 10, 15, 20, 30, 50}, {2, 5, 10, 15, 20, 30, 50});
      else if (ct_grid.empty())
        grid = make_grid(ct_deltas, ct_ns);
      else throw CLI::ValidationError("unknown grid preset " + ct_grid);
      spit(ct_out, gb::emit_tables(grid, ct_omegas, ct_prec));
      return 0;
    }

    if (*ccon) {
      std::printf("E_1/2(%u)        = %.6f\n", cc_delta, gb::E_const(0.5, cc_delta));
      std::printf("L_omega(%u)      = %.6f\n", cc_delta, gb::L_const(cc_omega, cc_delta));
      std::printf("ell(omega)      = %.6f\n", gb::ell_const(cc_omega));
      std::printf("c(eps=%.1e)    = %.6f\n", cc_eps, gb::c_const(cc_eps, cc_delta, cc_omega));
      std::printf("gain g          = %.6f\n", gb::gain_const(cc_omega, cc_delta));
      return 0;
    }

    if (*bench) {
      gb::PrimeField F(bn_p);
      std::vector<gb::Poly> sys =
          gb::gen_random_system(bn_n, bn_delta, F, gb::Shape::homogeneous, bn_seed);
      auto [res, tr] = gb::f4_build(sys, F, bn_delta);
      gb::GBResult rep = gb::f4_trace(sys, tr, F);
      auto [D, dp] = gb::bounds(bn_n, bn_delta);
      (void)dp;
      auto stairs = gb::staircase(gb::leading_monomials(res.basis), bn_n);
      if (!stairs) throw std::runtime_error("instance is not zero-dimensional");
      gb::StaircaseData sd =
          gb::measure_staircase(gb::leading_monomials(res.basis), *stairs, bn_n, D);
      gb::CostParams cp{bn_n, bn_delta, 3.0, 0.0};
      gb::Cost c = gb::cost_f4t_measured(cp, sd);
      std::printf("n,delta,replay_ops,log2_replay_ops,log2_formula\n");
      std::printf("%zu,%u,%" PRIu64 ",%.3f,%.3f\n", bn_n, bn_delta, rep.ops,
                  rep.ops ? std::log2(double(rep.ops)) : 0.0, c.log2_total);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
