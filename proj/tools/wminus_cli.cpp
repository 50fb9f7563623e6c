#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wminus/dims.hpp"
#include "wminus/parse.hpp"
#include "wminus/verify.hpp"

namespace {

using namespace wminus;

int run_bracket(const std::string& xs, const std::string& ys) {
  LieElement x = parse_lie(xs), y = parse_lie(ys);
  std::cout << render(bracket(x, y)) << "\n";
  return 0;
}

int run_normalize(const std::string& es) {
  std::cout << render(parse_env(es)) << "\n";
  return 0;
}

int run_act(const std::string& es, const std::string& vs) {
  EnvElement e = parse_env(es);
  FockVector v = parse_fock(vs);
  std::cout << render(act_env(e, v)) << "\n";
  return 0;
}

int run_dims(int64_t max_rank, int64_t max_dot, const std::string& format) {
  DimTable t = series_coefficients(max_rank, max_dot, +1);
  bool agree = true;
  for (int64_t r = 0; r <= max_rank; ++r)
    for (int64_t k = 0; k <= max_dot; ++k)
      if (t[{r, k}] != multiset_generator_count(r, k)) agree = false;
  if (format == "machine") {
    for (int64_t r = 0; r <= max_rank; ++r)
      for (int64_t k = 0; k <= max_dot; ++k)
        std::cout << "dim." << r << "." << k << "\t" << t[{r, k}] << "\n";
    std::cout << "series_equals_multisets\t" << (agree ? 1 : 0) << "\n";
  } else {
    std::cout << render_table(t, max_rank, max_dot);
    std::cout << "series = multiset count: " << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? 0 : 1;
}

int run_heis(const std::string& xs, const std::string& ys) {
  HeisElement x = parse_heis(xs);
  if (ys.empty()) {
    std::cout << render(heis_embed(x)) << "\n";
    return 0;
  }
  HeisElement y = parse_heis(ys);
  std::cout << render(heis_bracket(x, y)) << "\n";
  return 0;
}

int run_expand(const std::string& ts, const std::string& format) {
  TraceExpr t = parse_trace(ts);
  std::vector<std::string> missing;
  TraceExpr e = shipped_ledger().expand(t, &missing);
  std::cout << render(e) << "\n";
  if (missing.empty()) return 0;
  if (format == "machine")
    for (const auto& n : missing) std::cout << "missing\t" << n << "\n";
  else {
    std::cout << "missing names:";
    for (const auto& n : missing) std::cout << " " << n;
    std::cout << "\n";
  }
  return 1;
}

int run_phi(const std::string& ts) {
  TraceExpr t = parse_trace(ts);
  try {
    std::cout << render(phi_image(t, shipped_ledger(), calibrated_assignment())) << "\n";
  } catch (const MissingNames& m) {
    std::cout << "NOT-EXPRESSIBLE:";
    for (const auto& n : m.names) std::cout << " " << n;
    std::cout << "\n";
    return 1;
  }
  return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format) {
  VerifyResult res = run_suite(suite, opt);
  if (format == "machine")
    render_machine(std::cout, res);
  else
    render_text(std::cout, res);
  return res.unexpected == 0 ? 0 : 1;
}

int run_calibrate(const std::string& format) {
  CalibrationReport cr = calibrate_phi();
  const PhiAssignment& a = cr.assignment;
  if (format == "machine") {
    std::cout << "assignment.a1\t" << render(a.a1) << "\n";
    std::cout << "assignment.a2\t" << render(a.a2) << "\n";
    std::cout << "assignment.a3\t" << render(a.a3) << "\n";
    std::cout << "assignment.a4\t" << render(a.a4) << "\n";
    for (const auto& s : cr.steps)
      std::cout << "step." << s.parameter << "\t" << render(s.value) << "\t"
                << (s.solved ? "solved" : "pinned") << "\t" << s.instance << "\t" << s.note << "\n";
    for (const auto& [id, st] : cr.core_checks)
      std::cout << "core." << id << "\t" << status_name(st) << "\n";
    for (size_t i = 0; i < cr.variant_notes.size(); ++i)
      std::cout << "variant." << i << "\t" << cr.variant_notes[i] << "\n";
    std::cout << "consistent\t" << (cr.consistent ? 1 : 0) << "\n";
  } else {
    std::cout << "assignment: a1 = " << render(a.a1) << ", a2 = " << render(a.a2)
              << ", a3 = " << render(a.a3) << ", a4 = " << render(a.a4) << "\n";
    for (const auto& s : cr.steps)
      std::cout << "  " << s.parameter << " <- " << render(s.value) << " ["
                << (s.solved ? "solved from " : "pinned, ") << s.instance << "] " << s.note << "\n";
    std::cout << "core relations:\n";
    for (const auto& [id, st] : cr.core_checks)
      std::cout << "  " << id << ": " << status_name(st) << "\n";
    for (const auto& n : cr.variant_notes) std::cout << "note: " << n << "\n";
    std::cout << "consistent: " << (cr.consistent ? "yes" : "NO") << "\n";
  }
  return cr.consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for the minus-fixed circle algebra and its trace relation suites"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  wminus::VerifyOptions opt;
  int64_t max_size = opt.fock_bound;
  int64_t max_rank = opt.max_tdeg;
  int64_t max_dot = opt.max_dot;
  int samples = 0;
  std::string manifest_path;
  app.add_option("--seed", opt.seed, "sampling seed for the suites");
  app.add_option("--max-size", max_size, "partition size cap");
  app.add_option("--max-rank", max_rank, "t-degree cap (dims: rank axis)");
  app.add_option("--max-dot", max_dot, "dot-degree cap (dims: weight axis)");
  app.add_option("--samples", samples, "sample count override for the random suites");
  app.add_option("--manifest", manifest_path, "path to a relation manifest overriding the shipped one");

  std::string arg1, arg2, suite = "all";

  CLI::App* c_bracket = app.add_subcommand("bracket", "bracket of two Lie elements");
  c_bracket->add_option("lhs", arg1)->required();
  c_bracket->add_option("rhs", arg2)->required();

  CLI::App* c_norm = app.add_subcommand("normalize", "straighten an enveloping-algebra element");
  c_norm->add_option("element", arg1)->required();

  CLI::App* c_act = app.add_subcommand("act", "apply an element to a Fock vector");
  c_act->add_option("element", arg1)->required();
  c_act->add_option("vector", arg2)->required();

  CLI::App* c_dims = app.add_subcommand("dims", "bigraded dimension table with the counting oracle");

  CLI::App* c_heis = app.add_subcommand("heis", "embed a mode, or bracket two of them");
  c_heis->add_option("lhs", arg1)->required();
  c_heis->add_option("rhs", arg2);

  CLI::App* c_expand = app.add_subcommand("expand", "rewrite a trace expression over the generators");
  c_expand->add_option("expression", arg1)->required();

  CLI::App* c_phi = app.add_subcommand("phi", "image of a trace expression in the reduced envelope");
  c_phi->add_option("expression", arg1)->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run a relation suite");
  c_verify->add_option("suite", suite, "lie, pbw, fock, heis, gen, dims, phi, or all");

  CLI::App* c_cal = app.add_subcommand("calibrate", "solve the generator normalizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    opt.fock_bound = max_size;
    opt.max_tdeg = max_rank;
    opt.max_dot = max_dot;
    opt.dims_rank = std::max<int64_t>(max_rank, 1);
    opt.dims_weight = std::max<int64_t>(max_dot, 1);
    if (samples > 0) {
      opt.lie_samples = samples;
      opt.pbw_samples = samples;
    }
    if (!manifest_path.empty()) {
      std::ifstream in(manifest_path);
      if (!in) throw std::runtime_error("cannot open manifest '" + manifest_path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      opt.manifest = buf.str();
    }

    if (c_bracket->parsed()) return run_bracket(arg1, arg2);
    if (c_norm->parsed()) return run_normalize(arg1);
    if (c_act->parsed()) return run_act(arg1, arg2);
    if (c_dims->parsed()) return run_dims(max_rank, max_dot, format);
    if (c_heis->parsed()) return run_heis(arg1, arg2);
    if (c_expand->parsed()) return run_expand(arg1, format);
    if (c_phi->parsed()) return run_phi(arg1);
    if (c_verify->parsed()) return run_verify(suite, opt, format);
    if (c_cal->parsed()) return run_calibrate(format);
  } catch (const wminus::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
