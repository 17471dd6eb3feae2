// suprep: command-line front end.
//
// Exit codes: 0 success, 1 domain failure (validation, missing data, depth),
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "suprep/algebra_io.hpp"
#include "suprep/center.hpp"
#include "suprep/enveloping.hpp"
#include "suprep/ktype.hpp"
#include "suprep/report.hpp"
#include "suprep/unitarity.hpp"
#include "suprep/verma.hpp"

namespace {

using namespace suprep;

AlgebraData algebra_data(const std::string& spec) {
  if (spec == "osp12") return osp12_data();
  if (spec == "sl2") return sl2_data();
  return parse_algebra_document(read_text_file(spec));
}

int cmd_validate(const std::string& spec) {
  AlgebraData d = algebra_data(spec);
  ValidationReport rep = validate_algebra(d);
  for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
  if (rep.ok()) {
    std::cout << "OK\n";
    return 0;
  }
  for (const auto& f : rep.failures) std::cout << "FAIL: " << f << "\n";
  return 1;
}

int cmd_eval(const std::string& spec, const std::string& expr, const std::optional<std::string>& lambda) {
  auto env = Enveloping::create(resolve_algebra(spec));
  EnvElement u = parse_element(env, expr);
  if (lambda) {
    Weight w = parse_weight(env->algebra().data(), *lambda);
    std::cout << act_on_hwv(u, w).str() << "\n";
  } else {
    std::cout << u.str() << "\n";
  }
  return 0;
}

int cmd_gram(const std::string& spec, const std::optional<std::string>& lambda, bool symbolic, unsigned depth,
             const std::string& format) {
  auto a = resolve_algebra(spec);
  auto env = Enveloping::create(a);
  VermaModule v = symbolic ? VermaModule::symbolic(env, depth)
                           : VermaModule::numeric(env, parse_weight(a->data(), *lambda), depth);
  std::vector<GramLevel> levels;
  for (unsigned d = 0; d <= depth; ++d) levels.push_back(gram(v, d));
  if (format == "csv") {
    write_gram_csv(std::cout, v, levels);
    return 0;
  }
  std::cout << "algebra " << a->name() << ", "
            << (symbolic ? "symbolic highest weight" : "lambda " + render_weight(*a, v.weight())) << ", depth "
            << depth << "\n";
  write_gram_table(std::cout, v, levels);
  if (symbolic && has_closed_form(*a))
    std::cout << "closed form: unitary iff " << a->weight_names()[0] << " is real and " << a->weight_names()[0]
              << " < 0\n";
  return 0;
}

int cmd_scan(const std::string& spec, const std::optional<std::string>& from, const std::optional<std::string>& to,
             const std::optional<std::string>& step, const std::vector<std::string>& points, unsigned depth,
             const std::optional<std::string>& out_path) {
  auto a = resolve_algebra(spec);
  std::vector<mpq_class> grid;
  if (!points.empty()) {
    for (const auto& p : points) grid.push_back(parse_rational(p));
  } else {
    if (!from || !to || !step) throw CLI::ValidationError("unitary-scan needs --from, --to and --step, or --points");
    grid = scan_grid(parse_rational(*from), parse_rational(*to), parse_rational(*step));
  }
  auto rows = unitary_scan(a, grid, depth);
  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + *out_path + "'");
    write_scan_csv(f, *a, rows);
  } else {
    write_scan_csv(std::cout, *a, rows);
  }
  return 0;
}

int cmd_singular(const std::string& spec, const std::string& lambda, unsigned depth) {
  auto a = resolve_algebra(spec);
  VermaModule v = VermaModule::numeric(Enveloping::create(a), parse_weight(a->data(), lambda), depth);
  std::cout << "algebra " << a->name() << ", lambda " << render_weight(*a, v.weight()) << ", depth " << depth
            << "\n";
  write_singular_report(std::cout, v, singular_vectors(v, depth), depth);
  return 0;
}

int cmd_ktype(const std::string& spec, const std::string& module_path, const std::string& ptype) {
  auto a = resolve_algebra(spec);
  auto env = Enveloping::create(a);
  KTypeTable table = parse_ktype_table(read_text_file(module_path), a->rank());
  KType p;
  for (const auto& c : detail::split_ws(ptype)) p.emplace_back(parse_rational(c));
  write_ktype_report(std::cout, induce_ktype_bound(env, table, p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unitarity checks for highest weight modules of Lie superalgebras"};
  app.require_subcommand(1);

  std::string algebra = "osp12";
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra, "osp12, sl2 or a table file")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check the axioms of an algebra table");
  add_algebra(validate);

  std::string expr;
  std::optional<std::string> lambda;
  auto* eval = app.add_subcommand("eval", "Normal form of an expression, or beta(u)(lambda) with --lambda");
  eval->add_option("expr", expr, "Expression, e.g. \"x*y\" or \"beta(star(y)*y)\"")->required();
  add_algebra(eval);
  eval->add_option("--lambda", lambda, "Highest weight, e.g. t=-1");

  unsigned depth = 0;
  bool symbolic = false;
  std::string format = "table";
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrices of the Shapovalov form per level");
  add_algebra(gram_cmd);
  auto* gl = gram_cmd->add_option("--lambda", lambda, "Highest weight, e.g. t=-1");
  auto* gs = gram_cmd->add_flag("--symbolic", symbolic, "Keep the highest weight symbolic");
  gl->excludes(gs);
  gram_cmd->add_option("--depth", depth, "Deepest level")->required();
  gram_cmd->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));

  std::optional<std::string> from, to, step, out;
  std::vector<std::string> points;
  auto* scan = app.add_subcommand("unitary-scan", "Unitarity certificates along a rational grid");
  add_algebra(scan);
  scan->add_option("--from", from, "Left end, rational");
  scan->add_option("--to", to, "Right end, rational");
  scan->add_option("--step", step, "Grid step, positive rational");
  scan->add_option("--points", points, "Explicit grid points instead of a range")->delimiter(',');
  scan->add_option("--depth", depth, "Certificate depth")->required();
  scan->add_option("--out", out, "CSV output file (default stdout)");

  std::string lambda_req;
  auto* singular = app.add_subcommand("singular", "Radical vectors of the Gram levels");
  add_algebra(singular);
  singular->add_option("--lambda", lambda_req, "Highest weight, e.g. t=2")->required();
  singular->add_option("--depth", depth, "Deepest level")->required();

  std::string module_path, ptype;
  auto* ktype = app.add_subcommand("ktype", "k-type multiplicity bound for an induced module");
  add_algebra(ktype);
  ktype->add_option("--module", module_path, "k-type table of the g_0-module")->required();
  ktype->add_option("--ptype", ptype, "k-type p as weight coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(algebra);
    if (*eval) return cmd_eval(algebra, expr, lambda);
    if (*gram_cmd) {
      if (!symbolic && !lambda) throw CLI::ValidationError("gram needs --lambda or --symbolic");
      return cmd_gram(algebra, lambda, symbolic, depth, format);
    }
    if (*scan) return cmd_scan(algebra, from, to, step, points, depth, out);
    if (*singular) return cmd_singular(algebra, lambda_req, depth);
    if (*ktype) return cmd_ktype(algebra, module_path, ptype);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
