// Command-line front end: exact permutation products, cycle indices,
// Feynman diagram censuses, FQSym arithmetic, and diagram rendering.
//
// Exit codes: 0 ok, 2 parse error, 3 resource cap exceeded,
// 4 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "polya/polya.hpp"

using namespace polya;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

struct Options {
  bool json_output = false;
  bool one_indexed = false;
  unsigned jobs = 1;
  std::uint64_t census_budget = kDefaultCensusBudget;
};

json ok_payload(json payload, double ms) {
  return {{"status", "ok"}, {"payload", std::move(payload)}, {"timing_ms", ms}};
}

void emit(const Options& opt, const json& payload, const std::string& text,
          double ms) {
  if (opt.json_output)
    std::cout << ok_payload(payload, ms).dump(2) << "\n";
  else
    std::cout << text << "\n";
}

EdgeType parse_type_list(const std::string& text) {
  EdgeType type;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad type entry '" + tok + "'");
    type.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return type;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int run_product(const Options& opt, const std::string& w1,
                const std::string& w2, const std::string& law) {
  auto start = std::chrono::steady_clock::now();
  Permutation s1 = parse_permutation(w1, opt.one_indexed);
  Permutation s2 = parse_permutation(w2, opt.one_indexed);
  Permutation result = law == "cartesian" ? cartesian_product(s1, s2)
                                          : intransitive_product(s1, s2);
  auto cycles = cycle_decomposition(result);
  PowerSumPolynomial zimage = frak_Z(result);
  json payload = {{"word", to_string(result, opt.one_indexed)},
                  {"cycles", to_string(cycles)},
                  {"cycle_index", to_json(zimage)}};
  std::string text = to_string(result, opt.one_indexed) + "\n" +
                     to_string(cycles) + "\n" + to_string(zimage);
  emit(opt, payload, text, elapsed_ms(start));
  return 0;
}

int run_cycle_index(const Options& opt, const std::string& spec,
                    bool monomial) {
  auto start = std::chrono::steady_clock::now();
  PermutationGroup g = parse_group_spec(spec, opt.one_indexed);
  PowerSumPolynomial zg = Z(g);
  json payload = {{"group_order", g.order()},
                  {"degree", g.degree()},
                  {"cycle_index", to_json(zg)}};
  std::string text = to_string(zg);
  if (monomial) {
    MonomialPolynomial m = to_monomial(zg);
    payload["monomial"] = to_json(m);
    text += "\n" + to_string(m);
  }
  emit(opt, payload, text, elapsed_ms(start));
  return 0;
}

int run_feynman(const Options& opt, unsigned n, unsigned m, unsigned P,
                const std::string& type_text, bool list, bool dot,
                bool verify) {
  auto start = std::chrono::steady_clock::now();
  YPolynomial f = feynman_series(n, m, P);
  std::optional<EdgeType> type_filter;
  if (!type_text.empty()) {
    EdgeType t = parse_type_list(type_text);
    t.resize(P + 1, 0);
    type_filter = t;
  }

  int exit_code = 0;
  json payload;
  std::string text;
  if (type_filter) {
    payload["type"] = *type_filter;
    payload["count"] = to_string(f.coeff(*type_filter));
    text = to_string(f.coeff(*type_filter));
  } else {
    payload["series"] = to_json(f);
    text = to_string(f);
  }

  if (list || dot) {
    auto matrices = enumerate_diagrams(n, m, P, type_filter, true,
                                       opt.census_budget, opt.jobs);
    json listing = json::array();
    std::string block;
    for (const auto& mtx : matrices) {
      if (dot) {
        std::string rendered = render_dot(matrix_to_diagram(mtx));
        listing.push_back(rendered);
        block += rendered;
      } else {
        listing.push_back(matrix_to_csv(mtx));
        if (!block.empty()) block += "--\n";
        block += matrix_to_csv(mtx);
      }
    }
    payload["diagrams"] = listing;
    payload["diagram_count"] = matrices.size();
    text += "\n" + block + "count: " + std::to_string(matrices.size());
  }

  if (verify) {
    Census packed =
        brute_force_census(n, m, P, true, opt.census_budget, opt.jobs);
    bool match = packed.size() == f.term_count();
    for (const auto& [type, count] : packed)
      if (f.coeff(type) != count) match = false;
    payload["verified"] = match;
    text += std::string("\nverify: ") + (match ? "ok" : "MISMATCH");
    if (!match) exit_code = kExitMismatch;
  }

  emit(opt, payload, text, elapsed_ms(start));
  return exit_code;
}

int run_fqsym(const Options& opt, const std::string& sub,
              const std::vector<std::string>& args) {
  auto start = std::chrono::steady_clock::now();
  if (sub == "product" || sub == "star") {
    if (args.size() != 2)
      throw parse_error("fqsym " + sub + " needs two expressions");
    FQSymElement x = parse_fqsym(args[0], opt.one_indexed);
    FQSymElement y = parse_fqsym(args[1], opt.one_indexed);
    FQSymElement r = sub == "product" ? fq_product(x, y) : fq_star(x, y);
    emit(opt, {{"result", to_json(r)}}, to_string(r, opt.one_indexed),
         elapsed_ms(start));
    return 0;
  }
  if (sub == "zindex") {
    if (args.size() != 1) throw parse_error("fqsym zindex needs a group spec");
    FQSymElement r = underline_Z(parse_group_spec(args[0], opt.one_indexed));
    emit(opt, {{"result", to_json(r)}}, to_string(r, opt.one_indexed),
         elapsed_ms(start));
    return 0;
  }
  if (sub == "project") {
    if (args.size() != 1) throw parse_error("fqsym project needs an expression");
    PowerSumPolynomial r =
        z_morphism(parse_fqsym(args[0], opt.one_indexed));
    emit(opt, {{"result", to_json(r)}}, to_string(r), elapsed_ms(start));
    return 0;
  }
  throw parse_error("unknown fqsym subcommand '" + sub + "'");
}

int run_render(const Options& opt, const std::string& matrix_text,
               const std::string& file, const std::string& format) {
  auto start = std::chrono::steady_clock::now();
  WeightMatrix m;
  if (!matrix_text.empty()) {
    m = parse_matrix_string(matrix_text);
  } else {
    std::ifstream in(file);
    if (!in) throw parse_error("cannot open matrix file '" + file + "'");
    m = parse_matrix_csv(in);
  }
  LabelledDiagram d = matrix_to_diagram(m);
  std::string rendered = format == "ascii" ? render_ascii(d) : render_dot(d);
  emit(opt, {{"rendered", rendered}, {"type", type_of(m)}}, rendered,
       elapsed_ms(start));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact permutation products, cycle indices and Feynman "
               "diagram enumeration"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("POLYA_CENSUS_BUDGET"))
    opt.census_budget = std::strtoull(env, nullptr, 10);
  app.add_flag("--json", opt.json_output, "JSON output");
  app.add_flag("--one-indexed", opt.one_indexed,
               "read and print permutations 1-indexed");
  app.add_option("--jobs", opt.jobs, "worker cap for census scans");
  app.add_option("--census-budget", opt.census_budget,
                 "canonicalization step budget for brute-force scans");

  std::string w1, w2, law = "intransitive";
  auto* product = app.add_subcommand("product", "product of two permutations");
  product->add_option("sigma1", w1)->required();
  product->add_option("sigma2", w2)->required();
  product->add_option("--law", law)
      ->check(CLI::IsMember({"intransitive", "cartesian"}));

  std::string group_spec;
  bool monomial = false;
  auto* cindex =
      app.add_subcommand("cycle-index", "Polya cycle index of a group");
  cindex->add_option("group", group_spec, "S:n, A:n, C:n, gens:..., file:...")
      ->required();
  cindex->add_flag("--monomial", monomial, "also print the monomial expansion");

  unsigned rows = 1, cols = 1, max_weight = 1;
  std::string type_text;
  bool list = false, dot = false, verify = false;
  auto* feynman =
      app.add_subcommand("feynman", "Feynman diagram generating series");
  feynman->add_option("rows", rows)->required();
  feynman->add_option("cols", cols)->required();
  feynman->add_option("--max-weight", max_weight)->required();
  feynman->add_option("--type", type_text, "restrict to one edge type");
  feynman->add_flag("--list", list, "list canonical matrices");
  feynman->add_flag("--dot", dot, "render listed diagrams as DOT");
  feynman->add_flag("--verify", verify,
                    "cross-check against the brute-force census");

  std::string fq_sub;
  std::vector<std::string> fq_args;
  auto* fqsym = app.add_subcommand("fqsym", "FQSym arithmetic");
  fqsym->add_option("op", fq_sub, "product|star|zindex|project")->required();
  fqsym->add_option("args", fq_args, "operands");

  std::string matrix_text, matrix_file, format = "dot";
  auto* render = app.add_subcommand("render", "render a packed matrix");
  render->add_option("--matrix", matrix_text, "inline rows 'a,b;c,d'");
  render->add_option("--file", matrix_file, "CSV matrix file");
  render->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "ascii"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (product->parsed()) return run_product(opt, w1, w2, law);
    if (cindex->parsed()) return run_cycle_index(opt, group_spec, monomial);
    if (feynman->parsed())
      return run_feynman(opt, rows, cols, max_weight, type_text, list, dot,
                         verify);
    if (fqsym->parsed()) return run_fqsym(opt, fq_sub, fq_args);
    if (render->parsed())
      return run_render(opt, matrix_text, matrix_file, format);
  } catch (const parse_error& e) {
    json err = {{"status", "error"}, {"code", "parse"}, {"message", e.what()}};
    if (e.position() != parse_error::npos) err["position"] = e.position();
    if (opt.json_output)
      std::cout << err.dump(2) << "\n";
    else
      std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const resource_error& e) {
    if (opt.json_output)
      std::cout << json{{"status", "error"},
                        {"code", "resource"},
                        {"message", e.what()}}
                       .dump(2)
                << "\n";
    else
      std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    if (opt.json_output)
      std::cout << json{{"status", "error"},
                        {"code", "domain"},
                        {"message", e.what()}}
                       .dump(2)
                << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
