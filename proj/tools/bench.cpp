// Command-line front end: the sin-series comparison table, the mean
// iteration study, and one-off rounding.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "approxrat/approxrat.hpp"
#include "approxrat/bench.hpp"

namespace {

using namespace approxrat;

std::vector<std::size_t> parse_count_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!detail::all_digits(item)) throw parse_error("expected a comma-separated list of integers, got '" + text + "'");
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw parse_error("empty list");
  return out;
}

std::vector<std::size_t> m_range(std::size_t mmax) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m <= mmax; ++m) out.push_back(m);
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
}

bench::Format parse_format(const std::string& name) {
  return name == "markdown" ? bench::Format::markdown : bench::Format::csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate rational arithmetic benchmarks"};
  app.require_subcommand(1);

  std::string format_name = "csv";
  std::string out_path;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "markdown"}));
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  std::string pi_text = "355/113";
  std::size_t mmax = 6;
  std::string threshold_text = "1e-7";
  unsigned jobs = 0;
  auto add_workload_options = [&](CLI::App* sub) {
    sub->add_option("--pi", pi_text, "Rational approximation of pi");
    sub->add_option("--mmax", mmax, "Largest m in x_m = pi/6 + 2 pi m");
    sub->add_option("--threshold", threshold_text, "Stop once |term| drops below this");
    sub->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "markdown"}));
    sub->add_option("--out", out_path, "Write output to a file instead of stdout");
  };

  auto* table1 = app.add_subcommand("table1", "Accuracy and size of sin(x_m) under each arithmetic");
  add_workload_options(table1);
  std::vector<std::string> variant_specs;
  bool exact_epsilon = false;
  table1->add_option("--variant", variant_specs, "Policy to run (repeatable); defaults to the eleven variants");
  table1->add_flag("--exact-epsilon", exact_epsilon, "Print epsilon as an exact fraction");

  auto* table2 = app.add_subcommand("table2", "Mean convergent index versus absolute tolerance 10^-N");
  add_workload_options(table2);
  std::string n_list = "16,18,20,22,24,26,28,30,32,34,36";
  std::size_t trigger = 9;
  table2->add_option("--N", n_list, "Comma-separated exponents N");
  table2->add_option("--M", trigger, "Rounding trigger length M");

  auto* round_cmd = app.add_subcommand("round", "Round a single fraction");
  std::string value_text;
  std::string policy_text;
  bool as_json = false;
  round_cmd->add_option("value", value_text, "Fraction p/q or decimal literal")->required();
  round_cmd->add_option("--policy", policy_text, "Rounding policy")->required();
  round_cmd->add_flag("--json", as_json, "Print value, triggered flag and k as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    bench::EmitOptions emit_opts;
    emit_opts.format = parse_format(format_name);

    if (*round_cmd) {
      const RoundingOutcome outcome = apply_policy(parse_policy(policy_text), parse(value_text));
      if (as_json) {
        nlohmann::json j{{"value", format(outcome.value)}, {"triggered", outcome.triggered}, {"k", outcome.iterations}};
        write_output(j.dump() + "\n", out_path);
      } else {
        write_output(format(outcome.value) + "\n", out_path);
      }
      return 0;
    }

    bench::ExperimentConfig cfg;
    cfg.pi_approx = parse(pi_text);
    cfg.m_values = m_range(mmax);
    cfg.term_threshold = parse(threshold_text);
    cfg.jobs = jobs;

    if (*table1) {
      if (!variant_specs.empty()) {
        cfg.variants.clear();
        for (const auto& spec : variant_specs) cfg.variants.push_back({spec, parse_policy(spec)});
      }
      emit_opts.exact_epsilon = exact_epsilon;
      write_output(bench::emit(bench::run_table1(cfg), emit_opts), out_path);
    } else {
      write_output(bench::emit(bench::run_table2(cfg, parse_count_list(n_list), trigger), emit_opts), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
