// Command-line front end: analyze sequences, dump bases and Apery tables,
// run family and random sweeps.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monocurve/criteria.hpp"
#include "monocurve/families.hpp"
#include "monocurve/json_io.hpp"
#include "monocurve/parallel.hpp"
#include "monocurve/sweep.hpp"

namespace mc = monocurve;

namespace {

constexpr std::int64_t cli_an_cap = 10'000;

mc::Sequence parse_sequence(const std::string& text, std::int64_t an_max) {
  std::vector<std::int64_t> raw;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    try {
      raw.push_back(std::stoll(cur));
    } catch (const std::exception&) {
      mc::fail(mc::errc::invalid_argument, "cannot parse '" + cur + "' as an integer");
    }
  }
  mc::Sequence a = mc::Sequence::validate(std::move(raw));
  if (a.an() > an_max)
    mc::fail(mc::errc::invalid_argument,
             "a_n exceeds the cap of " + std::to_string(an_max));
  return a;
}

unsigned resolve_jobs(unsigned flag_jobs) {
  if (flag_jobs != 0) return flag_jobs;
  if (const char* env = std::getenv("MONOCURVE_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string criteria_line(const mc::CriterionResults& c) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string s;
  s += std::string("d=") + b(c.d) + " e=" + b(c.e) + " f=" + b(c.f) + " g=" + b(c.g);
  s += std::string(" duality_b=") + b(c.duality_b) + " duality_c=" + b(c.duality_c);
  s += std::string(" apery_b=") + b(c.apery_b) + " apery_c=" + b(c.apery_c) +
       " apery_d=" + b(c.apery_d) + " cn=" + b(c.cn);
  return s;
}

void print_report_text(const mc::AcmReport& r, std::ostream& os) {
  os << "sequence:";
  for (auto x : r.sequence.entries()) os << " " << x;
  os << "\n";
  os << "verdict: " << (r.verdict ? "arithmetically Cohen-Macaulay" : "not arithmetically Cohen-Macaulay")
     << "\n";
  os << "criteria: " << criteria_line(r.criteria) << "\n";
  if (r.witness) os << "witness: " << mc::to_string(*r.witness) << "\n";
  os << "mu_ini: " << r.mu_ini << "\n";
  os << "bound_binom: " << r.bound_binom << "\n";
}

struct GlobalOpts {
  std::string format;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::int64_t an_max = cli_an_cap;
  std::size_t basis_cap = mc::default_basis_cap;
};

int cmd_analyze(const std::string& seq_text, const GlobalOpts& g, bool with_gb, bool with_apery,
                const std::string& format) {
  mc::Sequence a = parse_sequence(seq_text, g.an_max);
  mc::AcmReport rep = mc::is_acm(a);
  if (format == "json") {
    mc::json j = mc::report_to_json(rep);
    if (with_gb) {
      j["gb"] = mc::basis_to_json(mc::toric_gb(a, g.basis_cap));
      j["gb_dual"] = mc::basis_to_json(mc::toric_gb(mc::dual(a), g.basis_cap));
      j["gb_xn"] = mc::basis_to_json(mc::gb_with_last_variable(a, g.basis_cap));
    }
    if (with_apery) j["apery"] = mc::apery_json(a, mc::apery_table(a));
    std::cout << j.dump() << "\n";
  } else {
    print_report_text(rep, std::cout);
    if (with_gb) {
      std::cout << "gb:\n" << mc::to_string(mc::toric_gb(a, g.basis_cap));
      std::cout << "gb_dual:\n" << mc::to_string(mc::toric_gb(mc::dual(a), g.basis_cap));
      std::cout << "gb_xn:\n" << mc::to_string(mc::gb_with_last_variable(a, g.basis_cap));
    }
    if (with_apery) std::cout << mc::apery_tsv(a, mc::apery_table(a));
  }
  return rep.verdict ? 0 : 1;
}

int cmd_gb(const std::string& seq_text, const GlobalOpts& g, const std::string& which,
           const std::string& format) {
  mc::Sequence a = parse_sequence(seq_text, g.an_max);
  mc::GroebnerBasis basis;
  std::optional<std::int64_t> std_count;
  if (which == "ideal") {
    basis = mc::toric_gb(a, g.basis_cap);
  } else if (which == "dual") {
    basis = mc::toric_gb(mc::dual(a), g.basis_cap);
  } else if (which == "xn") {
    basis = mc::gb_with_last_variable(a, g.basis_cap);
    std_count = static_cast<std::int64_t>(
        mc::standard_monomials(mc::initial_ideal(basis)).monos.size());
  } else if (which == "matrix") {
    basis = mc::toric_gb_from_matrix(mc::matrix_A(a), g.basis_cap);
  } else {
    mc::fail(mc::errc::invalid_argument, "unknown basis selector '" + which + "'");
  }
  if (format == "json")
    std::cout << mc::gb_fragment_json(a, basis, std_count).dump() << "\n";
  else
    std::cout << mc::to_string(basis);
  return 0;
}

int cmd_apery(const std::string& seq_text, const GlobalOpts& g, const std::string& format) {
  mc::Sequence a = parse_sequence(seq_text, g.an_max);
  mc::AperyTable t = mc::apery_table(a);
  if (format == "json")
    std::cout << mc::apery_json(a, t).dump() << "\n";
  else
    std::cout << mc::apery_tsv(a, t);
  return 0;
}

mc::FamilyInstance make_family(const std::string& name, std::int64_t h) {
  if (name == "bresinsky") return mc::bresinsky(h);
  if (name == "arslan") return mc::arslan(h);
  if (name == "prop31") return mc::prop31(h);
  mc::fail(mc::errc::invalid_argument, "unknown family '" + name + "'");
}

int cmd_family(const std::string& name, std::optional<std::int64_t> h,
               const std::string& h_range, const GlobalOpts& g) {
  std::int64_t lo = 0, hi = -1;
  if (!h_range.empty()) {
    auto pos = h_range.find("..");
    if (pos == std::string::npos)
      mc::fail(mc::errc::invalid_argument, "range must look like 2..6");
    lo = std::stoll(h_range.substr(0, pos));
    hi = std::stoll(h_range.substr(pos + 2));
  } else if (h) {
    lo = hi = *h;
  } else {
    mc::fail(mc::errc::invalid_argument, "family needs --h or --h-range");
  }
  std::vector<std::int64_t> hs;
  for (std::int64_t v = lo; v <= hi; ++v) hs.push_back(v);
  std::vector<std::string> lines(hs.size());
  mc::parallel_for(hs.size(), resolve_jobs(g.jobs), [&](std::size_t i) {
    mc::FamilyInstance inst = make_family(name, hs[i]);
    mc::AcmReport rep = mc::is_acm(inst.sequence);
    lines[i] = mc::family_to_json(inst, rep).dump();
  });
  for (const auto& l : lines) std::cout << l << "\n";
  return 0;
}

int cmd_sweep(const GlobalOpts& g, std::size_t n, std::size_t count, bool exhaustive,
              bool an_max_given) {
  mc::SweepOptions opt;
  opt.n = n;
  opt.an_max = an_max_given ? g.an_max : 30;
  opt.count = count;
  opt.seed = g.seed;
  opt.exhaustive = exhaustive;
  opt.jobs = resolve_jobs(g.jobs);
  opt.basis_cap = g.basis_cap;
  mc::SweepOutput out = mc::run_sweep(opt);
  std::cout << out.jsonl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-based Cohen-Macaulay tester for projective monomial curves"};
  app.set_help_flag("--help", "print this help message");  // frees -h for family --h
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed for sweeps");
  app.add_option("--jobs", g.jobs, "worker threads (0: MONOCURVE_JOBS env or 1)");
  app.add_option("--an-max", g.an_max, "cap on a_n")
      ->check(CLI::Range(std::int64_t{1}, cli_an_cap));
  app.add_option("--basis-cap", g.basis_cap, "cap on Groebner basis size");

  std::string seq_text, format, which = "ideal", family_name, h_range;
  bool with_gb = false, with_apery = false, exhaustive = false;
  std::optional<std::int64_t> h;
  std::size_t n = 3, count = 100;

  auto* analyze = app.add_subcommand("analyze", "decide the Cohen-Macaulay property");
  analyze->add_option("sequence", seq_text, "comma-separated entries, a_n last")->required();
  analyze->add_flag("--gb", with_gb, "include the bases of I(a), I(a') and (x_n, I(a))");
  analyze->add_flag("--apery", with_apery, "include the Apery table");
  analyze->add_option("--format", format, "json|text")->default_val("text");

  auto* gb = app.add_subcommand("gb", "print a reduced Groebner basis");
  gb->add_option("sequence", seq_text, "comma-separated entries, a_n last")->required();
  gb->add_option("--which", which, "ideal|dual|xn|matrix")->default_val("ideal");
  gb->add_option("--format", format, "text|json")->default_val("text");

  auto* apery = app.add_subcommand("apery", "print the Apery table");
  apery->add_option("sequence", seq_text, "comma-separated entries, a_n last")->required();
  apery->add_option("--format", format, "tsv|json")->default_val("tsv");

  auto* family = app.add_subcommand("family", "analyze a named family");
  family->add_option("name", family_name, "bresinsky|arslan|prop31")->required();
  family->add_option("--h", h, "parameter");
  family->add_option("--h-range", h_range, "parameter range, e.g. 2..6");
  family->add_option("--format", format, "json")->default_val("json");

  auto* sweep = app.add_subcommand("sweep", "analyze many sequences");
  sweep->add_option("-n,--length", n, "sequence length")->default_val(3);
  sweep->add_option("--count", count, "number of random sequences")->default_val(100);
  sweep->add_flag("--exhaustive", exhaustive, "enumerate all valid sequences up to --an-max");
  sweep->add_option("--format", format, "json")->default_val("json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(seq_text, g, with_gb, with_apery, format);
    if (app.got_subcommand(gb)) return cmd_gb(seq_text, g, which, format);
    if (app.got_subcommand(apery)) return cmd_apery(seq_text, g, format);
    if (app.got_subcommand(family)) return cmd_family(family_name, h, h_range, g);
    if (app.got_subcommand(sweep))
      return cmd_sweep(g, n, count, exhaustive, app.count("--an-max") > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
