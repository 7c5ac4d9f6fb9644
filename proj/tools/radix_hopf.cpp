// radix-hopf: command-line front end for the Hopf-Galois toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radix/cli.hpp"
#include "radix/errors.hpp"
#include "radix/perm_group.hpp"
#include "radix/rational.hpp"

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (auto& s : in) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

void print_schema(std::ostream& os) {
  os << "schema " << radix::kSchema << "\n"
     << "  radix-hopf <command> [--n N --a p/q]... [options]\n"
     << "  commands: analyze enumerate assoc-order freeness product padic rank\n"
     << "  options: --radicands p/q,p/q  --p P  --basis eigen|hnf|both\n"
     << "           --format json|table  --cap K (<= 8)  --output path.json\n"
     << "  exit: 0 ok, 2 certified negative verdict, 1 malformed input\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois structures on radical extensions of Q"};
  app.require_subcommand(1);

  std::vector<unsigned long> ns;
  std::vector<std::string> as, radicands;
  std::string p, format = "json", basis = "eigen", output;
  std::size_t cap = radix::enumeration_cap();

  for (const char* name : {"analyze", "enumerate", "assoc-order", "freeness", "product", "padic", "rank"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--n", ns, "radical degree (repeatable)");
    sub->add_option("--a", as, "radicand p/q (repeatable, paired with --n)");
    sub->add_option("--radicands", radicands, "comma-separated radicands");
    sub->add_option("--p", p, "prime for the padic command");
    sub->add_option("--basis", basis)->check(CLI::IsMember({"eigen", "hnf", "both"}));
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--cap", cap, "enumeration degree cap");
    sub->add_option("--output", output, "write the report to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    print_schema(std::cout);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    print_schema(std::cerr);
    return 1;
  }

  radix::JobSpec job;
  job.command = app.get_subcommands().front()->get_name();
  job.format = format;
  job.basis = basis;
  job.cap = cap;
  try {
    auto rads = split_commas(radicands);
    if (!as.empty()) {
      if (as.size() != ns.size()) throw radix::Error(radix::Errc::Parse, "--n and --a must be paired");
      for (std::size_t i = 0; i < ns.size(); ++i) job.radicals.push_back({ns[i], radix::parse_rational(as[i])});
    } else if (ns.size() == 1) {
      job.exponent = ns[0];
    } else if (ns.size() > 1) {
      throw radix::Error(radix::Errc::Parse, "several --n values need matching --a values");
    }
    if (!rads.empty() && !job.exponent && ns.size() == 1) job.exponent = ns[0];
    for (auto& r : rads) job.radicands.push_back(radix::parse_rational(r));
    if (!p.empty()) job.p = radix::BigInt(p);
  } catch (const std::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    print_schema(std::cerr);
    return 1;
  }

  radix::RunResult res = radix::run_job(job);
  std::string text = radix::render(res.report, job.format);
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << output << "\n";
      return 1;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (res.exit_code == 1) print_schema(std::cerr);
  return res.exit_code;
}
