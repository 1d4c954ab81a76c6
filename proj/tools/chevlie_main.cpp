#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chevlie/fingroup.hpp"
#include "chevlie/group.hpp"
#include "chevlie/rootsystem.hpp"
#include "chevlie/scenarios.hpp"

namespace {

using namespace chevlie;

struct VerifyOpts {
  std::string suite;
  std::vector<std::string> scenarios;
  std::string field;
  std::string out;
  uint64_t budget = 1000000;
  bool no_timing = false;
  bool quiet = false;
};

struct RootsysOpts {
  std::string type;
  std::string format = "text";
};

struct ClosureOpts {
  std::string group;
  std::string field;
  std::string gens;
  uint64_t cap = 1000000;
};

void print_leg(std::FILE* to, const Report& r) {
  std::string field = r.field;
  if (!r.ambient_field.empty()) field += " (in " + r.ambient_field + ")";
  std::string detail;
  if (r.status == "fail")
    detail = "failed: " + r.failed_assertion;
  else if (r.status == "skipped")
    detail = r.skip_reason;
  else if (r.metrics.contains("assertions_checked"))
    detail = r.metrics["assertions_checked"].dump() + " assertions";
  std::string line = r.id;
  line.append(line.size() < 4 ? 4 - line.size() : 1, ' ');
  line += r.status;
  line.append(r.status.size() < 8 ? 8 - r.status.size() : 1, ' ');
  line += field;
  if (!detail.empty()) line += "   " + detail;
  if (r.elapsed_ms >= 0) line += "   [" + std::to_string(r.elapsed_ms) + " ms]";
  std::fprintf(to, "%s\n", line.c_str());
}

int run_verify(const VerifyOpts& o) {
  SuiteParams p;
  p.ids = o.scenarios.empty() ? scenario_ids() : o.scenarios;
  p.field_filter = o.field;
  p.budget = o.budget;
  p.timing = !o.no_timing;

  std::vector<Report> reports;
  try {
    reports = run_suite(p);
  } catch (const ScenarioError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }

  bool json_to_stdout = o.out == "-";
  if (!o.quiet) {
    std::FILE* to = json_to_stdout ? stderr : stdout;
    uint64_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
      print_leg(to, r);
      if (r.status == "pass") ++pass;
      if (r.status == "fail") ++fail;
      if (r.status == "skipped") ++skip;
    }
    std::fprintf(to, "%s: %zu legs, %llu pass, %llu fail, %llu skipped\n",
                 o.suite.c_str(), reports.size(), (unsigned long long)pass,
                 (unsigned long long)fail, (unsigned long long)skip);
  }

  if (!o.out.empty()) {
    std::string json = reports_to_json(reports);
    if (json_to_stdout) {
      std::fputs(json.c_str(), stdout);
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        std::fprintf(stderr, "error: cannot open %s for writing\n",
                     o.out.c_str());
        return 3;
      }
      f << json;
      if (!f.good()) {
        std::fprintf(stderr, "error: write to %s failed\n", o.out.c_str());
        return 3;
      }
    }
  }
  return suite_exit_code(reports);
}

int run_rootsys(const RootsysOpts& o) {
  RootSystem rs = RootSystem::build(o.type);
  std::string out = o.format == "json" ? rootsys_json(rs) : rootsys_text(rs);
  std::fputs(out.c_str(), stdout);
  return 0;
}

int run_primes(const std::string& type) {
  RootSystem rs = RootSystem::build(type);
  std::fputs(primes_text(rs).c_str(), stdout);
  return 0;
}

// "gf<q>" with q = p^m a prime power
Fq parse_field(const std::string& name) {
  if (name.size() < 3 || name.compare(0, 2, "gf") != 0)
    throw FieldError("field must be named gf<q>, got \"" + name + "\"");
  uint64_t q = 0;
  for (size_t i = 2; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw FieldError("field must be named gf<q>, got \"" + name + "\"");
    q = q * 10 + (uint64_t)(name[i] - '0');
    if (q > (1u << 20)) throw FieldError("field size out of range");
  }
  if (q < 2) throw FieldError("field size out of range");
  uint32_t p = 2;
  while (q % p != 0) ++p;
  uint32_t m = 0;
  uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1)
    throw FieldError("gf" + std::to_string(q) + " is not a prime power");
  return Fq(p, m);
}

int run_closure(const ClosureOpts& o) {
  Fq f = parse_field(o.field);
  if (f.q() > 256) {
    std::fprintf(stderr,
                 "error: closure enumeration needs a field of size <= 256\n");
    return 3;
  }
  ChevalleyForm cf = ChevalleyForm::build(RootSystem::build(o.group));
  const RootSystem& rs = cf.roots();
  LieAlgebra<Fq> L(cf, f);

  auto kap = [&](uint32_t root, Fq::Elem x) {
    return GroupElement<Fq>{root_element(L, root, x),
                            "k_" + rs.root_name(root) + "(" + f.to_string(x) +
                                ")"};
  };
  std::vector<GroupElement<Fq>> gens;
  if (o.gens == "simple-roots") {
    for (uint32_t i = 0; i < rs.rank(); ++i)
      for (Fq::Elem x : f.elements())
        if (!f.is_zero(x)) {
          gens.push_back(kap(i, x));
          gens.push_back(kap(rs.neg(i), x));
        }
  } else if (o.gens == "M") {
    uint32_t a = rs.index_of({1, 0}), l = rs.index_of({3, 2});
    for (uint32_t g : {a, rs.neg(a), l, rs.neg(l)})
      for (Fq::Elem x : f.elements())
        if (!f.is_zero(x)) gens.push_back(kap(g, x));
  } else {  // H
    uint32_t a = rs.index_of({1, 0});
    Fq::Elem om = f.element_of_order(3);
    gens.push_back({weyl_rep(L, a), "s_a"});
    gens.push_back({torus_element(L, Cochar{1, 0}, om),
                    "a_vee(" + f.to_string(om) + ")"});
  }

  try {
    FiniteSubgroup grp(f, gens, o.cap);
    std::printf("%s(%s) closure of preset \"%s\": order %llu (%zu generators, cap %llu)\n",
                o.group.c_str(), f.name().c_str(), o.gens.c_str(),
                (unsigned long long)grp.order(), gens.size(),
                (unsigned long long)o.cap);
    return 0;
  } catch (const GroupError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Chevalley-basis computations for split simple groups"};
  app.require_subcommand(1);

  VerifyOpts v;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification suite and report per-scenario results");
  verify->add_option("--suite", v.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"g2-char2"}));
  verify->add_option("--scenario", v.scenarios,
                     "restrict to the given scenario ids (default: all)");
  verify->add_option("--field", v.field,
                     "restrict multi-field scenarios to one finite field")
      ->check(CLI::IsMember({"gf4", "gf8"}));
  verify->add_option("--out", v.out, "write the JSON report here ('-' = stdout)");
  verify->add_option("--budget", v.budget,
                     "element cap per finite-group enumeration");
  verify->add_flag("--no-timing", v.no_timing,
                   "omit elapsed times for byte-stable output");
  verify->add_flag("--quiet", v.quiet, "suppress the per-scenario summary");

  RootsysOpts r;
  CLI::App* rootsys = app.add_subcommand(
      "rootsys", "print a root system: roots, pairings, reflections");
  rootsys->add_option("--type", r.type, "root system label, e.g. G2 or B3")
      ->required();
  rootsys->add_option("--format", r.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string primes_type;
  CLI::App* primes = app.add_subcommand(
      "primes", "print the bad/good/very good prime classification");
  primes->add_option("--type", primes_type, "root system label")->required();

  ClosureOpts c;
  CLI::App* closure = app.add_subcommand(
      "closure", "enumerate the finite matrix group generated by a preset");
  closure->add_option("--group", c.group, "group type")
      ->required()
      ->check(CLI::IsMember({"G2"}));
  closure->add_option("--field", c.field, "coefficient field, e.g. gf2")
      ->required();
  closure->add_option("--gens", c.gens, "generator preset")
      ->required()
      ->check(CLI::IsMember({"simple-roots", "M", "H"}));
  closure->add_option("--cap", c.cap, "enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (verify->parsed()) return run_verify(v);
    if (rootsys->parsed()) return run_rootsys(r);
    if (primes->parsed()) return run_primes(primes_type);
    if (closure->parsed()) return run_closure(c);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 3;
}
