#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "k0ring/moduli.hpp"
#include "k0ring/pushforward.hpp"
#include "k0ring/zgroebner.hpp"

namespace k0::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  int q = 2, r = 1, N = 2, k = 0;
  bool chart = false;
  std::string ideal_path;
  std::string order;
  std::string ring_name;
  std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
  std::string format = "text";
  std::uint64_t budget = 10'000'000;
  std::string out_path;
  std::string data_dir;
  bool appendix = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// "[w] > [lam~,del~] > eps" style: blocks separated by '>', '~' marks an
// invertible variable.
RingPtr ring_from_order(const std::string& text) {
  std::vector<std::string> names, invertible;
  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : split(text, ">")) {
    std::vector<std::string> vars;
    for (auto v : split(block, "[], \t")) {
      if (v.back() == '~') {
        v.pop_back();
        invertible.push_back(v);
      }
      names.push_back(v);
      vars.push_back(v);
    }
    if (!vars.empty()) blocks.push_back(std::move(vars));
  }
  if (names.empty()) throw UsageError("--order names no variables");
  return make_ring(make_alphabet(names, invertible), blocks);
}

std::vector<LaurentPolynomial> read_ideal(const std::string& path, const AlphabetPtr& alpha) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ideal file " + path);
  std::vector<LaurentPolynomial> gens;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    gens.push_back(LaurentPolynomial::parse(alpha, line));
  }
  if (gens.empty()) throw UsageError("ideal file " + path + " has no generators");
  return gens;
}

Json strings(const std::vector<LaurentPolynomial>& polys) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(p.to_string());
  return a;
}

Json rank_mod_p_json(const QuotientReport& rep) {
  Json m = Json::object();
  for (const auto& [p, r] : rep.rank_mod_p) m[std::to_string(p)] = r ? Json(*r) : Json(nullptr);
  return m;
}

Json report_json(const QuotientReport& rep) {
  Json j;
  j["rank_Q"] = rep.rank_Q;
  j["rank_mod_p"] = rank_mod_p_json(rep);
  j["free"] = rep.free;
  j["basis"] = strings(rep.basis);
  j["primes"] = rep.prime_set;
  Json inv = Json::array();
  for (const auto& d : rep.torsion_invariants) inv.push_back(d.get_str());
  j["torsion_invariants"] = inv;
  j["max_leading_coefficient"] = rep.max_leading_coefficient.get_str();
  j["gb_size"] = rep.gb_size;
  j["order"] = rep.order;
  return j;
}

Json ring_json(const ModuliRing& ring) {
  Json j;
  j["name"] = ring.name;
  j["relations"] = strings(ring.relations);
  if (ring.report) {
    j["rank_Q"] = ring.report->rank_Q;
    j["rank_mod_p"] = rank_mod_p_json(*ring.report);
    j["free"] = ring.report->free;
    j["basis"] = strings(ring.report->basis);
  } else {
    j["rank_Q"] = nullptr;
    j["rank_mod_p"] = Json::object();
    j["free"] = false;
    j["basis"] = Json::array();
  }
  j["paper_match"] = {{"rank", ring.paper_match.rank},
                      {"relations", ring.paper_match.relations},
                      {"basis", ring.paper_match.basis},
                      {"basis_printed", ring.paper_match.basis_printed}};
  Json mm = Json::array();
  for (const auto& m : ring.mismatches)
    mm.push_back({{"check", m.check},
                  {"expected", m.expected},
                  {"computed", m.computed},
                  {"difference", m.difference},
                  {"fatal", m.fatal}});
  j["mismatches"] = mm;
  Json checks = Json::array();
  for (const auto& c : ring.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  Json trials = Json::array();
  for (const auto& t : ring.basis_trials) {
    Json tj = {{"reading", t.reading}, {"passed", t.result.passed}, {"size", t.result.size}};
    tj["determinant"] = t.result.determinant ? Json(t.result.determinant->get_str()) : Json(nullptr);
    tj["failure"] = t.result.failure;
    tj["offending"] = t.result.offending;
    trials.push_back(tj);
  }
  j["basis_trials"] = trials;
  if (ring.report) {
    Json inv = Json::array();
    for (const auto& d : ring.report->torsion_invariants) inv.push_back(d.get_str());
    j["torsion_invariants"] = inv;
    j["order"] = ring.report->order;
  }
  if (!ring.computed_in.empty()) j["computed_in"] = ring.computed_in;
  j["ok"] = ring.ok();
  return j;
}

void ring_text(const ModuliRing& ring, std::ostream& os) {
  os << ring.name << ": ";
  if (ring.report)
    os << "rank " << ring.report->rank_Q << ", " << (ring.report->free ? "free" : "not free");
  else
    os << "infinite rank";
  os << (ring.ok() ? "  [ok]" : "  [MISMATCH]") << '\n';
  os << "  relations:\n";
  for (const auto& f : ring.relations) os << "    " << f << '\n';
  if (ring.report) {
    os << "  rank mod p:";
    for (const auto& [p, r] : ring.report->rank_mod_p)
      os << ' ' << p << ':' << (r ? std::to_string(*r) : "inf");
    os << '\n';
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "  paper match: rank " << yes(ring.paper_match.rank) << ", relations "
     << yes(ring.paper_match.relations) << ", basis " << yes(ring.paper_match.basis)
     << (ring.paper_match.basis_printed ? "" : " (none printed)") << '\n';
  for (const auto& c : ring.checks)
    os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name
       << (c.detail.empty() ? "" : " -- " + c.detail) << '\n';
  for (const auto& m : ring.mismatches)
    os << "  mismatch" << (m.fatal ? "" : " (non-fatal)") << ": " << m.check
       << "\n    printed:  " << m.expected << "\n    computed: " << m.computed
       << "\n    diff:     " << m.difference << '\n';
}

BuildOptions build_options(const RunConfig& cfg) {
  BuildOptions o;
  if (!cfg.data_dir.empty()) o.data_dir = cfg.data_dir;
  o.primes = cfg.primes;
  o.gb.step_budget = cfg.budget;
  return o;
}

// Mbar2 is only attempted once its inputs check out.
std::optional<ModuliRing> mbar2_from(const ModuliRing& delta1, const ModuliRing& complement,
                                     const BuildOptions& o, std::ostream& err) {
  if (!delta1.ok() || !complement.ok()) {
    err << "Mbar2 skipped: Delta1 or complement failed verification\n";
    return std::nullopt;
  }
  return build_k0_mbar2(delta1, complement, o);
}

int cmd_pushforward(const RunConfig& cfg, std::ostream& out) {
  if (cfg.chart) {
    const auto s = pushforward_on_moduli_chart(cfg.q, cfg.r, cfg.N, cfg.k);
    if (cfg.format == "json")
      out << Json{{"q", cfg.q}, {"r", cfg.r}, {"N", cfg.N}, {"k", cfg.k},
                  {"value", s.to_string()}}.dump(2)
          << '\n';
    else
      out << s.to_string() << '\n';
    return kOk;
  }
  const auto res = pushforward_power_map(cfg.q, cfg.r, cfg.N, cfg.k);
  if (cfg.format == "json") {
    Json den = Json::object();
    for (const auto& [d, m] : res.certificate.denominator_factors) den[std::to_string(d)] = m;
    Json j = {{"q", cfg.q}, {"r", cfg.r}, {"N", cfg.N}, {"k", cfg.k},
              {"value", res.value.to_string()}};
    j["certificate"] = {{"fixed_points", res.certificate.fixed_points},
                        {"denominator_factors", den},
                        {"numerator_terms", res.certificate.numerator_terms},
                        {"exact_division", res.certificate.exact_division},
                        {"multiply_back_verified", res.certificate.multiply_back_verified}};
    out << j.dump(2) << '\n';
  } else {
    out << res.value << '\n';
  }
  return kOk;
}

int cmd_gb(const RunConfig& cfg, std::ostream& out) {
  const auto ring = ring_from_order(cfg.order);
  const auto gens = read_ideal(cfg.ideal_path, ring->base());
  GbOptions opts;
  opts.step_budget = cfg.budget;
  const auto gb = strong_gb(gens, ring, opts);
  std::optional<QuotientReport> rep;
  try {
    rep = quotient_report(gb, gens, cfg.primes, opts);
  } catch (const InfiniteRank&) {
  }
  std::vector<LaurentPolynomial> basis_gens;
  for (const auto& g : gb.generators()) basis_gens.push_back(g);
  if (cfg.format == "json") {
    Json j;
    if (rep) {
      j = report_json(*rep);
    } else {
      j["rank_Q"] = nullptr;
      j["rank_mod_p"] = Json::object();
      j["free"] = false;
      j["basis"] = Json::array();
      j["primes"] = cfg.primes;
      j["order"] = ring->order().describe();
    }
    j["groebner_basis"] = strings(basis_gens);
    out << j.dump(2) << '\n';
  } else {
    out << "order: " << ring->order().describe() << '\n';
    out << "groebner basis (" << gb.size() << "):\n";
    for (const auto& g : basis_gens) out << "  " << g << '\n';
    if (!rep) {
      out << "rank over Q: infinite\n";
      return kOk;
    }
    out << "rank over Q: " << rep->rank_Q << '\n';
    out << "rank mod p:";
    for (const auto& [p, r] : rep->rank_mod_p)
      out << ' ' << p << ':' << (r ? std::to_string(*r) : "inf");
    out << "\nfree: " << (rep->free ? "yes" : "no") << '\n';
    if (!rep->torsion_invariants.empty()) {
      out << "torsion:";
      for (const auto& d : rep->torsion_invariants) out << " Z/" << d;
      out << '\n';
    }
    out << "basis:";
    for (const auto& m : rep->basis) out << ' ' << m;
    out << '\n';
  }
  return kOk;
}

int cmd_ring(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto o = build_options(cfg);
  std::optional<ModuliRing> ring;
  const auto& n = cfg.ring_name;
  if (n == "m2") ring = build_k0_m2(o);
  else if (n == "bg") ring = build_k0_bg(o);
  else if (n == "delta1") ring = build_k0_delta1(o);
  else if (n == "complement") ring = build_k0_complement(o);
  else ring = mbar2_from(build_k0_delta1(o), build_k0_complement(o), o, err);
  if (!ring) return kMismatch;
  if (cfg.format == "json")
    out << ring_json(*ring).dump(2) << '\n';
  else
    ring_text(*ring, out);
  return ring->ok() ? kOk : kMismatch;
}

int cmd_verify_all(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto o = build_options(cfg);
  std::vector<ModuliRing> rings;
  rings.push_back(build_k0_m2(o));
  rings.push_back(build_k0_bg(o));
  rings.push_back(build_k0_delta1(o));
  rings.push_back(build_k0_complement(o));
  if (auto mb = mbar2_from(rings[2], rings[3], o, err)) rings.push_back(std::move(*mb));
  std::optional<AppendixReport> appendix;
  if (cfg.appendix) appendix = verify_appendix_bases(rings[0], rings[2], rings[3]);

  bool passed = rings.size() == 5;
  for (const auto& r : rings) passed &= r.ok();
  if (appendix) passed &= appendix->passed;

  if (cfg.format == "json") {
    Json j;
    Json rs = Json::array();
    for (const auto& r : rings) rs.push_back(ring_json(r));
    j["rings"] = rs;
    if (appendix) {
      Json entries = Json::array();
      for (const auto& e : appendix->entries)
        entries.push_back({{"ring", e.ring},
                           {"reading", e.trial.reading},
                           {"size", e.trial.result.size},
                           {"passed", e.trial.result.passed},
                           {"failure", e.trial.result.failure}});
      j["appendix"] = {{"entries", entries}, {"passed", appendix->passed}};
    }
    j["passed"] = passed;
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(12) << "ring" << std::setw(8) << "rank_Q" << std::setw(6)
        << "free" << std::setw(12) << "paper:rank" << std::setw(11) << "relations"
        << std::setw(7) << "basis" << "status\n";
    for (const auto& r : rings) {
      const std::string rank = r.report ? std::to_string(r.report->rank_Q) : "inf";
      const std::string basis =
          r.paper_match.basis_printed ? (r.paper_match.basis ? "yes" : "no") : "-";
      out << std::setw(12) << r.name << std::setw(8) << rank << std::setw(6)
          << (r.report && r.report->free ? "yes" : "no") << std::setw(12)
          << (r.paper_match.rank ? "yes" : "no") << std::setw(11)
          << (r.paper_match.relations ? "yes" : "no") << std::setw(7) << basis
          << (r.ok() ? "ok" : "MISMATCH") << '\n';
    }
    for (const auto& r : rings)
      for (const auto& c : r.checks)
        if (!c.passed)
          out << "FAIL " << r.name << ": " << c.name
              << (c.detail.empty() ? "" : " -- " + c.detail) << '\n';
    if (appendix) {
      out << "appendix bases:\n";
      for (const auto& e : appendix->entries)
        out << "  " << e.ring << " (" << e.trial.reading << ", " << e.trial.result.size
            << "): " << (e.trial.result.passed ? "pass" : "fail: " + e.trial.result.failure)
            << '\n';
    }
    out << (passed ? "all verifications passed" : "verification mismatch") << '\n';
  }
  return passed ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("K0RING_STEP_BUDGET"); env && *env) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "K0RING_STEP_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Exact Grothendieck ring computations", "k0ring"};
  app.require_subcommand(1);
  app.add_option("--budget", cfg.budget, "Groebner step budget")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out_path, "Write the report to this file");
  app.add_option("--data-dir", cfg.data_dir, "Directory holding fixtures/");

  auto* pf = app.add_subcommand("pushforward", "Localization pushforward along a power map");
  pf->add_option("--q", cfg.q)->required();
  pf->add_option("--r", cfg.r)->required();
  pf->add_option("--N", cfg.N)->required();
  pf->add_option("--k", cfg.k)->required();
  pf->add_flag("--chart", cfg.chart, "Substitute t = (ab)^q and rewrite in e1, e2");

  auto* gb = app.add_subcommand("gb", "Strong Groebner basis and quotient structure");
  gb->add_option("--ideal", cfg.ideal_path, "File of generators, one per line")->required();
  gb->add_option("--order", cfg.order, "Blocks like \"[t] > [x~,y]\"; ~ marks invertible")
      ->required();

  auto* ring = app.add_subcommand("ring", "Build one Grothendieck ring");
  ring->add_option("--name", cfg.ring_name)
      ->required()
      ->check(CLI::IsMember({"m2", "bg", "delta1", "complement", "mbar2"}));

  auto* all = app.add_subcommand("verify-all", "Build every ring and compare with print");
  all->add_flag("--appendix", cfg.appendix, "Also report the printed Z-bases");

  for (auto* sub : {pf, gb, ring, all}) {
    sub->add_option("--output", cfg.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", cfg.budget, "Groebner step budget")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_path, "Write the report to this file");
    sub->add_option("--data-dir", cfg.data_dir, "Directory holding fixtures/");
  }
  for (auto* sub : {gb, ring, all})
    sub->add_option("--primes", cfg.primes, "Primes for the mod-p ranks")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "cannot write " << cfg.out_path << '\n';
      return kUsage;
    }
  }
  std::ostream& os = cfg.out_path.empty() ? out : file;

  try {
    if (cfg.command == "pushforward") return cmd_pushforward(cfg, os);
    if (cfg.command == "gb") return cmd_gb(cfg, os);
    if (cfg.command == "ring") return cmd_ring(cfg, os, err);
    return cmd_verify_all(cfg, os, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace k0::cli
