#include "k0ring/moduli.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <map>

#include "k0ring/ktproj.hpp"
#include "k0ring/pushforward.hpp"
#include "k0ring/reprings.hpp"
#include "k0ring/symfun.hpp"

#ifndef K0RING_DEFAULT_DATA_DIR
#define K0RING_DEFAULT_DATA_DIR "data"
#endif

namespace k0 {

namespace {

LaurentPolynomial parse(const AlphabetPtr& alpha, const char* text) {
  return LaurentPolynomial::parse(alpha, text);
}

LaurentPolynomial to_hodge(const LaurentPolynomial& f) {
  return f.over(alphabets::hodge(), {{"e1", "eps"}, {"e2", "lam"}});
}

// Chart pushforward with e1 -> eps, e2 -> lam.
LaurentPolynomial chart(int q, int r, int N, int k) {
  return to_hodge(pushforward_on_moduli_chart(q, r, N, k).poly());
}

// Relation of P^N restricted along t -> (ab)^q and written in eps, lam.
LaurentPolynomial proj_relation_on_chart(int q, int N) {
  const auto ab = alphabets::characters();
  const auto t = parse(ab, "a*b").pow(q);
  const auto f = ring_map(proj_presentation(N).relation, ab, {{"t", t}});
  return to_hodge(from_characters(f).poly());
}

std::vector<LaurentPolynomial> base_forms(const StrongGroebnerBasis& gb) {
  std::vector<LaurentPolynomial> out;
  for (const auto& g : gb.generators()) {
    auto f = gb.ring().from_poly(g);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

class Recorder {
 public:
  explicit Recorder(ModuliRing& ring) : ring_(ring) {}

  bool check(std::string name, bool passed, std::string detail = {}) {
    ring_.checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }

  bool compare(const std::string& name, const LaurentPolynomial& expected,
               const LaurentPolynomial& computed, bool fatal = true) {
    const bool same = expected == computed;
    if (!same) {
      const auto e = expected.over(computed.alphabet());
      ring_.mismatches.push_back(
          {name, e.to_string(), computed.to_string(), (computed - e).to_string(), fatal});
    }
    check(name, same || !fatal, same ? "" : "differs from the printed value");
    return same;
  }

  bool contained(const std::string& name, const StrongGroebnerBasis& gb,
                 const LaurentPolynomial& f) {
    if (ideal_contains(gb, f)) return check(name, true);
    return check(name, false, "normal form " + normal_form(f, gb).to_string());
  }

 private:
  ModuliRing& ring_;
};

Fixture fixture(const BuildOptions& o, const char* name) {
  return load_fixture(o.data_dir / "fixtures" / (std::string(name) + ".txt"));
}

const LaurentPolynomial& line(const Fixture& f, std::size_t i) {
  if (i >= f.polys.size()) throw DomainError("fixture has too few entries");
  return f.polys[i];
}

void finish_rank(ModuliRing& ring, Recorder& rec) {
  const auto& rep = *ring.report;
  const auto expected = *ring.expectation.rank;
  rec.check("rank over Q is " + std::to_string(expected), rep.rank_Q == expected,
            "computed " + std::to_string(rep.rank_Q));
  rec.check("free abelian group", rep.free == ring.expectation.free,
            rep.free ? "" : "mod-p ranks or torsion disagree with freeness");
  rec.check("mod-p ranks consistent", rep.mod_p_consistent);
  ring.paper_match.rank = rep.rank_Q == expected && rep.free == ring.expectation.free;
}

void add_trial(ModuliRing& ring, Recorder& rec, const StrongGroebnerBasis& gb,
               std::string reading, const std::vector<LaurentPolynomial>& candidate) {
  auto result = verify_candidate_basis(gb, *ring.report, candidate);
  rec.check("printed basis (" + reading + ")", result.passed, result.failure);
  ring.basis_trials.push_back({std::move(reading), std::move(result)});
}

}  // namespace

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture " + path.string());
  Fixture out;
  std::string line, label;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.front() == '#') {
      std::string body = line.substr(1);
      body.erase(0, body.find_first_not_of(' '));
      if (body.rfind("alphabet:", 0) == 0)
        out.alphabet = VariableAlphabet::parse(body.substr(9));
      else
        label = body;
      continue;
    }
    if (!out.alphabet) throw ParseError(path.string() + ": polynomial before alphabet line");
    out.polys.push_back(LaurentPolynomial::parse(out.alphabet, line));
    out.labels.push_back(label);
  }
  if (!out.alphabet) throw ParseError(path.string() + ": missing alphabet line");
  return out;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("K0RING_DATA_DIR"); env && *env) return env;
  return K0RING_DEFAULT_DATA_DIR;
}

bool ModuliRing::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  for (const auto& m : mismatches)
    if (m.fatal) return false;
  return paper_match.rank && paper_match.relations && paper_match.basis;
}

ModuliRing build_k0_m2(const BuildOptions& o) {
  ModuliRing ring;
  ring.name = "M2";
  ring.key = "m2";
  ring.expectation = {18, true};
  Recorder rec(ring);
  const auto H = alphabets::hodge();
  ring.ring = make_ring(H);

  const auto sextic = fixture(o, "sextic_pushforwards");
  for (int k = 0; k <= 1; ++k) {
    const auto v = pushforward_power_map(2, 1, 6, k).value;
    rec.compare("square map P1 x P4 -> P6, x^" + std::to_string(k), line(sextic, k), v);
    rec.check("a<->b symmetry, x^" + std::to_string(k), swap_ab(v) == v);
  }

  const auto printed = fixture(o, "m2_relations");
  bool rel_match = true;
  for (int k = 0; k <= 1; ++k) {
    ring.relations.push_back(chart(2, 1, 6, k));
    rel_match &= rec.compare("alpha_{1," + std::to_string(k) + "}", line(printed, k),
                             ring.relations.back());
  }
  ring.paper_match.relations = rel_match;

  const auto gb = strong_gb(ring.relations, ring.ring, o.gb);
  for (int k = 0; k <= 2; ++k)
    rec.contained("P2 x P2 -> P6 pushforward x^" + std::to_string(k) + " in ideal", gb,
                  chart(2, 2, 6, k));
  for (int k = 0; k <= 3; ++k)
    rec.contained("P3 x P0 -> P6 pushforward x^" + std::to_string(k) + " in ideal", gb,
                  chart(2, 3, 6, k));
  rec.contained("P6 relation in ideal", gb, proj_relation_on_chart(2, 6));

  ring.report = quotient_report(gb, ring.relations, o.primes, o.gb);
  finish_rank(ring, rec);
  add_trial(ring, rec, gb, "as printed", fixture(o, "m2_basis").polys);
  ring.paper_match.basis = ring.basis_trials.back().result.passed;
  return ring;
}

ModuliRing build_k0_bg(const BuildOptions& o) {
  ModuliRing ring;
  ring.name = "BG";
  ring.key = "bg";
  ring.expectation = {std::nullopt, false};
  ring.paper_match.basis_printed = false;
  ring.paper_match.basis = true;
  Recorder rec(ring);
  const auto ET = alphabets::symmetric_t();
  const auto G = alphabets::g_classes();
  ring.ring = make_ring(G);

  const auto veronese = fixture(o, "veronese");
  const auto localization = fixture(o, "bg_localization");
  std::vector<LaurentPolynomial> presentation;
  for (int k = 0; k <= 1; ++k) {
    const auto v = pushforward_power_map(2, 1, 2, k).value;
    rec.compare("square map P1 -> P2, x^" + std::to_string(k), line(veronese, k), v);
    presentation.push_back(from_characters_graded(v, "t", ET));
    rec.compare("Veronese pushforward x^" + std::to_string(k) + " in e1, e2",
                line(localization, k), presentation.back());
  }

  const auto p2 = fixture(o, "bg_p2_relation");
  const auto rel = from_characters_graded(proj_presentation(2).relation, "t", ET);
  rec.compare("P2 relation", line(p2, 0), rel);
  // The printed rewriting drops a factor t^-1 in its first summand.
  rec.compare("printed rewriting of the P2 relation", line(p2, 1), rel, false);
  const auto u = parse(ET, "1 - e2*t^-1");
  const auto corrected = -parse(ET, "e1^2*t^-1") * u + u * parse(ET, "1 + e2*t^-1").pow(2);
  rec.check("P2 relation = -e1^2 t^-1 (1 - e2 t^-1) + (1 - e2 t^-1)(1 + e2 t^-1)^2",
            corrected == rel);
  const auto gb_et = strong_gb(presentation, make_ring(ET), o.gb);
  rec.contained("P2 relation in ideal", gb_et, rel);

  // gam = e2 t^-1, i.e. t -> lam gam^-1
  const std::map<std::string, LaurentPolynomial> sub{{"e1", parse(G, "eps")},
                                                     {"e2", parse(G, "lam")},
                                                     {"t", parse(G, "lam*gam^-1")}};
  for (const auto& f : presentation) ring.relations.push_back(ring_map(f, G, sub));
  const auto printed = fixture(o, "bg_relations");
  bool rel_match = true;
  for (std::size_t i = 0; i < 2; ++i)
    rel_match &= rec.compare("relation " + std::to_string(i + 1) + " after gam = e2 t^-1",
                             line(printed, i), ring.relations[i]);
  const bool equal = ideals_equal(ring.relations, printed.polys, ring.ring, o.gb);
  rec.check("substituted ideal equals (1 - gam^2, eps(1 - gam))", equal);
  ring.paper_match.relations = rel_match && equal;

  const auto gb = strong_gb(ring.relations, ring.ring, o.gb);
  rec.contained("gam^2 = 1 in the quotient", gb, parse(G, "gam^2 - 1"));
  try {
    ring.report = quotient_report(gb, ring.relations, o.primes, o.gb);
    rec.check("infinite rank", false, "finite rank " + std::to_string(ring.report->rank_Q));
  } catch (const InfiniteRank&) {
    rec.check("infinite rank", true);
    ring.paper_match.rank = true;
  }
  return ring;
}

ModuliRing build_k0_delta1(const BuildOptions& o) {
  ModuliRing ring;
  ring.name = "Delta1";
  ring.key = "delta1";
  ring.expectation = {65, true};
  Recorder rec(ring);
  const auto G = alphabets::g_classes();
  ring.ring = make_ring(G);

  const auto dual = fixture(o, "dual_w");
  bool rel_match = rec.compare("[W_4 dual]", GClass(line(dual, 0)).poly(), dual_w_class(4).poly());
  rel_match &= rec.compare("[W_6 dual]", GClass(line(dual, 1)).poly(), dual_w_class(6).poly());

  // R1, R2 as pushforwards of (1 - b^-4)(1 - b^-6) and a (1 - b^-4)(1 - b^-6)
  const auto ab = alphabets::characters();
  const auto normal = parse(ab, "1 - b^-4") * parse(ab, "1 - b^-6");
  const auto printed = boundary_relations_r1_r2();
  rel_match &= rec.compare("R1 as induced class", printed.r1.poly(), induce(normal).poly());
  rel_match &= rec.compare("R2 as induced class", printed.r2.poly(),
                           induce(parse(ab, "a") * normal).poly());
  ring.paper_match.relations = rel_match;

  ring.relations = {parse(G, "1 - gam^2"), parse(G, "eps - eps*gam"),
                    euler_lambda_minus1_dual({4, 6}).poly(), printed.r1.poly(),
                    printed.r2.poly()};
  const auto gb = strong_gb(ring.relations, ring.ring, o.gb);
  ring.report = quotient_report(gb, ring.relations, o.primes, o.gb);
  finish_rank(ring, rec);

  // The printed basis uses a symbol del next to gam; try both meanings.
  const auto listed = fixture(o, "delta1_basis").polys;
  std::vector<LaurentPolynomial> as_lam, as_ratio;
  const std::map<std::string, LaurentPolynomial> ratio{{"del", parse(G, "gam*lam^-1")}};
  for (const auto& m : listed) {
    as_lam.push_back(m.over(G, {{"del", "lam"}}));
    as_ratio.push_back(ring_map(m, G, ratio));
  }
  for (auto [reading, cand] : {std::pair{"del = lam", &as_lam},
                               std::pair{"del = gam lam^-1", &as_ratio}}) {
    auto result = verify_candidate_basis(gb, *ring.report, *cand);
    ring.checks.push_back({std::string("printed basis (") + reading + ")", true,
                           result.passed ? "passes" : "fails: " + result.failure});
    ring.basis_trials.push_back({reading, std::move(result)});
  }
  ring.paper_match.basis = false;
  for (const auto& t : ring.basis_trials) ring.paper_match.basis |= t.result.passed;
  return ring;
}

ModuliRing build_k0_complement(const BuildOptions& o) {
  ModuliRing ring;
  ring.name = "Complement";
  ring.key = "complement";
  ring.expectation = {32, true};
  Recorder rec(ring);
  const auto E = alphabets::symmetric();
  ring.ring = make_ring(E);

  const auto tau = fixture(o, "complement_tau");
  const std::array<std::array<int, 2>, 3> cube{{{1, 0}, {1, 1}, {2, 0}}};
  for (std::size_t i = 0; i < cube.size(); ++i) {
    const auto [r, k] = cube[i];
    const auto v = pushforward_power_map(3, r, 6, k).value;
    const auto name = "cube map P" + std::to_string(r) + " x P" + std::to_string(6 - 3 * r) +
                      " -> P6, x^" + std::to_string(k);
    rec.check(name + " a<->b symmetry", swap_ab(v) == v);
    rec.compare(name, line(tau, i), from_characters_graded(v, "t", alphabets::symmetric_t()));
  }

  const auto printed = fixture(o, "complement_relations");
  const char* names[] = {"S10", "S11", "S20"};
  bool rel_match = true;
  for (std::size_t i = 0; i < cube.size(); ++i) {
    ring.relations.push_back(pushforward_on_moduli_chart(3, cube[i][0], 6, cube[i][1]).poly());
    rel_match &= rec.compare(names[i], line(printed, i), ring.relations.back());
  }
  ring.paper_match.relations = rel_match;

  const auto gb = strong_gb(ring.relations, ring.ring, o.gb);
  for (int k = 1; k <= 2; ++k)
    rec.contained("cube map P2 x P0 -> P6, x^" + std::to_string(k) + " in ideal", gb,
                  pushforward_on_moduli_chart(3, 2, 6, k).poly());
  rec.contained("P6 relation in ideal", gb,
                proj_relation_on_chart(3, 6).over(E, {{"eps", "e1"}, {"lam", "e2"}}));

  ring.report = quotient_report(gb, ring.relations, o.primes, o.gb);
  finish_rank(ring, rec);
  add_trial(ring, rec, gb, "as printed", fixture(o, "complement_basis").polys);
  ring.paper_match.basis = ring.basis_trials.back().result.passed;
  return ring;
}

ModuliRing build_k0_mbar2(const ModuliRing& delta1, const ModuliRing& complement,
                          const BuildOptions& o) {
  if (!delta1.ok() || !complement.ok())
    throw DomainError("Mbar2 needs verified Delta1 and complement presentations");
  ModuliRing ring;
  ring.name = "Mbar2";
  ring.key = "mbar2";
  ring.expectation = {97, true};
  ring.paper_match.basis_printed = false;
  ring.paper_match.basis = true;
  Recorder rec(ring);
  const auto G = alphabets::g_classes();
  const auto D = alphabets::boundary();
  const auto H = alphabets::hodge();
  ring.ring = make_ring(D);

  // gam = lam*del is an automorphism of the Laurent ring; the Groebner
  // computations run in eps, lam, gam where they stay small.
  const std::map<std::string, LaurentPolynomial> to_del{{"gam", parse(D, "lam*del")}};
  const auto rg = make_ring(G);
  const auto& i_delta = delta1.relations;
  std::vector<LaurentPolynomial> i_comp;
  for (const auto& s : complement.relations)
    i_comp.push_back(s.over(G, {{"e1", "eps"}, {"e2", "lam"}}));

  auto kernel = ideal_intersect(i_delta, i_comp, rg, o.gb);
  const auto intersection_size = kernel.size();
  const auto twist = parse(G, "1 - lam*gam^-1");  // 1 - del^-1
  for (const auto& f : i_delta) kernel.push_back(twist * f);
  for (const auto& f : kernel) ring.relations.push_back(ring_map(f, D, to_del));
  ring.paper_match.relations = delta1.paper_match.relations && complement.paper_match.relations;
  ring.computed_in = "eps, lam, gam with gam = lam*del";

  const auto gb_delta = strong_gb(i_delta, rg, o.gb);
  const auto gb_comp = strong_gb(i_comp, rg, o.gb);
  bool in_both = true;
  for (std::size_t i = 0; i < intersection_size; ++i)
    in_both &= ideal_contains(gb_delta, kernel[i]) && ideal_contains(gb_comp, kernel[i]);
  rec.check("intersection generators lie in both ideals", in_both);
  bool in_delta = true;
  for (const auto& f : kernel) in_delta &= ideal_contains(gb_delta, f);
  rec.check("kernel ideal lies in I_Delta1", in_delta);

  const auto gb = strong_gb(kernel, rg, o.gb);
  bool twisted = true;
  for (const auto& f : base_forms(gb_delta)) twisted &= ideal_contains(gb, twist * f);
  rec.check("(1 - del^-1) I_Delta1 lies in the kernel ideal", twisted);

  // del -> 1 must give back the complement presentation.
  std::vector<LaurentPolynomial> restricted;
  for (const auto& f : ring.relations)
    restricted.push_back(ring_map(f, H, {{"del", parse(H, "1")}}));
  std::vector<LaurentPolynomial> comp_h;
  for (const auto& s : complement.relations) comp_h.push_back(to_hodge(s));
  const auto rh = make_ring(H);
  const auto gb_restricted = strong_gb(restricted, rh, o.gb);
  bool contains_comp = true;
  for (const auto& s : comp_h) contains_comp &= ideal_contains(gb_restricted, s);
  bool inside_comp = true;
  const auto gb_comp_h = strong_gb(comp_h, rh, o.gb);
  for (const auto& f : restricted) inside_comp &= ideal_contains(gb_comp_h, f);
  rec.check("del -> 1 image lies in the complement ideal", inside_comp);
  // Over Q the two ideals agree exactly when the ranks do.
  const auto restricted_report = quotient_report(gb_restricted, restricted, o.primes, o.gb);
  std::string detail;
  if (!contains_comp) {
    detail = "complement relations are not all reached; Z[eps,lam^+-1] modulo the image has "
             "rank " + std::to_string(restricted_report.rank_Q) + " and torsion invariants";
    for (const auto& d : restricted_report.torsion_invariants) detail += " " + d.get_str();
  }
  rec.check("del -> 1 image equals the complement ideal over Q",
            inside_comp && restricted_report.rank_Q == complement.report->rank_Q);
  rec.check("del -> 1 image equals the complement ideal", inside_comp && contains_comp, detail);

  auto rep = quotient_report(gb, kernel, o.primes, o.gb);
  for (auto& m : rep.basis) m = ring_map(m, D, to_del);
  for (auto& t : rep.torsion) t.monomial = ring_map(t.monomial, D, to_del);
  ring.report = std::move(rep);
  finish_rank(ring, rec);
  const auto sum = delta1.report->rank_Q + complement.report->rank_Q;
  rec.check("rank is rank(Delta1) + rank(complement)", sum == ring.report->rank_Q,
            std::to_string(delta1.report->rank_Q) + " + " +
                std::to_string(complement.report->rank_Q) + " = " + std::to_string(sum));
  return ring;
}

ModuliRing build_k0_mbar2(const BuildOptions& o) {
  return build_k0_mbar2(build_k0_delta1(o), build_k0_complement(o), o);
}

AppendixReport verify_appendix_bases(const ModuliRing& m2, const ModuliRing& delta1,
                                     const ModuliRing& complement) {
  AppendixReport rep;
  bool m2_ok = false, delta_ok = false, comp_ok = false;
  for (const auto* ring : {&m2, &delta1, &complement})
    for (const auto& t : ring->basis_trials) {
      rep.entries.push_back({ring->name, t});
      if (ring == &m2) m2_ok |= t.result.passed;
      if (ring == &delta1) delta_ok |= t.result.passed;
      if (ring == &complement) comp_ok |= t.result.passed;
    }
  rep.passed = m2_ok && delta_ok && comp_ok;
  return rep;
}

}  // namespace k0
