#pragma once

// Presentations of the Grothendieck rings of M_2, BG, Delta_1, the complement
// of Delta_1 and Mbar_2, recomputed from localization and checked against
// the printed values stored as fixtures.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "k0ring/laurent.hpp"
#include "k0ring/zgroebner.hpp"

namespace k0 {

/// Polynomials read from a fixture file: `#` lines are comments, one
/// `# alphabet: a~,b~,t~` line fixes the alphabet, other nonblank lines are
/// polynomials in the shared grammar. The comment right above each
/// polynomial becomes its label.
struct Fixture {
  AlphabetPtr alphabet;
  std::vector<std::string> labels;
  std::vector<LaurentPolynomial> polys;
};

Fixture load_fixture(const std::filesystem::path& path);

/// $K0RING_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

/// A printed value that differs from the recomputed one.
struct Mismatch {
  std::string check;
  std::string expected;
  std::string computed;
  std::string difference;  // computed - expected
  /// Non-fatal mismatches are recorded but do not fail the ring.
  bool fatal = true;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PaperExpectation {
  std::optional<std::size_t> rank;  // nullopt: infinite rank
  bool free = true;
};

struct PaperMatch {
  bool rank = false;
  bool relations = false;
  bool basis = false;
  /// False when no basis is printed; `basis` is then vacuously true.
  bool basis_printed = true;
};

struct BasisTrial {
  std::string reading;  // how the printed symbols were interpreted
  CandidateBasisCheck result;
};

struct ModuliRing {
  std::string name;  // M2, BG, Delta1, Complement, Mbar2
  std::string key;   // m2, bg, delta1, complement, mbar2
  RingPtr ring;
  std::vector<LaurentPolynomial> relations;
  /// nullopt when the quotient has infinite rank.
  std::optional<QuotientReport> report;
  /// Set when the quotient was computed in other coordinates; basis and
  /// torsion monomials in `report` are already mapped back.
  std::string computed_in;
  PaperExpectation expectation;
  PaperMatch paper_match;
  std::vector<Check> checks;
  std::vector<Mismatch> mismatches;
  std::vector<BasisTrial> basis_trials;

  /// Every check passed, no fatal mismatch, and the printed values match.
  bool ok() const;
};

struct BuildOptions {
  std::filesystem::path data_dir = default_data_dir();
  std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
  GbOptions gb;
};

ModuliRing build_k0_m2(const BuildOptions& options = {});
ModuliRing build_k0_bg(const BuildOptions& options = {});
ModuliRing build_k0_delta1(const BuildOptions& options = {});
ModuliRing build_k0_complement(const BuildOptions& options = {});
/// Throws DomainError unless both inputs are ok().
ModuliRing build_k0_mbar2(const ModuliRing& delta1, const ModuliRing& complement,
                          const BuildOptions& options = {});
ModuliRing build_k0_mbar2(const BuildOptions& options = {});

struct AppendixEntry {
  std::string ring;
  BasisTrial trial;
};

struct AppendixReport {
  std::vector<AppendixEntry> entries;
  /// M2 and Complement pass, and Delta1 passes under at least one reading.
  bool passed = false;
};

AppendixReport verify_appendix_bases(const ModuliRing& m2, const ModuliRing& delta1,
                                     const ModuliRing& complement);

}  // namespace k0
