#ifndef WARING_REPRODUCE_HPP
#define WARING_REPRODUCE_HPP

#include <waring/sylvester.hpp>

#include <complex>
#include <string>
#include <vector>

namespace waring {

struct IdentityCheck {
  std::string name;
  std::string field;
  bool holds = false;
  std::string detail;
};

/// The explicit power-sum identities for p5, p6 and p7, each checked exactly.
std::vector<IdentityCheck> paper_identities();

/// 1 + 2z + 3z^2 - z^3 at z = zeta5, in double precision.
std::complex<double> p7_prefactor_embedding();

struct FixtureRun {
  std::string fixture;
  std::string field;
  int expected = 0;
  RankReport report;
  bool pass = false;
};

struct ReproduceReport {
  std::vector<FixtureRun> runs;
  std::vector<IdentityCheck> identities;
  bool prefactor_ok = false;
  bool all_pass() const;
};

ReproduceReport reproduce_paper(const SearchBudget& budget = {});

/// One line per check; deterministic.
std::string format_reproduce(const ReproduceReport& rep);

}  // namespace waring

#endif
