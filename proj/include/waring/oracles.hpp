#ifndef WARING_ORACLES_HPP
#define WARING_ORACLES_HPP

#include <waring/binary_form.hpp>
#include <waring/number_field.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace waring {

/// Stufe of Q(sqrt -m) for square-free m >= 1: 1, 2 or 4.
int stufe_imag_quadratic(long m);

struct SquarePair {
  FieldElement first, second;
};

inline constexpr int kDefaultSolverHeight = 40;

/// r^2 + s^2 = -1 with rs(r^2 - s^2) != 0, in a field of degree 2 that is
/// not real.  Candidates r = (p1 + p2 g)/q are tried by increasing
/// max(|p1|, |p2|, q); the classical witnesses for Q(i) and Q(sqrt -2) come first.
std::optional<SquarePair> solve_minus_one_two_squares(const NumberField& k, int max_height = kDefaultSolverHeight);
std::optional<SquarePair> solve_minus_one_two_squares(long m, int max_height = kDefaultSolverHeight);

/// t^2 + u^2 = -2 with tu(t^2 - u^2) != 0, via (t, u) = (r + s, r - s).
std::optional<SquarePair> solve_minus_two_two_squares(long m, int max_height = kDefaultSolverHeight);
std::optional<SquarePair> solve_minus_two_two_squares(const NumberField& k, int max_height = kDefaultSolverHeight);
/// (r, s) = ((t + u)/2, (t - u)/2).
SquarePair minus_two_to_minus_one(const SquarePair& tu);

struct QuarticSolution {
  std::array<FieldElement, 4> r;
  /// The r1 = r2 start produced a repeated root and was discarded.
  bool generic_degenerate = false;
};

/// Distinct r_i in K with e1(r) = e2(r) = 0.
std::optional<QuarticSolution> solve_dioph_quartic(const NumberField& k, int max_height = kDefaultSolverHeight);
/// The e1 = e2 = 0 quadruple built from r^2 + s^2 = -1; nullopt when two coincide.
std::optional<std::array<FieldElement, 4>> quartic_from_pair(const SquarePair& rs);

enum class StufeVerdict { AtMostTwo, AboveTwo, Unknown };

struct StufeEvidence {
  StufeVerdict verdict = StufeVerdict::Unknown;
  std::optional<SquarePair> witness;
  std::string reason;
};

/// Decide s(K) <= 2 where the theory allows: real fields (never), Q(sqrt -m)
/// by the m mod 8 criterion, and otherwise by finding a witness.
StufeEvidence stufe_at_most_two(const NumberField& k);

struct PaperFixture {
  std::string name;
  int k = 0;
  BinaryForm form;
  std::vector<std::pair<std::string, int>> expected;
};

/// Names: p5, p6, p7, p2k, p2k1, phi, monomial_x3y2, sextic.
/// Families need k >= 3; throws std::invalid_argument otherwise.
PaperFixture paper_form(const std::string& name, int k = 0);

std::vector<PaperFixture> all_paper_fixtures();

/// Rank pinned by a theorem for this fixture over the field, if any.
std::optional<int> expected_rank_oracle(const PaperFixture& fixture, const NumberField& field);
std::optional<int> expected_rank_oracle(const PaperFixture& fixture, const std::string& field_spec);

}  // namespace waring

#endif
