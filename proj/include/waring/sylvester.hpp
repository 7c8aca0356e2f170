#ifndef WARING_SYLVESTER_HPP
#define WARING_SYLVESTER_HPP

#include <waring/binary_form.hpp>
#include <waring/linalg.hpp>
#include <waring/number_field.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace waring {

/// Hankel matrix (a_{l+t}) of size (d - r + 1) x (r + 1).
class Catalecticant {
 public:
  Catalecticant(const BinaryForm& f, int r);
  int rows() const { return matrix_.rows(); }
  int cols() const { return matrix_.cols(); }
  int order() const { return r_; }
  const FieldElement& operator()(int l, int t) const { return matrix_(l, t); }
  const Matrix& matrix() const { return matrix_; }

 private:
  int r_;
  Matrix matrix_;
};

Catalecticant catalecticant(const BinaryForm& f, int r);

/// Kernel basis, normalized and ordered by free column.
std::vector<Vector> nullspace(const Catalecticant& c);

/// Degree-r form with the given coefficient vector (c_0 x^r + ... + c_r y^r).
BinaryForm form_from_vector(const NumberField& k, const Vector& c);

struct SylvesterCertificate {
  BinaryForm h;
  std::vector<ProjectivePoint> points;
  std::vector<FieldElement> lambdas;

  int length() const { return static_cast<int>(points.size()); }
  const NumberField& field() const { return h.field(); }
};

struct CertificateChecks {
  bool apolar = false;
  bool splits = false;
  bool reconstruction = false;
  bool honest = false;
  bool ok() const { return apolar && splits && reconstruction && honest; }
};

/// Re-checks every certificate invariant exactly against f.
CertificateChecks check_certificate(const SylvesterCertificate& cert, const BinaryForm& f);

struct SearchBudget {
  /// Coordinate height of the dimension >= 2 grid.
  int height = 8;
  /// Candidates examined per degree r before the search is abandoned.
  std::uint64_t max_candidates = 20000;
  int precision_bits = 256;
};

/// Certificate order: by arg(beta/alpha) in [0, 2pi), then |beta/alpha|,
/// with (0 : 1) last.
void sort_points(std::vector<ProjectivePoint>& points);

/// Solves for the lambdas of h's points and verifies the full system.
/// Throws std::logic_error if the system is inconsistent.
std::vector<FieldElement> decompose(const BinaryForm& f, const std::vector<ProjectivePoint>& points);

/// Certificate from a square-free apolar h that splits over K, else nullopt.
std::optional<SylvesterCertificate> certificate_from_form(const BinaryForm& f, const BinaryForm& h,
                                                          const NumberField& k, int precision_bits = 256);

enum class SearchStatus { Found, None, Exhausted };

struct SylvesterSearch {
  SearchStatus status = SearchStatus::None;
  std::optional<SylvesterCertificate> certificate;
  /// True when status is None because of a proof, not a budget.
  bool definitive = false;
  std::string detail;
  std::uint64_t candidates = 0;
  int nullspace_dimension = 0;
};

/// Looks for a Sylvester form of degree r over K.
SylvesterSearch find_sylvester_form(const BinaryForm& f, int r, const NumberField& k, const SearchBudget& budget = {});

struct Evidence {
  int r = 0;
  std::string kind;
  std::string detail;
  bool definitive = false;
};

struct RankReport {
  BinaryForm form;
  NumberField field;
  int lower = 1;
  int upper = 0;
  bool exact = false;
  std::optional<SylvesterCertificate> certificate;
  /// R and C results without exact points: a square-free apolar form of
  /// degree upper with all roots in the field.
  std::optional<BinaryForm> witness;
  std::vector<Evidence> evidence;
  SearchBudget budget;
};

/// L_K(f) with certified bounds.  Throws std::invalid_argument when f's
/// coefficients cannot be placed in K.
RankReport rank(const BinaryForm& f, const NumberField& k, const SearchBudget& budget = {});

/// The two coprime generators of the apolar ideal, degrees summing to d + 2.
std::pair<BinaryForm, BinaryForm> apolar_ideal_generators(const BinaryForm& f);

struct SignChangeResult {
  int sigma = 0;
  int tau = 0;
  bool ok = false;
};

/// Counts sign changes of (lambda_1, ..., lambda_r, (-1)^d lambda_1) after
/// sorting the points by angle in (-pi/2, pi/2], against tau = number of
/// real linear factors of f.  Throws std::domain_error on non-real data.
SignChangeResult sign_change_check(const SylvesterCertificate& cert, const BinaryForm& f);

}  // namespace waring

#endif
