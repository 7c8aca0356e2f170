#ifndef WARING_TESTS_SUPPORT_HPP
#define WARING_TESTS_SUPPORT_HPP

#include <waring/binary_form.hpp>
#include <waring/number_field.hpp>

#include <doctest.h>

#include <random>
#include <vector>

namespace waring::testing {

inline Rational random_rational(std::mt19937& rng, int num_bound = 9, int den_bound = 5) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  return make_rational(num(rng), den(rng));
}

inline FieldElement random_element(std::mt19937& rng, const NumberField& k, int num_bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < k.degree(); ++i) c.push_back(random_rational(rng, num_bound));
  return k.element(std::move(c));
}

inline FieldElement random_nonzero(std::mt19937& rng, const NumberField& k) {
  for (;;) {
    auto a = random_element(rng, k);
    if (!a.is_zero()) return a;
  }
}

inline BinaryForm random_form(std::mt19937& rng, const NumberField& k, int degree) {
  for (;;) {
    std::vector<FieldElement> c;
    for (int j = 0; j <= degree; ++j) c.push_back(random_element(rng, k));
    bool nonzero = false;
    for (const auto& x : c) nonzero = nonzero || !x.is_zero();
    if (nonzero) return BinaryForm(k, std::move(c));
  }
}

inline FieldElement q(const NumberField& k, long n, long d = 1) { return k.from_rational(make_rational(n, d)); }

}  // namespace waring::testing

namespace doctest {
template <>
struct StringMaker<waring::FieldElement> {
  static String convert(const waring::FieldElement& a) { return a.to_string().c_str(); }
};
template <>
struct StringMaker<waring::BinaryForm> {
  static String convert(const waring::BinaryForm& f) { return f.to_string().c_str(); }
};
}  // namespace doctest

#endif
