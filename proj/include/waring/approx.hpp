#ifndef WARING_APPROX_HPP
#define WARING_APPROX_HPP

#include <waring/number_field.hpp>

#include <complex>

namespace waring {

/// Double-precision image of a under the designated embedding.
std::complex<double> approximate(const FieldElement& a);

}  // namespace waring

#endif
