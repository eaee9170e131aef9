#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "areawalk/laurent.hpp"
#include "areawalk/oracle.hpp"
#include "areawalk/quantum_torus.hpp"

namespace areawalk {

// Counts are written as decimal strings so JSON consumers never lose
// precision. Exponents are emitted in ascending order.

/// {"coeffs": {"<t>": "<count>", ...}}
std::string polynomial_to_json(const AreaPolynomial& p);
/// Inverse of polynomial_to_json. Throws std::invalid_argument on malformed input.
AreaPolynomial polynomial_from_json(std::string_view text);

/// {"length": n, "endpoints": [{"k": .., "l": .., "coeffs": {..}}, ...]},
/// endpoints in lexicographic (k, l) order.
std::string histogram_to_json(const EndpointHistogram& h);
EndpointHistogram histogram_from_json(std::string_view text);

/// CSV with header length,k,l,t,count.
void write_histogram_csv(std::ostream& os, const EndpointHistogram& h);

/// Dimensions, parameters and largest relation residuals of a representation.
std::string representation_to_json(const TorusRepresentation& rep);

}  // namespace areawalk
