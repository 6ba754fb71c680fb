#pragma once

// Everything: exponents, monomials, ideals, decompositions, duality,
// closedness tests, text forms and the brute-force oracles.

#include "mdi/closedness.hpp"
#include "mdi/decompose.hpp"
#include "mdi/duality.hpp"
#include "mdi/error.hpp"
#include "mdi/exp_poly.hpp"
#include "mdi/ideal.hpp"
#include "mdi/monomial.hpp"
#include "mdi/oracle.hpp"
#include "mdi/text.hpp"
