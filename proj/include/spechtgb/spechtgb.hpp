#ifndef SPECHTGB_SPECHTGB_HPP
#define SPECHTGB_SPECHTGB_HPP

#include "combinatorics.hpp"
#include "error.hpp"
#include "field.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "specht.hpp"
#include "strata.hpp"
#include "verify.hpp"

#endif  // SPECHTGB_SPECHTGB_HPP
