#ifndef BEZOUT_BEZOUT_HPP
#define BEZOUT_BEZOUT_HPP

#include "bezout/bigrat.hpp"
#include "bezout/cycle.hpp"
#include "bezout/division.hpp"
#include "bezout/errors.hpp"
#include "bezout/factor.hpp"
#include "bezout/gcd.hpp"
#include "bezout/intersection.hpp"
#include "bezout/modular.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/number_field.hpp"
#include "bezout/numeric.hpp"
#include "bezout/parser.hpp"
#include "bezout/plot.hpp"
#include "bezout/resultant.hpp"
#include "bezout/upoly.hpp"
#include "bezout/verification.hpp"

#endif  // BEZOUT_BEZOUT_HPP
