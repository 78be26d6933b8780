#pragma once

#include "surdx/approx.hpp"
#include "surdx/arith.hpp"
#include "surdx/errors.hpp"
#include "surdx/expr.hpp"
#include "surdx/factor.hpp"
#include "surdx/parser.hpp"
#include "surdx/ranks.hpp"
#include "surdx/rational.hpp"
#include "surdx/taxonomy.hpp"
#include "surdx/value.hpp"
#include "surdx/verify.hpp"
