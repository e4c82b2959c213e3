#pragma once

#include "catalog.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "gcd.hpp"
#include "manifest_data.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "ratfun.hpp"
#include "resultant.hpp"
#include "sweep.hpp"
#include "var.hpp"
