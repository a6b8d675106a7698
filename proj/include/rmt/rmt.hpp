#pragma once

#include "coefficient.hpp"
#include "derivatives.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "finite_diff.hpp"
#include "gamma_family.hpp"
#include "quadrature.hpp"
#include "series.hpp"
#include "special.hpp"
#include "umbral.hpp"
#include "verify.hpp"
