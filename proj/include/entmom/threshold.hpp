// Grid and bisection helpers for locating the parameter where a witness
// changes sign.

#pragma once

#include <functional>
#include <vector>

namespace entmom {

std::vector<double> linspace(double lo, double hi, std::size_t points);

// Root of f by bisection on [lo, hi]; requires a sign change between the
// endpoints (NoSignChange otherwise). Stops once the bracket is narrower
// than xtol and returns its midpoint.
double bisect_threshold(const std::function<double(double)>& f, double lo, double hi,
                        double xtol = 1e-9, int max_iter = 200);

}  // namespace entmom
