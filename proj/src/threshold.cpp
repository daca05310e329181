#include "entmom/threshold.hpp"

#include <cmath>
#include <string>

#include "entmom/errors.hpp"

namespace entmom {

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    if (points < 2)
        throw DomainError("linspace needs at least 2 points");
    std::vector<double> out(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

double bisect_threshold(const std::function<double(double)>& f, double lo, double hi,
                        double xtol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw NoSignChange("no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    for (int it = 0; it < max_iter && (hi - lo) >= xtol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace entmom
