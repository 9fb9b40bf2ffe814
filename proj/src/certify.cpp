#include "sturmlab/certify.hpp"

#include <algorithm>

namespace sturmlab {

Ordering certified_compare(BallReal a, const Refiner& ra, BallReal b, const Refiner& rb,
                           const PrecisionPolicy& pol) {
    Ordering o = compare(a, b);
    if (o != Ordering::Undecidable) return o;
    if (!ra && !rb) return o;
    long p = std::max({a.prec(), b.prec(), pol.start_bits});
    while (!pol.exhausted(p)) {
        p = pol.next(p);
        if (ra) a = ra(p);
        if (rb) b = rb(p);
        o = compare(a, b);
        if (o != Ordering::Undecidable) return o;
    }
    return Ordering::Undecidable;
}

}  // namespace sturmlab
