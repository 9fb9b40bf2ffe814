#include "sturmlab/modulation.hpp"

#include <cmath>

namespace sturmlab {

long ell(long n) {
    long s = 1;
    while ((s + 1) * (s + 1) * (s + 1) * (s + 1) <= n + 2) ++s;
    return s;
}

Modulation::Modulation(std::shared_ptr<const GapTable> gaps, const std::string& eps_literal,
                       long table_depth)
    : gaps_(std::move(gaps)),
      eps_(BallReal::from_decimal(eps_literal, PrecisionPolicy::default_precision())),
      depth_(table_depth) {
    build();
}

void Modulation::build() {
    const long prec = gaps_->stairs().policy().start_bits;
    BallReal sqrt2 = BallReal::sqrt_long(2, prec);
    for (long n = 0; n <= depth_; ++n) {
        ControlPoint cp;
        cp.n = n;
        auto de = gaps_->delta(n + 1);
        cp.t = div_long(de.value, ell(n));
        cp.v = div(mul(eps_, sqrt(sqrt(BallReal::from_long(n + 2, prec)))), sqrt2);
        cp.retained = (n == 0) || de.strict_drop || (ell(n) > ell(n - 1));
        points_.push_back(cp);
        if (cp.retained) {
            retained_.push_back(n);
            node_t_.push_back(cp.t.mid_double());
            node_v_.push_back(cp.v.mid_double());
        }
    }
    last_t_double_ = points_[depth_].t.mid_double();
}

BallReal Modulation::phi(const GapClassification& cls) const {
    if (cls.boundary()) throw EvaluationUndecidable("phi on a gap boundary");
    if (cls.in_K()) return BallReal::from_long(0, 64);
    return mul_pow2(cls.boundary_distance, cls.gap_index + 2);
}

BallReal Modulation::phi(const CirclePoint& x) const { return phi(gaps_->classify(x)); }

BallReal Modulation::psi(const GapClassification& cls) const {
    if (cls.boundary()) throw EvaluationUndecidable("psi on a gap boundary");
    if (cls.in_K()) return BallReal::from_long(0, 64);
    return div_long(phi(cls), ell(cls.gap_index));
}

BallReal Modulation::psi(const CirclePoint& x) const { return psi(gaps_->classify(x)); }

BallReal Modulation::M_of(const BallReal& t_in) const {
    const PrecisionPolicy& pol = gaps_->stairs().policy();
    BallReal one = BallReal::from_long(1, 64);
    // psi <= 1 exactly; clip enclosure slack above 1
    BallReal t = min_enclosure(t_in, one);
    if (t.sign() != Ordering::Greater)
        throw EvaluationUndecidable("M needs t certified > 0");

    // node hit: the exact stored ball comes back with the exact stored value
    for (long idx : retained_) {
        const ControlPoint& cp = points_[idx];
        if (mpfr_equal_p(t_in.mid(), cp.t.mid()) && mpfr_equal_p(t_in.rad(), cp.t.rad()))
            return cp.v;
    }

    auto seg_top = [&](const BallReal& tt) {
        // (t_first, 1]: M = v_first * log t / log t_first
        const ControlPoint& cp = points_[retained_.front()];
        return div(mul(cp.v, log(tt)), log(cp.t));
    };
    auto seg_mid = [&](const ControlPoint& a, const ControlPoint& b, const BallReal& tt) {
        BallReal la = log(a.t), lb = log(b.t);
        BallReal w = div(sub(la, log(tt)), sub(la, lb));
        return add(a.v, mul(sub(b.v, a.v), w));
    };

    const ControlPoint& first = points_[retained_.front()];
    Ordering vs_first = certified_compare(t, {}, first.t, {}, pol);
    if (vs_first == Ordering::Greater) return seg_top(t);
    if (vs_first == Ordering::Undecidable) {
        // straddles the first node: hull of the two adjacent segment formulas
        BallReal below = retained_.size() > 1
                             ? seg_mid(first, points_[retained_[1]], t)
                             : first.v;
        return hull(seg_top(t), below);
    }
    for (size_t j = 0; j + 1 < retained_.size(); ++j) {
        const ControlPoint& a = points_[retained_[j]];
        const ControlPoint& b = points_[retained_[j + 1]];
        Ordering vs_b = certified_compare(t, {}, b.t, {}, pol);
        if (vs_b == Ordering::Greater) return seg_mid(a, b, t);
        if (vs_b == Ordering::Undecidable) {
            BallReal below = (j + 2 < retained_.size())
                                 ? seg_mid(b, points_[retained_[j + 2]], t)
                                 : b.v;
            return hull(seg_mid(a, b, t), below);
        }
    }
    throw DepthExceeded("t below the modulation table (depth " + std::to_string(depth_) +
                        "); rebuild with a deeper table");
}

double Modulation::M_of_double(double t) const {
    if (t >= 1.0) return 0.0;
    if (!(t > 0.0)) throw EvaluationUndecidable("M needs t > 0");
    double lt = std::log(t);
    if (t >= node_t_[0]) return node_v_[0] * lt / std::log(node_t_[0]);
    for (size_t j = 0; j + 1 < node_t_.size(); ++j) {
        if (t >= node_t_[j + 1]) {
            double la = std::log(node_t_[j]), lb = std::log(node_t_[j + 1]);
            double w = (la - lt) / (la - lb);
            return node_v_[j] + (node_v_[j + 1] - node_v_[j]) * w;
        }
    }
    throw DepthExceeded("t below the modulation table (double mode)");
}

}  // namespace sturmlab
