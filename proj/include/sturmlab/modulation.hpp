#pragma once

#include <memory>
#include <vector>

#include "sturmlab/gaps.hpp"

namespace sturmlab {

// floor((n+2)^(1/4)) by pure integer arithmetic
long ell(long n);

// The modulation layer: the tent heights phi, their slow-down psi = phi/ell,
// and the continuous strictly decreasing M interpolated through the control
// points (t_n, v_n) = (delta(n+1)/ell(n), eps (n+2)^{1/4} / sqrt(2)).
//
// t_n is only weakly decreasing (running minima tie whenever no gap endpoint
// moves closer to the boundary of I_0 and ell stays flat), while v_n is
// strictly increasing, so the node list keeps the first index of each tie
// class. M then satisfies M(t_n) <= v_n for every n, with equality exactly
// on the retained nodes -- the inequality direction the traversal bound
// consumes. Between nodes M is linear in log t, and linear in log t between
// (1, 0) and the first node, which keeps it strictly decreasing and >= 0.
class Modulation {
public:
    Modulation(std::shared_ptr<const GapTable> gaps, const std::string& eps_literal,
               long table_depth = 64);

    struct ControlPoint {
        long n;
        BallReal t, v;
        bool retained;
    };

    const std::vector<ControlPoint>& control_points() const { return points_; }
    const GapTable& gaps() const { return *gaps_; }
    const std::shared_ptr<const GapTable>& gaps_ptr() const { return gaps_; }
    long table_depth() const { return depth_; }
    const BallReal& eps() const { return eps_; }
    double eps_double() const { return eps_.mid_double(); }

    // phi(x): 0 on K; 2^{n+2} d(x, boundary of I_n) on I_n. Throws
    // EvaluationUndecidable on boundary verdicts.
    BallReal phi(const CirclePoint& x) const;
    BallReal phi(const GapClassification& cls) const;

    // psi = phi / ell(n) on gaps, 0 on K
    BallReal psi(const CirclePoint& x) const;
    BallReal psi(const GapClassification& cls) const;

    // M on (t_depth, 1]; hits retained nodes exactly; DepthExceeded below
    // the table
    BallReal M_of(const BallReal& t) const;
    double M_of_double(double t) const;

    double smallest_t_double() const { return last_t_double_; }

private:
    std::shared_ptr<const GapTable> gaps_;
    BallReal eps_;
    long depth_;
    std::vector<ControlPoint> points_;
    std::vector<long> retained_;            // indices into points_
    std::vector<double> node_t_, node_v_;   // doubles of retained nodes
    double last_t_double_ = 0.0;

    void build();
};

}  // namespace sturmlab
