#include "sturmlab/families.hpp"

#include <cmath>

namespace sturmlab {

HermanParams HermanParams::from_gamma(double g) {
    if (!(g > 1.0)) throw ConfigError("herman family needs gamma > 1");
    HermanParams hp;
    hp.gamma = g;
    hp.c = std::log((g + 1.0 / g) / 2.0);
    return hp;
}

HermanParams HermanParams::from_c(double c) {
    if (!(c > 0.0)) throw ConfigError("herman family needs c > 0");
    HermanParams hp;
    hp.c = c;
    double ec = std::exp(c);
    hp.gamma = ec + std::sqrt(ec * ec - 1.0);
    return hp;
}

Mat2d herman_matrix(const HermanParams& hp, double x) {
    double co = std::cos(2 * M_PI * x), si = std::sin(2 * M_PI * x);
    double g = hp.gamma, gi = 1.0 / hp.gamma;
    return {g * co, -g * si, gi * si, gi * co};
}

Mat2b herman_matrix_ball(const HermanParams& hp, const BallReal& x, long prec) {
    BallReal g = BallReal::from_double(hp.gamma, prec);  // the double is the parameter
    BallReal gi = div(BallReal::from_long(1, prec), g);
    BallReal co = cos2pi(x.round_to(prec)), si = sin2pi(x.round_to(prec));
    Mat2b m;
    m.a = mul(g, co);
    m.b = neg(mul(g, si));
    m.c = mul(gi, si);
    m.d = mul(gi, co);
    return m;
}

CocycleSpec herman_cocycle(const HermanParams& hp, std::shared_ptr<const AlphaSpec> alpha) {
    CocycleSpec spec;
    spec.base = BaseMap::Rotation;
    spec.alpha = std::move(alpha);
    spec.gen = [hp](const CirclePoint& x) { return herman_matrix(hp, x.rep().mid_double()); };
    spec.gen_fast = [hp](double x) { return herman_matrix(hp, x); };
    spec.gen_ball = [hp](const CirclePoint& x, long prec) {
        return herman_matrix_ball(hp, x.refined(prec).rep(), prec);
    };
    return spec;
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "pure") return FamilyKind::PureRotation;
    if (s == "stress") return FamilyKind::MaxStress;
    throw ConfigError("unknown family kind: " + s + " (expected pure|stress)");
}

std::string to_string(FamilyKind k) {
    return k == FamilyKind::PureRotation ? "pure" : "stress";
}

BFamily::BFamily(FamilyKind kind, HermanParams herman, std::shared_ptr<const Modulation> mod)
    : kind_(kind), herman_(herman), mod_(std::move(mod)) {}

Mat2d BFamily::eval(double t, double y) const {
    if (!(t > 0)) throw ConfigError("BFamily::eval requires t > 0");
    if (kind_ == FamilyKind::PureRotation) return Mat2d::rotation(y);
    // C_t U(y) C_t^{-1} in closed form; det = cos^2 + sin^2 = 1
    double m = mod_->M_of_double(t);
    double co = std::cos(2 * M_PI * y), si = std::sin(2 * M_PI * y);
    double em = std::exp(m);
    return {co, -si * em, si / em, co};
}

Mat2d BFamily::at_zero(double y) const { return herman_matrix(herman_, y); }

Mat2b BFamily::eval_ball(const BallReal& t, const BallReal& y, long prec) const {
    if (kind_ == FamilyKind::PureRotation) return Mat2b::rotation(y.round_to(prec));
    BallReal m = mod_->M_of(t);
    BallReal em = exp(m.round_to(prec));
    BallReal co = cos2pi(y.round_to(prec)), si = sin2pi(y.round_to(prec));
    Mat2b r;
    r.a = co;
    r.b = neg(mul(si, em));
    r.c = div(si, em);
    r.d = co;
    return r;
}

Mat2b BFamily::at_zero_ball(const BallReal& y, long prec) const {
    return herman_matrix_ball(herman_, y, prec);
}

AssembledCocycle::AssembledCocycle(BFamily family, std::shared_ptr<const GapTable> gaps)
    : family_(std::move(family)), gaps_(std::move(gaps)) {}

CirclePoint AssembledCocycle::gap_image(long n) const {
    std::lock_guard<std::mutex> lk(images_->mu);
    const long prec = gaps_->stairs().policy().start_bits;
    while (static_cast<long>(images_->images.size()) <= n) {
        DyadicAffine a;
        a.base = BallReal::from_long(0, 64);
        a.steps = -static_cast<long long>(images_->images.size());
        images_->images.push_back(
            CirclePoint::from_affine(a, gaps_->stairs().alpha(), prec));
    }
    return images_->images[n];
}

bool AssembledCocycle::pedigree_in_K(const CirclePoint& x) const {
    // the range of pi(F(.)) never meets an open gap (the gaps are exactly the
    // value intervals the staircase skips), so staircase provenance certifies
    // membership in K, where psi vanishes
    return x.stair().has_value();
}

CirclePoint AssembledCocycle::factor_point(const CirclePoint& x) const {
    if (x.stair())
        return CirclePoint::from_affine(x.stair()->arg, gaps_->stairs().alpha(), x.prec());
    GapClassification cls = gaps_->classify(x);
    if (cls.boundary())
        throw EvaluationUndecidable("factor map on an undecidable boundary point");
    if (cls.in_gap()) return gap_image(cls.gap_index);
    return gaps_->stairs().factor(x, /*use_pedigree=*/true);
}

Mat2d AssembledCocycle::eval(const CirclePoint& x) const {
    if (pedigree_in_K(x)) {
        CirclePoint h = factor_point(x);
        return family_.at_zero(h.rep().mid_double());
    }
    GapClassification cls = gaps_->classify(x);
    if (cls.boundary())
        throw EvaluationUndecidable("assembled generator on gap boundary (gap " +
                                    std::to_string(cls.gap_index) + ")");
    if (cls.in_K()) {
        CirclePoint h = gaps_->stairs().factor(x, /*use_pedigree=*/true);
        return family_.at_zero(h.rep().mid_double());
    }
    double t = modulation().psi(cls).mid_double();
    CirclePoint h = gap_image(cls.gap_index);
    return family_.eval(t, h.rep().mid_double());
}

Mat2b AssembledCocycle::eval_ball(const CirclePoint& x, long prec) const {
    if (pedigree_in_K(x)) {
        CirclePoint h = factor_point(x).refined(prec);
        return family_.at_zero_ball(h.rep(), prec);
    }
    GapClassification cls = gaps_->classify(x);
    if (cls.boundary())
        throw EvaluationUndecidable("assembled generator on gap boundary");
    if (cls.in_K()) {
        CirclePoint h = gaps_->stairs().factor(x, /*use_pedigree=*/true).refined(prec);
        return family_.at_zero_ball(h.rep(), prec);
    }
    BallReal t = modulation().psi(cls);
    CirclePoint h = gap_image(cls.gap_index).refined(prec);
    return family_.eval_ball(t, h.rep(), prec);
}

CocycleSpec AssembledCocycle::spec() const {
    CocycleSpec s;
    s.base = BaseMap::Doubling;
    s.alpha = gaps_->stairs().alpha();
    auto self = std::make_shared<AssembledCocycle>(*this);
    s.gen = [self](const CirclePoint& x) { return self->eval(x); };
    s.gen_ball = [self](const CirclePoint& x, long prec) { return self->eval_ball(x, prec); };
    return s;
}

}  // namespace sturmlab
