#include "fixkit/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "fixkit/error.hpp"

namespace fixkit {

const char* to_string(ClassId id) {
    switch (id) {
        case ClassId::NE: return "NE";
        case ClassId::QNE: return "QNE";
        case ClassId::SPC: return "SPC";
        case ClassId::DC: return "DC";
        case ClassId::CondA: return "COND_A";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::HoldsOnSamples: return "holds-on-samples";
        case Verdict::Violated: return "violated";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

const char* to_cell(Verdict v) {
    switch (v) {
        case Verdict::HoldsOnSamples: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

constexpr double kDegenerate = 1e-9;

double sq_dist(const double* a, const double* b, std::size_t dim) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

/// |(x - tx) - (y - ty)|^2
double sq_residual_gap(const double* x, const double* tx, const double* y, const double* ty, std::size_t dim) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double d = (x[i] - tx[i]) - (y[i] - ty[i]);
        s += d * d;
    }
    return s;
}

double max_abs(std::initializer_list<const double*> ps, std::size_t dim) {
    double m = 0.0;
    for (const double* p : ps) {
        for (std::size_t i = 0; i < dim; ++i) m = std::max(m, std::abs(p[i]));
    }
    return m;
}

/// Difference of two squared distances, with anything inside the rounding
/// envelope of the inputs reported as zero. A coordinate of magnitude m is only
/// known to within eps*m, which perturbs a squared distance q by about
/// 2*sqrt(q)*eps*m.
double excess(double lhs, double rhs, double mag) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double floor = 8.0 * eps * (lhs + rhs + mag * (std::sqrt(lhs) + std::sqrt(rhs)));
    const double d = lhs - rhs;
    return std::abs(d) <= floor ? 0.0 : d;
}

/// <x - tx, x - y>
double dot_step(const double* x, const double* tx, const double* y, std::size_t dim) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        s += (x[i] - tx[i]) * (x[i] - y[i]);
    }
    return s;
}

struct Side {
    double lhs;
    double rhs;
};

struct Best {
    double score = -std::numeric_limits<double>::infinity();
    bool found = false;
    Witness witness{Vector{0.0}, Vector{0.0}, 0.0, 0.0};
};

/// Pair-based scan. `eval` returns the (lhs, rhs) sides and `score` turns them
/// into the quantity being maximized, or NaN to skip the pair. Ties keep the
/// earliest pair in enumeration order.
struct PairScan {
    SampleTable anchors;
    SampleTable randoms;  // consecutive entries form one random pair

    PairScan(const Mapping& t, const SampleSpec& spec)
        : anchors(t, anchor_points(t, spec)),
          randoms(t, random_sample(t.domain(), 2 * spec.extra_random, spec.seed)) {}

    std::size_t pair_count() const { return anchors.size() * anchors.size() + randoms.size() / 2; }

    template <class Eval, class Score>
    Best run(Eval eval, Score score) const {
        Best best;
        const std::size_t dim = anchors.dim();
        auto visit = [&](const SampleTable& tab, std::size_t i, std::size_t j) {
            const Side s = eval(tab.x(i), tab.tx(i), tab.x(j), tab.tx(j), dim);
            const double v = score(s, tab.x(i), tab.tx(i), tab.x(j), tab.tx(j), dim);
            if (!std::isnan(v) && v > best.score) {
                best.score = v;
                best.found = true;
                best.witness = Witness{tab.point(i), tab.point(j), s.lhs, s.rhs};
            }
        };
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            for (std::size_t j = 0; j < anchors.size(); ++j) {
                visit(anchors, i, j);
            }
        }
        for (std::size_t p = 0; p + 1 < randoms.size(); p += 2) {
            visit(randoms, p, p + 1);
        }
        return best;
    }
};

/// Point-against-fixed-point scan over evaluation_points x declared Fix(T).
struct PointScan {
    SampleTable points;
    std::vector<Vector> fixed;

    PointScan(const Mapping& t, const SampleSpec& spec)
        : points(t, evaluation_points(t, spec)), fixed(t.fixed_points().points()) {}

    std::size_t count() const { return points.size() * fixed.size(); }

    template <class Eval, class Score>
    Best run(Eval eval, Score score) const {
        Best best;
        const std::size_t dim = points.dim();
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (const Vector& y : fixed) {
                const double* yp = y.coords().data();
                const Side s = eval(points.x(i), points.tx(i), yp, dim);
                const double v = score(s, points.x(i), points.tx(i), yp, dim);
                if (!std::isnan(v) && v > best.score) {
                    best.score = v;
                    best.found = true;
                    best.witness = Witness{points.point(i), y, s.lhs, s.rhs};
                }
            }
        }
        return best;
    }
};

ClassCertificate finish(ClassId id, const Best& best, std::size_t samples, const SampleSpec& spec, double tol) {
    ClassCertificate c;
    c.class_id = id;
    c.samples = samples;
    c.tol = tol;
    c.seed = spec.seed;
    c.max_violation = best.found ? best.score : 0.0;
    c.verdict = (best.found && best.score > tol) ? Verdict::Violated : Verdict::HoldsOnSamples;
    if (c.verdict == Verdict::Violated) {
        c.witness = best.witness;
    }
    return c;
}

ClassCertificate inapplicable(ClassId id, const SampleSpec& spec, double tol) {
    ClassCertificate c;
    c.class_id = id;
    c.verdict = Verdict::Inapplicable;
    c.tol = tol;
    c.seed = spec.seed;
    return c;
}

void require_k(double k) {
    if (!(k >= 0.0 && k < 1.0)) {
        throw Error("k-out-of-range", std::to_string(k));
    }
}

const auto gap_score = [](const Side& s, auto&&...) { return s.lhs - s.rhs; };

}  // namespace

ClassCertificate check_ne(const Mapping& t, const SampleSpec& spec, double tol) {
    const PairScan scan(t, spec);
    const Best best = scan.run(
        [](const double* x, const double* tx, const double* y, const double* ty, std::size_t dim) {
            return Side{std::sqrt(sq_dist(tx, ty, dim)), std::sqrt(sq_dist(x, y, dim))};
        },
        gap_score);
    return finish(ClassId::NE, best, scan.pair_count(), spec, tol);
}

ClassCertificate check_qne(const Mapping& t, const SampleSpec& spec, double tol) {
    if (!t.fixed_points().is_known()) {
        return inapplicable(ClassId::QNE, spec, tol);
    }
    const PointScan scan(t, spec);
    const Best best = scan.run(
        [](const double* x, const double* tx, const double* y, std::size_t dim) {
            return Side{std::sqrt(sq_dist(tx, y, dim)), std::sqrt(sq_dist(x, y, dim))};
        },
        gap_score);
    return finish(ClassId::QNE, best, scan.count(), spec, tol);
}

ClassCertificate check_spc(const Mapping& t, double k, const SampleSpec& spec, double tol) {
    require_k(k);
    const PairScan scan(t, spec);
    const Best best = scan.run(
        [k](const double* x, const double* tx, const double* y, const double* ty, std::size_t dim) {
            return Side{sq_dist(tx, ty, dim), sq_dist(x, y, dim) + k * sq_residual_gap(x, tx, y, ty, dim)};
        },
        gap_score);
    ClassCertificate c = finish(ClassId::SPC, best, scan.pair_count(), spec, tol);
    c.constant = k;
    return c;
}

ClassCertificate check_dc(const Mapping& t, double k, const SampleSpec& spec, double tol) {
    require_k(k);
    if (!t.fixed_points().is_known()) {
        return inapplicable(ClassId::DC, spec, tol);
    }
    const PointScan scan(t, spec);
    const Best best = scan.run(
        [k](const double* x, const double* tx, const double* y, std::size_t dim) {
            return Side{sq_dist(tx, y, dim), sq_dist(x, y, dim) + k * sq_dist(x, tx, dim)};
        },
        gap_score);
    ClassCertificate c = finish(ClassId::DC, best, scan.count(), spec, tol);
    c.constant = k;
    return c;
}

ClassCertificate check_condition_a(const Mapping& t, double lambda_a, const SampleSpec& spec, double tol) {
    if (!(lambda_a > 0.0) || !std::isfinite(lambda_a)) {
        throw Error("lambda-out-of-range", std::to_string(lambda_a));
    }
    if (!t.fixed_points().is_known()) {
        return inapplicable(ClassId::CondA, spec, tol);
    }
    const PointScan scan(t, spec);
    const Best best = scan.run(
        [lambda_a](const double* x, const double* tx, const double* y, std::size_t dim) {
            return Side{lambda_a * sq_dist(x, tx, dim), dot_step(x, tx, y, dim)};
        },
        gap_score);
    ClassCertificate c = finish(ClassId::CondA, best, scan.count(), spec, tol);
    c.constant = lambda_a;
    return c;
}

ConstantEstimate estimate_k_spc(const Mapping& t, const SampleSpec& spec) {
    const PairScan scan(t, spec);
    const double min_den = kDegenerate * kDegenerate;
    const Best best = scan.run(
        [](const double* x, const double* tx, const double* y, const double* ty, std::size_t dim) {
            return Side{sq_dist(tx, ty, dim), sq_dist(x, y, dim)};
        },
        [min_den](const Side& s, const double* x, const double* tx, const double* y, const double* ty,
                  std::size_t dim) {
            const double den = sq_residual_gap(x, tx, y, ty, dim);
            if (!(den > min_den)) return std::numeric_limits<double>::quiet_NaN();
            return excess(s.lhs, s.rhs, max_abs({x, tx, y, ty}, dim)) / den;
        });
    ConstantEstimate e;
    e.samples = scan.pair_count();
    e.value = best.found ? std::max(0.0, best.score) : 0.0;
    if (best.found && best.score > 0.0) {
        e.binding = best.witness;
    }
    return e;
}

ConstantEstimate estimate_k_dc(const Mapping& t, const SampleSpec& spec) {
    if (!t.fixed_points().is_known()) {
        throw Error("fix-unknown", t.label());
    }
    const PointScan scan(t, spec);
    const double min_den = kDegenerate * kDegenerate;
    const Best best = scan.run(
        [](const double* x, const double* tx, const double* y, std::size_t dim) {
            return Side{sq_dist(tx, y, dim), sq_dist(x, y, dim)};
        },
        [min_den](const Side& s, const double* x, const double* tx, const double* y, std::size_t dim) {
            const double den = sq_dist(x, tx, dim);
            if (!(den > min_den)) return std::numeric_limits<double>::quiet_NaN();
            return excess(s.lhs, s.rhs, max_abs({x, tx, y}, dim)) / den;
        });
    ConstantEstimate e;
    e.samples = scan.count();
    e.value = best.found ? std::max(0.0, best.score) : 0.0;
    if (best.found && best.score > 0.0) {
        e.binding = best.witness;
    }
    return e;
}

double convert_constants(Conversion direction, double value) {
    switch (direction) {
        case Conversion::KToLambda:
            if (!(value >= 0.0 && value < 1.0)) {
                throw Error("constant-out-of-range", std::to_string(value));
            }
            return (1.0 - value) / 2.0;
        case Conversion::LambdaToK:
            if (!(value > 0.0 && value <= 0.5)) {
                throw Error("constant-out-of-range", std::to_string(value));
            }
            return 1.0 - 2.0 * value;
    }
    throw Error("constant-out-of-range");
}

MooreCheck check_moore_identity(const Mapping& t, const Vector& x, const Vector& xstar, double k, double tol) {
    const Vector tx = t.apply(x);
    const Vector step = x - tx;
    const Vector offset = x - xstar;
    const Vector image_offset = tx - xstar;
    const double step_sq = inner(step, step);

    MooreCheck m;
    m.lhs = inner(offset, offset) + k * step_sq - inner(image_offset, image_offset);
    m.rhs = 2.0 * inner(offset, step) - (1.0 - k) * step_sq;
    m.residual = std::abs(m.lhs - m.rhs);
    m.pass = m.residual <= tol;
    return m;
}

EquivalenceReport compare_dc_with_condition_a(const Mapping& t, const std::vector<double>& ks,
                                              const SampleSpec& spec, double tol) {
    if (!t.fixed_points().is_known()) {
        throw Error("fix-unknown", t.label());
    }
    for (double k : ks) {
        require_k(k);
    }
    const SampleTable points(t, evaluation_points(t, spec));
    const std::size_t dim = points.dim();
    EquivalenceReport rep;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double* x = points.x(i);
        const double* tx = points.tx(i);
        for (const Vector& y : t.fixed_points().points()) {
            const double* yp = y.coords().data();
            const double step_sq = sq_dist(x, tx, dim);
            const double image_sq = sq_dist(tx, yp, dim);
            const double offset_sq = sq_dist(x, yp, dim);
            const double pairing = dot_step(x, tx, yp, dim);
            for (double k : ks) {
                ++rep.comparisons;
                const bool dc = image_sq <= offset_sq + k * step_sq + tol;
                const double lambda = (1.0 - k) / 2.0;
                const bool cond_a = lambda * step_sq <= pairing + tol;
                if (dc != cond_a) {
                    if (rep.disagreements == 0) {
                        rep.first_disagreement = Witness{points.point(i), y, image_sq, offset_sq + k * step_sq};
                        rep.first_disagreement_k = k;
                    }
                    ++rep.disagreements;
                }
            }
        }
    }
    return rep;
}

}  // namespace fixkit
