#include <invmark/error.hpp>
#include <invmark/registration.hpp>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

namespace invmark::registration {

namespace {

// Similarity taking the centroid to the origin with mean distance sqrt(2).
Eigen::Matrix3d normalizer(std::span<const PointPair> pairs, bool source) {
    double cx = 0.0, cy = 0.0;
    for (const auto& p : pairs) {
        const Point2& q = source ? p.src : p.dst;
        cx += q.x;
        cy += q.y;
    }
    cx /= static_cast<double>(pairs.size());
    cy /= static_cast<double>(pairs.size());
    double mean = 0.0;
    for (const auto& p : pairs) {
        const Point2& q = source ? p.src : p.dst;
        mean += std::hypot(q.x - cx, q.y - cy);
    }
    mean /= static_cast<double>(pairs.size());
    if (!(mean > 1e-12) || !std::isfinite(mean)) throw DegenerateInput("DLT: points are coincident or non-finite");
    const double s = std::sqrt(2.0) / mean;
    Eigen::Matrix3d t;
    t << s, 0, -s * cx, 0, s, -s * cy, 0, 0, 1;
    return t;
}

bool collinear(const Point2& a, const Point2& b, const Point2& c, double scale) {
    const double area2 = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return std::abs(area2) <= 1e-9 * scale * scale;
}

void check_minimal_set(std::span<const PointPair> pairs) {
    for (int side = 0; side < 2; ++side) {
        auto pt = [&](std::size_t i) { return side == 0 ? pairs[i].src : pairs[i].dst; };
        double scale = 0.0;
        for (std::size_t i = 0; i < 4; ++i) scale = std::max({scale, std::abs(pt(i).x), std::abs(pt(i).y), 1.0});
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                for (std::size_t k = j + 1; k < 4; ++k)
                    if (collinear(pt(i), pt(j), pt(k), scale))
                        throw DegenerateInput("DLT: three of four points are collinear");
    }
}

} // namespace

Homography solve_homography_dlt(std::span<const PointPair> pairs) {
    if (pairs.size() < 4)
        throw InsufficientData("DLT needs at least 4 correspondences, got " + std::to_string(pairs.size()));
    if (pairs.size() == 4) check_minimal_set(pairs);

    const Eigen::Matrix3d ts = normalizer(pairs, true);
    const Eigen::Matrix3d td = normalizer(pairs, false);

    const auto n = static_cast<Eigen::Index>(pairs.size());
    Eigen::MatrixXd a(2 * n, 9);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = pairs[static_cast<std::size_t>(i)];
        const Eigen::Vector3d s = ts * Eigen::Vector3d(p.src.x, p.src.y, 1.0);
        const Eigen::Vector3d d = td * Eigen::Vector3d(p.dst.x, p.dst.y, 1.0);
        const double x = s.x(), y = s.y(), u = d.x(), v = d.y();
        a.row(2 * i) << 0, 0, 0, -x, -y, -1, v * x, v * y, v;
        a.row(2 * i + 1) << x, y, 1, 0, 0, 0, -u * x, -u * y, -u;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    // A homography leaves a one-dimensional null space: the 8th singular
    // value must stay clear of zero.
    if (!(sv(7) > 1e-10 * sv(0))) throw DegenerateInput("DLT: correspondence system is rank deficient");

    const Eigen::VectorXd hv = svd.matrixV().col(8);
    Eigen::Matrix3d hn;
    hn << hv(0), hv(1), hv(2), hv(3), hv(4), hv(5), hv(6), hv(7), hv(8);
    const Eigen::Matrix3d h = td.inverse() * hn * ts;

    Homography::Matrix m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(r * 3 + c)] = h(r, c);
    return Homography(m);
}

} // namespace invmark::registration
