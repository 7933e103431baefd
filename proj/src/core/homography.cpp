#include <invmark/error.hpp>
#include <invmark/homography.hpp>

#include <algorithm>
#include <cmath>

namespace invmark {

namespace {

constexpr double kMinDeterminant = 1e-12;

double det3(const Homography::Matrix& m) noexcept {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

} // namespace

Homography::Homography() noexcept : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

Homography::Homography(const Matrix& m) : m_(m) {
    for (double v : m_)
        if (!std::isfinite(v)) throw DegenerateInput("homography has non-finite entries");
    if (m_[8] != 0.0) {
        const double s = m_[8];
        for (double& v : m_) v /= s;
        m_[8] = 1.0;
    }
    if (!(std::abs(det3(m_)) > kMinDeterminant))
        throw DegenerateInput("homography is not invertible");
}

Homography Homography::translation(double dx, double dy) {
    return Homography(Matrix{1, 0, dx, 0, 1, dy, 0, 0, 1});
}

Homography Homography::rigid(double radians, double cx, double cy, double dx, double dy) {
    const double c = std::cos(radians);
    const double s = std::sin(radians);
    // p' = R (p - centre) + centre + d
    return Homography(Matrix{c, -s, cx - c * cx + s * cy + dx, s, c, cy - s * cx - c * cy + dy, 0, 0, 1});
}

double Homography::determinant() const noexcept { return det3(m_); }

Homography Homography::inverse() const {
    const Matrix& m = m_;
    const double d = det3(m);
    if (!(std::abs(d) > kMinDeterminant)) throw DegenerateInput("homography is not invertible");
    Matrix inv{
        (m[4] * m[8] - m[5] * m[7]) / d, (m[2] * m[7] - m[1] * m[8]) / d, (m[1] * m[5] - m[2] * m[4]) / d,
        (m[5] * m[6] - m[3] * m[8]) / d, (m[0] * m[8] - m[2] * m[6]) / d, (m[2] * m[3] - m[0] * m[5]) / d,
        (m[3] * m[7] - m[4] * m[6]) / d, (m[1] * m[6] - m[0] * m[7]) / d, (m[0] * m[4] - m[1] * m[3]) / d,
    };
    return Homography(inv);
}

Point2 Homography::apply(Point2 p) const noexcept {
    const double w = m_[6] * p.x + m_[7] * p.y + m_[8];
    return {(m_[0] * p.x + m_[1] * p.y + m_[2]) / w, (m_[3] * p.x + m_[4] * p.y + m_[5]) / w};
}

Homography Homography::operator*(const Homography& other) const {
    Matrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i * 3 + j] += m_[i * 3 + k] * other.m_[k * 3 + j];
    return Homography(r);
}

double max_corner_displacement(const Homography& a, const Homography& b, int width, int height) {
    const double xs[] = {0.0, static_cast<double>(width - 1)};
    const double ys[] = {0.0, static_cast<double>(height - 1)};
    double worst = 0.0;
    for (double x : xs)
        for (double y : ys) {
            const Point2 pa = a.apply({x, y});
            const Point2 pb = b.apply({x, y});
            worst = std::max(worst, std::hypot(pa.x - pb.x, pa.y - pb.y));
        }
    return worst;
}

} // namespace invmark
