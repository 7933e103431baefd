#pragma once

#include <array>

namespace invmark {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// 3x3 planar projective transform, row-major. Scaled so that h(2,2) == 1
/// whenever that entry is nonzero. Construction rejects singular or
/// non-finite matrices with DegenerateInput.
class Homography {
  public:
    using Matrix = std::array<double, 9>;

    Homography() noexcept; // identity
    explicit Homography(const Matrix& m);

    static Homography identity() noexcept { return {}; }
    static Homography translation(double dx, double dy);
    /// Rotation by `radians` about (cx, cy) followed by a shift of (dx, dy).
    static Homography rigid(double radians, double cx, double cy, double dx, double dy);

    double operator()(int r, int c) const noexcept { return m_[r * 3 + c]; }
    const Matrix& matrix() const noexcept { return m_; }

    double determinant() const noexcept;
    Homography inverse() const;

    /// Projects p. Points mapped to the line at infinity yield non-finite output.
    Point2 apply(Point2 p) const noexcept;

    /// this ∘ other: apply `other` first, then this.
    Homography operator*(const Homography& other) const;

    friend bool operator==(const Homography&, const Homography&) = default;

  private:
    Matrix m_;
};

/// Largest displacement between a.apply(c) and b.apply(c) over the four
/// pixel-grid corners of a width x height image.
double max_corner_displacement(const Homography& a, const Homography& b, int width, int height);

} // namespace invmark
