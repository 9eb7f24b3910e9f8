#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace zb {

using cplx = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Dense 4x4 complex matrix, row-major storage.
class Matrix4c {
  public:
    Matrix4c() = default;

    cplx& operator()(int r, int c) { return e_[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e_[4 * r + c]; }

    static Matrix4c identity() {
        Matrix4c m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix4c zero() { return {}; }

    Matrix4c adjoint() const {
        Matrix4c m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    friend Matrix4c operator+(const Matrix4c& a, const Matrix4c& b) {
        Matrix4c m;
        for (int i = 0; i < 16; ++i) m.e_[i] = a.e_[i] + b.e_[i];
        return m;
    }

    friend Matrix4c operator-(const Matrix4c& a, const Matrix4c& b) {
        Matrix4c m;
        for (int i = 0; i < 16; ++i) m.e_[i] = a.e_[i] - b.e_[i];
        return m;
    }

    friend Matrix4c operator*(const Matrix4c& a, const Matrix4c& b) {
        Matrix4c m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                cplx s = 0.0;
                for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
                m(r, c) = s;
            }
        return m;
    }

    friend Matrix4c operator*(const cplx& s, const Matrix4c& a) {
        Matrix4c m;
        for (int i = 0; i < 16; ++i) m.e_[i] = s * a.e_[i];
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e_) m = std::max(m, std::abs(v));
        return m;
    }

  private:
    std::array<cplx, 16> e_{};
};

/// Four complex amplitudes; carrier of spinors and branch amplitudes.
struct FourSpinor {
    std::array<cplx, 4> c{};

    cplx& operator[](int i) { return c[i]; }
    const cplx& operator[](int i) const { return c[i]; }

    double norm2() const {
        double s = 0.0;
        for (const auto& v : c) s += std::norm(v);
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

    bool is_zero() const { return norm2() == 0.0; }

    friend FourSpinor operator+(const FourSpinor& a, const FourSpinor& b) {
        FourSpinor r;
        for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
        return r;
    }

    friend FourSpinor operator-(const FourSpinor& a, const FourSpinor& b) {
        FourSpinor r;
        for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
        return r;
    }

    friend FourSpinor operator*(const cplx& s, const FourSpinor& a) {
        FourSpinor r;
        for (int i = 0; i < 4; ++i) r[i] = s * a[i];
        return r;
    }
};

/// phi^dagger . psi
inline cplx inner(const FourSpinor& phi, const FourSpinor& psi) {
    cplx s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(phi[i]) * psi[i];
    return s;
}

inline FourSpinor apply(const Matrix4c& m, const FourSpinor& psi) {
    FourSpinor r;
    for (int i = 0; i < 4; ++i) {
        cplx s = 0.0;
        for (int k = 0; k < 4; ++k) s += m(i, k) * psi[k];
        r[i] = s;
    }
    return r;
}

/// phi^dagger M psi; real when phi == psi and M Hermitian.
inline cplx quadratic_form(const FourSpinor& phi, const Matrix4c& m, const FourSpinor& psi) {
    return inner(phi, apply(m, psi));
}

}  // namespace zb
