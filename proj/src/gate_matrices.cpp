#include "qedc/gate_matrices.hpp"

#include <cmath>

namespace qedc {

namespace {
const double s = 1.0 / std::sqrt(2.0);
}

Mat2 mat_i2() { return {c1, c0, c0, c1}; }
Mat2 mat_x() { return {c0, c1, c1, c0}; }
Mat2 mat_y() { return {c0, -ci, ci, c0}; }
Mat2 mat_z() { return {c1, c0, c0, -c1}; }
Mat2 mat_h() { return {s * c1, s * c1, s * c1, -s * c1}; }

Mat2 mat_rx() {
    // (I - iX)/sqrt2
    return {s * c1, -s * ci, -s * ci, s * c1};
}

Mat2 mat_rz(double theta) {
    // cos(t/2) I - i sin(t/2) Z = diag(e^{-it/2}, e^{+it/2})
    return {std::exp(-ci * (theta / 2.0)), c0, c0, std::exp(ci * (theta / 2.0))};
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
    Mat4 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    m[(2 * i + k) * 4 + (2 * j + l)] = a[i * 2 + j] * b[k * 2 + l];
    return m;
}

Mat4 mat_swap() {
    Mat4 m{};
    m[0 * 4 + 0] = c1;
    m[1 * 4 + 2] = c1;
    m[2 * 4 + 1] = c1;
    m[3 * 4 + 3] = c1;
    return m;
}

Mat4 mat_cnot() {
    Mat4 m{};
    m[0 * 4 + 0] = c1;
    m[1 * 4 + 1] = c1;
    m[2 * 4 + 3] = c1;
    m[3 * 4 + 2] = c1;
    return m;
}

namespace {
Mat4 axis_rotation(const Mat2& p, const Mat2& q, cd coeff) {
    // (I + coeff * p(x)q) / sqrt2
    Mat4 pq = kron2(p, q);
    Mat4 m{};
    for (int i = 0; i < 16; ++i) m[i] = s * (coeff * pq[i]);
    for (int i = 0; i < 4; ++i) m[i * 4 + i] += s * c1;
    return m;
}
}  // namespace

Mat4 mat_zz() { return axis_rotation(mat_z(), mat_z(), -ci); }
Mat4 mat_xx() { return axis_rotation(mat_x(), mat_x(), ci); }
Mat4 mat_yy() { return axis_rotation(mat_y(), mat_y(), -ci); }

Mat4 mul4(const Mat4& a, const Mat4& b) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j)
                m[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
    return m;
}

Mat2 mul2(const Mat2& a, const Mat2& b) {
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                m[i * 2 + j] += a[i * 2 + k] * b[k * 2 + j];
    return m;
}

Mat4 dag4(const Mat4& a) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i * 4 + j] = std::conj(a[j * 4 + i]);
    return m;
}

Mat2 dag2(const Mat2& a) {
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i * 2 + j] = std::conj(a[j * 2 + i]);
    return m;
}

}  // namespace qedc
