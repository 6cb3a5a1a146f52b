#pragma once

#include <array>
#include <complex>

namespace qedc {

/*
 * Canonical dense matrices for the native gate set, row-major.  Two-qubit
 * matrices index basis states |b1 b2> with qubit 1 as the most significant
 * bit.  These definitions are the single source of truth for both the dense
 * simulator and the sign lookup tables of the symplectic layer:
 *
 *   U_ZZ = (1/sqrt2) (I - i Z(x)Z)        U_XX = (1/sqrt2) (I + i X(x)X)
 *   U_YY = (1/sqrt2) (I - i Y(x)Y)        R_X  = (1/sqrt2) (I - i X)
 *   R_Z(t) = cos(t/2) I - i sin(t/2) Z
 *
 * plus the standard SWAP, CNOT (control = qubit 1), H and Pauli matrices.
 */
using cd = std::complex<double>;
using Mat2 = std::array<cd, 4>;
using Mat4 = std::array<cd, 16>;

inline constexpr cd c1{1.0, 0.0};
inline constexpr cd c0{0.0, 0.0};
inline constexpr cd ci{0.0, 1.0};

Mat2 mat_i2();
Mat2 mat_x();
Mat2 mat_y();
Mat2 mat_z();
Mat2 mat_h();
Mat2 mat_rx();            // (I - iX)/sqrt2
Mat2 mat_rz(double theta);

Mat4 mat_swap();
Mat4 mat_cnot();          // control qubit 1, target qubit 2
Mat4 mat_zz();            // (I - i ZZ)/sqrt2
Mat4 mat_xx();            // (I + i XX)/sqrt2
Mat4 mat_yy();            // (I - i YY)/sqrt2

/* Tensor product a (x) b of two single-qubit matrices (qubit 1 = a). */
Mat4 kron2(const Mat2& a, const Mat2& b);

Mat4 mul4(const Mat4& a, const Mat4& b);
Mat2 mul2(const Mat2& a, const Mat2& b);
Mat4 dag4(const Mat4& a);
Mat2 dag2(const Mat2& a);

}  // namespace qedc
