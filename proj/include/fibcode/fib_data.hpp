#pragma once

// Numeric data of the doubled-Fibonacci string-net theory: the vertex fusion
// tensor delta, the six-index recoupling tensor F, the tadpole tensor S, the
// 2x2 blocks F/S/U (and X U X), the rotation angles realizing them, and the
// closed-form Fibonacci numbers used for code-space dimension counts.
//
// Everything in this theory is real; complex arithmetic enters only in the
// state-vector module.

#include <array>
#include <cstdint>
#include <string>

namespace fibcode {

// 2x2 real matrix, row-major.
struct Mat2 {
    std::array<std::array<double, 2>, 2> m{};

    double operator()(int r, int c) const { return m[r][c]; }
    double& operator()(int r, int c) { return m[r][c]; }

    Mat2 mul(const Mat2& o) const;
    Mat2 transpose() const;
    double det() const;
    double max_abs_diff(const Mat2& o) const;

    static Mat2 identity();
    static Mat2 pauli_x();
    // exp(i*alpha*sigma_y/2) = [[cos(a/2), sin(a/2)], [-sin(a/2), cos(a/2)]]
    static Mat2 rotation_y(double alpha);
};

// Names of the 2x2 blocks a controlled gate in the IR may reference.
enum class MatName { F, S, U, XUX };

std::string to_string(MatName name);
bool parse_mat_name(const std::string& word, MatName& out);

// Golden ratio (sqrt(5)+1)/2, the quantum dimension of the Fibonacci anyon.
double golden_ratio();

class FibonacciTensorSet {
public:
    // The standard (all-real) tensor data of the theory.
    static FibonacciTensorSet standard();

    // Copy with f_matrix(r,c) shifted by `amount`; used as a negative control
    // by the verification suites (the result is deliberately non-unitary).
    FibonacciTensorSet with_f_entry_perturbed(int r, int c, double amount) const;

    double phi() const { return phi_; }
    double theta() const { return theta_; }  // atan(phi^-1/2); Ry(theta) X Ry(-theta) = F
    double rho() const { return rho_; }      // atan(phi^-1);   Ry(rho) X Ry(-rho) = S

    const Mat2& f_matrix() const { return f_; }
    const Mat2& s_matrix() const { return s_; }
    const Mat2& u_matrix() const { return u_; }
    const Mat2& xux_matrix() const { return xux_; }
    const Mat2& matrix(MatName name) const;

    // Rotation angle alpha with Ry(alpha) X Ry(-alpha) = matrix(name).
    double rotation_angle(MatName name) const;

    // Vertex fusion tensor: 1 iff ijk in {000, 011, 101, 110, 111}.
    static int delta(int i, int j, int k);

    // Six-index recoupling tensor F^{ab e}_{cd e'}. Zero unless all four
    // vertex constraints of the pre-move pair (a,b,e),(c,d,e) and post-move
    // pair (a,d,e'),(b,c,e') hold; the 2x2 block on the all-ones sector,
    // 1 on the unique valid (e,e') pair of every other sector.
    double f_tensor(int a, int b, int c, int d, int e, int ep) const;

    // Tadpole tensor S^a_{b b'}: s_matrix when the tail label a is 0,
    // 1 at (1,1,1), zero otherwise.
    double s_tensor(int a, int b, int bp) const;

private:
    double phi_ = 0, theta_ = 0, rho_ = 0;
    Mat2 f_{}, s_{}, u_{}, xux_{};
};

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}. Throws std::out_of_range
// outside 0 <= n <= 92 (the 64-bit range).
std::uint64_t fibonacci(int n);

// The three tadpole eigenstates of the plaquette operator, as real amplitudes
// over two qubits with tail = qubit 0, head = qubit 1 (little-endian index
// tail + 2*head): the unique eigenvalue-1 state and the two eigenvalue-0
// states spanning its valid-subspace complement.
struct TadpoleStates {
    std::array<double, 4> bp1{};
    std::array<double, 4> bp0_a{};
    std::array<double, 4> bp0_b{};
};

TadpoleStates tadpole_states(const FibonacciTensorSet& ts);

}  // namespace fibcode
